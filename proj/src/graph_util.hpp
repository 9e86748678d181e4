#pragma once

#include "critset/structure.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace critset::detail {

/// Largest clique, by exhaustive search (small graphs only).
inline int clique_number(const ColourStructure& g) {
    const int n = g.order();
    int best = 0;
    std::vector<Vertex> current;
    auto grow = [&](auto&& self, Vertex from) -> void {
        best = std::max(best, static_cast<int>(current.size()));
        for (Vertex v = from; v < n; ++v) {
            if (std::all_of(current.begin(), current.end(), [&](Vertex u) { return g.adjacent(u, v); })) {
                current.push_back(v);
                self(self, v + 1);
                current.pop_back();
            }
        }
    };
    grow(grow, 0);
    return best;
}

inline bool is_complete(const ColourStructure& g) {
    const std::size_t n = g.order();
    return g.is_graph() && g.size() == n * (n - (n > 0)) / 2;
}

/// Brute-force isomorphism test over all vertex permutations (n <= 9).
inline bool isomorphic(const ColourStructure& a, const ColourStructure& b) {
    if (a.order() != b.order() || a.size() != b.size() || a.kind() != b.kind())
        return false;
    const int n = a.order();
    std::vector<int> da(n), db(n);
    for (Vertex v = 0; v < n; ++v) {
        da[v] = static_cast<int>(a.neighbours(v).size());
        db[v] = static_cast<int>(b.neighbours(v).size());
    }
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb)
        return false;
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (Vertex v = 0; v < n && ok; ++v)
            ok = da[v] == db[perm[v]];
        for (const auto& e : a.edges()) {
            if (!ok)
                break;
            ok = b.adjacent(perm[e[0]], perm[e[1]]);
        }
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// The graph with vertex v removed (others renumbered).
inline ColourStructure without_vertex(const ColourStructure& g, Vertex v) {
    std::vector<Vertex> keep;
    for (Vertex u = 0; u < g.order(); ++u)
        if (u != v)
            keep.push_back(u);
    return g.induced(keep);
}

/// Spanning subgraph keeping the edges whose bit is set in `mask`.
inline ColourStructure spanning_subgraph(const ColourStructure& g, std::uint64_t mask) {
    std::vector<Edge> kept;
    for (std::size_t e = 0; e < g.size(); ++e)
        if (mask >> e & 1)
            kept.push_back(g.edge(e));
    return g.is_graph() ? ColourStructure::graph(g.order(), kept) : ColourStructure::hypergraph(g.order(), kept);
}

}  // namespace critset::detail
