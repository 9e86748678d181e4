#include "critset/tree.hpp"

#include "critset/error.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>

namespace critset {

bool is_tree(const ColourStructure& g) {
    return g.is_graph() && g.order() >= 1 && static_cast<int>(g.size()) == g.order() - 1 && g.connected();
}

namespace {

/// Farthest vertex from `from`, lowest index among ties.
Vertex farthest(const ColourStructure& t, Vertex from) {
    std::vector<int> dist(t.order(), -1);
    std::queue<Vertex> q;
    dist[from] = 0;
    q.push(from);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex u : t.neighbours(v))
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                q.push(u);
            }
    }
    Vertex best = from;
    for (Vertex v = 0; v < t.order(); ++v)
        if (dist[v] > dist[best])
            best = v;
    return best;
}

int sn_forest(const ColourStructure& f, int k);

int sn_component(const ColourStructure& t, int k) {
    const int n = t.order();
    const bool star = n <= 2 || std::count_if(t.edges().begin(), t.edges().end(), [&](const Edge& e) {
                                    return t.degree(e[0]) > 1 && t.degree(e[1]) > 1;
                                }) == 0;
    if (star)
        return k <= n ? n - 1 : n;

    Vertex a = farthest(t, 0);
    Vertex b = farthest(t, a);
    Vertex end = std::min(a, b);
    Vertex x = t.neighbours(end).front();

    VertexSet leaves;
    for (Vertex u : t.neighbours(x))
        if (t.degree(u) == 1)
            leaves.push_back(u);
    const int l = static_cast<int>(leaves.size());

    auto remove = [&](VertexSet gone) {
        std::sort(gone.begin(), gone.end());
        VertexSet keep;
        for (Vertex v = 0; v < n; ++v)
            if (!std::binary_search(gone.begin(), gone.end(), v))
                keep.push_back(v);
        return t.induced(keep);
    };

    if (l <= k - 3)
        return sn_forest(remove(leaves), k) + l;
    if (l >= k - 1)
        return sn_forest(remove(leaves), k) + l - 1;
    VertexSet gone = leaves;
    gone.push_back(x);
    return sn_forest(remove(gone), k) + l;
}

int sn_forest(const ColourStructure& f, int k) {
    const int count = f.component_count();
    if (count <= 1)
        return f.order() == 0 ? 0 : sn_component(f, k);
    const auto comp = f.components();
    int total = 0;
    for (int id = 0; id < count; ++id) {
        VertexSet members;
        for (Vertex v = 0; v < f.order(); ++v)
            if (comp[v] == id)
                members.push_back(v);
        total += sn_component(f.induced(members), k);
    }
    return total;
}

}  // namespace

int sn_tree(const ColourStructure& tree, int k) {
    if (!is_tree(tree))
        throw InputError("sn_tree needs a tree");
    if (k < 3)
        throw InputError("sn_tree needs k >= 3 (bipartite graphs have sn = 1 at k = 2)");
    return sn_forest(tree, k);
}

int r_domination(const ColourStructure& g, int r) {
    const int n = g.order();
    if (!g.is_graph())
        throw InputError("r_domination is defined for graphs only");
    if (n < 1 || n > 62)
        throw InputError("r_domination supports 1..62 vertices");
    if (r < 1)
        throw InputError("r must be at least 1");
    std::vector<std::uint64_t> nb(n, 0);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u : g.neighbours(v))
            nb[v] |= std::uint64_t{1} << u;

    auto dominates = [&](std::uint64_t d) {
        for (Vertex v = 0; v < n; ++v)
            if (!(d >> v & 1) && std::popcount(nb[v] & d) < r)
                return false;
        return true;
    };

    // Gosper's hack over subsets of each size.
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (int size = 0; size <= n; ++size) {
        std::uint64_t d = (std::uint64_t{1} << size) - 1;
        while (d < limit) {
            if (dominates(d))
                return size;
            if (d == 0)
                break;
            std::uint64_t low = d & (~d + 1);
            std::uint64_t ripple = d + low;
            d = (((ripple ^ d) >> 2) / low) | ripple;
        }
    }
    return n;
}

}  // namespace critset
