#include "critset/extension.hpp"

#include "critset/error.hpp"
#include "search_state.hpp"

#include <algorithm>

namespace critset {

using detail::SearchContext;
using detail::SearchState;

void require_proper(const ColourStructure& s, const Colouring& c) {
    if (!is_proper(s, c))
        throw InputError("colouring is not proper");
}

std::optional<PartialColouring> propagate_forced(const ColourStructure& s, const PartialColouring& partial) {
    if (!is_consistent(s, partial))
        throw InputError("partial colouring has a monochromatic edge");
    SearchState state(s, partial.k());
    if (!state.load(partial) || !state.propagate())
        return std::nullopt;
    return state.to_partial();
}

std::uint64_t count_extensions(const ColourStructure& s, const PartialColouring& partial, std::uint64_t cap,
                               std::uint64_t& nodes, const Budget& budget) {
    if (cap < 1)
        throw InputError("cap must be at least 1");
    if (partial.order() != s.order())
        throw InputError("partial colouring length does not match the structure");
    SearchState state(s, partial.k());
    if (!state.load(partial))
        return 0;
    SearchContext ctx{&budget, 0};
    auto result = detail::count_from(std::move(state), cap, ctx);
    nodes = ctx.nodes;
    return result;
}

std::uint64_t count_extensions(const ColourStructure& s, const PartialColouring& partial, std::uint64_t cap,
                               const Budget& budget) {
    std::uint64_t nodes = 0;
    return count_extensions(s, partial, cap, nodes, budget);
}

bool is_determining(const ColourStructure& s, const Colouring& c, std::span<const Vertex> S) {
    require_proper(s, c);
    return count_extensions(s, restrict(c, S), 2) == 1;
}

bool is_critical(const ColourStructure& s, const Colouring& c, std::span<const Vertex> S) {
    VertexSet set = make_vertex_set(S, s.order());
    if (!is_determining(s, c, set))
        return false;
    VertexSet smaller;
    for (std::size_t i = 0; i < set.size(); ++i) {
        smaller.assign(set.begin(), set.end());
        smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
        if (count_extensions(s, restrict(c, smaller), 2) == 1)
            return false;
    }
    return true;
}

VertexSet fixed_vertices(const ColourStructure& s, const Colouring& c) {
    require_proper(s, c);
    VertexSet out;
    for (Vertex v = 0; v < s.order(); ++v) {
        bool fixed = true;
        for (Colour a = 1; a <= c.k() && fixed; ++a) {
            if (a == c[v])
                continue;
            // Recolouring v to a breaks an edge iff every other vertex of it has colour a.
            bool breaks = std::any_of(s.incident(v).begin(), s.incident(v).end(), [&](int e) {
                const auto& edge = s.edge(e);
                return std::all_of(edge.begin(), edge.end(), [&](Vertex u) { return u == v || c[u] == a; });
            });
            if (!breaks)
                fixed = false;
        }
        if (fixed)
            out.push_back(v);
    }
    return out;
}

VertexSet mandatory_vertices(const ColourStructure& s, const Colouring& c) {
    VertexSet fixed = fixed_vertices(s, c);
    VertexSet out;
    for (Vertex v = 0; v < s.order(); ++v)
        if (!std::binary_search(fixed.begin(), fixed.end(), v))
            out.push_back(v);
    return out;
}

}  // namespace critset
