#include "critset/params.hpp"

#include "critset/error.hpp"
#include "critset/extension.hpp"
#include "kernels.hpp"
#include "search_state.hpp"

#include <algorithm>
#include <atomic>
#include <functional>

namespace critset {

using detail::ColourMask;
using detail::SearchContext;
using detail::SearchState;

std::string_view to_string(Param p) {
    switch (p) {
    case Param::sn:
        return "sn";
    case Param::oscs:
        return "oscs";
    case Param::ulcs:
        return "ulcs";
    case Param::olcs:
        return "olcs";
    }
    return "?";
}

Param parse_param(std::string_view name) {
    for (Param p : {Param::sn, Param::oscs, Param::ulcs, Param::olcs})
        if (to_string(p) == name)
            return p;
    throw InputError("unknown parameter '" + std::string(name) + "'");
}

namespace {

/// Visits r-subsets of `pool` (sorted) in lexicographic order until `fn`
/// returns true. Returns whether it stopped early.
template <class Fn>
bool for_each_subset(const VertexSet& pool, int r, Fn&& fn) {
    const int m = static_cast<int>(pool.size());
    if (r < 0 || r > m)
        return false;
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i)
        idx[i] = i;
    VertexSet subset(r);
    while (true) {
        for (int i = 0; i < r; ++i)
            subset[i] = pool[idx[i]];
        if (fn(subset))
            return true;
        int i = r - 1;
        while (i >= 0 && idx[i] == m - r + i)
            --i;
        if (i < 0)
            return false;
        ++idx[i];
        for (int j = i + 1; j < r; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

VertexSet merge(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet without(const VertexSet& s, Vertex v) {
    VertexSet out;
    out.reserve(s.size());
    for (Vertex u : s)
        if (u != v)
            out.push_back(u);
    return out;
}

/// c restricted to S extends uniquely (c is known to be proper).
bool determines(const ColourStructure& s, const Colouring& c, int k, const VertexSet& S, SearchContext& ctx) {
    SearchState state(s, k);
    for (Vertex v : S)
        state.set(v, c[v]);
    return detail::count_from(std::move(state), 2, ctx) == 1;
}

void validate_colouring(const ColourStructure& s, const Colouring& c, int k) {
    if (c.order() != s.order())
        throw InputError("colouring length does not match the structure");
    if (c.max_colour() > k)
        throw InputError("colouring uses colour " + std::to_string(c.max_colour()) + " but k = " + std::to_string(k));
    require_proper(s, c);
}

/// Per-colouring search data: every determining set is M plus a subset of F.
struct Split {
    VertexSet mandatory;
    VertexSet fixed;
};

Split split(const ColourStructure& s, const Colouring& c) {
    Split out;
    out.fixed = fixed_vertices(s, c);
    out.mandatory = mandatory_vertices(s, c);
    return out;
}

/// A critical set found by removing fixed vertices from V greedily, in
/// increasing order, while the remainder stays determining.
VertexSet greedy_critical(const ColourStructure& s, const Colouring& c, int k, const Split& sp, SearchContext& ctx) {
    VertexSet current(s.order());
    for (Vertex v = 0; v < s.order(); ++v)
        current[v] = v;
    for (Vertex v : sp.fixed) {
        VertexSet candidate = without(current, v);
        if (determines(s, c, k, candidate, ctx))
            current = std::move(candidate);
    }
    return current;
}

struct Found {
    int size = 0;
    VertexSet set;
};

/// Smallest determining set, sizes increasing from |M|.
Found smallest_determining(const ColourStructure& s, const Colouring& c, int k, const Split& sp, SearchContext& ctx) {
    const int fsize = static_cast<int>(sp.fixed.size());
    for (int extra = 0; extra <= fsize; ++extra) {
        Found found;
        bool hit = for_each_subset(sp.fixed, extra, [&](const VertexSet& add) {
            VertexSet S = merge(sp.mandatory, add);
            if (!determines(s, c, k, S, ctx))
                return false;
            found = Found{static_cast<int>(S.size()), std::move(S)};
            return true;
        });
        if (hit)
            return found;
    }
    throw std::logic_error("vertex set is not determining");
}

/// Largest critical set of size >= floor, sizes decreasing from n.
std::optional<Found> largest_critical(const ColourStructure& s, const Colouring& c, int k, const Split& sp,
                                      int floor, SearchContext& ctx) {
    const int msize = static_cast<int>(sp.mandatory.size());
    for (int extra = static_cast<int>(sp.fixed.size()); extra >= 0; --extra) {
        if (msize + extra < floor)
            return std::nullopt;
        Found found;
        bool hit = for_each_subset(sp.fixed, extra, [&](const VertexSet& add) {
            VertexSet S = merge(sp.mandatory, add);
            if (!determines(s, c, k, S, ctx))
                return false;
            // Dropping a mandatory vertex never stays determining.
            for (Vertex a : add)
                if (determines(s, c, k, without(S, a), ctx))
                    return false;
            found = Found{static_cast<int>(S.size()), std::move(S)};
            return true;
        });
        if (hit)
            return found;
    }
    return std::nullopt;
}

void check_k(const ColourStructure& s, int k) {
    if (s.order() == 0)
        return;
    if (k < 1)
        throw InputError("k must be positive");
    int chi = chromatic_number(s);
    if (k < chi)
        throw InfeasibleError("k = " + std::to_string(k) + " is below the chromatic number " + std::to_string(chi));
}

/// First proper extension of `state` in branching order.
std::optional<Colouring> first_extension(SearchState state, SearchContext& ctx) {
    ctx.tick();
    if (!state.propagate())
        return std::nullopt;
    Vertex v = state.branch_vertex();
    if (v < 0)
        return state.to_colouring();
    for (ColourMask m = state.domain(v); m != 0; m &= m - 1) {
        SearchState child = state;
        if (child.set(v, detail::lowest(m)))
            if (auto c = first_extension(std::move(child), ctx))
                return c;
    }
    return std::nullopt;
}

/// Canonical assignments of `subset` (colours in first-use order along the
/// subset) explored depth first; returns the first one with a unique
/// extension, as a partial state.
std::optional<SearchState> unique_assignment(SearchState state, const VertexSet& subset, std::size_t pos,
                                             Colour max_used, SearchContext& ctx) {
    ctx.tick();
    if (pos == subset.size()) {
        if (detail::count_from(state, 2, ctx) == 1)
            return state;
        return std::nullopt;
    }
    const Vertex v = subset[pos];
    if (state.assigned(v)) {
        Colour c = state.colour(v);
        if (c > max_used + 1)
            return std::nullopt;
        return unique_assignment(std::move(state), subset, pos + 1, std::max(max_used, c), ctx);
    }
    const Colour limit = std::min(state.k(), max_used + 1);
    for (Colour c = 1; c <= limit; ++c) {
        if (!(state.domain(v) & detail::bit(c)))
            continue;
        SearchState child = state;
        if (!child.set(v, c) || !child.propagate())
            continue;
        if (auto hit = unique_assignment(std::move(child), subset, pos + 1, std::max(max_used, c), ctx))
            return hit;
    }
    return std::nullopt;
}

/// Lazily produces r-subsets of [0, n) in lexicographic order, in chunks.
class SubsetCursor {
public:
    SubsetCursor(int n, int r) : n_(n), r_(r), idx_(r), done_(r > n) {
        for (int i = 0; i < r; ++i)
            idx_[i] = i;
    }

    std::vector<VertexSet> take(std::size_t max) {
        std::vector<VertexSet> out;
        while (!done_ && out.size() < max) {
            out.emplace_back(idx_.begin(), idx_.end());
            int i = r_ - 1;
            while (i >= 0 && idx_[i] == n_ - r_ + i)
                --i;
            if (i < 0) {
                done_ = true;
                break;
            }
            ++idx_[i];
            for (int j = i + 1; j < r_; ++j)
                idx_[j] = idx_[j - 1] + 1;
        }
        return out;
    }

private:
    int n_;
    int r_;
    std::vector<int> idx_;
    bool done_;
};

/// sn on the whole structure, no component splitting.
ParamResult sn_whole(const ColourStructure& s, int k, int chi, const SolveOptions& opt) {
    const int n = s.order();
    ParamResult result;
    if (n == 0)
        return result;
    int lower = 0;
    if (k >= 2)
        lower = 1;
    if (k == chi)
        lower = std::max(lower, chi - 1);

    // A component with no precoloured vertex can have its colours permuted.
    const std::vector<int> comp = s.components();
    const int comps = n ? *std::max_element(comp.begin(), comp.end()) + 1 : 0;
    auto hits_every_component = [&](const VertexSet& S) {
        if (k < 2 || comps <= 1)
            return true;
        std::vector<char> hit(comps, 0);
        for (Vertex v : S)
            hit[comp[v]] = 1;
        return std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
    };

    std::atomic<std::uint64_t> nodes{0};
    for (int size = lower; size <= n; ++size) {
        SubsetCursor cursor(n, size);
        while (true) {
            auto chunk = cursor.take(4096);
            if (chunk.empty())
                break;
            std::vector<std::optional<SearchState>> hits(chunk.size());
            long first = detail::first_success(chunk.size(), opt.exec, [&](std::size_t i) {
                if (!hits_every_component(chunk[i]))
                    return false;
                SearchContext ctx{&opt.budget, 0};
                SearchState root(s, k);
                auto hit = root.propagate() ? unique_assignment(std::move(root), chunk[i], 0, 0, ctx) : std::nullopt;
                nodes += ctx.nodes;
                if (!hit)
                    return false;
                hits[i] = std::move(hit);
                return true;
            });
            if (first >= 0) {
                SearchContext ctx{&opt.budget, 0};
                result.value = size;
                result.witness_set = chunk[first];
                result.witness_colouring = first_extension(*hits[first], ctx);
                result.nodes_explored = nodes + ctx.nodes;
                return result;
            }
        }
    }
    throw std::logic_error("no determining partial colouring found");
}

enum class Aggregate { oscs, ulcs, olcs };

struct Candidate {
    VertexSet set;
};

ParamResult aggregate_whole(Aggregate kind, const ColourStructure& s, int k, const SolveOptions& opt) {
    ParamResult result;
    const int n = s.order();
    if (n == 0)
        return result;
    const std::vector<Colouring> colourings = all_canonical_colourings(s, k);
    std::atomic<std::uint64_t> nodes{0};

    auto eval = [&](std::size_t i, int bound) -> std::optional<detail::Evaluated<Candidate>> {
        const Colouring& c = colourings[i];
        SearchContext ctx{&opt.budget, 0};
        struct Flush {
            std::atomic<std::uint64_t>& total;
            SearchContext& ctx;
            ~Flush() { total += ctx.nodes; }
        } flush{nodes, ctx};
        const Split sp = split(s, c);
        const int msize = static_cast<int>(sp.mandatory.size());
        switch (kind) {
        case Aggregate::oscs: {
            if (sp.fixed.empty())
                return detail::Evaluated<Candidate>{n, {sp.mandatory}};
            if (bound != std::numeric_limits<int>::min() &&
                static_cast<int>(greedy_critical(s, c, k, sp, ctx).size()) < bound)
                return std::nullopt;
            Found f = smallest_determining(s, c, k, sp, ctx);
            return detail::Evaluated<Candidate>{f.size, {std::move(f.set)}};
        }
        case Aggregate::ulcs: {
            if (bound != std::numeric_limits<int>::max()) {
                if (msize > bound)
                    return std::nullopt;
                if (static_cast<int>(greedy_critical(s, c, k, sp, ctx).size()) > bound)
                    return std::nullopt;
            }
            auto f = largest_critical(s, c, k, sp, 0, ctx);
            return detail::Evaluated<Candidate>{f->size, {std::move(f->set)}};
        }
        case Aggregate::olcs: {
            const int floor = bound == std::numeric_limits<int>::min() ? 0 : bound;
            auto f = largest_critical(s, c, k, sp, floor, ctx);
            if (!f)
                return std::nullopt;
            return detail::Evaluated<Candidate>{f->size, {std::move(f->set)}};
        }
        }
        return std::nullopt;
    };

    const bool maximise = kind != Aggregate::ulcs;
    std::optional<int> ceiling;
    if (maximise)
        ceiling = n;
    auto best = detail::optimise<Candidate>(colourings.size(), maximise, ceiling, opt.exec, eval);
    if (best.index < 0)
        throw std::logic_error("no colouring evaluated");
    result.value = best.value;
    result.witness_colouring = colourings[best.index];
    result.witness_set = std::move(best.payload.set);
    result.nodes_explored = nodes;
    return result;
}

/// Applies `solve` per component (when splitting is on and there are several)
/// and sums the values.
ParamResult by_components(const ColourStructure& s, int k, const SolveOptions& opt,
                          const std::function<ParamResult(const ColourStructure&)>& solve) {
    const int count = s.component_count();
    if (!opt.split_components || count <= 1)
        return solve(s);
    const std::vector<int> comp = s.components();
    ParamResult total;
    std::vector<Colour> colours(s.order(), 1);
    VertexSet witness;
    for (int id = 0; id < count; ++id) {
        VertexSet members;
        for (Vertex v = 0; v < s.order(); ++v)
            if (comp[v] == id)
                members.push_back(v);
        ParamResult part = solve(s.induced(members));
        total.value += part.value;
        total.nodes_explored += part.nodes_explored;
        if (part.witness_colouring)
            for (std::size_t i = 0; i < members.size(); ++i)
                colours[members[i]] = (*part.witness_colouring)[static_cast<Vertex>(i)];
        if (part.witness_set)
            for (Vertex v : *part.witness_set)
                witness.push_back(members[v]);
    }
    std::sort(witness.begin(), witness.end());
    total.witness_colouring = Colouring(std::move(colours), k);
    total.witness_set = std::move(witness);
    return total;
}

}  // namespace

ParamResult scs(const ColourStructure& s, const Colouring& c, int k, const SolveOptions& opt) {
    validate_colouring(s, c, k);
    const Colouring ck = c.with_k(k);
    SearchContext ctx{&opt.budget, 0};
    Found f = smallest_determining(s, ck, k, split(s, ck), ctx);
    return ParamResult{f.size, ck, std::move(f.set), ctx.nodes};
}

ParamResult lcs(const ColourStructure& s, const Colouring& c, int k, const SolveOptions& opt) {
    validate_colouring(s, c, k);
    const Colouring ck = c.with_k(k);
    SearchContext ctx{&opt.budget, 0};
    auto f = largest_critical(s, ck, k, split(s, ck), 0, ctx);
    if (!f)
        throw std::logic_error("no critical set found");
    return ParamResult{f->size, ck, std::move(f->set), ctx.nodes};
}

ParamResult sn(const ColourStructure& s, int k, const SolveOptions& opt) {
    check_k(s, k);
    return by_components(s, k, opt, [&](const ColourStructure& part) {
        return sn_whole(part, k, part.order() ? chromatic_number(part) : 0, opt);
    });
}

ParamResult oscs(const ColourStructure& s, int k, const SolveOptions& opt) {
    check_k(s, k);
    return by_components(s, k, opt, [&](const ColourStructure& part) {
        return aggregate_whole(Aggregate::oscs, part, k, opt);
    });
}

ParamResult ulcs(const ColourStructure& s, int k, const SolveOptions& opt) {
    check_k(s, k);
    return by_components(s, k, opt, [&](const ColourStructure& part) {
        return aggregate_whole(Aggregate::ulcs, part, k, opt);
    });
}

ParamResult olcs(const ColourStructure& s, int k, const SolveOptions& opt) {
    check_k(s, k);
    return by_components(s, k, opt, [&](const ColourStructure& part) {
        return aggregate_whole(Aggregate::olcs, part, k, opt);
    });
}

ParamResult compute(Param p, const ColourStructure& s, int k, const SolveOptions& opt) {
    switch (p) {
    case Param::sn:
        return sn(s, k, opt);
    case Param::oscs:
        return oscs(s, k, opt);
    case Param::ulcs:
        return ulcs(s, k, opt);
    case Param::olcs:
        return olcs(s, k, opt);
    }
    throw InputError("unknown parameter");
}

namespace {

bool colourable(const ColourStructure& s, int k) {
    if (s.order() == 0)
        return true;
    if (k < 1)
        return false;
    return enumerate_colourings(s, k).next().has_value();
}

}  // namespace

int ivs_chi(const ColourStructure& g) {
    if (!g.is_graph())
        throw InputError("ivs_chi is defined for graphs only");
    if (g.order() < 1)
        throw InputError("ivs_chi needs at least one vertex");
    const int chi = chromatic_number(g);
    const int n = g.order();
    VertexSet all(n);
    for (Vertex v = 0; v < n; ++v)
        all[v] = v;
    for (int size = 1; size <= n; ++size) {
        bool hit = for_each_subset(all, size, [&](const VertexSet& S) {
            for (std::size_t i = 0; i < S.size(); ++i)
                for (std::size_t j = i + 1; j < S.size(); ++j)
                    if (g.adjacent(S[i], S[j]))
                        return false;
            VertexSet rest;
            for (Vertex v = 0; v < n; ++v)
                if (!std::binary_search(S.begin(), S.end(), v))
                    rest.push_back(v);
            return colourable(g.induced(rest), chi - 1);
        });
        if (hit)
            return size;
    }
    throw std::logic_error("no independent set lowers the chromatic number");
}

}  // namespace critset
