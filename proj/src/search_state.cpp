#include "search_state.hpp"

#include "critset/error.hpp"

namespace critset::detail {

SearchState::SearchState(const ColourStructure& s, int k) : s_(&s), k_(k), free_(s.order()) {
    if (k < 1 || k > kMaxColours)
        throw InputError("number of colours must lie in [1.." + std::to_string(kMaxColours) + "]");
    const ColourMask full = k == 64 ? ~ColourMask{0} : (ColourMask{1} << k) - 1;
    colour_.assign(s.order(), 0);
    domain_.assign(s.order(), full);
    edge_free_.resize(s.size());
    for (std::size_t e = 0; e < s.size(); ++e)
        edge_free_[e] = static_cast<std::uint16_t>(s.edge(e).size());
    edge_seen_.assign(s.size(), 0);
}

bool SearchState::load(const PartialColouring& p) {
    if (p.order() != s_->order())
        throw InputError("partial colouring length does not match the structure");
    for (Vertex v = 0; v < p.order(); ++v) {
        if (!p[v])
            continue;
        Colour c = *p[v];
        if (c > k_)
            throw InputError("partial colouring uses a colour above k");
        colour_[v] = static_cast<std::uint8_t>(c);
        domain_[v] = bit(c);
        --free_;
        for (int e : s_->incident(v)) {
            --edge_free_[e];
            edge_seen_[e] |= bit(c);
        }
    }
    for (std::size_t e = 0; e < s_->size(); ++e) {
        if (!single(edge_seen_[e]))
            continue;
        if (edge_free_[e] == 0)
            return false;
        if (edge_free_[e] == 1)
            restrict_last_free(static_cast<int>(e));
    }
    for (Vertex v = 0; v < s_->order(); ++v)
        if (!colour_[v]) {
            if (domain_[v] == 0)
                return false;
            if (single(domain_[v]))
                queue_.push_back(v);
        }
    return true;
}

void SearchState::restrict_last_free(int e) {
    for (Vertex u : s_->edge(e))
        if (!colour_[u]) {
            domain_[u] &= ~edge_seen_[e];
            if (single(domain_[u]))
                queue_.push_back(u);
            return;
        }
}

bool SearchState::set(Vertex v, Colour c) {
    if (colour_[v])
        return colour_[v] == c;
    if (!(domain_[v] & bit(c)))
        return false;
    colour_[v] = static_cast<std::uint8_t>(c);
    domain_[v] = bit(c);
    --free_;
    for (int e : s_->incident(v)) {
        --edge_free_[e];
        edge_seen_[e] |= bit(c);
        if (!single(edge_seen_[e]))
            continue;
        if (edge_free_[e] == 0)
            return false;
        if (edge_free_[e] == 1) {
            for (Vertex u : s_->edge(e))
                if (!colour_[u]) {
                    domain_[u] &= ~edge_seen_[e];
                    if (domain_[u] == 0)
                        return false;
                    if (single(domain_[u]))
                        queue_.push_back(u);
                    break;
                }
        }
    }
    return true;
}

bool SearchState::propagate() {
    while (!queue_.empty()) {
        Vertex u = queue_.back();
        queue_.pop_back();
        if (colour_[u])
            continue;
        if (domain_[u] == 0 || !set(u, lowest(domain_[u]))) {
            queue_.clear();
            return false;
        }
    }
    return true;
}

Vertex SearchState::branch_vertex() const {
    Vertex best = -1;
    int best_size = kMaxColours + 1;
    for (Vertex v = 0; v < s_->order(); ++v) {
        if (colour_[v])
            continue;
        int size = std::popcount(domain_[v]);
        if (size < best_size) {
            best = v;
            best_size = size;
            if (size <= 1)
                break;
        }
    }
    return best;
}

PartialColouring SearchState::to_partial() const {
    PartialColouring p(s_->order(), k_);
    for (Vertex v = 0; v < s_->order(); ++v)
        if (colour_[v])
            p.assign(v, colour_[v]);
    return p;
}

Colouring SearchState::to_colouring() const {
    std::vector<Colour> out(colour_.begin(), colour_.end());
    return Colouring(std::move(out), k_);
}

std::uint64_t count_from(SearchState state, std::uint64_t cap, SearchContext& ctx) {
    ctx.tick();
    if (!state.propagate())
        return 0;
    Vertex v = state.branch_vertex();
    if (v < 0)
        return 1;
    std::uint64_t total = 0;
    for (ColourMask m = state.domain(v); m != 0; m &= m - 1) {
        SearchState child = state;
        if (child.set(v, lowest(m)))
            total += count_from(std::move(child), cap - total, ctx);
        if (total >= cap)
            return cap;
    }
    return total;
}

}  // namespace critset::detail

namespace critset {

void Budget::check() const {
    if (expired())
        throw BudgetExhausted();
}

}  // namespace critset
