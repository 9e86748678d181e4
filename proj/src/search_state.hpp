#pragma once

#include "critset/exec.hpp"
#include "critset/structure.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace critset::detail {

using ColourMask = std::uint64_t;

inline constexpr int kMaxColours = 64;

inline ColourMask bit(Colour c) { return ColourMask{1} << (c - 1); }
inline bool single(ColourMask m) { return m != 0 && (m & (m - 1)) == 0; }
inline Colour lowest(ColourMask m) { return std::countr_zero(m) + 1; }

/// Node counter plus budget, shared by one sequential search.
struct SearchContext {
    const Budget* budget = nullptr;
    std::uint64_t nodes = 0;

    void tick() {
        if ((++nodes & 0x3FF) == 0 && budget)
            budget->check();
    }
};

/// Partial colouring plus the admissible-colour domain of every unassigned
/// vertex. A colour is inadmissible for v when some edge through v has all its
/// other vertices assigned that colour. Copyable; branching copies the state.
class SearchState {
public:
    SearchState(const ColourStructure& s, int k);

    /// Loads a consistent partial colouring and queues forced vertices.
    /// Returns false if the partial already contradicts itself.
    bool load(const PartialColouring& p);

    /// Assigns v := c without running the propagation queue. Returns false on
    /// contradiction (after which the state must be discarded).
    bool set(Vertex v, Colour c);
    /// Runs forced assignments to fixpoint. False on contradiction.
    bool propagate();

    bool assigned(Vertex v) const { return colour_[v] != 0; }
    Colour colour(Vertex v) const { return colour_[v]; }
    ColourMask domain(Vertex v) const { return domain_[v]; }
    int free_count() const { return free_; }
    int k() const { return k_; }
    const ColourStructure& structure() const { return *s_; }

    /// Unassigned vertex with the fewest admissible colours, lowest index on
    /// ties; -1 when everything is assigned.
    Vertex branch_vertex() const;

    PartialColouring to_partial() const;
    Colouring to_colouring() const;

private:
    void restrict_last_free(int e);

    const ColourStructure* s_;
    int k_;
    int free_;
    std::vector<std::uint8_t> colour_;
    std::vector<ColourMask> domain_;
    std::vector<std::uint16_t> edge_free_;
    std::vector<ColourMask> edge_seen_;
    std::vector<Vertex> queue_;
};

/// Number of proper total extensions of `state`, capped at `cap`.
std::uint64_t count_from(SearchState state, std::uint64_t cap, SearchContext& ctx);

}  // namespace critset::detail
