#pragma once

#include "critset/exec.hpp"
#include "critset/structure.hpp"

#include <cstdint>
#include <optional>
#include <span>

namespace critset {

/// Forced-colour closure of `partial` under k colours: while some unassigned
/// vertex has exactly one admissible colour, assign it. Returns nullopt when
/// some vertex runs out of admissible colours. InputError if `partial` already
/// has a monochromatic fully assigned edge.
std::optional<PartialColouring> propagate_forced(const ColourStructure& s, const PartialColouring& partial);

/// min(cap, number of proper total colourings extending `partial`), using the
/// partial's k. Requires cap >= 1.
std::uint64_t count_extensions(const ColourStructure& s, const PartialColouring& partial, std::uint64_t cap,
                               const Budget& budget = {});

/// Same, also reporting the number of search nodes visited.
std::uint64_t count_extensions(const ColourStructure& s, const PartialColouring& partial, std::uint64_t cap,
                               std::uint64_t& nodes, const Budget& budget = {});

/// c restricted to S has c as its only proper extension. InputError if c is
/// not proper.
bool is_determining(const ColourStructure& s, const Colouring& c, std::span<const Vertex> S);

/// S is determining and no S \ {v} is.
bool is_critical(const ColourStructure& s, const Colouring& c, std::span<const Vertex> S);

/// Vertices that cannot be recoloured on their own without making some edge
/// monochromatic. On graphs this is {v : c(N[v]) = [k]}.
VertexSet fixed_vertices(const ColourStructure& s, const Colouring& c);

/// Every determining set contains these: the vertices that are not fixed.
VertexSet mandatory_vertices(const ColourStructure& s, const Colouring& c);

/// InputError unless c has the structure's order and is proper.
void require_proper(const ColourStructure& s, const Colouring& c);

}  // namespace critset
