#pragma once

#include "critset/structure.hpp"

namespace critset {

/// sn(T, k) for a tree T and k >= 3 in polynomial time, by repeatedly peeling
/// the leaves hanging off the neighbour of a diameter endpoint.
/// InputError if T is not a tree or k < 3.
int sn_tree(const ColourStructure& tree, int k);

/// Smallest D such that every vertex outside D has at least r neighbours in D.
/// Exact exponential search; graphs with at most 62 vertices.
int r_domination(const ColourStructure& g, int r);

bool is_tree(const ColourStructure& g);

}  // namespace critset
