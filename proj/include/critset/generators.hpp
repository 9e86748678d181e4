#pragma once

#include "critset/structure.hpp"

#include <string>
#include <utility>
#include <vector>

namespace critset {

/// A named family with its integer parameters, e.g. {"cycle", {7}}.
///
/// Families and vertex numbering:
///   complete(n), cycle(n), path(n), empty(n)      vertices 0..n-1 along the cycle/path
///   complete_bipartite(a,b)                       sides 0..a-1 and a..a+b-1
///   complete_multipartite(p1,p2,...)              parts numbered consecutively
///   star(l)                                       K_{1,l}: centre 0, leaves 1..l
///   petersen                                      outer cycle 0..4, spokes i -> i+5, inner pentagram
///   moser_spindle                                 outer 5-cycle 0..4, vertex 5 on 0,1,2 and 6 on 2,3,4
///   rook(a,b)                                     K_a x K_b, cell (i,j) -> i*b+j
///   prism(n)                                      K_2 x C_n, (i,j) -> i*n+j
///   kkk_minus_matching(k)                         K_{k,k} minus a perfect matching; i ~ k+j for i != j
///   kn_minus_c5(n)                                K_n minus the 5-cycle 0-1-2-3-4
///   blowup_c5(p,q)                                C_5 v,w,x,y,z with w,y -> K_p and x,z -> K_q;
///                                                 v = 0, then the w, x, y, z cliques in order
///   fig3_graph(t)                                 v_1..v_t, u1, u2, u3, w, x, y, z
///   fig4_graph(p) / fig4_subgraph(p)              tops t0..t{p-1} (v = t0), bottoms, triangle a, b;
///                                                 the subgraph drops edge t1-b1
///   complete_binary_tree(h)                       heap order, root 0
///   latin_hypergraph(n)                           n x n cells row-major, rows then columns as edges
///   sudoku_hypergraph(m)                          m^2 x m^2 cells row-major; rows, columns, boxes
struct FamilySpec {
    std::string family;
    std::vector<int> params;
};

/// A generated structure and a label per vertex.
struct Generated {
    ColourStructure structure;
    std::vector<std::string> labels;
};

/// InputError on an unknown family or invalid parameters.
ColourStructure generate(const FamilySpec& spec);
Generated generate_labelled(const FamilySpec& spec);
std::vector<std::string> family_names();

/// Index of the vertex with this label; InputError if absent.
Vertex vertex_named(const Generated& g, const std::string& label);

/// Cartesian product; vertex (g, h) -> g * |H| + h. Graphs only.
ColourStructure cartesian_product(const ColourStructure& g, const ColourStructure& h);

/// A structure together with one of its colourings, as drawn or described in
/// the source constructions. Figure colours 0/1 become 1/2.
struct NamedColouring {
    Generated generated;
    Colouring colouring;
    /// Vertices drawn as the precoloured (critical) set, when the figure shows one.
    VertexSet highlighted;
    std::string variant;
};

///   fig2-sud2                 SUD_2, left grid of the SUD_2 / K4xK4 figure
///   fig2-latin4               latin_hypergraph(4), right grid of the same figure
///   fig5-sud [m=3]            SUD_m staircase colouring with 3m(m-1) fixed cells
///   fig3-colouring [t=4]      the 4-colouring of fig3_graph(t)
///   fig4-h [p=5], fig4-g [p=5]
///   chessboard-latin [n=4], chessboard-sud [m=2]
///   latin-block [n=4]         an (n-1)x(n-1) block in one colour
///   gk-matching [k=4]         kkk_minus_matching(k), matched pairs share a colour
///   blowup-c5 [p=2, q=1]
std::vector<std::string> colouring_names();
NamedColouring named_colouring(const std::string& name, const std::vector<int>& params = {});

/// The transcribed 9x9 SUD_3 grid, top row first, colours 1/2.
std::vector<std::vector<int>> fig5_grid_as_drawn();
/// The staircase rule for general m, top row first.
std::vector<std::vector<int>> fig5_grid_rule(int m);

}  // namespace critset
