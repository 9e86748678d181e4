#include "critset/error.hpp"
#include "critset/extension.hpp"
#include "critset/generators.hpp"
#include "critset/params.hpp"

#include <doctest.h>

using namespace critset;

TEST_SUITE("generators") {

TEST_CASE("stated sizes") {
    auto moser = generate({"moser_spindle", {}});
    CHECK(moser.order() == 7);
    CHECK(moser.size() == 11);
    auto sud = generate({"sudoku_hypergraph", {2}});
    CHECK(sud.order() == 16);
    CHECK(sud.size() == 12);
    for (const auto& e : sud.edges())
        CHECK(e.size() == 4);
    auto latin = generate({"latin_hypergraph", {3}});
    CHECK(latin.order() == 9);
    CHECK(latin.size() == 6);
    CHECK(generate({"fig3_graph", {4}}).order() == 11);
    CHECK(generate({"sudoku_hypergraph", {3}}).size() == 27);
    CHECK(generate({"petersen", {}}).size() == 15);
    CHECK(generate({"kn_minus_c5", {6}}).size() == 10);
    CHECK(generate({"complete_binary_tree", {3}}).order() == 15);
}

TEST_CASE("stated chromatic numbers") {
    CHECK(chromatic_number(generate({"blowup_c5", {2, 3}})) == 6);
    CHECK(chromatic_number(generate({"blowup_c5", {1, 1}})) == 3);
    CHECK(chromatic_number(generate({"fig4_graph", {5}})) == 3);
    CHECK(chromatic_number(generate({"fig4_subgraph", {5}})) == 3);
    CHECK(chromatic_number(generate({"moser_spindle", {}})) == 4);
    for (int k = 2; k <= 5; ++k)
        CHECK(chromatic_number(generate({"kkk_minus_matching", {k}})) == 2);
}

TEST_CASE("K3 x K3 is 4-regular and vertex-transitive on degree and neighbourhood pattern") {
    auto g = generate({"rook", {3, 3}});
    CHECK(g.order() == 9);
    for (Vertex v = 0; v < 9; ++v) {
        CHECK(g.degree(v) == 4);
        // Each vertex lies in exactly two triangles (its row and its column).
        int triangles = 0;
        for (Vertex a : g.neighbours(v))
            for (Vertex b : g.neighbours(v))
                triangles += a < b && g.adjacent(a, b);
        CHECK(triangles == 2);
    }
    CHECK(cartesian_product(generate({"complete", {3}}), generate({"complete", {3}})) == g);
}

TEST_CASE("bespoke graphs carry labels") {
    auto g = generate_labelled({"fig3_graph", {4}});
    CHECK(vertex_named(g, "v1") == 0);
    CHECK(vertex_named(g, "u1") == 4);
    CHECK(vertex_named(g, "z") == 10);
    CHECK(g.structure.adjacent(vertex_named(g, "w"), vertex_named(g, "x")));
    CHECK_FALSE(g.structure.adjacent(vertex_named(g, "w"), vertex_named(g, "u3")));
    CHECK_THROWS_AS(vertex_named(g, "nope"), InputError);

    auto f4 = generate_labelled({"fig4_subgraph", {5}});
    CHECK_FALSE(f4.structure.adjacent(vertex_named(f4, "t1"), vertex_named(f4, "b1")));
    CHECK(f4.structure.adjacent(vertex_named(f4, "v"), vertex_named(f4, "a")));
    CHECK(f4.structure.size() + 1 == generate({"fig4_graph", {5}}).size());
}

TEST_CASE("named colourings are proper for their structures") {
    const std::vector<std::pair<std::string, std::vector<int>>> cases{
        {"fig2-sud2", {}},       {"fig2-latin4", {}},       {"fig5-sud", {}},          {"fig5-sud", {4}},
        {"fig3-colouring", {4}}, {"fig3-colouring", {6}},   {"fig4-h", {5}},           {"fig4-g", {5}},
        {"chessboard-latin", {4}}, {"chessboard-latin", {6}}, {"chessboard-sud", {2}},   {"latin-block", {4}},
        {"gk-matching", {5}},    {"blowup-c5", {2, 1}},
    };
    for (const auto& [name, params] : cases) {
        INFO(name);
        auto nc = named_colouring(name, params);
        CHECK(nc.colouring.order() == nc.generated.structure.order());
        CHECK(is_proper(nc.generated.structure, nc.colouring));
    }
    CHECK_THROWS_AS(named_colouring("nope"), InputError);
    CHECK_THROWS_AS(named_colouring("chessboard-latin", {3}), InputError);
}

TEST_CASE("named colouring fixed-cell counts") {
    auto chess = named_colouring("chessboard-latin", {4});
    CHECK(fixed_vertices(chess.generated.structure, chess.colouring).empty());
    auto fig5 = named_colouring("fig5-sud");
    CHECK(fixed_vertices(fig5.generated.structure, fig5.colouring).size() == 18);
    auto fig5m4 = named_colouring("fig5-sud", {4});
    CHECK(fixed_vertices(fig5m4.generated.structure, fig5m4.colouring).size() == 36);
    CHECK(fig5_grid_rule(3) == fig5_grid_as_drawn());
}

TEST_CASE("invalid parameters") {
    CHECK_THROWS_AS(generate({"cycle", {2}}), InputError);
    CHECK_THROWS_AS(generate({"cycle", {}}), InputError);
    CHECK_THROWS_AS(generate({"nope", {}}), InputError);
    CHECK_THROWS_AS(generate({"sudoku_hypergraph", {1}}), InputError);
    CHECK_THROWS_AS(generate({"kkk_minus_matching", {1}}), InputError);
    CHECK_FALSE(family_names().empty());
}

}
