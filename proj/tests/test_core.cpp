#include "critset/error.hpp"
#include "critset/generators.hpp"
#include "critset/structure.hpp"

#include <doctest.h>

using namespace critset;

TEST_SUITE("core") {

TEST_CASE("graph construction normalises and validates edges") {
    auto g = ColourStructure::graph(4, std::vector<std::pair<Vertex, Vertex>>{{1, 0}, {2, 3}, {0, 3}});
    CHECK(g.order() == 4);
    CHECK(g.size() == 3);
    CHECK(g.is_graph());
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {2, 3}});
    CHECK(g.adjacent(3, 0));
    CHECK_FALSE(g.adjacent(1, 2));
    CHECK(g.degree(0) == 2);
    CHECK(g.max_degree() == 2);
    CHECK(g.min_degree() == 1);

    using P = std::vector<std::pair<Vertex, Vertex>>;
    CHECK_THROWS_AS(ColourStructure::graph(3, P{{0, 0}}), InputError);
    CHECK_THROWS_AS(ColourStructure::graph(3, P{{0, 3}}), InputError);
    CHECK_THROWS_AS(ColourStructure::graph(3, P{{0, -1}}), InputError);
    CHECK_THROWS_AS(ColourStructure::graph(3, P{{0, 1}, {1, 0}}), InputError);
    CHECK_THROWS_AS(ColourStructure::graph(3, std::vector<Edge>{{0, 1, 2}}), InputError);
}

TEST_CASE("hypergraph edges need two distinct vertices") {
    auto h = ColourStructure::hypergraph(4, {{0, 1, 2}, {3, 2}});
    CHECK_FALSE(h.is_graph());
    CHECK(h.edges() == std::vector<Edge>{{0, 1, 2}, {2, 3}});
    CHECK(h.incident(2).size() == 2);
    CHECK_THROWS_AS(ColourStructure::hypergraph(3, {{0}}), InputError);
    CHECK_THROWS_AS(ColourStructure::hypergraph(3, {{0, 0}}), InputError);
    CHECK_THROWS_AS(ColourStructure::hypergraph(3, {{0, 1}, {1, 0}}), InputError);
    CHECK_THROWS_AS(h.degree(0), InputError);
}

TEST_CASE("components, induced substructures and equality") {
    auto g = ColourStructure::graph(5, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {3, 4}});
    CHECK(g.components() == std::vector<int>{0, 0, 1, 2, 2});
    CHECK(g.component_count() == 3);
    CHECK_FALSE(g.connected());
    const std::vector<Vertex> keep{1, 3, 4};
    auto sub = g.induced(keep);
    CHECK(sub.order() == 3);
    CHECK(sub.edges() == std::vector<Edge>{{1, 2}});
    CHECK(g.without_edge(0).size() == 1);

    auto a = ColourStructure::graph(3, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}});
    auto b = ColourStructure::graph(3, std::vector<std::pair<Vertex, Vertex>>{{2, 1}, {1, 0}});
    CHECK(a == b);
    CHECK(a.hash() == b.hash());
    CHECK(a.hash() != ColourStructure::hypergraph(3, {{0, 1}, {1, 2}}).hash());
}

TEST_CASE("colourings are 1-based and proper means no monochromatic edge") {
    auto c4 = generate({"cycle", {4}});
    Colouring c({1, 2, 1, 2}, 2);
    CHECK(is_proper(c4, c));
    CHECK_FALSE(is_proper(c4, Colouring({1, 1, 2, 2}, 2)));
    CHECK_THROWS_AS(Colouring({0, 1}, 2), InputError);
    CHECK_THROWS_AS(Colouring({3, 1}, 2), InputError);
    CHECK_THROWS_AS(is_proper(c4, Colouring({1, 2}, 2)), InputError);
    CHECK(c.max_colour() == 2);
    CHECK(c.with_k(5).k() == 5);

    auto h = ColourStructure::hypergraph(3, {{0, 1, 2}});
    CHECK(is_proper(h, Colouring({1, 1, 2}, 2)));
    CHECK_FALSE(is_proper(h, Colouring({2, 2, 2}, 2)));
}

TEST_CASE("partial colourings track their support") {
    PartialColouring p(4, 3);
    CHECK(p.assigned_count() == 0);
    p.assign(2, 3);
    p.assign(0, 1);
    CHECK(p.support() == VertexSet{0, 2});
    CHECK_FALSE(p.total());
    CHECK_THROWS_AS(p.assign(1, 4), InputError);
    CHECK_THROWS_AS(p.assign(1, 0), InputError);
    p.unassign(2);
    CHECK(p.support() == VertexSet{0});

    auto k3 = generate({"complete", {3}});
    PartialColouring q({1, 1, std::nullopt}, 3);
    CHECK_FALSE(is_consistent(k3, q));
    CHECK(is_consistent(k3, PartialColouring({1, 2, std::nullopt}, 3)));

    Colouring c({1, 2, 3}, 3);
    const std::vector<Vertex> s{2, 0};
    auto r = restrict(c, s);
    CHECK(r.support() == VertexSet{0, 2});
    CHECK(*r[2] == 3);
    const std::vector<Vertex> bad{5};
    CHECK_THROWS_AS(restrict(c, bad), InputError);
}

TEST_CASE("vertex sets are sorted and deduplicated") {
    const std::vector<Vertex> raw{3, 1, 3, 0};
    CHECK(make_vertex_set(raw, 4) == VertexSet{0, 1, 3});
    CHECK_THROWS_AS(make_vertex_set(raw, 3), InputError);
    CHECK(to_string(VertexSet{0, 2}) == "{0,2}");
}

}
