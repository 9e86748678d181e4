#include "critset/error.hpp"
#include "critset/extension.hpp"
#include "critset/generators.hpp"
#include "critset/params.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace critset;

namespace {

using Opt = std::optional<Colour>;

PartialColouring partial_from(const oracle::Assignment& a, int k) {
    std::vector<Opt> p(a.size());
    for (std::size_t v = 0; v < a.size(); ++v)
        if (a[v] != 0)
            p[v] = a[v];
    return PartialColouring(p, k);
}

oracle::Assignment assignment_of(const Colouring& c) { return c.colours(); }

/// A random proper colouring from the oracle list, or nullopt.
std::optional<Colouring> random_proper(const ColourStructure& s, int k, std::mt19937_64& rng) {
    auto list = oracle::all_proper(s, k);
    if (list.empty())
        return std::nullopt;
    return Colouring(list[std::uniform_int_distribution<std::size_t>(0, list.size() - 1)(rng)], k);
}

std::vector<Vertex> subset_of(std::uint32_t mask, int n) { return oracle::members(mask, n); }

}  // namespace

TEST_SUITE("extension") {

TEST_CASE("forced-colour closure examples") {
    auto k3 = generate({"complete", {3}});
    auto r = propagate_forced(k3, PartialColouring({1, 2, std::nullopt}, 3));
    REQUIRE(r);
    CHECK(r->to_colouring().colours() == std::vector<Colour>{1, 2, 3});

    auto c4 = generate({"cycle", {4}});
    r = propagate_forced(c4, PartialColouring({1, std::nullopt, std::nullopt, std::nullopt}, 2));
    REQUIRE(r);
    CHECK(r->to_colouring().colours() == std::vector<Colour>{1, 2, 1, 2});

    auto p3 = generate({"path", {3}});
    const PartialColouring start({1, std::nullopt, std::nullopt}, 3);
    r = propagate_forced(p3, start);
    REQUIRE(r);
    CHECK(*r == start);

    // Contradiction is a value; inconsistent input is an error.
    CHECK_FALSE(propagate_forced(k3, PartialColouring({1, std::nullopt, std::nullopt}, 2)));
    CHECK_THROWS_AS(propagate_forced(k3, PartialColouring({1, 1, std::nullopt}, 3)), InputError);
}

TEST_CASE("hypergraph forcing removes the colour of a monochromatic remainder") {
    auto h = ColourStructure::hypergraph(3, {{0, 1, 2}});
    auto r = propagate_forced(h, PartialColouring({2, 2, std::nullopt}, 2));
    REQUIRE(r);
    CHECK(*(*r)[2] == 1);
}

TEST_CASE("capped extension counts") {
    auto c4 = generate({"cycle", {4}});
    CHECK(count_extensions(c4, PartialColouring(4, 2), 4) == 2);
    CHECK(count_extensions(c4, PartialColouring(4, 2), 1) == 1);
    auto k3 = generate({"complete", {3}});
    CHECK(count_extensions(k3, PartialColouring({1, 2, std::nullopt}, 3), 2) == 1);
    CHECK_THROWS_AS(count_extensions(k3, PartialColouring(3, 3), 0), InputError);
    std::uint64_t nodes = 0;
    CHECK(count_extensions(k3, PartialColouring(3, 3), 100, nodes) == 6);
    CHECK(nodes > 0);

    auto fig = named_colouring("fig2-sud2");
    CHECK(count_extensions(fig.generated.structure, restrict(fig.colouring, fig.highlighted), 2) == 1);
}

TEST_CASE("determining, critical and fixed examples") {
    auto k4 = generate({"complete", {4}});
    Colouring c({1, 2, 3, 4}, 4);
    const std::vector<Vertex> three{0, 1, 3};
    CHECK(is_determining(k4, c, three));
    CHECK(is_critical(k4, c, three));
    const std::vector<Vertex> all{0, 1, 2, 3};
    CHECK(is_determining(k4, c, all));
    CHECK_FALSE(is_critical(k4, c, all));
    CHECK(fixed_vertices(k4, c) == VertexSet{0, 1, 2, 3});
    CHECK(mandatory_vertices(k4, c).empty());

    auto c5 = generate({"cycle", {5}});
    Colouring c5c({1, 2, 1, 2, 3}, 3);
    CHECK_FALSE(is_determining(c5, c5c, std::vector<Vertex>{}));
    CHECK(is_determining(c5, c5c, std::vector<Vertex>{0, 1, 2, 3, 4}));
    CHECK_THROWS_AS(is_determining(c5, Colouring({1, 1, 2, 1, 2}, 3), std::vector<Vertex>{}), InputError);

    auto c4 = generate({"cycle", {4}});
    CHECK(fixed_vertices(c4, Colouring({1, 2, 1, 2}, 2)).size() == 4);

    auto fig3 = named_colouring("fig3-colouring", {4});
    std::vector<Vertex> s;
    for (const char* l : {"u1", "u2", "u3", "x", "y"})
        s.push_back(vertex_named(fig3.generated, l));
    std::sort(s.begin(), s.end());
    CHECK(is_critical(fig3.generated.structure, fig3.colouring, s));

    auto fig5 = named_colouring("fig5-sud");
    CHECK(fixed_vertices(fig5.generated.structure, fig5.colouring).size() == 18);
}

TEST_CASE("capped count equals brute-force count (n <= 8, k <= 3)") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 8)(rng);
        const int k = std::uniform_int_distribution<int>(1, 3)(rng);
        const auto s = trial % 3 == 2 && n >= 3 ? oracle::random_hypergraph(n, n, 3, rng)
                                                 : oracle::random_graph(n, 0.4, rng);
        const auto list = oracle::all_proper(s, k);
        oracle::Assignment partial(n, 0);
        for (int v = 0; v < n; ++v)
            if (std::bernoulli_distribution(0.3)(rng))
                partial[v] = std::uniform_int_distribution<int>(1, k)(rng);
        const auto p = partial_from(partial, k);
        if (!is_consistent(s, p))
            continue;
        CHECK(count_extensions(s, p, std::uint64_t{1} << 40) == oracle::count_agreeing(list, partial));
    }
}

TEST_CASE("propagation only assigns colours shared by every extension") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = std::uniform_int_distribution<int>(2, 9)(rng);
        const int k = std::uniform_int_distribution<int>(2, 4)(rng);
        const auto s = trial % 2 ? oracle::random_hypergraph(n, n, 4, rng) : oracle::random_graph(n, 0.5, rng);
        const auto list = oracle::all_proper(s, k);
        if (list.empty())
            continue;
        const auto& base = list[std::uniform_int_distribution<std::size_t>(0, list.size() - 1)(rng)];
        oracle::Assignment partial(n, 0);
        for (int v = 0; v < n; ++v)
            if (std::bernoulli_distribution(0.35)(rng))
                partial[v] = base[v];
        auto closed = propagate_forced(s, partial_from(partial, k));
        REQUIRE(closed);
        for (const auto& a : list) {
            bool extends = true;
            for (int v = 0; v < n && extends; ++v)
                extends = partial[v] == 0 || partial[v] == a[v];
            if (!extends)
                continue;
            for (int v = 0; v < n; ++v)
                if ((*closed)[v])
                    CHECK(*(*closed)[v] == a[v]);
        }
    }
}

TEST_CASE("determining sets are upward closed") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = std::uniform_int_distribution<int>(2, 8)(rng);
        const auto s = oracle::random_graph(n, 0.5, rng);
        const int k = oracle::chromatic(s) + static_cast<int>(rng() % 2);
        auto c = random_proper(s, k, rng);
        REQUIRE(c);
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (!is_determining(s, *c, subset_of(mask, n)))
                continue;
            for (int v = 0; v < n; ++v)
                CHECK(is_determining(s, *c, subset_of(mask | 1u << v, n)));
        }
    }
}

TEST_CASE("determining and critical agree with the oracle") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = std::uniform_int_distribution<int>(2, 7)(rng);
        const auto s = trial % 2 ? oracle::random_hypergraph(n, n, 3, rng) : oracle::random_graph(n, 0.5, rng);
        const int k = trial % 2 ? 2 : oracle::chromatic(s);
        const auto list = oracle::all_proper(s, k);
        if (list.empty())
            continue;
        const Colouring c(list[rng() % list.size()], k);
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            CHECK(is_determining(s, c, subset_of(mask, n)) == oracle::determining(list, c.colours(), mask));
            CHECK(is_critical(s, c, subset_of(mask, n)) == oracle::critical(list, c.colours(), mask));
        }
    }
}

TEST_CASE("fixed vertices: graph rule and single-recolouring rule") {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 8)(rng);
        const auto s = oracle::random_graph(n, 0.5, rng);
        const int k = oracle::chromatic(s) + static_cast<int>(rng() % 3);
        auto c = random_proper(s, k, rng);
        REQUIRE(c);
        const auto fixed = fixed_vertices(s, *c);
        CHECK(fixed == oracle::fixed_graph(s, assignment_of(*c), k));
        // On graphs a vertex is fixed iff everything else determines it.
        for (int v = 0; v < n; ++v) {
            std::vector<Vertex> rest;
            for (int u = 0; u < n; ++u)
                if (u != v)
                    rest.push_back(u);
            CHECK(is_determining(s, *c, rest) == std::binary_search(fixed.begin(), fixed.end(), v));
        }
    }
    // On hypergraphs the fixed set is contained in the "rest determines v" set.
    for (int trial = 0; trial < 60; ++trial) {
        const int n = std::uniform_int_distribution<int>(3, 8)(rng);
        const auto s = oracle::random_hypergraph(n, n, 3, rng);
        auto c = random_proper(s, 2, rng);
        if (!c)
            continue;
        for (Vertex v : fixed_vertices(s, *c)) {
            std::vector<Vertex> rest;
            for (int u = 0; u < n; ++u)
                if (u != v)
                    rest.push_back(u);
            CHECK(is_determining(s, *c, rest));
        }
    }
}

TEST_CASE("removing a monochromatic independent set of fixed vertices leaves a determining set") {
    std::mt19937_64 rng(16);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = std::uniform_int_distribution<int>(2, 9)(rng);
        const auto s = oracle::random_graph(n, 0.45, rng);
        const int k = oracle::chromatic(s);
        auto c = random_proper(s, k, rng);
        REQUIRE(c);
        const auto fixed = fixed_vertices(s, *c);
        for (Colour colour = 1; colour <= k; ++colour) {
            std::vector<Vertex> rest;
            for (int v = 0; v < n; ++v)
                if (!((*c)[v] == colour && std::binary_search(fixed.begin(), fixed.end(), v)))
                    rest.push_back(v);
            CHECK(is_determining(s, *c, rest));
        }
    }
}

}
