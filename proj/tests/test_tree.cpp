#include "critset/error.hpp"
#include "critset/generators.hpp"
#include "critset/params.hpp"
#include "critset/tree.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace critset;

TEST_SUITE("tree") {

TEST_CASE("recurrence examples") {
    CHECK(sn_tree(generate({"star", {5}}), 3) == 5);
    CHECK(sn_tree(generate({"star", {2}}), 4) == 3);
    CHECK(sn_tree(generate({"complete_binary_tree", {2}}), 3) == 4);
    CHECK(sn_tree(generate({"complete_binary_tree", {3}}), 3) == 8);
    CHECK(sn_tree(generate({"path", {5}}), 3) == 3);
    CHECK(sn_tree(generate({"path", {1}}), 3) == 1);
    CHECK_THROWS_AS(sn_tree(generate({"cycle", {4}}), 3), InputError);
    CHECK_THROWS_AS(sn_tree(generate({"path", {4}}), 2), InputError);
    CHECK_THROWS_AS(sn_tree(generate({"empty", {3}}), 3), InputError);
}

TEST_CASE("r-domination examples") {
    CHECK(r_domination(generate({"path", {4}}), 1) == 2);
    CHECK(r_domination(generate({"star", {3}}), 2) == 3);
    CHECK(r_domination(generate({"complete_binary_tree", {2}}), 2) == 5);
    CHECK(r_domination(generate({"complete_binary_tree", {3}}), 2) == 10);
    CHECK_THROWS_AS(r_domination(generate({"path", {4}}), 0), InputError);
    CHECK_THROWS_AS(r_domination(generate({"sudoku_hypergraph", {2}}), 1), InputError);
}

TEST_CASE("recurrence equals the brute-force Sudoku number on random trees") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 200; ++i) {
        const int n = std::uniform_int_distribution<int>(1, 10)(rng);
        const auto t = oracle::random_tree(n, rng);
        for (int k = 3; k <= 5; ++k)
            CHECK(sn_tree(t, k) == oracle::sn(t, k));
    }
}

TEST_CASE("tree properties on random trees") {
    std::mt19937_64 rng(32);
    for (int i = 0; i < 150; ++i) {
        const int n = std::uniform_int_distribution<int>(2, 14)(rng);
        const auto t = oracle::random_tree(n, rng);
        REQUIRE(is_tree(t));
        for (int k = 3; k <= 5; ++k) {
            const int here = sn_tree(t, k);
            CHECK(here <= sn_tree(t, k + 1));
            // Removing a leaf changes sn by 0 or 1.
            for (Vertex v = 0; v < n; ++v)
                if (t.degree(v) == 1) {
                    std::vector<Vertex> keep;
                    for (Vertex u = 0; u < n; ++u)
                        if (u != v)
                            keep.push_back(u);
                    const int smaller = sn_tree(t.induced(keep), k);
                    CHECK(smaller <= here);
                    CHECK(here <= smaller + 1);
                    break;
                }
        }
        for (int r = 1; r <= 3; ++r) {
            const int gamma = r_domination(t, r);
            if (r >= 2)
                CHECK(sn_tree(t, 1 + r) <= gamma);
            CHECK(gamma <= r_domination(t, r + 1));
        }
    }
}

TEST_CASE("tree recurrence matches the general solver on larger trees") {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 12; ++i) {
        const auto t = oracle::random_tree(std::uniform_int_distribution<int>(11, 13)(rng), rng);
        for (int k = 3; k <= 4; ++k)
            CHECK(sn_tree(t, k) == sn(t, k).value);
    }
}

}
