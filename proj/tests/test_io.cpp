#include "critset/error.hpp"
#include "critset/generators.hpp"
#include "critset/io.hpp"
#include "critset/verify.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>
#include <unistd.h>

using namespace critset;

namespace {

std::filesystem::path temp_file(const std::string& stem) {
    return std::filesystem::temp_directory_path() /
           (stem + "-" + std::to_string(::getpid()) + "-" + std::to_string(std::random_device{}()));
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("graph6 small codes") {
    auto k2 = parse_graph6("A_");
    CHECK(k2 == generate({"complete", {2}}));
    auto star = parse_graph6("D?{");
    CHECK(star.order() == 5);
    CHECK(star.edges() == std::vector<Edge>{{0, 4}, {1, 4}, {2, 4}, {3, 4}});
    CHECK(parse_graph6(">>graph6<<A_\n") == k2);
    CHECK(parse_graph6("?").order() == 0);
    CHECK(to_graph6(k2) == "A_");
    CHECK(to_graph6(star) == "D?{");
}

TEST_CASE("graph6 errors carry byte offsets") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    try {
        parse_graph6("D?{{");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 3);
    }
    try {
        parse_graph6("D?\x7f");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
    }
    try {
        parse_graph6("A`");  // padding bit set
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 1);
    }
    try {
        parse_graph6(">>graph6<<D?");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 12);
    }
    CHECK_THROWS_AS(to_graph6(generate({"latin_hypergraph", {2}})), InputError);
}

TEST_CASE("graph6 decoding matches an independent decoder on 100 random graphs") {
    std::ifstream in(std::filesystem::path(CRITSET_TEST_DATA) / "graph6_random.txt");
    REQUIRE(in);
    std::string line;
    int checked = 0;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::string code, edges_field;
        int n = 0;
        std::getline(fields, code, '\t');
        fields >> n;
        fields.ignore(1);
        std::getline(fields, edges_field);
        std::istringstream edge_tokens(edges_field);
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (int u, v; edge_tokens >> u >> v;)
            edges.emplace_back(u, v);
        const auto parsed = parse_graph6(code);
        CHECK(parsed == ColourStructure::graph(n, edges));
        CHECK(to_graph6(parsed) == code);
        ++checked;
    }
    CHECK(checked == 100);
}

TEST_CASE("graph6 round trip on random graphs, including long headers") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 60; ++i) {
        const int n = i < 50 ? std::uniform_int_distribution<int>(0, 70)(rng) : 63 + i;
        const auto g = oracle::random_graph(n, 0.2, rng);
        CHECK(parse_graph6(to_graph6(g)) == g);
    }
}

TEST_CASE("hypergraph JSON") {
    auto c4 = parse_hypergraph_json(R"({"n":4,"edges":[[0,1],[1,2],[2,3],[3,0]]})", true);
    CHECK(c4 == generate({"cycle", {4}}));
    auto sud = generate({"sudoku_hypergraph", {2}});
    CHECK(parse_hypergraph_json(to_json(sud).dump()) == sud);
    CHECK_THROWS_AS(parse_hypergraph_json(R"({"n":3,"edges":[[0]]})"), InputError);
    CHECK_THROWS_AS(parse_hypergraph_json(R"({"n":3,"edges":[[0,3]]})"), InputError);
    CHECK_THROWS_AS(parse_hypergraph_json(R"({"n":3,"edges":[[0,1],[1,0]]})"), InputError);
    CHECK_THROWS_AS(parse_hypergraph_json(R"({"edges":[]})"), InputError);
    CHECK_THROWS_AS(parse_hypergraph_json(R"({"n":"3","edges":[]})"), InputError);
    CHECK_THROWS_AS(parse_hypergraph_json(R"({"n":3,"edges":[[0,"1"]]})"), InputError);
    CHECK_THROWS_AS(parse_hypergraph_json("{"), ParseError);

    std::mt19937_64 rng(42);
    for (int i = 0; i < 40; ++i) {
        const auto h = oracle::random_hypergraph(std::uniform_int_distribution<int>(2, 12)(rng), 8, 5, rng);
        CHECK(parse_hypergraph_json(to_json(h).dump()) == h);
    }
}

TEST_CASE("edge lists and colouring files") {
    auto g = parse_edge_list("# comment\n4\n0 1\n1 2\n2 3 # trailing\n\n3 0\n");
    CHECK(g == generate({"cycle", {4}}));
    auto h = parse_edge_list("3\n0 1 2\n");
    CHECK_FALSE(h.is_graph());
    CHECK(parse_edge_list(to_edge_list(generate({"sudoku_hypergraph", {2}}))) ==
          generate({"sudoku_hypergraph", {2}}));
    CHECK_THROWS_AS(parse_edge_list(""), InputError);
    CHECK_THROWS_AS(parse_edge_list("3 4\n"), InputError);
    CHECK_THROWS_AS(parse_edge_list("3\n0 x\n"), InputError);

    CHECK(parse_colouring_json("[1,2,1]", 2).colours() == std::vector<Colour>{1, 2, 1});
    CHECK_THROWS_AS(parse_colouring_json("[1,3]", 2), InputError);
    CHECK_THROWS_AS(parse_colouring_json("[0]", 2), InputError);
    CHECK_THROWS_AS(parse_colouring_json("{}", 2), InputError);
    CHECK(parse_format("hjson") == Format::hjson);
    CHECK_THROWS_AS(parse_format("sparse6"), InputError);
}

TEST_CASE("result cache stores whole records under concurrent appends") {
    const auto path = temp_file("critset-cache");
    ResultCache cache(path);
    CHECK_FALSE(cache.lookup(1, "sn", 3));
    std::vector<std::thread> writers;
    for (int t = 0; t < 8; ++t)
        writers.emplace_back([&, t] {
            for (int i = 0; i < 50; ++i)
                cache.store(static_cast<std::uint64_t>(t), "olcs", i,
                            nlohmann::json{{"value", i}, {"pad", std::string(300, 'x')}});
        });
    for (auto& w : writers)
        w.join();
    std::ifstream in(path);
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) {
        CHECK_FALSE(nlohmann::json::parse(line, nullptr, false).is_discarded());
        ++lines;
    }
    CHECK(lines == 400);
    auto hit = cache.lookup(5, "olcs", 17);
    REQUIRE(hit);
    CHECK((*hit)["value"] == 17);
    CHECK_FALSE(cache.lookup(5, "oscs", 17));
    std::filesystem::remove(path);
}

}
