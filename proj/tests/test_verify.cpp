#include "critset/error.hpp"
#include "critset/io.hpp"
#include "critset/verify.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <unistd.h>

using namespace critset;

namespace {

std::string stream_text(int max_order) {
    std::string all;
    for (int n = 1; n <= max_order; ++n)
        all += read_file(data_dir() / "graphs" / ("connected_n" + std::to_string(n) + ".g6"));
    return all;
}

nlohmann::json stable(const CheckReport& r) {
    auto j = to_json(r);
    j.erase("seconds");
    return j;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("registry") {
    const auto names = check_names();
    CHECK(std::find(names.begin(), names.end(), "k3k3-sn-table") != names.end());
    CHECK(std::find(names.begin(), names.end(), "conjecture-n2") != names.end());
    CHECK_THROWS_AS(run_check("no-such-check"), InputError);
    CHECK_THROWS_AS(parse_kpolicy("chi+2"), InputError);
    CHECK(parse_kpolicy("chi+1") == KPolicy::chi_plus_one);
}

TEST_CASE("named checks pass and are reproducible") {
    for (const char* name : {"k3k3-sn-table", "literature-sn", "kn-minus-c5", "rho-ratio", "moser-extension"}) {
        INFO(name);
        const auto a = run_check(name);
        CHECK(a.pass);
        CHECK(a.violations.empty());
        const auto b = run_check(name);
        CHECK(stable(a) == stable(b));
    }
    CheckOptions opt;
    opt.params = {4, 5};
    const auto gk = run_check("gk-monotonicity", opt);
    CHECK(gk.pass);
    CHECK(gk.computed["sn(G5,4)"] == 5);
}

TEST_CASE("scan reports, skipped records and malformed input") {
    std::stringstream in("A_\n\nBW\nB?\nD?{{\nC~\n");
    const auto r = scan_stream(in, "thm-sn-n-1");
    CHECK(r.computed["records"] == 5);
    CHECK(r.computed["evaluated"] == 3);
    CHECK(r.computed["skipped_disconnected"] == 1);
    CHECK(r.computed["errors"].size() == 1);
    CHECK(r.violations.empty());
    CHECK_FALSE(r.pass);

    std::stringstream bad("A_\n");
    CHECK_THROWS_AS(scan_stream(bad, "nope"), InputError);
}

TEST_CASE("conjecture scans are labelled as consistency results") {
    std::stringstream in(stream_text(5));
    const auto r = scan_stream(in, "conjecture-n2");
    CHECK(r.label == "consistent-with");
    CHECK(r.pass);
    CHECK(r.computed["survivors"] == nlohmann::json::array({"Dhc C5"}));
}

TEST_CASE("a resumed scan ends with the same report as an uninterrupted one") {
    const std::string all = stream_text(6);
    std::stringstream whole_in(all);
    ScanOptions opt;
    opt.chunk = 16;
    const auto whole = scan_stream(whole_in, "lemma-ivs", opt);

    const auto checkpoint = std::filesystem::temp_directory_path() /
                            ("critset-ckpt-" + std::to_string(::getpid()) + ".json");
    std::filesystem::remove(checkpoint);
    opt.checkpoint = checkpoint;
    // First run sees only a prefix of the stream, as if interrupted.
    std::istringstream lines(all);
    std::string prefix, line;
    for (int i = 0; i < 70 && std::getline(lines, line); ++i)
        prefix += line + "\n";
    std::stringstream first(prefix);
    scan_stream(first, "lemma-ivs", opt);
    auto saved = nlohmann::json::parse(read_file(checkpoint));
    CHECK(saved["processed"] == 70);

    std::stringstream rest(all);
    const auto resumed = scan_stream(rest, "lemma-ivs", opt);
    CHECK(stable(resumed) == stable(whole));
    std::filesystem::remove(checkpoint);
}

TEST_CASE("serial and parallel scans agree") {
    ScanOptions serial;
    serial.exec = Exec::serial;
    ScanOptions parallel;
    parallel.chunk = 7;
    for (const char* p : {"thm-olcs-n-1", "two-colourings-prop"}) {
        std::stringstream a(stream_text(5)), b(stream_text(5));
        CHECK(stable(scan_stream(a, p, serial)) == stable(scan_stream(b, p, parallel)));
    }
}

}
