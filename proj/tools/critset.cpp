#include "critset/error.hpp"
#include "critset/generators.hpp"
#include "critset/io.hpp"
#include "critset/params.hpp"
#include "critset/tree.hpp"
#include "critset/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace critset;
using nlohmann::json;

namespace {

struct Globals {
    double budget = 0;
    bool no_cache = false;
    bool pretty = false;
    bool serial = false;

    SolveOptions solve() const {
        SolveOptions o;
        o.exec = serial ? Exec::serial : Exec::parallel;
        if (budget > 0)
            o.budget = Budget::seconds(budget);
        return o;
    }
};

void print_pretty_value(const std::string& key, const json& value, int indent) {
    std::cout << std::string(indent, ' ') << key << ": ";
    if (value.is_object()) {
        std::cout << '\n';
        for (const auto& [k, v] : value.items())
            print_pretty_value(k, v, indent + 2);
    } else {
        std::cout << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
}

void emit(const json& j, bool pretty) {
    if (!pretty) {
        std::cout << j.dump() << '\n';
        return;
    }
    if (j.contains("pass")) {
        std::cout << (j["pass"].get<bool>() ? "PASS " : "FAIL ") << j["name"].get<std::string>() << " ["
                  << j["label"].get<std::string>() << ", " << j["seconds"].get<double>() << " s]\n";
        std::cout << "  claim: " << j["claim"].get<std::string>() << '\n';
        for (const auto& [k, v] : j["computed"].items()) {
            std::cout << "  " << k << ": " << v.dump();
            if (j["expected"].contains(k))
                std::cout << "  (expected " << j["expected"][k].dump() << ")";
            std::cout << '\n';
        }
        for (const auto& v : j["violations"])
            std::cout << "  violation: " << v.get<std::string>() << '\n';
        for (const auto& v : j["notes"])
            std::cout << "  note: " << v.get<std::string>() << '\n';
        return;
    }
    for (const auto& [k, v] : j.items())
        print_pretty_value(k, v, 0);
}

int report_error(const std::string& kind, const std::string& message) {
    std::cout << json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << '\n';
    return kind == "budget-exhausted" ? 3 : 2;
}

ColourStructure load(const std::string& input, const std::string& format) {
    if (input == "-") {
        std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
        switch (parse_format(format)) {
        case Format::graph6:
            return parse_graph6(text.substr(0, text.find('\n')));
        case Format::edges:
            return parse_edge_list(text);
        case Format::hjson:
            return parse_hypergraph_json(text);
        }
    }
    return read_structure(input, parse_format(format));
}

int default_k(const ColourStructure& s, int k) { return k > 0 ? k : chromatic_number(s); }

json describe(const ColourStructure& s) {
    return {{"n", s.order()}, {"edges", s.size()}, {"kind", s.is_graph() ? "graph" : "hypergraph"}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact critical-set parameters of graph and hypergraph colourings"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--budget", g.budget, "Wall-clock limit in seconds (0 = none)");
    app.add_flag("--no-cache", g.no_cache, "Do not read or write the result cache");
    app.add_flag("--pretty", g.pretty, "Human-readable output");
    app.add_flag("--serial", g.serial, "Use the serial reference kernels");

    std::string param_name, input = "-", format = "graph6", colouring_file, family, emit_format = "hjson",
                              check, predicate, kpolicy = "chi", checkpoint;
    int k = 0;
    std::vector<int> params;
    bool all = false;

    auto* param = app.add_subcommand("param", "Compute sn, oscs, ulcs or olcs");
    param->add_option("which", param_name, "sn|oscs|ulcs|olcs")->required();
    param->add_option("--k", k, "Number of colours (default: chromatic number)");
    param->add_option("--input", input, "Input file, - for stdin")->required();
    param->add_option("--format", format, "graph6|edges|hjson");

    auto* perc = app.add_subcommand("percolouring", "Smallest or largest critical set of one colouring");
    perc->add_option("which", param_name, "scs|lcs")->required();
    perc->add_option("--input", input)->required();
    perc->add_option("--format", format);
    perc->add_option("--colouring", colouring_file, "JSON array of colours in [1..k]")->required();
    perc->add_option("--k", k, "Number of colours")->required();

    auto* tree = app.add_subcommand("tree-sn", "Sudoku number of a tree by the polynomial recurrence");
    tree->add_option("--k", k)->required();
    tree->add_option("--input", input)->required();
    tree->add_option("--format", format);

    auto* gen = app.add_subcommand("gen", "Generate a family member");
    gen->add_option("family", family)->required();
    gen->add_option("params", params);
    gen->add_option("--emit", emit_format, "graph6|hjson|edges");

    auto* verify = app.add_subcommand("verify", "Run named checks");
    verify->add_option("check", check);
    verify->add_flag("--all", all);
    verify->add_option("--param", params, "Override instance parameters");

    auto* scan = app.add_subcommand("scan", "Evaluate a predicate over a graph6 stream");
    scan->add_option("--predicate", predicate)->required();
    scan->add_option("--kpolicy", kpolicy, "chi|chi+1");
    scan->add_option("--checkpoint", checkpoint, "Resumable progress file");
    scan->add_option("--input", input, "graph6 stream, - for stdin");

    auto* list = app.add_subcommand("list", "List families, colourings, checks and scan predicates");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return report_error("usage", e.what());
    }

    try {
        if (*param) {
            const Param p = parse_param(param_name);
            const auto s = load(input, format);
            const int kk = default_k(s, k);
            std::optional<ResultCache> cache;
            if (!g.no_cache)
                cache.emplace(ResultCache::default_path());
            json result;
            bool cached = false;
            if (cache) {
                if (auto hit = cache->lookup(s.hash(), to_string(p), kk)) {
                    result = *hit;
                    cached = true;
                }
            }
            if (!cached) {
                result = to_json(compute(p, s, kk, g.solve()));
                if (cache)
                    cache->store(s.hash(), to_string(p), kk, result);
            }
            emit({{"param", to_string(p)}, {"k", kk}, {"structure", describe(s)}, {"cached", cached}, {"result", result}},
                 g.pretty);
            return 0;
        }
        if (*perc) {
            const auto s = load(input, format);
            const auto c = parse_colouring_json(read_file(colouring_file), k);
            ParamResult r;
            if (param_name == "scs")
                r = scs(s, c, k, g.solve());
            else if (param_name == "lcs")
                r = lcs(s, c, k, g.solve());
            else
                throw InputError("percolouring expects scs or lcs");
            emit({{"param", param_name}, {"k", k}, {"structure", describe(s)}, {"result", to_json(r)}}, g.pretty);
            return 0;
        }
        if (*tree) {
            const auto s = load(input, format);
            emit({{"param", "sn"}, {"k", k}, {"method", "tree"}, {"structure", describe(s)}, {"value", sn_tree(s, k)}},
                 g.pretty);
            return 0;
        }
        if (*gen) {
            const auto s = generate({family, params});
            if (emit_format == "graph6")
                std::cout << to_graph6(s) << '\n';
            else if (emit_format == "edges")
                std::cout << to_edge_list(s);
            else if (emit_format == "hjson")
                std::cout << to_json(s).dump() << '\n';
            else
                throw InputError("unknown emit format '" + emit_format + "'");
            return 0;
        }
        if (*verify) {
            if (all == !check.empty())
                throw InputError("verify needs a check name or --all");
            CheckOptions opt;
            opt.exec = g.serial ? Exec::serial : Exec::parallel;
            if (g.budget > 0)
                opt.budget = Budget::seconds(g.budget);
            opt.params = params;
            bool ok = true;
            for (const auto& name : all ? check_names() : std::vector<std::string>{check}) {
                const auto report = run_check(name, opt);
                emit(to_json(report), g.pretty);
                std::cout.flush();
                ok = ok && report.pass;
            }
            return ok ? 0 : 1;
        }
        if (*scan) {
            ScanOptions opt;
            opt.kpolicy = parse_kpolicy(kpolicy);
            opt.exec = g.serial ? Exec::serial : Exec::parallel;
            if (g.budget > 0)
                opt.budget = Budget::seconds(g.budget);
            if (!checkpoint.empty())
                opt.checkpoint = checkpoint;
            CheckReport report;
            if (input == "-") {
                report = scan_stream(std::cin, predicate, opt);
            } else {
                std::ifstream in(input);
                if (!in)
                    throw InputError("cannot open '" + input + "'");
                report = scan_stream(in, predicate, opt);
            }
            emit(to_json(report), g.pretty);
            return report.pass ? 0 : 1;
        }
        if (*list) {
            emit({{"families", family_names()},
                  {"colourings", colouring_names()},
                  {"checks", check_names()},
                  {"predicates", scan_predicates()}},
                 g.pretty);
            return 0;
        }
    } catch (const Error& e) {
        return report_error(e.kind(), e.what());
    } catch (const std::exception& e) {
        return report_error("internal", e.what());
    }
    return 0;
}
