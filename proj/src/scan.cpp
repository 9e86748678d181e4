#include "critset/verify.hpp"

#include "critset/error.hpp"
#include "critset/extension.hpp"
#include "critset/generators.hpp"
#include "critset/io.hpp"
#include "critset/params.hpp"
#include "graph_util.hpp"

#include <chrono>
#include <exception>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace critset {

namespace {

using detail::clique_number;
using detail::is_complete;
using detail::isomorphic;

struct Outcome {
    std::vector<std::string> violations;
    std::vector<std::string> survivors;
    std::vector<std::string> notes;
    bool premise = false;
};

struct Context {
    KPolicy kpolicy;
    Budget budget;
};

SolveOptions serial(const Context& ctx) {
    SolveOptions o;
    o.exec = Exec::serial;
    o.budget = ctx.budget;
    return o;
}

int chi_of(const ColourStructure& g) { return g.order() == 0 ? 0 : chromatic_number(g); }

int policy_k(const ColourStructure& g, const Context& ctx) {
    return chi_of(g) + (ctx.kpolicy == KPolicy::chi_plus_one ? 1 : 0);
}

std::string describe(const ColourStructure& g) { return to_graph6(g); }

std::string fmt(const ColourStructure& g, const std::string& what) { return describe(g) + ": " + what; }

Outcome sn_n_minus_1(const ColourStructure& g, const Context& ctx) {
    Outcome out;
    const int n = g.order(), k = policy_k(g, ctx);
    const bool complete = is_complete(g);
    const int s = sn(g, k, serial(ctx)).value;
    const int o = oscs(g, k, serial(ctx)).value;
    out.premise = s == n - 1 || o == n - 1;
    if ((s == n - 1) != complete)
        out.violations.push_back(fmt(g, "sn=" + std::to_string(s) + " with n=" + std::to_string(n) +
                                            (complete ? " on a complete graph" : " on a non-complete graph")));
    if ((o == n - 1) != complete)
        out.violations.push_back(fmt(g, "oscs=" + std::to_string(o) + " with n=" + std::to_string(n) +
                                            (complete ? " on a complete graph" : " on a non-complete graph")));
    return out;
}

Outcome olcs_n_minus_1(const ColourStructure& g, const Context& ctx) {
    Outcome out;
    const int n = g.order(), k = policy_k(g, ctx), chi = chi_of(g);
    const int value = olcs(g, k, serial(ctx)).value;
    bool witness = false;
    for (Vertex v = 0; v < n && !witness; ++v)
        witness = chi_of(detail::without_vertex(g, v)) == chi - 1 && g.degree(v) == chi - 1;
    out.premise = value == n - 1;
    if ((value == n - 1) != witness)
        out.violations.push_back(fmt(g, "olcs=" + std::to_string(value) + ", vertex with chi(G-v)=chi-1=deg(v) " +
                                            (witness ? "exists" : "absent")));
    return out;
}

Outcome sn_equals_n(const ColourStructure& g, const Context& ctx) {
    Outcome out;
    const int n = g.order(), delta = g.max_degree();
    for (int k = chi_of(g); k <= delta + 2; ++k) {
        const bool large = k > delta + 1;
        const int s = sn(g, k, serial(ctx)).value;
        const int u = ulcs(g, k, serial(ctx)).value;
        out.premise = out.premise || large;
        if ((s == n) != large)
            out.violations.push_back(fmt(g, "k=" + std::to_string(k) + " sn=" + std::to_string(s)));
        if ((u == n) != large)
            out.violations.push_back(fmt(g, "k=" + std::to_string(k) + " ulcs=" + std::to_string(u)));
    }
    return out;
}

Outcome oscs_olcs_equal_n(const ColourStructure& g, const Context& ctx) {
    Outcome out;
    const int n = g.order(), chi = chi_of(g);
    for (int k = chi; k <= std::max(chi + 1, g.max_degree() + 2); ++k) {
        const bool large = k > chi;
        const int o = oscs(g, k, serial(ctx)).value;
        const int l = olcs(g, k, serial(ctx)).value;
        out.premise = out.premise || large;
        if ((o == n) != large)
            out.violations.push_back(fmt(g, "k=" + std::to_string(k) + " oscs=" + std::to_string(o)));
        if ((l == n) != large)
            out.violations.push_back(fmt(g, "k=" + std::to_string(k) + " olcs=" + std::to_string(l)));
    }
    return out;
}

const ColourStructure& c5() {
    static const ColourStructure g = generate({"cycle", {5}});
    return g;
}

const ColourStructure& moser() {
    static const ColourStructure g = generate({"moser_spindle", {}});
    return g;
}

Outcome conjecture_n2(const ColourStructure& g, const Context& ctx) {
    Outcome out;
    const int n = g.order(), k = policy_k(g, ctx);
    if (sn(g, k, serial(ctx)).value != n - 2 || clique_number(g) >= chi_of(g))
        return out;
    out.premise = true;
    std::string name;
    if (isomorphic(g, c5()))
        name = "C5";
    else if (isomorphic(g, moser()))
        name = "moser_spindle";
    out.survivors.push_back(describe(g) + (name.empty() ? "" : " " + name));
    if (name.empty())
        out.violations.push_back(fmt(g, "sn=n-2 and clique number below chromatic number"));
    return out;
}

Outcome lemma_ivs(const ColourStructure& g, const Context& ctx) {
    Outcome out;
    const int n = g.order(), k = policy_k(g, ctx);
    if (sn(g, k, serial(ctx)).value != n - 2)
        return out;
    out.premise = true;
    const int ivs = ivs_chi(g);
    if (ivs != 1)
        out.violations.push_back(fmt(g, "sn=n-2 but ivs_chi=" + std::to_string(ivs)));
    return out;
}

Outcome triangle_free_n2(const ColourStructure& g, const Context& ctx) {
    Outcome out;
    const int n = g.order();
    if (clique_number(g) > 2 || chi_of(g) != 3)
        return out;
    if (sn(g, policy_k(g, ctx), serial(ctx)).value != n - 2)
        return out;
    out.premise = true;
    out.survivors.push_back(describe(g));
    if (!isomorphic(g, c5()))
        out.violations.push_back(fmt(g, "triangle-free, chi=3, sn=n-2, not C5"));
    return out;
}

bool has_critical_set_of_size(const ColourStructure& g, const Colouring& c, int size) {
    const int n = g.order();
    if (size > n)
        return false;
    std::vector<Vertex> subset(size);
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + size, true);
    do {
        subset.clear();
        for (Vertex v = 0; v < n; ++v)
            if (pick[v])
                subset.push_back(v);
        if (is_critical(g, c, subset))
            return true;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return false;
}

Outcome two_colourings(const ColourStructure& g, const Context&) {
    Outcome out;
    const int chi = chi_of(g);
    auto stream = enumerate_colourings(g, chi);
    std::vector<Colouring> classes;
    while (auto c = stream.next()) {
        classes.push_back(*c);
        if (classes.size() > 2)
            return out;
    }
    if (classes.size() != 2)
        return out;
    out.premise = true;
    for (const auto& c : classes)
        if (!has_critical_set_of_size(g, c, chi))
            out.violations.push_back(fmt(g, "no critical set of size chi for a colouring"));
    return out;
}

/// Spanning subgraphs H (edge subsets) with chi(H) = chi(G): param(H) >= param(G).
Outcome spanning_monotone(const ColourStructure& g, const Context& ctx, Param p, bool with_induced) {
    Outcome out;
    const int chi = chi_of(g);
    if (g.size() > 20)
        throw InputError("subgraph scan limited to 20 edges");
    const int whole = compute(p, g, chi, serial(ctx)).value;
    const std::uint64_t full = (std::uint64_t{1} << g.size()) - 1;
    std::size_t pairs = 0;
    for (std::uint64_t mask = 0; mask < full; ++mask) {
        ColourStructure h = detail::spanning_subgraph(g, mask);
        if (chi_of(h) != chi)
            continue;
        ++pairs;
        const int sub = compute(p, h, chi, serial(ctx)).value;
        if (sub < whole)
            out.violations.push_back(fmt(g, "spanning subgraph " + describe(h) + " has " + std::string(to_string(p)) +
                                                "=" + std::to_string(sub) + " < " + std::to_string(whole)));
    }
    out.premise = pairs > 0;
    if (with_induced) {
        // Proper induced subgraphs, reported separately from the spanning class.
        const int n = g.order();
        for (std::uint32_t keep = 1; keep + 1 < (1u << n); ++keep) {
            std::vector<Vertex> vs;
            for (Vertex v = 0; v < n; ++v)
                if (keep >> v & 1)
                    vs.push_back(v);
            ColourStructure h = g.induced(vs);
            if (chi_of(h) != chi)
                continue;
            const int sub = compute(p, h, chi, serial(ctx)).value;
            if (sub < whole)
                out.notes.push_back(fmt(g, "induced subgraph " + describe(h) + " has " + std::string(to_string(p)) +
                                               "=" + std::to_string(sub) + " < " + std::to_string(whole)));
        }
    }
    return out;
}

struct PredicateInfo {
    std::string claim;
    bool conjecture;
    std::function<Outcome(const ColourStructure&, const Context&)> eval;
};

const std::map<std::string, PredicateInfo>& predicates() {
    static const std::map<std::string, PredicateInfo> table{
        {"thm-sn-n-1", {"sn(G)=n-1 iff G=K_n, and oscs(G)=n-1 iff G=K_n", false, sn_n_minus_1}},
        {"thm-olcs-n-1",
         {"olcs(G)=n-1 iff some vertex v has chi(G-v)=chi(G)-1=deg(v)", false, olcs_n_minus_1}},
        {"thm-sn-n", {"for chi <= k <= max degree + 2: sn(G,k)=n iff k > max degree + 1, same for ulcs", false,
                      sn_equals_n}},
        {"thm-oscs-olcs-n", {"oscs(G,k)=n iff k > chi, same for olcs", false, oscs_olcs_equal_n}},
        {"conjecture-n2",
         {"C5 and the Moser spindle are the only graphs with sn=n-2 and clique number < chi", true, conjecture_n2}},
        {"lemma-ivs", {"sn(G)=n-2 implies ivs_chi(G)=1", false, lemma_ivs}},
        {"prop-k3-free", {"C5 is the only triangle-free graph with chi=3 and sn=n-2", false, triangle_free_n2}},
        {"two-colourings-prop",
         {"a graph with exactly two colouring classes has a critical set of size chi for every colouring", false,
          two_colourings}},
        {"oscs-subgraph-monotone",
         {"oscs(H) >= oscs(G) for spanning subgraphs H with chi(H)=chi(G)", false,
          [](const ColourStructure& g, const Context& c) { return spanning_monotone(g, c, Param::oscs, false); }}},
        {"conj2-olcs-subgraph",
         {"olcs(H) >= olcs(G) for subgraphs H with chi(H)=chi(G) (tested: spanning subgraphs; induced ones "
          "reported as notes)",
          true, [](const ColourStructure& g, const Context& c) { return spanning_monotone(g, c, Param::olcs, true); }}},
    };
    return table;
}

struct ScanState {
    std::size_t processed = 0;
    std::size_t evaluated = 0;
    std::size_t skipped = 0;
    std::size_t premise = 0;
    std::vector<std::string> violations;
    std::vector<std::string> survivors;
    std::vector<std::string> errors;
    std::vector<std::string> notes;

    nlohmann::json to_json(const std::string& predicate, KPolicy kp) const {
        return {{"predicate", predicate},
                {"kpolicy", kp == KPolicy::chi ? "chi" : "chi+1"},
                {"processed", processed},
                {"evaluated", evaluated},
                {"skipped_disconnected", skipped},
                {"premise_holds", premise},
                {"violations", violations},
                {"survivors", survivors},
                {"errors", errors},
                {"notes", notes}};
    }

    static ScanState from_json(const nlohmann::json& j) {
        ScanState s;
        s.processed = j.at("processed").get<std::size_t>();
        s.evaluated = j.at("evaluated").get<std::size_t>();
        s.skipped = j.at("skipped_disconnected").get<std::size_t>();
        s.premise = j.at("premise_holds").get<std::size_t>();
        s.violations = j.at("violations").get<std::vector<std::string>>();
        s.survivors = j.at("survivors").get<std::vector<std::string>>();
        s.errors = j.at("errors").get<std::vector<std::string>>();
        s.notes = j.at("notes").get<std::vector<std::string>>();
        return s;
    }
};

void save_checkpoint(const std::filesystem::path& path, const nlohmann::json& j) {
    const auto tmp = std::filesystem::path(path.string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out)
            throw InputError("cannot write checkpoint '" + tmp.string() + "'");
        out << j.dump() << '\n';
    }
    std::filesystem::rename(tmp, path);
}

struct Record {
    std::size_t line;
    std::string text;
};

struct RecordResult {
    std::optional<Outcome> outcome;
    bool skipped = false;
    std::string error;
};

RecordResult evaluate(const PredicateInfo& info, const Record& rec, const Context& ctx) {
    RecordResult r;
    ColourStructure g;
    try {
        g = parse_graph6(rec.text);
    } catch (const ParseError& e) {
        r.error = "line " + std::to_string(rec.line) + ": " + e.what() + " (byte " + std::to_string(e.offset()) + ")";
        return r;
    } catch (const InputError& e) {
        r.error = "line " + std::to_string(rec.line) + ": " + e.what();
        return r;
    }
    if (!g.connected()) {
        r.skipped = true;
        return r;
    }
    r.outcome = info.eval(g, ctx);
    return r;
}

}  // namespace

std::vector<std::string> scan_predicates() {
    std::vector<std::string> out;
    for (const auto& [name, _] : predicates())
        out.push_back(name);
    return out;
}

KPolicy parse_kpolicy(const std::string& s) {
    if (s == "chi")
        return KPolicy::chi;
    if (s == "chi+1")
        return KPolicy::chi_plus_one;
    throw InputError("unknown k policy '" + s + "' (expected chi or chi+1)");
}

CheckReport scan_stream(std::istream& in, const std::string& predicate, const ScanOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    auto it = predicates().find(predicate);
    if (it == predicates().end())
        throw InputError("unknown scan predicate '" + predicate + "'");
    const PredicateInfo& info = it->second;
    const Context ctx{opt.kpolicy, opt.budget};

    std::vector<Record> records;
    std::string line;
    for (std::size_t no = 1; std::getline(in, line); ++no)
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            records.push_back({no, line});

    ScanState state;
    if (opt.checkpoint && std::filesystem::exists(*opt.checkpoint)) {
        std::ifstream cin(*opt.checkpoint);
        auto j = nlohmann::json::parse(cin, nullptr, false);
        const std::string kp = opt.kpolicy == KPolicy::chi ? "chi" : "chi+1";
        if (!j.is_discarded() && j.value("predicate", "") == predicate && j.value("kpolicy", "") == kp)
            state = ScanState::from_json(j);
        if (state.processed > records.size())
            throw InputError("checkpoint is ahead of the stream");
    }

    const std::size_t chunk = std::max<std::size_t>(opt.chunk, 1);
    while (state.processed < records.size()) {
        const std::size_t begin = state.processed, end = std::min(records.size(), begin + chunk);
        std::vector<RecordResult> results(end - begin);
        std::exception_ptr failure;
        const bool par = opt.exec == Exec::parallel;
#pragma omp parallel for schedule(dynamic, 1) if (par)
        for (std::size_t i = begin; i < end; ++i) {
            try {
                results[i - begin] = evaluate(info, records[i], ctx);
            } catch (...) {
#pragma omp critical(critset_scan_failure)
                if (!failure)
                    failure = std::current_exception();
            }
        }
        if (failure)
            std::rethrow_exception(failure);
        for (auto& r : results) {
            if (!r.error.empty()) {
                state.errors.push_back(r.error);
            } else if (r.skipped) {
                ++state.skipped;
            } else {
                ++state.evaluated;
                state.premise += r.outcome->premise ? 1 : 0;
                auto append = [](std::vector<std::string>& to, const std::vector<std::string>& from) {
                    to.insert(to.end(), from.begin(), from.end());
                };
                append(state.violations, r.outcome->violations);
                append(state.survivors, r.outcome->survivors);
                append(state.notes, r.outcome->notes);
            }
        }
        state.processed = end;
        if (opt.checkpoint)
            save_checkpoint(*opt.checkpoint, state.to_json(predicate, opt.kpolicy));
    }

    CheckReport report;
    report.name = predicate;
    report.claim = info.claim;
    report.label = info.conjecture ? "consistent-with" : "verified";
    report.expected = {{"violations", 0}};
    auto summary = state.to_json(predicate, opt.kpolicy);
    report.computed = {{"records", state.processed},         {"evaluated", state.evaluated},
                       {"skipped_disconnected", state.skipped}, {"premise_holds", state.premise},
                       {"survivors", state.survivors},         {"errors", state.errors},
                       {"kpolicy", summary["kpolicy"]}};
    report.violations = state.violations;
    report.notes = state.notes;
    if (state.skipped > 0)
        report.notes.push_back(std::to_string(state.skipped) + " disconnected record(s) skipped");
    report.pass = state.violations.empty() && state.errors.empty();
    if (!report.pass && report.label == "consistent-with")
        report.label = "counterexample";
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

CheckReport scan_orders(int max_order, const std::string& predicate, const ScanOptions& opt) {
    std::stringstream all;
    for (int n = 1; n <= max_order; ++n) {
        const auto path = data_dir() / "graphs" / ("connected_n" + std::to_string(n) + ".g6");
        all << read_file(path);
    }
    CheckReport r = scan_stream(all, predicate, opt);
    r.notes.push_back("connected graphs of order 1.." + std::to_string(max_order));
    return r;
}

std::filesystem::path data_dir() {
    if (const char* p = std::getenv("CRITSET_DATA"); p && *p)
        return p;
#ifdef CRITSET_DEFAULT_DATA_DIR
    return CRITSET_DEFAULT_DATA_DIR;
#else
    return "data";
#endif
}

}  // namespace critset
