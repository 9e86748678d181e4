#include "critset/verify.hpp"

#include "critset/error.hpp"
#include "critset/extension.hpp"
#include "critset/generators.hpp"
#include "critset/io.hpp"
#include "critset/params.hpp"
#include "critset/tree.hpp"
#include "graph_util.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>

namespace critset {

nlohmann::json to_json(const CheckReport& r) {
    return {{"name", r.name},
            {"claim", r.claim},
            {"label", r.label},
            {"pass", r.pass},
            {"expected", r.expected},
            {"computed", r.computed},
            {"violations", r.violations},
            {"notes", r.notes},
            {"seconds", r.seconds}};
}

namespace {

/// Collects expected/computed pairs into a report.
class Recorder {
public:
    Recorder(CheckReport& r, const CheckOptions& opt) : r_(r), opt_(opt) {}

    SolveOptions solve() const {
        SolveOptions s;
        s.exec = opt_.exec;
        s.budget = opt_.budget;
        return s;
    }
    const std::vector<int>& params() const { return opt_.params; }

    void eq(const std::string& label, long long expected, long long computed) {
        r_.expected[label] = expected;
        r_.computed[label] = computed;
        if (expected != computed)
            fail(label + ": expected " + std::to_string(expected) + ", computed " + std::to_string(computed));
    }
    void holds(const std::string& label, bool value) {
        r_.expected[label] = true;
        r_.computed[label] = value;
        if (!value)
            fail(label + " does not hold");
    }
    void at_most(const std::string& label, long long bound, long long computed) {
        r_.expected[label] = "<= " + std::to_string(bound);
        r_.computed[label] = computed;
        if (computed > bound)
            fail(label + ": " + std::to_string(computed) + " exceeds " + std::to_string(bound));
    }
    void at_least(const std::string& label, long long bound, long long computed) {
        r_.expected[label] = ">= " + std::to_string(bound);
        r_.computed[label] = computed;
        if (computed < bound)
            fail(label + ": " + std::to_string(computed) + " below " + std::to_string(bound));
    }
    void info(const std::string& label, nlohmann::json value) { r_.computed[label] = std::move(value); }
    void note(std::string text) { r_.notes.push_back(std::move(text)); }

private:
    void fail(std::string why) {
        r_.pass = false;
        r_.violations.push_back(std::move(why));
    }

    CheckReport& r_;
    const CheckOptions& opt_;
};

std::string label_of(const Generated& g, const VertexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? "," : "") + g.labels[s[i]];
    return out + "}";
}

VertexSet named(const Generated& g, std::initializer_list<const char*> labels) {
    VertexSet out;
    for (const char* l : labels)
        out.push_back(vertex_named(g, l));
    std::sort(out.begin(), out.end());
    return out;
}

int chi(const ColourStructure& g) { return chromatic_number(g); }

void k3k3_table(Recorder& rec) {
    const auto g = generate({"rook", {3, 3}});
    const int expected[] = {2, 5, 7, 9};
    for (int k = 3; k <= 6; ++k)
        rec.eq("sn(K3xK3," + std::to_string(k) + ")", expected[k - 3], sn(g, k, rec.solve()).value);
}

void literature_sn(Recorder& rec) {
    rec.eq("sn(Petersen,3)", 4, sn(generate({"petersen", {}}), 3, rec.solve()).value);
    rec.eq("sn(C7,3)", 4, sn(generate({"cycle", {7}}), 3, rec.solve()).value);
    rec.eq("sn(K2xC5,3)", 3, sn(generate({"prism", {5}}), 3, rec.solve()).value);
    rec.eq("sn(C4,2)", 1, sn(generate({"cycle", {4}}), 2, rec.solve()).value);
    for (int n = 1; n <= 6; ++n)
        rec.eq("sn(K" + std::to_string(n) + "," + std::to_string(n) + ")", n - 1,
               sn(generate({"complete", {n}}), n, rec.solve()).value);
    for (int m : {3, 4, 5})
        rec.eq("sn(C" + std::to_string(2 * m + 1) + ",3)", m + 1,
               sn(generate({"cycle", {2 * m + 1}}), 3, rec.solve()).value);
}

void gk_monotonicity(Recorder& rec) {
    std::vector<int> ks = rec.params().empty() ? std::vector<int>{4, 5, 6} : rec.params();
    for (int k : ks) {
        const auto g = generate({"kkk_minus_matching", {k}});
        const std::string name = "G" + std::to_string(k);
        const int below = sn(g, k - 1, rec.solve()).value;
        const int at = sn(g, k, rec.solve()).value;
        rec.eq("sn(" + name + "," + std::to_string(k - 1) + ")", 2 * k - 5, below);
        rec.eq("sn(" + name + "," + std::to_string(k) + ")", k, at);
        if (k >= 6)
            rec.holds("sn(" + name + "," + std::to_string(k) + ") < sn(" + name + "," + std::to_string(k - 1) + ")",
                      at < below);
    }
}

void fig3_ulcs(Recorder& rec) {
    const auto nc = named_colouring("fig3-colouring", {4});
    const auto& g = nc.generated;
    const auto& s = g.structure;
    rec.eq("order", 11, s.order());
    rec.holds("colouring proper", is_proper(s, nc.colouring));
    const auto first = named(g, {"u1", "u2", "u3", "x", "y"});
    rec.holds("critical " + label_of(g, first), is_critical(s, nc.colouring, first));
    // The second example set as printed ({u1,u3,w,x,v1}) leaves y and z
    // swappable; with z in place of x it is critical.
    const auto printed = named(g, {"u1", "u3", "w", "x", "v1"});
    const auto second = named(g, {"u1", "u3", "w", "z", "v1"});
    rec.info("critical " + label_of(g, printed), is_critical(s, nc.colouring, printed));
    rec.holds("critical " + label_of(g, second), is_critical(s, nc.colouring, second));
    const auto l = lcs(s, nc.colouring, 4, rec.solve());
    rec.eq("lcs(G,c)", 5, l.value);
    const int u3 = ulcs(s, 3, rec.solve()).value;
    rec.eq("ulcs(G,3)", 6, u3);
    const auto u4 = ulcs(s, 4, rec.solve());
    rec.at_most("ulcs(G,4)", 5, u4.value);
    rec.holds("ulcs(G,4) < ulcs(G,3)", u4.value < u3);
    rec.note("exact ulcs(G,4) = " + std::to_string(u4.value) + " (only bounded above in the source)");
}

void fig4_subgraph(Recorder& rec) {
    const int p = rec.params().empty() ? 5 : rec.params()[0];
    const auto h = named_colouring("fig4-h", {p});
    const auto g = named_colouring("fig4-g", {p});
    const auto& hs = h.generated.structure;
    const auto& gs = g.generated.structure;
    rec.holds("H colouring proper", is_proper(hs, h.colouring));
    rec.holds("G colouring proper", is_proper(gs, g.colouring));
    rec.eq("chi(H)", 3, chi(hs));
    rec.eq("chi(G)", 3, chi(gs));
    rec.holds("drawn H set " + label_of(h.generated, h.highlighted) + " is critical",
              is_critical(hs, h.colouring, h.highlighted));
    rec.holds("drawn G set " + label_of(g.generated, g.highlighted) + " is critical",
              is_critical(gs, g.colouring, g.highlighted));
    rec.eq("sn(H)", 3, sn(hs, 3, rec.solve()).value);
    rec.eq("lcs(H,c)", 4, lcs(hs, h.colouring, 3, rec.solve()).value);
    const auto sg = sn(gs, 3, rec.solve());
    rec.eq("sn(G)", p + 1, sg.value);
    if (sg.witness_set)
        rec.info("sn(G) witness", nlohmann::json{{"set", label_of(g.generated, *sg.witness_set)},
                                                 {"colouring", sg.witness_colouring->colours()}});
    rec.eq("ulcs(G)", p + 1, ulcs(gs, 3, rec.solve()).value);
}

ColourStructure random_tree(int n, std::mt19937_64& rng) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> parent(0, v - 1);
        edges.emplace_back(perm[v], perm[parent(rng)]);
    }
    return ColourStructure::graph(n, edges);
}

void tree_binary(Recorder& rec) {
    const int sn_expected[] = {4, 8};
    const int gamma_expected[] = {5, 10};
    for (int h = 2; h <= 3; ++h) {
        const auto t = generate({"complete_binary_tree", {h}});
        const std::string tag = "h=" + std::to_string(h);
        const int value = sn_tree(t, 3);
        const int gamma = r_domination(t, 2);
        rec.eq("sn_tree(" + tag + ",3)", sn_expected[h - 2], value);
        rec.eq("gamma_2(" + tag + ")", gamma_expected[h - 2], gamma);
        rec.holds("sn(" + tag + ",3) <= gamma_2", value <= gamma);
        rec.eq("general sn(" + tag + ",3)", sn_expected[h - 2], sn(t, 3, rec.solve()).value);
    }
}

void tree_vs_general(Recorder& rec) {
    const int samples = rec.params().empty() ? 200 : rec.params()[0];
    std::mt19937_64 rng(20240611);
    int mismatches = 0, compared = 0;
    for (int i = 0; i < samples; ++i) {
        std::uniform_int_distribution<int> order(2, 10);
        const auto t = random_tree(order(rng), rng);
        for (int k = 3; k <= 5; ++k) {
            const int fast = sn_tree(t, k);
            const int exact = sn(t, k, rec.solve()).value;
            ++compared;
            if (fast != exact) {
                ++mismatches;
                rec.note(to_graph6(t) + " k=" + std::to_string(k) + ": sn_tree=" + std::to_string(fast) +
                         " sn=" + std::to_string(exact));
            }
        }
    }
    rec.info("comparisons", compared);
    rec.eq("mismatches", 0, mismatches);
}

void sud2_values(Recorder& rec) {
    const auto g = generate({"sudoku_hypergraph", {2}});
    rec.eq("sn(SUD2)", 9, sn(g, 2, rec.solve()).value);
    rec.eq("ulcs(SUD2)", 9, ulcs(g, 2, rec.solve()).value);
    rec.eq("oscs(SUD2)", 16, oscs(g, 2, rec.solve()).value);
    rec.eq("olcs(SUD2)", 16, olcs(g, 2, rec.solve()).value);
    const auto fig = named_colouring("fig2-sud2");
    const auto& s = fig.generated.structure;
    rec.holds("drawn colouring weak-proper", is_proper(s, fig.colouring));
    rec.holds("drawn 9-cell set is critical", is_critical(s, fig.colouring, fig.highlighted));
    rec.eq("fixed cells of drawn colouring", 7, static_cast<long long>(fixed_vertices(s, fig.colouring).size()));
    rec.eq("scs(SUD2, drawn)", 9, scs(s, fig.colouring, 2, rec.solve()).value);
    rec.eq("lcs(SUD2, drawn)", 9, lcs(s, fig.colouring, 2, rec.solve()).value);
}

void latin_values(Recorder& rec) {
    for (int n = 2; n <= 4; ++n) {
        const auto g = generate({"latin_hypergraph", {n}});
        rec.eq("sn(Latin" + std::to_string(n) + ")", (n - 1) * (n - 1), sn(g, 2, rec.solve()).value);
    }
    const auto l3 = generate({"latin_hypergraph", {3}});
    rec.eq("oscs(Latin3)", 6, oscs(l3, 2, rec.solve()).value);
    rec.eq("olcs(Latin3)", 6, olcs(l3, 2, rec.solve()).value);
    const auto l4 = generate({"latin_hypergraph", {4}});
    rec.eq("oscs(Latin4)", 16, oscs(l4, 2, rec.solve()).value);
    rec.eq("olcs(Latin4)", 16, olcs(l4, 2, rec.solve()).value);
    for (int n = 3; n <= 5; ++n) {
        const auto block = named_colouring("latin-block", {n});
        const auto& s = block.generated.structure;
        rec.holds("block colouring " + std::to_string(n) + " determined by its block",
                  is_determining(s, block.colouring, block.highlighted));
    }
    const auto chess = named_colouring("chessboard-latin", {4});
    rec.eq("fixed cells of chessboard(4)", 0,
           static_cast<long long>(fixed_vertices(chess.generated.structure, chess.colouring).size()));
}

Colouring grid_colouring(const std::vector<std::vector<int>>& grid) {
    std::vector<Colour> flat;
    for (const auto& row : grid)
        flat.insert(flat.end(), row.begin(), row.end());
    return Colouring(flat, 2);
}

std::vector<std::vector<int>> transpose(const std::vector<std::vector<int>>& g) {
    auto t = g;
    for (std::size_t r = 0; r < g.size(); ++r)
        for (std::size_t c = 0; c < g.size(); ++c)
            t[c][r] = g[r][c];
    return t;
}

void fig5_sud3(Recorder& rec) {
    const auto s = generate({"sudoku_hypergraph", {3}});
    const auto drawn = fig5_grid_as_drawn();
    auto flipped = drawn;
    std::reverse(flipped.begin(), flipped.end());
    const std::pair<const char*, std::vector<std::vector<int>>> variants[] = {
        {"as drawn", drawn}, {"transposed", transpose(drawn)}, {"flipped", flipped}};
    std::string accepted;
    Colouring c;
    VertexSet rest;
    for (const auto& [name, grid] : variants) {
        const Colouring candidate = grid_colouring(grid);
        if (!is_proper(s, candidate))
            continue;
        const auto fixed = fixed_vertices(s, candidate);
        if (fixed.size() != 18)
            continue;
        const auto complement = mandatory_vertices(s, candidate);
        if (!is_determining(s, candidate, complement))
            continue;
        accepted = name;
        c = candidate;
        rest = complement;
        break;
    }
    rec.holds("some orientation accepted", !accepted.empty());
    if (accepted.empty())
        return;
    rec.info("variant", accepted);
    rec.holds("weak-proper", is_proper(s, c));
    rec.eq("fixed cells", 18, static_cast<long long>(fixed_vertices(s, c).size()));
    rec.eq("complement size", 63, static_cast<long long>(rest.size()));
    rec.holds("complement determining", is_determining(s, c, rest));
    rec.holds("complement critical", is_critical(s, c, rest));
    rec.holds("rule reproduces the drawn grid", fig5_grid_rule(3) == drawn);

    const auto s4 = generate({"sudoku_hypergraph", {4}});
    const Colouring c4 = grid_colouring(fig5_grid_rule(4));
    rec.holds("m=4 weak-proper", is_proper(s4, c4));
    rec.eq("m=4 fixed cells", 36, static_cast<long long>(fixed_vertices(s4, c4).size()));
    rec.holds("m=4 complement determining", is_determining(s4, c4, mandatory_vertices(s4, c4)));

    const int samples = rec.params().empty() ? 100000 : rec.params()[0];
    std::mt19937_64 rng(918273645);
    std::size_t worst = 0;
    int drawn_proper = 0;
    std::vector<Colour> cells(81);
    while (drawn_proper < samples) {
        for (auto& x : cells)
            x = static_cast<Colour>(rng() & 1) + 1;
        const Colouring sample(cells, 2);
        if (!is_proper(s, sample))
            continue;
        ++drawn_proper;
        worst = std::max(worst, fixed_vertices(s, sample).size());
    }
    rec.info("sampled colourings", drawn_proper);
    rec.at_most("most fixed cells in sample", 18, static_cast<long long>(worst));
}

void moser_extension(Recorder& rec) {
    const auto base = generate({"moser_spindle", {}});
    std::vector<std::vector<Vertex>> attachments;
    for (Vertex a = 0; a < 7; ++a)
        attachments.push_back({a});
    for (Vertex a = 0; a < 7; ++a)
        for (Vertex b = a + 1; b < 7; ++b)
            attachments.push_back({a, b});
    int worst = 0;
    for (const auto& att : attachments) {
        auto edges = base.edges();
        for (Vertex a : att)
            edges.push_back({a, 7});
        const auto g = ColourStructure::graph(8, edges);
        const int value = sn(g, chi(g), rec.solve()).value;
        worst = std::max(worst, value);
        if (value > 5) {
            std::string who;
            for (Vertex a : att)
                who += std::to_string(a) + " ";
            rec.note("attachment to " + who + "gives sn=" + std::to_string(value));
        }
    }
    rec.info("extensions", attachments.size());
    rec.at_most("largest sn over one-vertex extensions (n=8)", 5, worst);
}

void blowup_c5(Recorder& rec) {
    for (auto [p, q] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}, std::pair{2, 2}}) {
        const auto nc = named_colouring("blowup-c5", {p, q});
        const auto& s = nc.generated.structure;
        const std::string tag = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
        const int n = s.order();
        const int x = chi(s);
        rec.eq("chi" + tag, p + q + 1, x);
        rec.holds("clique number < chi " + tag, detail::clique_number(s) < x);
        rec.holds("V-v critical " + tag, is_critical(s, nc.colouring, nc.highlighted));
        rec.eq("oscs" + tag, n - 2, oscs(s, x, rec.solve()).value);
    }
}

void kn_minus_c5(Recorder& rec) {
    for (int n = 5; n <= 7; ++n) {
        const auto g = generate({"kn_minus_c5", {n}});
        const std::string tag = "(n=" + std::to_string(n) + ")";
        const int x = chi(g);
        rec.eq("clique number" + tag, n - 3, detail::clique_number(g));
        rec.eq("chi" + tag, n - 2, x);
        rec.eq("ulcs" + tag, n - 1, ulcs(g, x, rec.solve()).value);
    }
}

void rho_ratio(Recorder& rec) {
    const auto c9 = generate({"cycle", {9}});
    const auto k333 = generate({"complete_multipartite", {3, 3, 3}});
    for (Param p : {Param::sn, Param::oscs, Param::ulcs, Param::olcs}) {
        const std::string name(to_string(p));
        rec.at_least(name + "(C9)", 5, compute(p, c9, 3, rec.solve()).value);
        rec.eq(name + "(K333)", 2, compute(p, k333, 3, rec.solve()).value);
    }
    rec.holds("C9 is a subgraph of K333 with equal chi", chi(c9) == chi(k333));
}

/// One instance of each listed family with clique number = chi = k and sn = n-2.
void sn_n2_examples(Recorder& rec) {
    using E = std::vector<std::pair<Vertex, Vertex>>;
    auto with_clique = [](int k, E extra) {
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                extra.emplace_back(i, j);
        return extra;
    };
    const std::pair<const char*, ColourStructure> cases[] = {
        {"K4 with a pendant vertex", ColourStructure::graph(5, with_clique(4, {{0, 4}}))},
        {"K4 bridged to a triangle", ColourStructure::graph(7, with_clique(4, {{3, 4}, {4, 5}, {4, 6}, {5, 6}}))},
        {"K4 with a pendant path", ColourStructure::graph(6, with_clique(4, {{0, 4}, {4, 5}}))},
        {"K5 joined to K_{2,1}", ColourStructure::graph(8, with_clique(5, {{5, 7}, {6, 7}, {5, 0}, {5, 1}, {6, 0}, {6, 1}}))},
    };
    for (const auto& [name, g] : cases) {
        const int x = chi(g);
        rec.eq(std::string(name) + ": clique number", x, detail::clique_number(g));
        rec.eq(std::string(name) + ": sn", g.order() - 2, sn(g, x, rec.solve()).value);
    }
}

void generators_spot(Recorder& rec) {
    const auto m = generate({"moser_spindle", {}});
    rec.eq("moser order", 7, m.order());
    rec.eq("moser edges", 11, static_cast<long long>(m.size()));
    rec.eq("chi(moser)", 4, chi(m));
    const auto sud = generate({"sudoku_hypergraph", {2}});
    rec.eq("SUD2 order", 16, sud.order());
    rec.eq("SUD2 edges", 12, static_cast<long long>(sud.size()));
    for (int k = 2; k <= 5; ++k)
        rec.eq("chi(G" + std::to_string(k) + ")", 2, chi(generate({"kkk_minus_matching", {k}})));
    rec.eq("chi(fig4 G)", 3, chi(generate({"fig4_graph", {5}})));
    rec.eq("chi(fig4 H)", 3, chi(generate({"fig4_subgraph", {5}})));
}

CheckReport run_scan(const std::string& predicate, int max_order, const CheckOptions& opt) {
    ScanOptions s;
    s.exec = opt.exec;
    s.budget = opt.budget;
    return scan_orders(opt.params.empty() ? max_order : opt.params[0], predicate, s);
}

struct CheckInfo {
    std::string claim;
    std::function<void(Recorder&)> run;
};

const std::map<std::string, CheckInfo>& registry() {
    static const std::map<std::string, CheckInfo> table{
        {"k3k3-sn-table", {"sn(K3xK3,k) = 2, 5, 7, 9 for k = 3..6", k3k3_table}},
        {"literature-sn",
         {"sn(Petersen)=4, sn(C_{2m+1})=m+1, sn(K2xC5)=3, sn(bipartite)=1, sn(K_n)=n-1", literature_sn}},
        {"gk-monotonicity",
         {"G_k = K_{k,k} minus a perfect matching: sn(G_k,k-1)=2k-5 and sn(G_k,k)=k", gk_monotonicity}},
        {"fig3-ulcs",
         {"the K_{3,t} graph with two K4^- attached (t=4): ulcs(G,3)=6, lcs(G,c)=5, so ulcs(G,4) < ulcs(G,3)",
          fig3_ulcs}},
        {"fig4-subgraph", {"K_{p,p} sharing a vertex with K3 (p=5): sn(H)=3, lcs(H,c)=4, sn(G)=ulcs(G)=p+1",
                           fig4_subgraph}},
        {"tree-binary", {"complete binary tree of height h: sn(T,3)=2^h <= gamma_2(T)", tree_binary}},
        {"tree-vs-general", {"the tree recurrence agrees with exhaustive sn on random trees", tree_vs_general}},
        {"sud2-values", {"sn(SUD2)=ulcs(SUD2)=9, oscs(SUD2)=olcs(SUD2)=16", sud2_values}},
        {"latin-values", {"sn(Latin n)=(n-1)^2 for n<=4, oscs=olcs(Latin3)=6, oscs=olcs(Latin4)=16", latin_values}},
        {"fig5-sud3",
         {"the staircase colouring of SUD3 has 18 fixed cells whose complement is a critical set", fig5_sud3}},
        {"moser-extension", {"every one-vertex extension of the Moser spindle has sn <= n-3", moser_extension}},
        {"blowup-c5", {"C5 with w,y blown up to K_p and x,z to K_q: chi=p+q+1, oscs=n-2", blowup_c5}},
        {"kn-minus-c5", {"K_n minus C5: clique number n-3 < chi=n-2 and ulcs=n-1", kn_minus_c5}},
        {"rho-ratio", {"all four parameters are >= 5 on C9 and equal 2 on K_{3,3,3}", rho_ratio}},
        {"sn-n2-examples", {"the listed families with clique number = chi have sn=n-2", sn_n2_examples}},
        {"generator-spot-checks", {"stated orders, sizes and chromatic numbers of the constructions", generators_spot}},
    };
    return table;
}

const std::map<std::string, std::pair<std::string, int>>& scan_checks() {
    // check name -> (predicate, default max order)
    static const std::map<std::string, std::pair<std::string, int>> table{
        {"thm-sn-n-1", {"thm-sn-n-1", 6}},
        {"thm-olcs-n-1", {"thm-olcs-n-1", 6}},
        {"thm-sn-n", {"thm-sn-n", 6}},
        {"thm-oscs-olcs-n", {"thm-oscs-olcs-n", 6}},
        {"two-colourings-prop", {"two-colourings-prop", 5}},
        {"oscs-subgraph-monotone", {"oscs-subgraph-monotone", 5}},
        {"conj2-olcs-subgraph", {"conj2-olcs-subgraph", 5}},
        {"conjecture-n2", {"conjecture-n2", 7}},
        {"lemma-ivs", {"lemma-ivs", 7}},
        {"prop-k3-free", {"prop-k3-free", 7}},
    };
    return table;
}

}  // namespace

std::vector<std::string> check_names() {
    std::vector<std::string> out;
    for (const auto& [name, _] : registry())
        out.push_back(name);
    for (const auto& [name, _] : scan_checks())
        out.push_back(name);
    return out;
}

CheckReport run_check(const std::string& name, const CheckOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    if (auto it = scan_checks().find(name); it != scan_checks().end()) {
        CheckReport r = run_scan(it->second.first, it->second.second, opt);
        r.name = name;
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return r;
    }
    auto it = registry().find(name);
    if (it == registry().end())
        throw InputError("unknown check '" + name + "'");
    CheckReport r;
    r.name = name;
    r.claim = it->second.claim;
    Recorder rec(r, opt);
    it->second.run(rec);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace critset
