#include "critset/generators.hpp"

#include "critset/error.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace critset {

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

std::vector<std::string> numeric_labels(int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i)
        out.push_back(std::to_string(i));
    return out;
}

Generated plain(ColourStructure s) {
    int n = s.order();
    return Generated{std::move(s), numeric_labels(n)};
}

void need(bool ok, const std::string& what) {
    if (!ok)
        throw InputError(what);
}

int param(const FamilySpec& spec, std::size_t i, const char* family) {
    need(spec.params.size() > i, std::string(family) + " needs " + std::to_string(i + 1) + " parameter(s)");
    return spec.params[i];
}

void clique(EdgeList& e, const std::vector<Vertex>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            e.emplace_back(vs[i], vs[j]);
}

void biclique(EdgeList& e, const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    for (Vertex u : a)
        for (Vertex v : b)
            e.emplace_back(u, v);
}

std::vector<Vertex> range(int from, int count) {
    std::vector<Vertex> out(count);
    for (int i = 0; i < count; ++i)
        out[i] = from + i;
    return out;
}

ColourStructure complete(int n) {
    need(n >= 1, "complete needs n >= 1");
    EdgeList e;
    clique(e, range(0, n));
    return ColourStructure::graph(n, e);
}

ColourStructure cycle(int n) {
    need(n >= 3, "cycle needs n >= 3");
    EdgeList e;
    for (int i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return ColourStructure::graph(n, e);
}

ColourStructure path(int n) {
    need(n >= 1, "path needs n >= 1");
    EdgeList e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return ColourStructure::graph(n, e);
}

ColourStructure multipartite(const std::vector<int>& parts) {
    need(!parts.empty(), "complete_multipartite needs at least one part");
    std::vector<std::vector<Vertex>> groups;
    int next = 0;
    for (int p : parts) {
        need(p >= 1, "part sizes must be positive");
        groups.push_back(range(next, p));
        next += p;
    }
    EdgeList e;
    for (std::size_t i = 0; i < groups.size(); ++i)
        for (std::size_t j = i + 1; j < groups.size(); ++j)
            biclique(e, groups[i], groups[j]);
    return ColourStructure::graph(next, e);
}

ColourStructure moser_spindle() {
    EdgeList e;
    for (int i = 0; i < 5; ++i)
        e.emplace_back(i, (i + 1) % 5);
    for (int i : {0, 1, 2})
        e.emplace_back(5, i);
    for (int i : {2, 3, 4})
        e.emplace_back(6, i);
    return ColourStructure::graph(7, e);
}

ColourStructure petersen() {
    EdgeList e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return ColourStructure::graph(10, e);
}

ColourStructure kkk_minus_matching(int k) {
    need(k >= 2, "kkk_minus_matching needs k >= 2");
    EdgeList e;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j)
                e.emplace_back(i, k + j);
    return ColourStructure::graph(2 * k, e);
}

ColourStructure kn_minus_c5(int n) {
    need(n >= 5, "kn_minus_c5 needs n >= 5");
    EdgeList e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool cycle_edge = j < 5 && (j == i + 1 || (i == 0 && j == 4));
            if (!cycle_edge)
                e.emplace_back(i, j);
        }
    return ColourStructure::graph(n, e);
}

Generated blowup_c5(int p, int q) {
    need(p >= 1 && q >= 1, "blowup_c5 needs p, q >= 1");
    // Cycle order v, w, x, y, z; w and y become K_p, x and z become K_q.
    std::vector<std::vector<Vertex>> parts;
    std::vector<std::string> labels{"v"};
    int next = 1;
    parts.push_back({0});
    const std::pair<const char*, int> blown[] = {{"w", p}, {"x", q}, {"y", p}, {"z", q}};
    for (auto [name, size] : blown) {
        parts.push_back(range(next, size));
        for (int i = 0; i < size; ++i)
            labels.push_back(std::string(name) + std::to_string(i + 1));
        next += size;
    }
    EdgeList e;
    for (int i = 0; i < 5; ++i) {
        clique(e, parts[i]);
        biclique(e, parts[i], parts[(i + 1) % 5]);
    }
    return Generated{ColourStructure::graph(next, e), labels};
}

Generated fig3_graph(int t) {
    need(t >= 1, "fig3_graph needs t >= 1");
    std::vector<std::string> labels;
    for (int i = 1; i <= t; ++i)
        labels.push_back("v" + std::to_string(i));
    for (const char* name : {"u1", "u2", "u3", "w", "x", "y", "z"})
        labels.emplace_back(name);
    const Vertex u1 = t, u2 = t + 1, u3 = t + 2, w = t + 3, x = t + 4, y = t + 5, z = t + 6;
    EdgeList e;
    biclique(e, range(0, t), {u1, u2, u3});
    biclique(e, {w, x}, {u1, u2});
    biclique(e, {y, z}, {u2, u3});
    e.emplace_back(w, x);
    e.emplace_back(y, z);
    return Generated{ColourStructure::graph(t + 7, e), labels};
}

Generated fig4(int p, bool drop_edge) {
    need(p >= 2, "fig4 graphs need p >= 2");
    std::vector<std::string> labels;
    for (int i = 0; i < p; ++i)
        labels.push_back(i == 0 ? "v" : "t" + std::to_string(i));
    for (int i = 0; i < p; ++i)
        labels.push_back("b" + std::to_string(i));
    labels.emplace_back("a");
    labels.emplace_back("b");
    EdgeList e;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            if (!(drop_edge && i == 1 && j == 1))
                e.emplace_back(i, p + j);
    clique(e, {0, 2 * p, 2 * p + 1});
    return Generated{ColourStructure::graph(2 * p + 2, e), labels};
}

ColourStructure complete_binary_tree(int h) {
    need(h >= 0 && h <= 20, "complete_binary_tree needs 0 <= h <= 20");
    const int n = (1 << (h + 1)) - 1;
    EdgeList e;
    for (int v = 1; v < n; ++v)
        e.emplace_back((v - 1) / 2, v);
    return ColourStructure::graph(n, e);
}

Generated grid_labels(ColourStructure s, int side) {
    std::vector<std::string> labels;
    for (int r = 0; r < side; ++r)
        for (int c = 0; c < side; ++c)
            labels.push_back("r" + std::to_string(r + 1) + "c" + std::to_string(c + 1));
    return Generated{std::move(s), labels};
}

Generated latin_hypergraph(int n) {
    need(n >= 2, "latin_hypergraph needs n >= 2");
    std::vector<Edge> edges;
    for (int r = 0; r < n; ++r)
        edges.push_back(range(r * n, n));
    for (int c = 0; c < n; ++c) {
        Edge col;
        for (int r = 0; r < n; ++r)
            col.push_back(r * n + c);
        edges.push_back(col);
    }
    return grid_labels(ColourStructure::hypergraph(n * n, edges), n);
}

Generated sudoku_hypergraph(int m) {
    need(m >= 1 && m <= 4, "sudoku_hypergraph needs 1 <= m <= 4");
    const int side = m * m;
    need(side >= 2, "sudoku_hypergraph needs m >= 2");
    std::vector<Edge> edges;
    for (int r = 0; r < side; ++r)
        edges.push_back(range(r * side, side));
    for (int c = 0; c < side; ++c) {
        Edge col;
        for (int r = 0; r < side; ++r)
            col.push_back(r * side + c);
        edges.push_back(col);
    }
    for (int br = 0; br < m; ++br)
        for (int bc = 0; bc < m; ++bc) {
            Edge box;
            for (int r = 0; r < m; ++r)
                for (int c = 0; c < m; ++c)
                    box.push_back((br * m + r) * side + bc * m + c);
            edges.push_back(box);
        }
    return grid_labels(ColourStructure::hypergraph(side * side, edges), side);
}

using Builder = std::function<Generated(const FamilySpec&)>;

const std::map<std::string, Builder>& builders() {
    static const std::map<std::string, Builder> table{
        {"complete", [](const FamilySpec& s) { return plain(complete(param(s, 0, "complete"))); }},
        {"cycle", [](const FamilySpec& s) { return plain(cycle(param(s, 0, "cycle"))); }},
        {"path", [](const FamilySpec& s) { return plain(path(param(s, 0, "path"))); }},
        {"empty",
         [](const FamilySpec& s) {
             int n = param(s, 0, "empty");
             need(n >= 0, "empty needs n >= 0");
             return plain(ColourStructure::graph(n, EdgeList{}));
         }},
        {"complete_bipartite",
         [](const FamilySpec& s) {
             return plain(multipartite({param(s, 0, "complete_bipartite"), param(s, 1, "complete_bipartite")}));
         }},
        {"complete_multipartite", [](const FamilySpec& s) { return plain(multipartite(s.params)); }},
        {"star",
         [](const FamilySpec& s) {
             int l = param(s, 0, "star");
             need(l >= 1, "star needs at least one leaf");
             return plain(multipartite({1, l}));
         }},
        {"petersen", [](const FamilySpec&) { return plain(petersen()); }},
        {"moser_spindle", [](const FamilySpec&) { return plain(moser_spindle()); }},
        {"rook",
         [](const FamilySpec& s) {
             return plain(cartesian_product(complete(param(s, 0, "rook")), complete(param(s, 1, "rook"))));
         }},
        {"prism", [](const FamilySpec& s) { return plain(cartesian_product(complete(2), cycle(param(s, 0, "prism")))); }},
        {"kkk_minus_matching",
         [](const FamilySpec& s) { return plain(kkk_minus_matching(param(s, 0, "kkk_minus_matching"))); }},
        {"kn_minus_c5", [](const FamilySpec& s) { return plain(kn_minus_c5(param(s, 0, "kn_minus_c5"))); }},
        {"blowup_c5",
         [](const FamilySpec& s) { return blowup_c5(param(s, 0, "blowup_c5"), param(s, 1, "blowup_c5")); }},
        {"fig3_graph", [](const FamilySpec& s) { return fig3_graph(param(s, 0, "fig3_graph")); }},
        {"fig4_graph", [](const FamilySpec& s) { return fig4(param(s, 0, "fig4_graph"), false); }},
        {"fig4_subgraph", [](const FamilySpec& s) { return fig4(param(s, 0, "fig4_subgraph"), true); }},
        {"complete_binary_tree",
         [](const FamilySpec& s) { return plain(complete_binary_tree(param(s, 0, "complete_binary_tree"))); }},
        {"latin_hypergraph", [](const FamilySpec& s) { return latin_hypergraph(param(s, 0, "latin_hypergraph")); }},
        {"sudoku_hypergraph",
         [](const FamilySpec& s) { return sudoku_hypergraph(param(s, 0, "sudoku_hypergraph")); }},
    };
    return table;
}

}  // namespace

ColourStructure cartesian_product(const ColourStructure& g, const ColourStructure& h) {
    need(g.is_graph() && h.is_graph(), "cartesian_product needs graphs");
    const int gn = g.order(), hn = h.order();
    EdgeList e;
    for (const auto& edge : g.edges())
        for (int j = 0; j < hn; ++j)
            e.emplace_back(edge[0] * hn + j, edge[1] * hn + j);
    for (const auto& edge : h.edges())
        for (int i = 0; i < gn; ++i)
            e.emplace_back(i * hn + edge[0], i * hn + edge[1]);
    return ColourStructure::graph(gn * hn, e);
}

Generated generate_labelled(const FamilySpec& spec) {
    auto it = builders().find(spec.family);
    if (it == builders().end())
        throw InputError("unknown family '" + spec.family + "'");
    return it->second(spec);
}

ColourStructure generate(const FamilySpec& spec) { return generate_labelled(spec).structure; }

std::vector<std::string> family_names() {
    std::vector<std::string> out;
    for (const auto& [name, _] : builders())
        out.push_back(name);
    return out;
}

Vertex vertex_named(const Generated& g, const std::string& label) {
    auto it = std::find(g.labels.begin(), g.labels.end(), label);
    if (it == g.labels.end())
        throw InputError("no vertex labelled '" + label + "'");
    return static_cast<Vertex>(it - g.labels.begin());
}

std::vector<std::vector<int>> fig5_grid_as_drawn() {
    // Figure rows bottom-up; 0 = drawn black, 1 = drawn red.
    static const int drawn[9][9] = {
        {0, 0, 0, 0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 0, 0, 0, 1}, {0, 0, 1, 0, 0, 1, 1, 1, 0},
        {0, 0, 0, 0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 0, 0, 0}, {0, 0, 1, 1, 1, 0, 0, 0, 1},
        {0, 0, 1, 0, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 0, 0, 0}, {1, 1, 0, 0, 0, 1, 0, 0, 1},
    };
    std::vector<std::vector<int>> grid(9, std::vector<int>(9));
    for (int r = 0; r < 9; ++r)
        for (int c = 0; c < 9; ++c)
            grid[8 - r][c] = drawn[r][c] + 1;
    return grid;
}

std::vector<std::vector<int>> fig5_grid_rule(int m) {
    need(m >= 3 && m <= 4, "fig5 colouring needs 3 <= m <= 4");
    const int side = m * m;
    std::vector<std::vector<int>> grid(side, std::vector<int>(side));
    for (int up = 0; up < side; ++up)
        for (int c = 0; c < side; ++c) {
            const int band = up / m, lr = up % m, stack = c / m, lc = c % m;
            const bool last_row = lr == m - 1, last_col = lc == m - 1;
            // One box per band (the anti-diagonal one) carries the row and
            // column singletons; every other box has a single odd cell in its corner.
            const bool odd = stack == m - 1 - band ? last_row != last_col : last_row && last_col;
            grid[side - 1 - up][c] = odd ? 2 : 1;
        }
    return grid;
}

namespace {

Colouring from_grid(const std::vector<std::vector<int>>& grid) {
    std::vector<Colour> flat;
    for (const auto& row : grid)
        flat.insert(flat.end(), row.begin(), row.end());
    return Colouring(std::move(flat), 2);
}

int opt_param(const std::vector<int>& params, std::size_t i, int fallback) {
    return params.size() > i ? params[i] : fallback;
}

/// Cells drawn in black, or every cell not in the given set.
VertexSet complement(const VertexSet& s, int n) {
    VertexSet out;
    for (Vertex v = 0; v < n; ++v)
        if (!std::binary_search(s.begin(), s.end(), v))
            out.push_back(v);
    return out;
}

}  // namespace

std::vector<std::string> colouring_names() {
    return {"fig2-sud2",      "fig2-latin4",      "fig5-sud",       "fig3-colouring", "fig4-h",
            "fig4-g",         "chessboard-latin", "chessboard-sud", "latin-block",    "gk-matching",
            "blowup-c5"};
}

NamedColouring named_colouring(const std::string& name, const std::vector<int>& params) {
    if (name == "fig2-sud2") {
        // Top row first; black cells are the drawn critical set.
        const int grid[4][4] = {{1, 2, 1, 2}, {1, 2, 1, 1}, {1, 1, 1, 2}, {2, 2, 2, 1}};
        const bool black[4][4] = {{1, 1, 1, 0}, {1, 0, 1, 1}, {1, 0, 1, 0}, {0, 1, 0, 0}};
        std::vector<Colour> colours;
        VertexSet shown;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                colours.push_back(grid[r][c]);
                if (black[r][c])
                    shown.push_back(r * 4 + c);
            }
        return {sudoku_hypergraph(2), Colouring(colours, 2), shown, "top row first"};
    }
    if (name == "fig2-latin4") {
        const int grid[4][4] = {{1, 2, 2, 2}, {1, 2, 1, 1}, {1, 1, 2, 1}, {2, 2, 2, 1}};
        std::vector<Colour> colours;
        for (const auto& row : grid)
            colours.insert(colours.end(), std::begin(row), std::end(row));
        return {latin_hypergraph(4), Colouring(colours, 2), {}, "top row first"};
    }
    if (name == "fig5-sud" || name == "fig5-sud3") {
        const int m = opt_param(params, 0, 3);
        auto grid = m == 3 ? fig5_grid_as_drawn() : fig5_grid_rule(m);
        Colouring c = from_grid(grid);
        VertexSet red;
        for (Vertex v = 0; v < c.order(); ++v)
            if (c[v] == 2)
                red.push_back(v);
        return {sudoku_hypergraph(m), c, complement(red, c.order()),
                m == 3 ? "as drawn, figure row 1 at the bottom" : "staircase rule"};
    }
    if (name == "fig3-colouring") {
        const int t = opt_param(params, 0, 4);
        Generated g = fig3_graph(t);
        std::vector<Colour> colours(t, 4);
        colours.insert(colours.end(), {1, 2, 3, 3, 4, 4, 1});  // u1 u2 u3 w x y z
        VertexSet shown;
        for (const char* label : {"u1", "u2", "u3", "x", "y"})
            shown.push_back(vertex_named(g, label));
        std::sort(shown.begin(), shown.end());
        return {std::move(g), Colouring(colours, 4), shown, ""};
    }
    if (name == "fig4-h" || name == "fig4-g") {
        const int p = opt_param(params, 0, 5);
        const bool sub = name == "fig4-h";
        Generated g = fig4(p, sub);
        std::vector<Colour> colours(2 * p + 2);
        VertexSet shown;
        for (int i = 0; i < p; ++i) {
            colours[i] = 3;
            colours[p + i] = sub ? 2 : 1;
        }
        if (sub) {
            colours[1] = 1;
            colours[p + 1] = 1;
            shown = {1, p + 1};
        } else {
            colours[2 * p - 1] = 2;
            for (int i = 0; i < p; ++i)
                shown.push_back(p + i);
        }
        colours[2 * p] = 2;
        colours[2 * p + 1] = 1;
        shown.push_back(2 * p);
        return {std::move(g), Colouring(colours, 3), shown, ""};
    }
    if (name == "chessboard-latin") {
        const int n = opt_param(params, 0, 4);
        need(n >= 4, "chessboard-latin needs side >= 4");
        std::vector<std::vector<int>> grid(n, std::vector<int>(n));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                grid[r][c] = (r + c) % 2 + 1;
        return {latin_hypergraph(n), from_grid(grid), {}, ""};
    }
    if (name == "chessboard-sud") {
        const int m = opt_param(params, 0, 2);
        need(m >= 2, "chessboard-sud needs side m^2 >= 4");
        const int side = m * m;
        std::vector<std::vector<int>> grid(side, std::vector<int>(side));
        for (int r = 0; r < side; ++r)
            for (int c = 0; c < side; ++c)
                grid[r][c] = (r + c) % 2 + 1;
        return {sudoku_hypergraph(m), from_grid(grid), {}, ""};
    }
    if (name == "latin-block") {
        const int n = opt_param(params, 0, 4);
        need(n >= 2, "latin-block needs n >= 2");
        std::vector<std::vector<int>> grid(n, std::vector<int>(n, 2));
        VertexSet block;
        for (int r = 0; r + 1 < n; ++r)
            for (int c = 0; c + 1 < n; ++c) {
                grid[r][c] = 1;
                block.push_back(r * n + c);
            }
        grid[n - 1][n - 1] = 1;
        return {latin_hypergraph(n), from_grid(grid), block, ""};
    }
    if (name == "gk-matching") {
        const int k = opt_param(params, 0, 4);
        std::vector<Colour> colours(2 * k);
        VertexSet left;
        for (int i = 0; i < k; ++i) {
            colours[i] = colours[k + i] = i + 1;
            left.push_back(i);
        }
        return {plain(kkk_minus_matching(k)), Colouring(colours, k), left, ""};
    }
    if (name == "blowup-c5") {
        const int p = opt_param(params, 0, 2), q = opt_param(params, 1, 1);
        Generated g = blowup_c5(p, q);
        const int n = g.structure.order();
        // K_p cliques get [p], K_q cliques get [p+1..p+q], v gets p+q+1.
        std::vector<Colour> colours{p + q + 1};
        for (int part = 0; part < 4; ++part) {
            const bool is_p = part % 2 == 0;
            for (int i = 0; i < (is_p ? p : q); ++i)
                colours.push_back(is_p ? i + 1 : p + i + 1);
        }
        return {std::move(g), Colouring(colours, p + q + 1), complement({0}, n), ""};
    }
    throw InputError("unknown colouring '" + name + "'");
}

}  // namespace critset
