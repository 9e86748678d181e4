#include "critset/structure.hpp"

#include "critset/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace critset {

namespace {

void check_vertex(Vertex v, int n) {
    if (v < 0 || v >= n)
        throw InputError("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n) + ")");
}

}  // namespace

ColourStructure::ColourStructure(int n, std::vector<Edge> edges, StructureKind kind)
    : n_(n), kind_(kind), edges_(std::move(edges)) {
    if (n < 0)
        throw InputError("negative vertex count");
    for (auto& e : edges_) {
        for (Vertex v : e)
            check_vertex(v, n);
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw InputError("edge repeats a vertex");
        if (e.size() < 2)
            throw InputError("edge with fewer than two vertices");
        if (kind == StructureKind::graph && e.size() != 2)
            throw InputError("graph edge must have exactly two vertices");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw InputError("duplicate edge");

    incidence_.assign(n, {});
    neighbours_.assign(n, {});
    for (std::size_t i = 0; i < edges_.size(); ++i)
        for (Vertex v : edges_[i]) {
            incidence_[v].push_back(static_cast<int>(i));
            for (Vertex u : edges_[i])
                if (u != v)
                    neighbours_[v].push_back(u);
        }
    for (auto& nb : neighbours_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
}

ColourStructure ColourStructure::graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    std::vector<Edge> list;
    list.reserve(edges.size());
    for (auto [u, v] : edges)
        list.push_back({u, v});
    return ColourStructure(n, std::move(list), StructureKind::graph);
}

ColourStructure ColourStructure::graph(int n, std::vector<Edge> edges) {
    return ColourStructure(n, std::move(edges), StructureKind::graph);
}

ColourStructure ColourStructure::hypergraph(int n, std::vector<Edge> edges) {
    return ColourStructure(n, std::move(edges), StructureKind::hypergraph);
}

bool ColourStructure::adjacent(Vertex u, Vertex v) const {
    const auto& nb = neighbours_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

int ColourStructure::degree(Vertex v) const {
    if (!is_graph())
        throw InputError("degree is defined for graphs only");
    check_vertex(v, n_);
    return static_cast<int>(neighbours_[v].size());
}

int ColourStructure::max_degree() const {
    int best = 0;
    for (Vertex v = 0; v < n_; ++v)
        best = std::max(best, degree(v));
    return best;
}

int ColourStructure::min_degree() const {
    if (n_ == 0)
        return 0;
    int best = n_;
    for (Vertex v = 0; v < n_; ++v)
        best = std::min(best, degree(v));
    return best;
}

std::vector<int> ColourStructure::components() const {
    std::vector<int> comp(n_, -1);
    int next = 0;
    std::vector<Vertex> stack;
    for (Vertex root = 0; root < n_; ++root) {
        if (comp[root] >= 0)
            continue;
        comp[root] = next;
        stack.push_back(root);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex u : neighbours_[v])
                if (comp[u] < 0) {
                    comp[u] = next;
                    stack.push_back(u);
                }
        }
        ++next;
    }
    return comp;
}

int ColourStructure::component_count() const {
    auto comp = components();
    return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

ColourStructure ColourStructure::induced(std::span<const Vertex> keep) const {
    VertexSet kept = make_vertex_set(keep, n_);
    std::vector<int> index(n_, -1);
    for (std::size_t i = 0; i < kept.size(); ++i)
        index[kept[i]] = static_cast<int>(i);
    std::vector<Edge> out;
    for (const auto& e : edges_) {
        Edge mapped;
        for (Vertex v : e) {
            if (index[v] < 0)
                break;
            mapped.push_back(index[v]);
        }
        if (mapped.size() == e.size())
            out.push_back(std::move(mapped));
    }
    return ColourStructure(static_cast<int>(kept.size()), std::move(out), kind_);
}

ColourStructure ColourStructure::without_edge(std::size_t e) const {
    if (e >= edges_.size())
        throw InputError("edge index out of range");
    std::vector<Edge> out = edges_;
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(e));
    return ColourStructure(n_, std::move(out), kind_);
}

std::uint64_t ColourStructure::hash() const {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xFF;
            h *= 1099511628211ULL;
        }
    };
    mix(is_graph() ? 2 : 3);
    mix(static_cast<std::uint64_t>(n_));
    for (const auto& e : edges_) {
        mix(e.size());
        for (Vertex v : e)
            mix(static_cast<std::uint64_t>(v));
    }
    return h;
}

Colouring::Colouring(std::vector<Colour> colours, int k) : colours_(std::move(colours)), k_(k) {
    if (k < 0)
        throw InputError("negative colour count");
    for (Colour c : colours_)
        if (c < 1 || c > k)
            throw InputError("colour " + std::to_string(c) + " outside [1.." + std::to_string(k) + "]");
}

Colour Colouring::max_colour() const {
    return colours_.empty() ? 0 : *std::max_element(colours_.begin(), colours_.end());
}

PartialColouring::PartialColouring(int n, int k) : assignment_(static_cast<std::size_t>(n)), k_(k) {}

PartialColouring::PartialColouring(std::vector<std::optional<Colour>> assignment, int k)
    : assignment_(std::move(assignment)), k_(k) {
    for (const auto& c : assignment_)
        if (c && (*c < 1 || *c > k))
            throw InputError("colour " + std::to_string(*c) + " outside [1.." + std::to_string(k) + "]");
}

void PartialColouring::assign(Vertex v, Colour c) {
    check_vertex(v, order());
    if (c < 1 || c > k_)
        throw InputError("colour " + std::to_string(c) + " outside [1.." + std::to_string(k_) + "]");
    assignment_[v] = c;
}

VertexSet PartialColouring::support() const {
    VertexSet out;
    for (Vertex v = 0; v < order(); ++v)
        if (assignment_[v])
            out.push_back(v);
    return out;
}

std::size_t PartialColouring::assigned_count() const {
    return static_cast<std::size_t>(
        std::count_if(assignment_.begin(), assignment_.end(), [](const auto& c) { return c.has_value(); }));
}

Colouring PartialColouring::to_colouring() const {
    std::vector<Colour> out;
    out.reserve(assignment_.size());
    for (const auto& c : assignment_) {
        if (!c)
            throw InputError("partial colouring is not total");
        out.push_back(*c);
    }
    return Colouring(std::move(out), k_);
}

bool is_proper(const ColourStructure& s, const Colouring& c) {
    if (c.order() != s.order())
        throw InputError("colouring has " + std::to_string(c.order()) + " entries for " +
                         std::to_string(s.order()) + " vertices");
    for (const auto& e : s.edges()) {
        bool mono = std::all_of(e.begin() + 1, e.end(), [&](Vertex v) { return c[v] == c[e.front()]; });
        if (mono)
            return false;
    }
    return true;
}

bool is_consistent(const ColourStructure& s, const PartialColouring& p) {
    if (p.order() != s.order())
        throw InputError("partial colouring length does not match the structure");
    for (const auto& e : s.edges()) {
        const auto& first = p[e.front()];
        if (!first)
            continue;
        bool mono = std::all_of(e.begin() + 1, e.end(), [&](Vertex v) { return p[v] == first; });
        if (mono)
            return false;
    }
    return true;
}

PartialColouring restrict(const Colouring& c, std::span<const Vertex> S) {
    PartialColouring out(c.order(), c.k());
    for (Vertex v : S) {
        check_vertex(v, c.order());
        out.assign(v, c[v]);
    }
    return out;
}

VertexSet make_vertex_set(std::span<const Vertex> vertices, int n) {
    VertexSet out(vertices.begin(), vertices.end());
    for (Vertex v : out)
        check_vertex(v, n);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string to_string(const VertexSet& s) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i)
        os << (i ? "," : "") << s[i];
    os << '}';
    return os.str();
}

}  // namespace critset
