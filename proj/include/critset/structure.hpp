#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace critset {

using Vertex = int;
/// Colours are 1-based: a k-colouring uses values in [1..k].
using Colour = int;
/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;
using Edge = std::vector<Vertex>;

enum class StructureKind { graph, hypergraph };

/// A graph or hypergraph on vertices 0..n-1 whose edges are the colouring
/// constraints: no edge may be monochromatic. A graph is the case where every
/// edge has exactly two vertices. Immutable after construction.
///
/// Edges are stored sorted internally and the edge list is sorted
/// lexicographically, so two structures with the same edge sets compare equal.
class ColourStructure {
public:
    ColourStructure() = default;

    /// Throws InputError on a non-2-vertex edge, self loop, out-of-range vertex
    /// or duplicate edge.
    static ColourStructure graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);
    static ColourStructure graph(int n, std::vector<Edge> edges);
    /// Edges need at least two distinct vertices each.
    static ColourStructure hypergraph(int n, std::vector<Edge> edges);

    int order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }
    StructureKind kind() const noexcept { return kind_; }
    bool is_graph() const noexcept { return kind_ == StructureKind::graph; }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(std::size_t e) const { return edges_[e]; }
    /// Indices of the edges containing v.
    std::span<const int> incident(Vertex v) const { return incidence_[v]; }
    /// Vertices sharing at least one edge with v, sorted.
    std::span<const Vertex> neighbours(Vertex v) const { return neighbours_[v]; }
    bool adjacent(Vertex u, Vertex v) const;

    /// Graph degree; InputError for hypergraphs.
    int degree(Vertex v) const;
    int max_degree() const;
    int min_degree() const;

    /// Component id per vertex (ids in order of lowest vertex), over the
    /// 2-section of the edges.
    std::vector<int> components() const;
    int component_count() const;
    bool connected() const { return n_ <= 1 || component_count() == 1; }

    /// Substructure on `keep` (renumbered in increasing order), keeping the
    /// edges that lie entirely inside it.
    ColourStructure induced(std::span<const Vertex> keep) const;
    /// Same vertex set, without edge `e`.
    ColourStructure without_edge(std::size_t e) const;

    /// Stable 64-bit FNV-1a digest of (kind, n, edges).
    std::uint64_t hash() const;

    friend bool operator==(const ColourStructure& a, const ColourStructure& b) {
        return a.n_ == b.n_ && a.kind_ == b.kind_ && a.edges_ == b.edges_;
    }

private:
    ColourStructure(int n, std::vector<Edge> edges, StructureKind kind);

    int n_ = 0;
    StructureKind kind_ = StructureKind::graph;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incidence_;
    std::vector<std::vector<Vertex>> neighbours_;
};

/// A total assignment of colours in [1..k].
class Colouring {
public:
    Colouring() = default;
    /// Throws InputError if some colour lies outside [1..k].
    Colouring(std::vector<Colour> colours, int k);

    int order() const noexcept { return static_cast<int>(colours_.size()); }
    int k() const noexcept { return k_; }
    Colour operator[](Vertex v) const { return colours_[v]; }
    const std::vector<Colour>& colours() const noexcept { return colours_; }
    /// Largest colour actually used (0 for the empty colouring).
    Colour max_colour() const;
    /// Same colours, seen as a colouring with `k` colours available.
    Colouring with_k(int k) const { return Colouring(colours_, k); }

    friend bool operator==(const Colouring&, const Colouring&) = default;

private:
    std::vector<Colour> colours_;
    int k_ = 0;
};

/// Per-vertex colour or unassigned. Assigned colours lie in [1..k].
class PartialColouring {
public:
    PartialColouring() = default;
    /// All vertices unassigned.
    PartialColouring(int n, int k);
    PartialColouring(std::vector<std::optional<Colour>> assignment, int k);

    int order() const noexcept { return static_cast<int>(assignment_.size()); }
    int k() const noexcept { return k_; }
    const std::optional<Colour>& operator[](Vertex v) const { return assignment_[v]; }
    bool assigned(Vertex v) const { return assignment_[v].has_value(); }
    void assign(Vertex v, Colour c);
    void unassign(Vertex v) { assignment_.at(v).reset(); }

    /// Vertices carrying a colour, increasing.
    VertexSet support() const;
    std::size_t assigned_count() const;
    bool total() const { return assigned_count() == assignment_.size(); }
    /// Requires total().
    Colouring to_colouring() const;

    friend bool operator==(const PartialColouring&, const PartialColouring&) = default;

private:
    std::vector<std::optional<Colour>> assignment_;
    int k_ = 0;
};

/// True iff no edge is monochromatic under `c`. InputError on length mismatch.
bool is_proper(const ColourStructure& s, const Colouring& c);

/// True iff no fully assigned edge is monochromatic.
bool is_consistent(const ColourStructure& s, const PartialColouring& p);

/// c restricted to S. InputError on an out-of-range vertex.
PartialColouring restrict(const Colouring& c, std::span<const Vertex> S);

/// Sorted copy without duplicates; InputError if a vertex is outside [0, n).
VertexSet make_vertex_set(std::span<const Vertex> vertices, int n);

std::string to_string(const VertexSet& s);

}  // namespace critset
