#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace kcb {

using Vertex = std::size_t;
using VertexSet = std::vector<Vertex>; // sorted, duplicate-free
using Edge = std::pair<Vertex, Vertex>; // (u index, v index)

struct DegreeProfile {
    std::size_t min_u = 0;
    std::size_t max_u = 0;
    std::size_t min_v = 0;
    std::size_t max_v = 0;

    auto operator<=>(const DegreeProfile &) const = default;
};

/// Simple bipartite graph G = (U, V; E) with |U| = n, |V| = m. Vertices are
/// positional: u_i for i in [n], v_j for j in [m]. Immutable once built; both
/// adjacency directions are kept sorted so iteration order is canonical.
class BipartiteGraph {
public:
    BipartiteGraph() = default;

    /// Throws OutOfRange on an endpoint outside [n] x [m]. Duplicates collapse.
    static auto build(std::size_t n, std::size_t m, std::span<const Edge> edges) -> BipartiteGraph;

    [[nodiscard]] auto n() const -> std::size_t { return _u_adj.size(); }
    [[nodiscard]] auto m() const -> std::size_t { return _v_adj.size(); }
    [[nodiscard]] auto size() const -> std::size_t { return _edge_count; }

    [[nodiscard]] auto neighbours_of_u(Vertex u) const -> const VertexSet & { return _u_adj.at(u); }
    [[nodiscard]] auto neighbours_of_v(Vertex v) const -> const VertexSet & { return _v_adj.at(v); }
    [[nodiscard]] auto degree_u(Vertex u) const -> std::size_t { return _u_adj.at(u).size(); }
    [[nodiscard]] auto degree_v(Vertex v) const -> std::size_t { return _v_adj.at(v).size(); }

    [[nodiscard]] auto has_edge(Vertex u, Vertex v) const -> bool;

    /// Edges in ascending (u, v) order.
    [[nodiscard]] auto edges() const -> std::vector<Edge>;

    /// N(B) for B a subset of V, as a subset of U. Throws OutOfRange.
    [[nodiscard]] auto neighbourhood_of_v_set(std::span<const Vertex> vs) const -> VertexSet;
    /// N(A) for A a subset of U, as a subset of V. Throws OutOfRange.
    [[nodiscard]] auto neighbourhood_of_u_set(std::span<const Vertex> us) const -> VertexSet;

    /// G[U', V]: U' is reindexed in ascending order, V is kept. Throws OutOfRange.
    [[nodiscard]] auto induced(std::span<const Vertex> u_subset) const -> BipartiteGraph;

    /// G + uv. Throws OutOfRange.
    [[nodiscard]] auto with_edge(Vertex u, Vertex v) const -> BipartiteGraph;

    [[nodiscard]] auto degree_profile() const -> DegreeProfile;
    [[nodiscard]] auto is_biregular(std::size_t a, std::size_t b) const -> bool;

    friend auto operator==(const BipartiteGraph & l, const BipartiteGraph & r) -> bool { return l._u_adj == r._u_adj; }

private:
    BipartiteGraph(std::vector<VertexSet> u_adj, std::size_t m);

    std::vector<VertexSet> _u_adj;
    std::vector<VertexSet> _v_adj;
    std::size_t _edge_count = 0;
};

struct Matching {
    std::vector<Edge> pairs; // sorted by u

    [[nodiscard]] auto size() const -> std::size_t { return pairs.size(); }
    /// Pairwise disjoint in both coordinates and every pair an edge of host.
    [[nodiscard]] auto is_valid_in(const BipartiteGraph & host) const -> bool;
    [[nodiscard]] auto covers_v(Vertex v) const -> bool;
    [[nodiscard]] auto covers_u(Vertex u) const -> bool;

    auto operator==(const Matching &) const -> bool = default;
};

} // namespace kcb
