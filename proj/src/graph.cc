#include <kcb/error.hh>
#include <kcb/graph.hh>

#include <algorithm>
#include <string>

namespace kcb {

namespace {
    void check_index(Vertex index, std::size_t bound, const char * side)
    {
        if (index >= bound)
            throw Error(ErrorCode::OutOfRange, std::string(side) + std::to_string(index) + " outside [" + std::to_string(bound) + "]");
    }

    auto set_union(std::vector<char> & seen) -> VertexSet
    {
        VertexSet out;
        for (Vertex i = 0; i < seen.size(); ++i)
            if (seen[i])
                out.push_back(i);
        return out;
    }
}

BipartiteGraph::BipartiteGraph(std::vector<VertexSet> u_adj, std::size_t m) :
    _u_adj(std::move(u_adj)),
    _v_adj(m)
{
    for (Vertex u = 0; u < _u_adj.size(); ++u) {
        auto & row = _u_adj[u];
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
        for (Vertex v : row)
            _v_adj[v].push_back(u);
        _edge_count += row.size();
    }
}

auto BipartiteGraph::build(std::size_t n, std::size_t m, std::span<const Edge> edges) -> BipartiteGraph
{
    std::vector<VertexSet> u_adj(n);
    for (auto [u, v] : edges) {
        check_index(u, n, "u");
        check_index(v, m, "v");
        u_adj[u].push_back(v);
    }
    return BipartiteGraph(std::move(u_adj), m);
}

auto BipartiteGraph::has_edge(Vertex u, Vertex v) const -> bool
{
    const auto & row = _u_adj.at(u);
    return std::binary_search(row.begin(), row.end(), v);
}

auto BipartiteGraph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> out;
    out.reserve(_edge_count);
    for (Vertex u = 0; u < n(); ++u)
        for (Vertex v : _u_adj[u])
            out.emplace_back(u, v);
    return out;
}

auto BipartiteGraph::neighbourhood_of_v_set(std::span<const Vertex> vs) const -> VertexSet
{
    std::vector<char> seen(n(), 0);
    for (Vertex v : vs) {
        check_index(v, m(), "v");
        for (Vertex u : _v_adj[v])
            seen[u] = 1;
    }
    return set_union(seen);
}

auto BipartiteGraph::neighbourhood_of_u_set(std::span<const Vertex> us) const -> VertexSet
{
    std::vector<char> seen(m(), 0);
    for (Vertex u : us) {
        check_index(u, n(), "u");
        for (Vertex v : _u_adj[u])
            seen[v] = 1;
    }
    return set_union(seen);
}

auto BipartiteGraph::induced(std::span<const Vertex> u_subset) const -> BipartiteGraph
{
    VertexSet keep(u_subset.begin(), u_subset.end());
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());

    std::vector<VertexSet> rows;
    rows.reserve(keep.size());
    for (Vertex u : keep) {
        check_index(u, n(), "u");
        rows.push_back(_u_adj[u]);
    }
    return BipartiteGraph(std::move(rows), m());
}

auto BipartiteGraph::with_edge(Vertex u, Vertex v) const -> BipartiteGraph
{
    check_index(u, n(), "u");
    check_index(v, m(), "v");
    auto rows = _u_adj;
    rows[u].push_back(v);
    return BipartiteGraph(std::move(rows), m());
}

auto BipartiteGraph::degree_profile() const -> DegreeProfile
{
    DegreeProfile out;
    auto fold = [](const std::vector<VertexSet> & adj, std::size_t & lo, std::size_t & hi) {
        if (adj.empty())
            return;
        auto [mn, mx] = std::minmax_element(adj.begin(), adj.end(),
            [](const VertexSet & l, const VertexSet & r) { return l.size() < r.size(); });
        lo = mn->size(), hi = mx->size();
    };
    fold(_u_adj, out.min_u, out.max_u);
    fold(_v_adj, out.min_v, out.max_v);
    return out;
}

auto BipartiteGraph::is_biregular(std::size_t a, std::size_t b) const -> bool
{
    return std::all_of(_u_adj.begin(), _u_adj.end(), [a](const VertexSet & r) { return r.size() == a; })
        && std::all_of(_v_adj.begin(), _v_adj.end(), [b](const VertexSet & r) { return r.size() == b; });
}

auto Matching::is_valid_in(const BipartiteGraph & host) const -> bool
{
    std::vector<char> used_u(host.n(), 0), used_v(host.m(), 0);
    for (auto [u, v] : pairs) {
        if (u >= host.n() || v >= host.m() || ! host.has_edge(u, v) || used_u[u] || used_v[v])
            return false;
        used_u[u] = used_v[v] = 1;
    }
    return true;
}

auto Matching::covers_v(Vertex v) const -> bool
{
    return std::any_of(pairs.begin(), pairs.end(), [v](const Edge & e) { return e.second == v; });
}

auto Matching::covers_u(Vertex u) const -> bool
{
    return std::any_of(pairs.begin(), pairs.end(), [u](const Edge & e) { return e.first == u; });
}

} // namespace kcb
