#include <kcb/construct.hh>
#include <kcb/error.hh>

#include <set>
#include <stdexcept>
#include <string>

namespace kcb::construct {

using numth::ceil_div;
using numth::checked_mul;
using numth::mod;

namespace {
    // Each u_i gets the window first(i), first(i)+step, ..., of length degree, mod m.
    template <typename FirstNeighbour>
    auto interval_graph(Int n, Int m, Int degree, Int step, FirstNeighbour first) -> BipartiteGraph
    {
        std::vector<Edge> edges;
        edges.reserve(static_cast<std::size_t>(checked_mul(n, degree)));
        for (Int i = 0; i < n; ++i) {
            Int j = first(i);
            for (Int alpha = 0; alpha < degree; ++alpha)
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(mod(j + checked_mul(step, alpha), m)));
        }
        return BipartiteGraph::build(static_cast<std::size_t>(n), static_cast<std::size_t>(m), edges);
    }

    auto ensure_biregular(BipartiteGraph graph, const ParamSet & p, const char * what) -> BipartiteGraph
    {
        if (! graph.is_biregular(static_cast<std::size_t>(p.a), static_cast<std::size_t>(p.b)))
            throw std::logic_error(std::string(what) + " is not (a,b)-regular for n=" + std::to_string(p.n)
                + " m=" + std::to_string(p.m));
        return graph;
    }
}

auto construct_g1(const ParamSet & p) -> BipartiteGraph
{
    params::validate(p);
    auto graph = interval_graph(p.n, p.m, p.a, 1, [&](Int i) { return (i / p.x) * p.y; });
    return ensure_biregular(std::move(graph), p, "G1");
}

auto construct_g2(const ParamSet & p) -> BipartiteGraph
{
    params::validate(p);
    auto graph = interval_graph(p.n, p.m, p.a, 1, [&](Int i) { return ceil_div(i * p.y, p.x); });
    return ensure_biregular(std::move(graph), p, "G2");
}

auto construct_g2_step(const ParamSet & p, Int step) -> BipartiteGraph
{
    if (step < 1 || p.x % step != 0)
        throw Error(ErrorCode::InvalidStep, "step " + std::to_string(step) + " does not divide x=" + std::to_string(p.x));
    return ensure_biregular(construct_g2_step_unchecked(p, step), p, "stepped G2");
}

auto construct_g2_step_unchecked(const ParamSet & p, Int step) -> BipartiteGraph
{
    params::validate(p);
    if (step < 1)
        throw Error(ErrorCode::InvalidStep, "step must be positive");
    return interval_graph(p.n, p.m, p.a, step, [&](Int i) { return ceil_div(i * p.y, p.x); });
}

auto construct_negative(const ParamSet & p) -> BipartiteGraph
{
    params::validate(p);
    if (p.c != p.m)
        throw Error(ErrorCode::Inapplicable, "needs c = m, got c=" + std::to_string(p.c) + " m=" + std::to_string(p.m));
    if (p.a >= p.m - 1)
        throw Error(ErrorCode::Inapplicable, "needs a < m-1, got a=" + std::to_string(p.a) + " m=" + std::to_string(p.m));

    const Int n = p.n, m = p.m, a = p.a;
    auto u_at = [n](Int index) { return static_cast<Vertex>(mod(index, n)); };

    // v_i sees the residue classes i, i+1, ..., i+a-1 (mod m) of U.
    std::set<Edge> edges;
    for (Int i = 0; i < m; ++i)
        for (Int alpha = 0; alpha < a; ++alpha)
            for (Int z = 0; z < p.x; ++z)
                edges.emplace(u_at(i + alpha + z * m), static_cast<Vertex>(i));

    // Trade class m-1 of v_{m-1} for class a-1 of v_1; afterwards
    // N(v_{m-1}) = N(v_0) = classes 0..a-1.
    const auto v1 = Vertex{1}, vlast = static_cast<Vertex>(m - 1);
    for (Int z = 0; z < p.x; ++z) {
        auto moved_to_v1 = u_at(m - 1 + z * m), moved_to_vlast = u_at(a - 1 + z * m);
        edges.erase({moved_to_v1, vlast});
        edges.erase({moved_to_vlast, v1});
        edges.emplace(moved_to_v1, v1);
        edges.emplace(moved_to_vlast, vlast);
    }

    std::vector<Edge> list(edges.begin(), edges.end());
    auto graph = BipartiteGraph::build(static_cast<std::size_t>(n), static_cast<std::size_t>(m), list);
    return ensure_biregular(std::move(graph), p, "negative construction");
}

auto conjecture_degree(Int n, Int m) -> Int
{
    if (! (1 < m && m < n))
        throw Error(ErrorCode::InvalidParams, "need n > m > 1");
    return ceil_div(checked_mul(m, n - m + 1), n);
}

auto construct_conjecture(Int n, Int m) -> BipartiteGraph
{
    Int degree = conjecture_degree(n, m);
    if (checked_mul(m, n - m + 1) % n == 0)
        throw Error(ErrorCode::IsBiregularCase, "m(n-m+1)/n is integral for n=" + std::to_string(n) + " m=" + std::to_string(m));
    // ceil(i*m/n) can reach m itself; the final index is reduced mod m.
    return interval_graph(n, m, degree, 1, [&](Int i) { return ceil_div(i * m, n); });
}

auto tilde(const BipartiteGraph & graph) -> BipartiteGraph
{
    if (graph.n() < graph.m())
        throw Error(ErrorCode::ShapeError, "tilde needs n >= m");
    auto edges = graph.edges();
    for (Vertex u = 0; u < graph.n(); ++u)
        for (Vertex v = graph.m(); v < graph.n(); ++v)
            edges.emplace_back(u, v);
    return BipartiteGraph::build(graph.n(), graph.n(), edges);
}

} // namespace kcb::construct
