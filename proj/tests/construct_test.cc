#include "support.hh"

#include <kcb/construct.hh>
#include <kcb/verify.hh>

#include <doctest.h>

using namespace kcb;
using namespace kcb::construct;
using kcb::test::error_code;
using params::derive_params;
using params::Int;

namespace {
// Test-only variant of G2 with floor instead of ceiling.
auto floor_g2(const ParamSet & p) -> BipartiteGraph
{
    std::vector<Edge> edges;
    for (Int i = 0; i < p.n; ++i)
        for (Int alpha = 0; alpha < p.a; ++alpha)
            edges.emplace_back(i, (i * p.y / p.x + alpha) % p.m);
    return BipartiteGraph::build(p.n, p.m, edges);
}

// G1 as the blow-up of the d-regular circulant on c + c vertices: u_{i,alpha}
// is u_{i*x+alpha}, v_{j,beta} is v_{j*y+beta}, each edge becomes a K_{x,y}.
auto blow_up_g1(const ParamSet & p) -> BipartiteGraph
{
    std::vector<Edge> edges;
    for (Int i = 0; i < p.c; ++i)
        for (Int delta = 0; delta < p.d; ++delta) {
            Int j = (i + delta) % p.c;
            for (Int alpha = 0; alpha < p.x; ++alpha)
                for (Int beta = 0; beta < p.y; ++beta)
                    edges.emplace_back(i * p.x + alpha, j * p.y + beta);
        }
    return BipartiteGraph::build(p.n, p.m, edges);
}

auto first_neighbours(const BipartiteGraph & g, Int a) -> std::vector<Vertex>
{
    // The first vertex of each U-side interval of length a (mod m).
    std::vector<Vertex> out;
    for (Vertex u = 0; u < g.n(); ++u) {
        const auto & nbrs = g.neighbours_of_u(u);
        for (Vertex v : nbrs) {
            Vertex before = (v + g.m() - 1) % g.m();
            if (a == static_cast<Int>(g.m()) || ! std::binary_search(nbrs.begin(), nbrs.end(), before)) {
                out.push_back(v);
                break;
            }
        }
    }
    return out;
}
}

TEST_CASE("construct_g1")
{
    auto g = construct_g1(derive_params(6, 3));
    CHECK(g.size() == 12);
    for (Vertex u : {0, 1})
        CHECK(g.neighbours_of_u(u) == VertexSet{0, 1});
    for (Vertex u : {2, 3})
        CHECK(g.neighbours_of_u(u) == VertexSet{1, 2});
    for (Vertex u : {4, 5})
        CHECK(g.neighbours_of_u(u) == VertexSet{0, 2});

    auto big = construct_g1(derive_params(12, 9));
    for (Vertex u = 0; u < 12; ++u) {
        Vertex first = u / 4 * 3;
        CHECK(big.neighbours_of_u(u) == VertexSet{first, first + 1, first + 2});
    }
}

TEST_CASE("construct_g1 equals its blow-up form")
{
    for (const auto & p : params::all_up_to(60))
        REQUIRE(construct_g1(p) == blow_up_g1(p));
}

TEST_CASE("construct_g2")
{
    auto g = construct_g2(derive_params(6, 3));
    CHECK(first_neighbours(g, 2) == std::vector<Vertex>{0, 1, 1, 2, 2, 0});
    CHECK(g.neighbours_of_u(0) == VertexSet{0, 1});
    CHECK(g.neighbours_of_u(5) == VertexSet{0, 1});
    for (Vertex v = 0; v < 3; ++v)
        CHECK(g.degree_v(v) == 4);

    auto big = construct_g2(derive_params(12, 9));
    std::vector<int> starts(9, 0);
    for (Vertex v : first_neighbours(big, 3))
        ++starts[v];
    CHECK(starts == std::vector<int>{2, 1, 1, 2, 1, 1, 2, 1, 1});
    CHECK(big.is_biregular(3, 4));
    CHECK(construct_g2(derive_params(10, 5)).is_biregular(3, 6));
}

TEST_CASE("construct_g2 is (a,b)-regular up to n = 200")
{
    for (const auto & p : params::all_up_to(200))
        REQUIRE(construct_g2(p).is_biregular(p.a, p.b));
}

TEST_CASE("floor variant of G2 is also k-critical")
{
    for (const auto & p : params::all_up_to(16)) {
        auto g = floor_g2(p);
        REQUIRE(g.is_biregular(p.a, p.b));
        REQUIRE(verify::is_k_critical_deletion(g).is_k_critical);
    }
}

TEST_CASE("construct_g2_step")
{
    auto p = derive_params(6, 3);
    CHECK(construct_g2_step(p, 1) == construct_g2(p));
    auto q = derive_params(12, 9);
    auto stepped = construct_g2_step(q, 2);
    CHECK(stepped.is_biregular(3, 4));
    CHECK(verify::is_k_critical_deletion(stepped).is_k_critical);
    CHECK(error_code([&] { construct_g2_step(q, 3); }) == ErrorCode::InvalidStep);
    CHECK(error_code([&] { construct_g2_step(q, 0); }) == ErrorCode::InvalidStep);
    CHECK_NOTHROW(construct_g2_step_unchecked(q, 3));
}

TEST_CASE("construct_g2_step with every divisor of x is k-critical")
{
    for (const auto & p : params::all_up_to(16))
        for (Int s = 1; s <= p.x; ++s)
            if (p.x % s == 0)
                REQUIRE(verify::is_k_critical_deletion(construct_g2_step(p, s)).is_k_critical);
}

TEST_CASE("construct_negative")
{
    auto p = derive_params(10, 5);
    auto g = construct_negative(p);
    CHECK(g.is_biregular(3, 6));
    CHECK(g.neighbourhood_of_v_set(VertexSet{0, 4}) == VertexSet{0, 1, 2, 5, 6, 7});

    VertexSet keep = {0, 3, 4, 8, 9};
    CHECK_FALSE(verify::has_complete_matching(g.induced(keep)));

    CHECK(error_code([] { construct_negative(derive_params(6, 3)); }) == ErrorCode::Inapplicable);
    CHECK(error_code([] { construct_negative(derive_params(12, 9)); }) == ErrorCode::Inapplicable);
}

TEST_CASE("construct_negative fails with witness {v0, v_{m-1}} up to n = 40")
{
    int applicable = 0;
    for (const auto & p : params::all_up_to(40)) {
        if (p.c != p.m || p.a >= p.m - 1)
            continue;
        ++applicable;
        auto g = construct_negative(p);
        REQUIRE(g.is_biregular(p.a, p.b));
        VertexSet b{0, static_cast<Vertex>(p.m - 1)};
        REQUIRE(g.neighbourhood_of_v_set(b).size() == static_cast<std::size_t>(p.n - p.m + 1));
        REQUIRE(verify::is_hall_witness(g, b));
    }
    CHECK(applicable > 5);
}

TEST_CASE("construct_conjecture")
{
    auto g = construct_conjecture(5, 3);
    CHECK(conjecture_degree(5, 3) == 2);
    CHECK(first_neighbours(g, 2) == std::vector<Vertex>{0, 1, 2, 2, 0});
    CHECK(g.neighbours_of_u(0) == VertexSet{0, 1});
    CHECK(g.neighbours_of_u(4) == VertexSet{0, 1});
    CHECK(construct_conjecture(4, 3).size() == 8);
    CHECK(error_code([] { construct_conjecture(6, 3); }) == ErrorCode::IsBiregularCase);
    CHECK(error_code([] { construct_conjecture(3, 3); }) == ErrorCode::InvalidParams);
}

TEST_CASE("tilde")
{
    auto g = construct_g2(derive_params(6, 3));
    auto t = tilde(g);
    CHECK(t.n() == 6);
    CHECK(t.m() == 6);
    CHECK(t.size() == g.size() + 18);
    for (Vertex v = 0; v < 6; ++v)
        CHECK((t.degree_v(v) == 4 || t.degree_v(v) == 6));

    auto square = test::graph(2, 2, {{0, 0}, {1, 1}});
    CHECK(tilde(square) == square);
    CHECK(error_code([] { tilde(test::graph(1, 2, {})); }) == ErrorCode::ShapeError);
}
