#include "support.hh"

#include <kcb/construct.hh>
#include <kcb/verify.hh>

#include <doctest.h>

#include <random>

using namespace kcb;
using namespace kcb::verify;
using kcb::test::error_code;
using kcb::test::graph;
using params::derive_params;

namespace {
auto g1(params::Int n, params::Int m) { return construct::construct_g1(derive_params(n, m)); }
auto g2(params::Int n, params::Int m) { return construct::construct_g2(derive_params(n, m)); }
auto negative(params::Int n, params::Int m) { return construct::construct_negative(derive_params(n, m)); }

auto identity(std::size_t m) -> BipartiteGraph
{
    std::vector<Edge> edges;
    for (Vertex i = 0; i < m; ++i)
        edges.emplace_back(i, i);
    return BipartiteGraph::build(m, m, edges);
}

auto random_graph(std::mt19937 & rng, std::size_t n, std::size_t m, double density) -> BipartiteGraph
{
    std::bernoulli_distribution coin(density);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < m; ++v)
            if (coin(rng))
                edges.emplace_back(u, v);
    return BipartiteGraph::build(n, m, edges);
}

// Constructions plus random graphs with n <= 12, dense enough to hit both verdicts.
auto corpus() -> std::vector<BipartiteGraph>
{
    std::vector<BipartiteGraph> out;
    for (const auto & p : params::all_up_to(12)) {
        out.push_back(construct::construct_g1(p));
        out.push_back(construct::construct_g2(p));
    }
    std::mt19937 rng(7);
    for (std::size_t n = 3; n <= 10; ++n)
        for (std::size_t m = 2; m < n; ++m)
            for (double density : {0.5, 0.7, 0.85})
                out.push_back(random_graph(rng, n, m, density));
    return out;
}
}

TEST_CASE("max_matching")
{
    CHECK(max_matching(g2(6, 3)).size() == 3);
    CHECK(max_matching(graph(3, 3, {})).size() == 0);
    CHECK(max_matching(identity(5)).size() == 5);

    auto g = g2(12, 9);
    auto matching = max_matching(g);
    CHECK(matching.is_valid_in(g));
    CHECK(matching == max_matching(g));
}

TEST_CASE("has_complete_matching")
{
    auto g = g2(6, 3);
    CHECK(has_complete_matching(g.induced(VertexSet{0, 2, 4})));

    auto bad = g1(12, 9);
    // Keep everything outside N({v6,v7,v8}) plus one vertex of it.
    CHECK(bad.neighbourhood_of_v_set(VertexSet{6, 7, 8}) == VertexSet{8, 9, 10, 11});
    CHECK_FALSE(has_complete_matching(bad.induced(VertexSet{0, 1, 2, 3, 4, 5, 6, 7, 8})));
    CHECK_FALSE(has_complete_matching(graph(0, 1, {})));
}

TEST_CASE("is_k_critical_deficiency")
{
    CHECK(is_k_critical_deficiency(g2(6, 3)).is_k_critical);

    auto neg = is_k_critical_deficiency(negative(10, 5));
    CHECK_FALSE(neg.is_k_critical);
    REQUIRE(neg.witness);
    CHECK(neg.witness->b == VertexSet{0, 4});
    CHECK(neg.witness->neighbourhood_size == 6);

    auto bad = g1(12, 9);
    auto verdict = is_k_critical_deficiency(bad);
    CHECK_FALSE(verdict.is_k_critical);
    REQUIRE(verdict.witness);
    CHECK(is_hall_witness(bad, verdict.witness->b));
    CHECK(is_hall_witness(bad, VertexSet{6, 7, 8}));
    CHECK(bad.neighbourhood_of_v_set(VertexSet{6, 7, 8}).size() == 4);

    CHECK(error_code([] { is_k_critical_deficiency(graph(1, 2, {})); }) == ErrorCode::ShapeError);
}

TEST_CASE("witnesses are inclusion-minimal")
{
    for (const auto & g : corpus()) {
        auto verdict = is_k_critical_deficiency(g);
        if (verdict.is_k_critical)
            continue;
        REQUIRE(verdict.witness);
        const auto & b = verdict.witness->b;
        REQUIRE(is_hall_witness(g, b));
        REQUIRE(verdict.witness->neighbourhood_size == g.neighbourhood_of_v_set(b).size());
        for (std::size_t skip = 0; skip < b.size() && b.size() > 1; ++skip) {
            VertexSet smaller;
            for (std::size_t i = 0; i < b.size(); ++i)
                if (i != skip)
                    smaller.push_back(b[i]);
            REQUIRE_FALSE(is_hall_witness(g, smaller));
        }
    }
}

TEST_CASE("is_k_critical_deletion")
{
    CHECK(is_k_critical_deletion(g2(12, 9)).is_k_critical);
    CHECK(is_k_critical_deletion(construct::construct_conjecture(5, 3)).is_k_critical);

    auto neg = is_k_critical_deletion(negative(10, 5));
    CHECK_FALSE(neg.is_k_critical);
    REQUIRE(neg.deleted);
    REQUIRE(neg.witness);
    CHECK(is_hall_witness(negative(10, 5), neg.witness->b));

    // Deleting {u1,u2,u5,u6,u7} strands v0 and v4.
    auto g = negative(10, 5);
    CHECK_FALSE(has_complete_matching(g.induced(VertexSet{0, 3, 4, 8, 9})));

    CHECK(error_code([] { is_k_critical_deletion(g2(30, 25), {.deletion_budget = 1000}); }) == ErrorCode::BudgetExceeded);
}

TEST_CASE("binomial")
{
    CHECK(binomial(12, 3) == 220);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(200, 100) == UINT64_MAX);
}

TEST_CASE("deficiency and deletion agree")
{
    auto graphs = corpus();
    int critical = 0;
    for (const auto & g : graphs) {
        bool by_deficiency = is_k_critical_deficiency(g).is_k_critical;
        REQUIRE(by_deficiency == is_k_critical_deletion(g).is_k_critical);
        critical += by_deficiency;
    }
    CHECK(critical > 5);
    CHECK(critical < static_cast<int>(graphs.size()) - 5);
}

TEST_CASE("is_k_extendable")
{
    auto cycle = graph(3, 3, {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}, {2, 0}});
    CHECK(is_k_extendable(cycle, 1));
    CHECK_FALSE(is_k_extendable(cycle, 2));
    CHECK_FALSE(is_k_extendable(identity(4), 1));
    CHECK(is_k_extendable(construct::tilde(g2(6, 3)), 3));

    CHECK(error_code([] { is_k_extendable(graph(3, 2, {}), 1); }) == ErrorCode::Unbalanced);
    CHECK(error_code([&] { is_k_extendable(cycle, 0); }) == ErrorCode::InvalidParams);
    CHECK(error_code([] { is_k_extendable(graph(2, 2, {{0, 0}, {1, 0}}), 1); }) == ErrorCode::NoPerfectMatching);
}

TEST_CASE("is_k_extendable does not depend on the perfect matching")
{
    for (const auto & g : corpus()) {
        auto t = construct::tilde(g);
        auto first = max_matching(t);
        if (first.size() != t.n())
            continue;
        auto other = alternative_perfect_matching(t, first);
        if (! other)
            continue;
        REQUIRE(other->is_valid_in(t));
        REQUIRE(other->size() == t.n());
        REQUIRE(*other != first);
        std::size_t k = g.n() - g.m();
        REQUIRE(is_k_extendable(t, k, first) == is_k_extendable(t, k, *other));
    }
}

TEST_CASE("tilde route")
{
    CHECK(check_tilde_equivalence(g2(6, 3)));
    CHECK(is_k_critical_tilde(g2(6, 3)).is_k_critical);
    CHECK(check_tilde_equivalence(negative(10, 5)));
    CHECK_FALSE(is_k_critical_tilde(negative(10, 5)).is_k_critical);
    CHECK(check_tilde_equivalence(g1(6, 3)));
    CHECK(is_k_critical_tilde(g1(6, 3)).is_k_critical);
    CHECK(error_code([] { is_k_critical_tilde(identity(3)); }) == ErrorCode::ShapeError);

    for (const auto & g : corpus())
        REQUIRE(check_tilde_equivalence(g));
}

TEST_CASE("adding an edge keeps k-criticality")
{
    for (const auto & g : corpus()) {
        if (! is_k_critical_deficiency(g).is_k_critical)
            continue;
        for (Vertex u = 0; u < g.n(); ++u)
            for (Vertex v = 0; v < g.m(); ++v)
                if (! g.has_edge(u, v))
                    REQUIRE(is_k_critical_deficiency(g.with_edge(u, v)).is_k_critical);
    }
}

TEST_CASE("is_k_critical dispatch")
{
    auto g = g2(6, 3);
    for (auto method : {Method::Deficiency, Method::Deletion, Method::Tilde}) {
        auto verdict = is_k_critical(g, method);
        CHECK(verdict.is_k_critical);
        CHECK(verdict.method == method);
    }
    CHECK(to_string(Method::Tilde) == "tilde");
}
