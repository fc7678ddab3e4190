#include "support.hh"

#include <kcb/construct.hh>
#include <kcb/search.hh>

#include <doctest.h>

#include <bit>

using namespace kcb;
using namespace kcb::search;
using kcb::test::error_code;

TEST_CASE("lower_bound_edges")
{
    CHECK(lower_bound_edges(6, 3) == 12);
    CHECK(lower_bound_edges(4, 3) == 6);
    CHECK(lower_bound_edges(10, 5) == 30);
}

TEST_CASE("solve_biregular")
{
    auto six = solve_biregular(6, 3);
    CHECK(six.objective == Objective{12, 2, 4});
    CHECK(six.certificate == Certificate::BiregularOptimal);
    CHECK(six.objective == objective_of(six.graph));
    CHECK(solve_biregular(12, 9).objective == Objective{36, 3, 4});
    CHECK(error_code([] { solve_biregular(5, 3); }) == ErrorCode::NotBiregular);
}

TEST_CASE("solve_exhaustive")
{
    auto check = [](Int n, Int m, Objective expected) {
        auto result = solve_exhaustive(n, m);
        CHECK(result.objective == expected);
        CHECK(result.objective == objective_of(result.graph));
        CHECK(result.certificate == Certificate::ExhaustiveOptimal);
        CHECK(result.optimal_count >= 1);
        CHECK(verify::is_k_critical_deletion(result.graph).is_k_critical);
    };
    check(4, 3, {6, 2, 2});
    check(3, 2, {4, 2, 2});
    check(6, 3, {12, 2, 4});

    // A hand-built (4,3) optimum.
    auto witness = test::graph(4, 3, {{0, 0}, {1, 0}, {2, 1}, {3, 1}, {0, 2}, {2, 2}});
    CHECK(verify::is_k_critical_deletion(witness).is_k_critical);
    CHECK(objective_of(witness) == Objective{6, 2, 2});

    CHECK(error_code([] { solve_exhaustive(3, 3); }) == ErrorCode::InvalidParams);
    CHECK(error_code([] { solve_exhaustive(17, 3); }) == ErrorCode::InvalidParams);
}

TEST_CASE("both solvers agree where a is integral")
{
    for (auto [n, m] : {std::pair<Int, Int>{6, 3}, {6, 4}}) {
        auto biregular = solve_biregular(n, m);
        auto exhaustive = solve_exhaustive(n, m);
        CHECK(biregular.objective == exhaustive.objective);
    }
}

TEST_CASE("solve results respect the lower bounds")
{
    for (auto [n, m] : {std::pair<Int, Int>{3, 2}, {4, 2}, {4, 3}, {5, 2}, {5, 3}, {5, 4}, {6, 3}, {6, 5}}) {
        auto result = solve_exhaustive(n, m);
        auto profile = result.graph.degree_profile();
        REQUIRE(profile.min_v >= static_cast<std::size_t>(n - m + 1));
        REQUIRE(result.graph.size() >= static_cast<std::size_t>(lower_bound_edges(n, m)));
    }
}

TEST_CASE("solve_exhaustive is deterministic")
{
    auto first = solve_exhaustive(5, 3);
    auto second = solve_exhaustive(5, 3);
    CHECK(first.graph == second.graph);
    CHECK(first.optimal_count == second.optimal_count);
}

TEST_CASE("solve_exhaustive budget")
{
    CHECK(error_code([] { solve_exhaustive(6, 3, 0); }) == ErrorCode::BudgetExceeded);
}

TEST_CASE("labeled biregular enumeration")
{
    std::uint64_t seen = 0;
    auto count = for_each_labeled_biregular(6, 3, 2, 4, [&](const BipartiteGraph & g) {
        ++seen;
        REQUIRE(g.is_biregular(2, 4));
    });
    CHECK(count == 90);
    CHECK(seen == 90);
    CHECK(for_each_labeled_biregular(4, 2, 1, 2, [](const BipartiteGraph &) {}) == 6);
}

TEST_CASE("conjecture_scan")
{
    auto small = conjecture_scan(6);
    CHECK(small.counterexamples().empty());
    for (const auto & entry : small.entries)
        CHECK(entry.holds());

    auto find = [&](Int n, Int m) {
        return std::find_if(small.entries.begin(), small.entries.end(), [&](const ConjectureEntry & e) { return e.n == n && e.m == m; });
    };
    auto five = find(5, 3);
    REQUIRE(five != small.entries.end());
    CHECK(five->deletion);
    CHECK(five->holds());
    auto four = find(4, 3);
    REQUIRE(four != small.entries.end());
    CHECK(four->edges == 8);
    CHECK(find(6, 3) == small.entries.end());
}

namespace {
// Minimum (e, max_u, max_v) over every edge set of the n x m grid that keeps
// a complete matching of V after deleting any n-m vertices of U (Hall form).
auto brute_optimum(int n, int m) -> Objective
{
    std::optional<Objective> best;
    int k = n - m;
    std::uint32_t cells = static_cast<std::uint32_t>(n * m);
    for (std::uint32_t bits = 0; bits < (1u << cells); ++bits) {
        std::vector<std::uint32_t> col(m);
        bool degrees_ok = true;
        for (int v = 0; v < m; ++v) {
            col[v] = bits >> (n * v) & ((1u << n) - 1);
            degrees_ok = degrees_ok && std::popcount(col[v]) >= k + 1;
        }
        if (! degrees_ok)
            continue;
        Objective tuple{static_cast<std::size_t>(std::popcount(bits)), 0, 0};
        for (int u = 0; u < n; ++u) {
            std::size_t deg = 0;
            for (int v = 0; v < m; ++v)
                deg += col[v] >> u & 1;
            tuple.max_u = std::max(tuple.max_u, deg);
        }
        for (int v = 0; v < m; ++v)
            tuple.max_v = std::max<std::size_t>(tuple.max_v, std::popcount(col[v]));
        if (best && ! (tuple < *best))
            continue;
        bool hall = true;
        for (std::uint32_t b = 1; b < (1u << m) && hall; ++b) {
            std::uint32_t nbrs = 0;
            for (int v = 0; v < m; ++v)
                if (b >> v & 1)
                    nbrs |= col[v];
            hall = std::popcount(nbrs) >= std::popcount(b) + k;
        }
        if (hall)
            best = tuple;
    }
    return *best;
}
}

TEST_CASE("solve_exhaustive matches brute force on small grids")
{
    for (int n = 3; n <= 10; ++n)
        for (int m = 2; m < n && n * m <= 20; ++m) {
            CAPTURE(n);
            CAPTURE(m);
            CHECK(solve_exhaustive(n, m).objective == brute_optimum(n, m));
        }
}
