#pragma once

#include <kcb/graph.hh>
#include <kcb/params.hh>
#include <kcb/verify.hh>

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

namespace kcb::search {

using params::Int;

/// (|E|, Delta_U, Delta_V), compared lexicographically.
struct Objective {
    std::size_t edges = 0;
    std::size_t max_u = 0;
    std::size_t max_v = 0;

    auto operator<=>(const Objective &) const = default;
};

auto objective_of(const BipartiteGraph & graph) -> Objective;

enum class Certificate { ExhaustiveOptimal, BiregularOptimal, FeasibleOnly };

auto to_string(Certificate certificate) -> std::string_view;

struct SolveResult {
    BipartiteGraph graph;
    Objective objective;
    Certificate certificate = Certificate::FeasibleOnly;
    // Exhaustive mode: optimal graphs found, counted up to row/column
    // permutation by the sorting reduction (a partial isomorphism test).
    std::size_t optimal_count = 1;
    // Exhaustive mode: candidate graphs handed to the deletion oracle.
    std::uint64_t candidates_examined = 0;
};

/// m(n-m+1): every V vertex needs n-m+1 neighbours.
auto lower_bound_edges(Int n, Int m) -> Int;

/// The stepless interval construction for integral a, checked k-critical.
/// Its tuple (m(n-m+1), a, n-m+1) meets the edge bound, the V-degree bound
/// and Delta_U >= ceil(e/n) simultaneously. Throws NotBiregular.
auto solve_biregular(Int n, Int m) -> SolveResult;

/// Exact lexicographic minimum by enumeration. Tuples are tried in
/// increasing order; for each one, graphs with column degrees in
/// [n-m+1, Delta_V] and row degrees <= Delta_U are enumerated up to
/// row/column permutation (double-lex ordering) and handed to the deletion
/// oracle. Throws BudgetExceeded when more than `budget` candidates would be
/// examined, InvalidParams unless n > m > 1 and n <= 16.
auto solve_exhaustive(Int n, Int m, std::uint64_t budget = 50'000'000) -> SolveResult;

/// Every labeled (a,b)-regular bipartite graph of order (n,m), in
/// lexicographic order of U-side neighbourhoods. Returns how many were visited.
auto for_each_labeled_biregular(std::size_t n, std::size_t m, std::size_t a, std::size_t b,
    const std::function<void(const BipartiteGraph &)> & visit) -> std::uint64_t;

struct ConjectureEntry {
    Int n = 0;
    Int m = 0;
    Int degree = 0; // ceil(m(n-m+1)/n)
    std::size_t edges = 0;
    verify::Verdict deficiency;
    std::optional<verify::Verdict> deletion; // absent when over budget

    [[nodiscard]] auto holds() const -> bool
    {
        return deficiency.is_k_critical && (! deletion || deletion->is_k_critical);
    }
};

struct ConjectureReport {
    Int n_max = 0;
    std::vector<ConjectureEntry> entries;

    [[nodiscard]] auto counterexamples() const -> std::vector<ConjectureEntry>;
};

/// Builds and verifies the irregular construction for every 1 < m < n <= n_max
/// with m(n-m+1)/n not integral. Empirical evidence only.
auto conjecture_scan(Int n_max, const verify::Options & options = {}) -> ConjectureReport;

} // namespace kcb::search
