#pragma once

#include <kcb/graph.hh>

#include <cstdint>
#include <optional>
#include <string_view>

namespace kcb::verify {

/// Nonempty B of V with |N(B)| < |B| + k: a certificate that the host graph
/// is not k-critical.
struct HallWitness {
    VertexSet b;
    std::size_t neighbourhood_size = 0;

    auto operator<=>(const HallWitness &) const = default;
};

enum class Method { Deficiency, Deletion, Tilde };

auto to_string(Method method) -> std::string_view;

struct Verdict {
    bool is_k_critical = false;
    Method method = Method::Deficiency;
    std::optional<HallWitness> witness;
    // Deletion method only: the first deletion set S of U (canonical order)
    // after which V has no complete matching.
    std::optional<VertexSet> deleted;

    auto operator<=>(const Verdict &) const = default;
};

struct Options {
    // Upper limit on C(n, k) for the deletion oracle.
    std::uint64_t deletion_budget = 1'000'000;
};

/// Maximum matching by augmenting paths grown from V in index order, with
/// neighbours tried in ascending order; deterministic for a given graph.
auto max_matching(const BipartiteGraph & graph) -> Matching;

/// True iff some matching covers every vertex of V.
auto has_complete_matching(const BipartiteGraph & graph) -> bool;

/// Checks |N(B)| < |B| + (n - m) for nonempty B.
auto is_hall_witness(const BipartiteGraph & graph, const VertexSet & b) -> bool;

/// Shrinks a Hall witness to an inclusion-minimal one (no proper subset is a
/// witness). Greedy element removal first, then an exact search among the
/// remaining subsets by increasing size.
auto minimize_witness(const BipartiteGraph & graph, VertexSet b) -> HallWitness;

/// k-criticality via every nonempty B of V satisfying |N(B)| >= |B| + k.
/// Subsets are scanned depth-first in lexicographic order with early exit;
/// the reported witness is inclusion-minimal. Throws ShapeError if n < m.
auto is_k_critical_deficiency(const BipartiteGraph & graph) -> Verdict;

/// Ground truth: deletes every k-subset of U and looks for a complete
/// matching of V. Throws ShapeError if n < m and BudgetExceeded when C(n,k)
/// exceeds the budget.
auto is_k_critical_deletion(const BipartiteGraph & graph, const Options & options = {}) -> Verdict;

/// Number of k-subsets of an n-set, saturating at UINT64_MAX.
auto binomial(std::uint64_t n, std::uint64_t k) -> std::uint64_t;

/// k-extendability of a balanced graph through strong k-connectivity of
/// D(G,M): arcs directed U to V, the perfect matching M contracted. Uses the
/// matching found by max_matching. Throws Unbalanced, NoPerfectMatching, and
/// InvalidParams for k < 1.
auto is_k_extendable(const BipartiteGraph & graph, std::size_t k) -> bool;

/// Same with a caller-supplied perfect matching.
auto is_k_extendable(const BipartiteGraph & graph, std::size_t k, const Matching & perfect) -> bool;

/// A perfect matching different from `perfect`, if one exists.
auto alternative_perfect_matching(const BipartiteGraph & graph, const Matching & perfect) -> std::optional<Matching>;

/// k-criticality through the tilde graph: tilde(G) must have a perfect
/// matching and be k-extendable. No witness. Throws ShapeError unless n > m.
auto is_k_critical_tilde(const BipartiteGraph & graph) -> Verdict;

/// Whether the deletion oracle and the tilde route agree on this graph.
auto check_tilde_equivalence(const BipartiteGraph & graph, const Options & options = {}) -> bool;

auto is_k_critical(const BipartiteGraph & graph, Method method, const Options & options = {}) -> Verdict;

} // namespace kcb::verify
