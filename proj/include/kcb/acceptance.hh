#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kcb::acceptance {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
};

// Each criterion cross-checks the library against brute-force oracles that
// share no code with it beyond BipartiteGraph's edge list.
auto positive_construction() -> CriterionResult;
auto negative_characterization() -> CriterionResult;
auto g1_iff_c_equals_m() -> CriterionResult;
auto counting_identities() -> CriterionResult;
auto parameter_enumeration() -> CriterionResult;
auto tilde_equivalence() -> CriterionResult;
auto exact_optima() -> CriterionResult;
auto conjecture_harness() -> CriterionResult;
auto edge_monotonicity() -> CriterionResult;

/// Runs criteria 1..9 in order, printing one PASS/FAIL line per criterion as
/// it completes. True iff all passed.
auto run_all(std::ostream & out) -> bool;

} // namespace kcb::acceptance
