#pragma once

#include <kcb/numth.hh>

#include <optional>
#include <vector>

namespace kcb::params {

using numth::Int;

/// Parameters of an (a,b)-regular bipartite graph of order (n,m) with
/// b = n-m+1. Only obtainable through derive_params, which checks every
/// identity linking the fields, so a ParamSet in hand is always consistent.
struct ParamSet {
    Int n;
    Int m;
    Int k;
    Int a;
    Int b;
    Int c; // gcd(n, m)
    Int d; // gcd(a, b)
    Int x; // n / c
    Int y; // m / c
    Int p; // c - d

    auto operator<=>(const ParamSet &) const = default;
};

/// Throws NotBiregular when m(n-m+1) is not divisible by n, InvalidParams
/// unless n > m > 1.
auto derive_params(Int n, Int m) -> ParamSet;

/// Same as derive_params but returns nullopt on NotBiregular.
auto try_derive_params(Int n, Int m) -> std::optional<ParamSet>;

/// Re-checks every identity on an already populated ParamSet. Throws
/// InvalidParams naming the first identity that fails.
void validate(const ParamSet & params);

// Enumerations. Every output is sorted by (n, m), deduplicated, and equal to
// derive_params(n, m) of its own (n, m).

auto enumerate_from_xy(Int x, Int y, Int l_max) -> std::vector<ParamSet>;
auto enumerate_from_cd(Int c, Int d, Int l_max) -> std::vector<ParamSet>;
auto enumerate_from_m(Int m) -> std::vector<ParamSet>;
auto enumerate_from_a(Int a) -> std::vector<ParamSet>;
auto enumerate_from_b(Int b) -> std::vector<ParamSet>;

/// Walks factorizations n = c*x with c, x >= 2 and gcd(c, x) = 1; each one
/// fixes (y, d) through the least positive solution of d*x - z*c = 1.
/// Throws InvalidParams when n < 4 or n is prime.
auto enumerate_from_n(Int n) -> std::vector<ParamSet>;

/// All admissible (n, m) with m < n <= n_max, by brute filtering.
auto all_up_to(Int n_max) -> std::vector<ParamSet>;

/// A candidate produced by the alternative n-based recipe (factor n = c*x and
/// n+1 = y*z with z >= c+1, then d = z-c, m = c*y, a = d*y, b = d*x). The
/// recipe does not enforce b = n-m+1; `consistent` records whether it holds.
struct NPlusOneCandidate {
    Int n, m, c, x, y, z, d, a, b;
    bool consistent;
};

auto n_plus_one_candidates(Int n_max) -> std::vector<NPlusOneCandidate>;

} // namespace kcb::params
