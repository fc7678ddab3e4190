#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace kcb::numth {

using Int = std::int64_t;

// Checked arithmetic: throws Error(Overflow) instead of wrapping.
auto checked_add(Int lhs, Int rhs) -> Int;
auto checked_sub(Int lhs, Int rhs) -> Int;
auto checked_mul(Int lhs, Int rhs) -> Int;

/// Floor and ceiling of num / den for den > 0, correct for negative num.
auto floor_div(Int num, Int den) -> Int;
auto ceil_div(Int num, Int den) -> Int;

/// Non-negative residue of value modulo modulus (modulus > 0).
auto mod(Int value, Int modulus) -> Int;

struct BezoutSolution {
    Int g;
    Int phi;
    Int psi;
};

/// Extended Euclid on (alpha, beta), both >= 1. Returns the coefficients the
/// algorithm produces, unnormalised: alpha*phi + beta*psi = g = gcd(alpha, beta).
auto extended_gcd(Int alpha, Int beta) -> BezoutSolution;

struct UnitBezout {
    Int phi;
    Int psi;
};

/// Least positive solution of alpha*phi - beta*psi = 1 with 0 < phi <= beta
/// and 0 <= psi < alpha. Requires gcd(alpha, beta) = 1 (NoSolution otherwise)
/// and max(alpha, beta) >= 2.
auto unit_bezout_positive(Int alpha, Int beta) -> UnitBezout;

/// All ordered (p, q) with p*q = n, sorted by p. Trial division.
auto divisor_pairs(Int n) -> std::vector<std::pair<Int, Int>>;

struct CoprimePair {
    Int x;
    Int y;

    auto operator<=>(const CoprimePair &) const = default;
};

/// Streams every (x, y) with 0 < y < x <= limit and gcd(x, y) = 1 exactly once,
/// in Stern-Brocot in-order, i.e. by increasing fraction y/x.
class CoprimePairStream {
public:
    explicit CoprimePairStream(Int limit);

    auto next() -> std::optional<CoprimePair>;

private:
    // Interval (ln/ld, rn/rd) whose mediant is the node.
    struct Node {
        Int ln, ld, rn, rd;
    };

    auto valid(const Node & node) const -> bool { return node.ld + node.rd <= _limit; }

    Int _limit;
    std::optional<Node> _cursor;
    std::vector<Node> _stack;
};

auto coprime_pairs(Int limit) -> std::vector<CoprimePair>;

/// |{ i in [c*x] : ceil(i*y/x) mod (c*y) = j }|, closed form
/// floor(j*x/y) - floor((j-1)*x/y). Requires gcd(x,y) = 1, 0 < y < x, j in [c*y].
auto ceil_count(Int x, Int y, Int c, Int j) -> Int;

/// Sum of ceil_count over the window of a = d*y residues ending at l (mod m).
/// Always equals b = d*x. Requires additionally 0 < d < c.
auto window_count(Int x, Int y, Int d, Int c, Int l) -> Int;

} // namespace kcb::numth
