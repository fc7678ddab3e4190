#include <kcb/error.hh>
#include <kcb/numth.hh>

#include <numeric>
#include <string>

namespace kcb::numth {

namespace {
    auto overflow(const char * op, Int lhs, Int rhs) -> Error
    {
        return Error(ErrorCode::Overflow, std::string(op) + "(" + std::to_string(lhs) + ", " + std::to_string(rhs) + ")");
    }

    void require_count_params(Int x, Int y, Int c)
    {
        if (y < 1 || x <= y || c < 1 || std::gcd(x, y) != 1)
            throw Error(ErrorCode::InvalidParams, "need 0 < y < x with gcd(x,y) = 1 and c >= 1, got x=" + std::to_string(x)
                    + " y=" + std::to_string(y) + " c=" + std::to_string(c));
    }
}

auto checked_add(Int lhs, Int rhs) -> Int
{
    Int out;
    if (__builtin_add_overflow(lhs, rhs, &out))
        throw overflow("add", lhs, rhs);
    return out;
}

auto checked_sub(Int lhs, Int rhs) -> Int
{
    Int out;
    if (__builtin_sub_overflow(lhs, rhs, &out))
        throw overflow("sub", lhs, rhs);
    return out;
}

auto checked_mul(Int lhs, Int rhs) -> Int
{
    Int out;
    if (__builtin_mul_overflow(lhs, rhs, &out))
        throw overflow("mul", lhs, rhs);
    return out;
}

auto floor_div(Int num, Int den) -> Int
{
    Int q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0)))
        --q;
    return q;
}

auto ceil_div(Int num, Int den) -> Int
{
    return -floor_div(-num, den);
}

auto mod(Int value, Int modulus) -> Int
{
    Int r = value % modulus;
    return r < 0 ? r + modulus : r;
}

auto extended_gcd(Int alpha, Int beta) -> BezoutSolution
{
    if (alpha < 1 || beta < 1)
        throw Error(ErrorCode::InvalidParams, "extended_gcd needs positive arguments, got "
                + std::to_string(alpha) + ", " + std::to_string(beta));

    Int r0 = alpha, r1 = beta;
    Int s0 = 1, s1 = 0;
    Int t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int s2 = s0 - q * s1;
        Int t2 = t0 - q * t1;
        r0 = r1, r1 = r2;
        s0 = s1, s1 = s2;
        t0 = t1, t1 = t2;
    }
    return {r0, s0, t0};
}

auto unit_bezout_positive(Int alpha, Int beta) -> UnitBezout
{
    if (alpha < 1 || beta < 1 || (alpha < 2 && beta < 2))
        throw Error(ErrorCode::InvalidParams, "unit_bezout_positive needs positive arguments, one of them >= 2");

    auto [g, phi, psi] = extended_gcd(alpha, beta);
    if (g != 1)
        throw Error(ErrorCode::NoSolution, "gcd(" + std::to_string(alpha) + ", " + std::to_string(beta)
                + ") = " + std::to_string(g));

    // alpha*phi + beta*psi = 1, so alpha*phi = 1 (mod beta); pick the representative in (0, beta].
    (void)psi;
    Int phi_pos = mod(phi, beta);
    if (phi_pos == 0)
        phi_pos = beta;
    Int psi_pos = (checked_mul(alpha, phi_pos) - 1) / beta;
    return {phi_pos, psi_pos};
}

auto divisor_pairs(Int n) -> std::vector<std::pair<Int, Int>>
{
    if (n < 1)
        throw Error(ErrorCode::InvalidParams, "divisor_pairs needs n >= 1, got " + std::to_string(n));

    std::vector<std::pair<Int, Int>> low, high;
    for (Int p = 1; p <= n / p; ++p) {
        if (n % p == 0) {
            low.emplace_back(p, n / p);
            if (p != n / p)
                high.emplace_back(n / p, p);
        }
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

CoprimePairStream::CoprimePairStream(Int limit) :
    _limit(limit),
    _cursor(Node{0, 1, 1, 1})
{
    if (limit < 1)
        throw Error(ErrorCode::InvalidParams, "coprime pair limit must be positive, got " + std::to_string(limit));
}

auto CoprimePairStream::next() -> std::optional<CoprimePair>
{
    while (_cursor && valid(*_cursor)) {
        _stack.push_back(*_cursor);
        const Node & n = *_cursor;
        _cursor = Node{n.ln, n.ld, n.ln + n.rn, n.ld + n.rd};
    }
    if (_stack.empty())
        return std::nullopt;

    Node node = _stack.back();
    _stack.pop_back();
    Int num = node.ln + node.rn, den = node.ld + node.rd;
    _cursor = Node{num, den, node.rn, node.rd};
    return CoprimePair{den, num};
}

auto coprime_pairs(Int limit) -> std::vector<CoprimePair>
{
    std::vector<CoprimePair> out;
    CoprimePairStream stream(limit);
    while (auto pair = stream.next())
        out.push_back(*pair);
    return out;
}

auto ceil_count(Int x, Int y, Int c, Int j) -> Int
{
    require_count_params(x, y, c);
    Int m = checked_mul(c, y);
    if (j < 0 || j >= m)
        throw Error(ErrorCode::InvalidParams, "residue j=" + std::to_string(j) + " outside [" + std::to_string(m) + "]");
    return floor_div(checked_mul(j, x), y) - floor_div(checked_mul(j - 1, x), y);
}

auto window_count(Int x, Int y, Int d, Int c, Int l) -> Int
{
    require_count_params(x, y, c);
    if (d < 1 || d >= c)
        throw Error(ErrorCode::InvalidParams, "need 0 < d < c, got d=" + std::to_string(d) + " c=" + std::to_string(c));
    Int m = checked_mul(c, y);
    if (l < 0 || l >= m)
        throw Error(ErrorCode::InvalidParams, "residue l=" + std::to_string(l) + " outside [" + std::to_string(m) + "]");

    Int a = checked_mul(d, y);
    Int total = 0;
    for (Int t = l - (a - 1); t <= l; ++t)
        total += ceil_count(x, y, c, mod(t, m));
    return total;
}

} // namespace kcb::numth
