#include <kcb/error.hh>
#include <kcb/params.hh>

#include <algorithm>
#include <numeric>
#include <string>

namespace kcb::params {

using numth::checked_add;
using numth::checked_mul;
using numth::checked_sub;

namespace {
    auto describe(const ParamSet & p) -> std::string
    {
        return "(n=" + std::to_string(p.n) + ", m=" + std::to_string(p.m) + ", a=" + std::to_string(p.a)
            + ", b=" + std::to_string(p.b) + ", c=" + std::to_string(p.c) + ", d=" + std::to_string(p.d)
            + ", x=" + std::to_string(p.x) + ", y=" + std::to_string(p.y) + ", p=" + std::to_string(p.p) + ")";
    }

    void require(bool holds, const char * identity, const ParamSet & p)
    {
        if (! holds)
            throw Error(ErrorCode::InvalidParams, std::string("identity ") + identity + " fails for " + describe(p));
    }

    // Fills the derived fields of a recipe output from (x, y, c, d).
    auto from_xycd(Int x, Int y, Int c, Int d) -> ParamSet
    {
        Int n = checked_mul(x, c), m = checked_mul(y, c);
        return ParamSet{n, m, n - m, checked_mul(y, d), checked_mul(x, d), c, d, x, y, c - d};
    }

    // Accumulates recipe outputs, insisting each one round-trips.
    class Collector {
    public:
        void add(const ParamSet & candidate)
        {
            if (candidate.m <= 1 || candidate.n <= candidate.m)
                return;
            auto derived = derive_params(candidate.n, candidate.m);
            if (derived != candidate)
                throw Error(ErrorCode::InvalidParams, "recipe produced " + describe(candidate) + " but derivation gives "
                        + describe(derived));
            _out.push_back(derived);
        }

        auto finish() && -> std::vector<ParamSet>
        {
            std::sort(_out.begin(), _out.end(), [](const ParamSet & l, const ParamSet & r) {
                return std::pair{l.n, l.m} < std::pair{r.n, r.m};
            });
            _out.erase(std::unique(_out.begin(), _out.end()), _out.end());
            return std::move(_out);
        }

    private:
        std::vector<ParamSet> _out;
    };
}

void validate(const ParamSet & p)
{
    using std::gcd;
    require(1 < p.m && p.m < p.n, "1 < m < n", p);
    require(p.k == p.n - p.m, "k = n-m", p);
    require(p.b == p.n - p.m + 1, "b = n-m+1", p);
    require(checked_mul(p.a, p.n) == checked_mul(p.m, p.b), "a*n = b*m", p);
    require(p.c == gcd(p.n, p.m), "c = gcd(n,m)", p);
    require(p.d == gcd(p.a, p.b), "d = gcd(a,b)", p);
    require(p.n == checked_mul(p.x, p.c) && p.m == checked_mul(p.y, p.c), "n = xc, m = yc", p);
    require(p.a == checked_mul(p.y, p.d) && p.b == checked_mul(p.x, p.d), "a = yd, b = xd", p);
    require(gcd(p.x, p.y) == 1, "gcd(x,y) = 1", p);
    require(checked_mul(p.d, p.x) == checked_mul(p.c, p.x - p.y) + 1, "d*x = c(x-y) + 1", p);
    require(p.p == p.c - p.d, "p = c-d", p);
    require(checked_mul(p.p, p.x) == p.m - 1, "p = (m-1)/x", p);
    require(checked_mul(p.p, p.x - p.y) == p.a - 1, "p = (a-1)/(x-y)", p);
    require(checked_mul(p.p, p.y) == p.m - p.a, "p = (m-a)/y", p);
    require(p.p > 0 && p.c > p.d && p.d > 0 && p.c > p.p, "p > 0, c > d > 0, c > p", p);
    require(p.x > p.y && p.y > 0 && p.n > p.m && p.m > 2 && p.b > p.a && p.a > 1, "x > y > 0, n > m > 2, b > a > 1", p);
    require(p.n - p.x >= p.b && p.m - p.y >= p.a, "n-x >= b, m-y >= a", p);
    require(p.n - p.c >= p.m && p.m >= p.c && p.b - p.d >= p.a && p.a >= p.d, "n-c >= m >= c, b-d >= a >= d", p);
    require(gcd(p.c, p.d) == 1 && gcd(p.c, p.x) == 1 && gcd(p.x, p.x - p.y) == 1, "(c,d), (c,x), (x,x-y) coprime", p);
}

auto try_derive_params(Int n, Int m) -> std::optional<ParamSet>
{
    if (! (1 < m && m < n))
        throw Error(ErrorCode::InvalidParams, "need n > m > 1, got n=" + std::to_string(n) + " m=" + std::to_string(m));

    Int b = n - m + 1;
    Int mb = checked_mul(m, b);
    if (mb % n != 0)
        return std::nullopt;

    Int a = mb / n;
    Int c = std::gcd(n, m), d = std::gcd(a, b);
    ParamSet out{n, m, n - m, a, b, c, d, n / c, m / c, c - d};
    validate(out);
    return out;
}

auto derive_params(Int n, Int m) -> ParamSet
{
    auto out = try_derive_params(n, m);
    if (! out)
        throw Error(ErrorCode::NotBiregular, "m(n-m+1)/n is not an integer for n=" + std::to_string(n)
                + " m=" + std::to_string(m));
    return *out;
}

auto enumerate_from_xy(Int x, Int y, Int l_max) -> std::vector<ParamSet>
{
    if (y < 1 || x <= y || std::gcd(x, y) != 1)
        throw Error(ErrorCode::InvalidParams, "need 0 < y < x, gcd(x,y) = 1");
    if (l_max < 0)
        throw Error(ErrorCode::InvalidParams, "l_max must be non-negative");

    // d*x - c*(x-y) = 1, least positive (d0, c0).
    auto [d0, c0] = numth::unit_bezout_positive(x, x - y);
    Collector out;
    for (Int l = 0; l <= l_max; ++l)
        out.add(from_xycd(x, y, checked_add(c0, checked_mul(l, x)), checked_add(d0, checked_mul(l, x - y))));
    return std::move(out).finish();
}

auto enumerate_from_cd(Int c, Int d, Int l_max) -> std::vector<ParamSet>
{
    if (d < 1 || c <= d || std::gcd(c, d) != 1)
        throw Error(ErrorCode::InvalidParams, "need 0 < d < c, gcd(c,d) = 1");
    if (l_max < 0)
        throw Error(ErrorCode::InvalidParams, "l_max must be non-negative");

    // d*x - c*z = 1 with x, z > 0; z = 0 only in the degenerate x = 1, d = 1 case.
    auto [x0, z0] = numth::unit_bezout_positive(d, c);
    if (z0 == 0)
        x0 += c, z0 += d;

    Collector out;
    for (Int l = 0; l <= l_max; ++l) {
        Int x = checked_add(x0, checked_mul(l, c));
        Int z = checked_add(z0, checked_mul(l, d));
        out.add(from_xycd(x, x - z, c, d));
    }
    return std::move(out).finish();
}

auto enumerate_from_m(Int m) -> std::vector<ParamSet>
{
    if (m < 3)
        throw Error(ErrorCode::InvalidParams, "enumerate_from_m needs m >= 3");

    Collector out;
    for (auto [c, y] : numth::divisor_pairs(m)) {
        if (c < 2)
            continue;
        for (auto [p, x] : numth::divisor_pairs(m - 1))
            if (c > p && x > y)
                out.add(from_xycd(x, y, c, c - p));
    }
    return std::move(out).finish();
}

auto enumerate_from_a(Int a) -> std::vector<ParamSet>
{
    if (a < 2)
        throw Error(ErrorCode::InvalidParams, "enumerate_from_a needs a >= 2");

    Collector out;
    for (auto [d, y] : numth::divisor_pairs(a))
        for (auto [p, z] : numth::divisor_pairs(a - 1))
            out.add(from_xycd(checked_add(z, y), y, checked_add(d, p), d));
    return std::move(out).finish();
}

auto enumerate_from_b(Int b) -> std::vector<ParamSet>
{
    if (b < 3)
        throw Error(ErrorCode::InvalidParams, "enumerate_from_b needs b >= 3");

    Collector out;
    for (auto [d, x] : numth::divisor_pairs(b)) {
        if (x < 2)
            continue;
        for (auto [c, z] : numth::divisor_pairs(b - 1))
            if (c > d && z < x)
                out.add(from_xycd(x, x - z, c, d));
    }
    return std::move(out).finish();
}

auto enumerate_from_n(Int n) -> std::vector<ParamSet>
{
    if (n < 4)
        throw Error(ErrorCode::InvalidParams, "enumerate_from_n needs n >= 4");
    auto factorizations = numth::divisor_pairs(n);
    if (factorizations.size() == 2)
        throw Error(ErrorCode::InvalidParams, std::to_string(n) + " is prime");

    Collector out;
    for (auto [c, x] : factorizations) {
        if (c < 2 || x < 2 || std::gcd(c, x) != 1)
            continue;
        // d*x - z*c = 1 with 0 < d < c, 0 < z < x.
        auto [d, z] = numth::unit_bezout_positive(x, c);
        out.add(from_xycd(x, x - z, c, d));
    }
    return std::move(out).finish();
}

auto all_up_to(Int n_max) -> std::vector<ParamSet>
{
    std::vector<ParamSet> out;
    for (Int n = 3; n <= n_max; ++n)
        for (Int m = 2; m < n; ++m)
            if (auto p = try_derive_params(n, m))
                out.push_back(*p);
    return out;
}

auto n_plus_one_candidates(Int n_max) -> std::vector<NPlusOneCandidate>
{
    std::vector<NPlusOneCandidate> out;
    for (Int n = 4; n <= n_max; ++n) {
        for (auto [c, x] : numth::divisor_pairs(n)) {
            if (c < 2 || x < 2)
                continue;
            for (auto [y, z] : numth::divisor_pairs(n + 1)) {
                if (z < c + 1)
                    continue;
                Int d = z - c;
                Int m = checked_mul(c, y);
                Int a = checked_mul(d, y), b = checked_mul(d, x);
                out.push_back({n, m, c, x, y, z, d, a, b, b == checked_sub(n, m) + 1});
            }
        }
    }
    return out;
}

} // namespace kcb::params
