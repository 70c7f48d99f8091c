#include "fgc/pell.hpp"

#include <cmath>
#include <map>
#include <vector>

namespace fgc {

void check_discriminant(const Int& D) {
    if (D <= 0) throw InvalidDiscriminant("discriminant must be positive, got " + D.str());
    if (is_perfect_square(D))
        throw InvalidDiscriminant("discriminant must not be a perfect square, got " + D.str());
    Int r = D % 4;
    if (r == 2 || r == 3)
        throw NotADiscriminant("D = " + D.str() + " is " + r.str() +
                               " mod 4; l^2 - 4km is never 2 or 3 mod 4");
}

namespace {

Int fdiv(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

Int cf_floor(const Int& P, const Int& D, const Int& Q) {
    Int s = isqrt(D);
    if (Q > 0) return fdiv(P + s, Q);
    return fdiv(-P - s - 1, -Q);
}

PellSolution finish(const Int& D, const QuadExt& eps) {
    // eps = (t + u sqrt(D)) / 2 in the order of discriminant D
    Int f = isqrt(D / eps.d());
    if (f * f * eps.d() != D)
        throw InternalInvariant("unit lies outside the field of discriminant " + D.str());
    Rational tr = 2 * eps.a(), ur = 2 * eps.b() / Rational(f);
    if (den(tr) != 1 || den(ur) != 1)
        throw InternalInvariant("unit has non half-integral coordinates");
    PellSolution s;
    s.D = D;
    s.t = num(tr);
    s.u = num(ur);
    s.epsilon0 = eps;
    Int pell = s.t * s.t - D * s.u * s.u;
    if (pell == 4) s.sign = 4;
    else if (pell == -4) s.sign = -4;
    else throw InternalInvariant("candidate is not a unit: t^2 - D u^2 = " + pell.str());
    if (s.t <= 0 || s.u <= 0)
        throw InternalInvariant("fundamental unit > 1 must have t > 0 and u > 0");
    if ((s.t - D * s.u) % 2 != 0)
        throw InternalInvariant("unit is not in the order of discriminant " + D.str());
    if (!(eps > QuadExt(1)))
        throw InternalInvariant("fundamental unit must exceed 1");
    return s;
}

using u128 = unsigned __int128;

u128 isqrt_u128(u128 n) {
    if (n == 0) return 0;
    u128 x = static_cast<u128>(std::sqrt(static_cast<long double>(n)));
    while (x > 0 && x * x > n) --x;
    while ((x + 1) * (x + 1) <= n) ++x;
    return x;
}

} // namespace

PellSolution solve_pell4(const Int& D) {
    check_discriminant(D);
    Int P = D % 2, Q = 2; // omega_D = (sigma + sqrt(D)) / 2

    std::vector<Int> digits, Ps, Qs;
    std::map<std::pair<Int, Int>, std::size_t> seen;
    std::size_t start = 0;
    for (;;) {
        auto state = std::make_pair(P, Q);
        auto it = seen.find(state);
        if (it != seen.end()) { start = it->second; break; }
        seen[state] = digits.size();
        Ps.push_back(P);
        Qs.push_back(Q);
        Int a = cf_floor(P, D, Q);
        digits.push_back(a);
        P = a * Q - P;
        Q = (D - P * P) / Q;
    }

    // One period of the fractional-linear maps y -> a + 1/y fixes the reduced
    // tail x = (P_start + sqrt(D)) / Q_start; the denominator row of the
    // matrix product gives the unit gamma*x + delta with norm det = (-1)^len.
    Int m00 = 1, m01 = 0, m10 = 0, m11 = 1;
    for (std::size_t i = start; i < digits.size(); ++i) {
        const Int& a = digits[i];
        Int n00 = m00 * a + m01, n10 = m10 * a + m11;
        m01 = m00; m11 = m10;
        m00 = n00; m10 = n10;
    }
    QuadExt x = QuadExt::make(Rational(Ps[start], Qs[start]), Rational(1, Qs[start]), D);
    QuadExt eps = QuadExt(Rational(m10)) * x + QuadExt(Rational(m11));
    return finish(D, eps);
}

std::optional<PellSolution> brute_force_pell4(const Int& D, const Int& u_max) {
    check_discriminant(D);
    if (u_max < 1) throw Error("u_max must be >= 1");

    // largest u for which D u^2 + 4 safely fits unsigned __int128
    Int u_fast_i = isqrt((Int(1) << 120) / D);
    u128 Dsmall = D < (Int(1) << 64) ? static_cast<u128>(D.convert_to<std::uint64_t>()) : 0;

    auto found = [&](const Int& t, const Int& u) {
        QuadExt eps = QuadExt::make(Rational(t, 2), Rational(u, 2), D);
        return finish(D, eps);
    };

    for (Int u = 1; u <= u_max; ++u) {
        if (D < (Int(1) << 64) && u <= u_fast_i) {
            u128 uv = static_cast<u128>(u.convert_to<std::uint64_t>());
            u128 n = Dsmall * uv * uv;
            if (n >= 5) {
                u128 r = isqrt_u128(n - 4);
                if (r * r == n - 4) return found(Int(static_cast<std::uint64_t>(r)), u);
            }
            u128 r = isqrt_u128(n + 4);
            if (r * r == n + 4) return found(Int(static_cast<std::uint64_t>(r)), u);
        } else {
            Int n = D * u * u;
            if (is_perfect_square(n - 4)) return found(isqrt(n - 4), u);
            if (is_perfect_square(n + 4)) return found(isqrt(n + 4), u);
        }
    }
    return std::nullopt;
}

QuadExt unit_power(const PellSolution& s, long n) { return s.epsilon0.pow(n); }

} // namespace fgc
