#include "fgc/exact.hpp"

#include <cmath>
#include <sstream>

namespace fgc {

Int isqrt(const Int& n) {
    if (n < 0) throw Error("isqrt of negative integer");
    return boost::multiprecision::sqrt(n);
}

bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    Int r = isqrt(n);
    return r * r == n;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    Int p = num(r), q = den(r);
    if (!is_perfect_square(p) || !is_perfect_square(q)) return std::nullopt;
    return Rational(isqrt(p), isqrt(q));
}

std::vector<std::pair<Int, int>> factorize(Int n, const Int& bound) {
    if (n <= 0) throw Error("factorize expects a positive integer");
    std::vector<std::pair<Int, int>> out;
    auto push = [&](const Int& p, int e) { if (e > 0) out.emplace_back(p, e); };
    int e2 = 0;
    while (n % 2 == 0) { n /= 2; ++e2; }
    push(2, e2);
    for (Int p = 3; p <= bound && p * p <= n; p += 2) {
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        push(p, e);
    }
    if (n > 1) {
        // cofactor has no prime factor <= bound; prime iff below bound^2
        if (n > bound * bound)
            throw InvalidRadicand("cannot certify squarefree part: cofactor " + n.str() +
                                  " exceeds factoring bound");
        push(n, 1);
    }
    return out;
}

QuadExt QuadExt::make(const Rational& a, const Rational& b, const Int& d) {
    if (d <= 0) throw InvalidRadicand("radicand must be positive, got " + d.str());
    QuadExt x;
    if (b == 0 || d == 1) {
        x.a_ = d == 1 ? Rational(a + b) : a;
        x.b_ = 0;
        x.d_ = 1;
        return x;
    }
    x.a_ = a;
    // strip square factors of d into b
    Int sq = 1, core = 1;
    if (is_perfect_square(d)) {
        sq = isqrt(d);
    } else {
        for (const auto& [p, e] : factorize(d)) {
            for (int i = 0; i + 1 < e; i += 2) sq *= p;
            if (e % 2) core *= p;
        }
    }
    Rational nb = b * sq;
    if (core == 1) {
        x.a_ = a + nb;
        x.b_ = 0;
        x.d_ = 1;
    } else {
        x.b_ = nb;
        x.d_ = core;
    }
    return x;
}

QuadExt QuadExt::operator-() const {
    QuadExt r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

namespace {
// common radicand of two canonical values, or throw
Int join_d(const QuadExt& x, const QuadExt& y) {
    if (x.is_rational()) return y.d();
    if (y.is_rational()) return x.d();
    if (x.d() != y.d())
        throw MixedField("mixed radicands " + x.d().str() + " and " + y.d().str());
    return x.d();
}
} // namespace

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    Int d = join_d(x, y);
    return QuadExt::make(x.a() + y.a(), x.b() + y.b(), d);
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    Int d = join_d(x, y);
    return QuadExt::make(x.a() - y.a(), x.b() - y.b(), d);
}

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    Int d = join_d(x, y);
    Rational a = x.a() * y.a() + x.b() * y.b() * Rational(d);
    Rational b = x.a() * y.b() + x.b() * y.a();
    return QuadExt::make(a, b, d);
}

QuadExt operator/(const QuadExt& x, const QuadExt& y) {
    if (y.is_zero()) throw DivByZero("division by zero");
    Int d = join_d(x, y);
    Rational n = field_norm(y); // nonzero: d squarefree > 1 forbids a^2 = b^2 d
    QuadExt conj = field_conj(y);
    QuadExt prod = x * conj;
    return QuadExt::make(prod.a() / n, prod.b() / n, d);
}

QuadExt QuadExt::pow(long n) const {
    QuadExt base = *this;
    if (n < 0) {
        base = QuadExt(Rational(1)) / base;
        n = -n;
    }
    QuadExt acc{Rational(1)};
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

namespace {
int sgn(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }
int sgn(const Int& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

// sign of A + B*sqrt(m), m >= 1 (m need not be squarefree)
int sign1(const Rational& A, const Rational& B, const Int& m) {
    int sa = sgn(A), sb = sgn(B);
    if (sb == 0 || m == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: |A| vs |B|sqrt(m)
    return sa * sgn(A * A - B * B * Rational(m));
}

// sign of B1*sqrt(m1) + B2*sqrt(m2)
int sign2(const Rational& B1, const Int& m1, const Rational& B2, const Int& m2) {
    int s1 = sgn(B1), s2 = sgn(B2);
    if (s1 == 0) return s2;
    if (s2 == 0) return s1;
    if (s1 == s2) return s1;
    return s1 * sgn(B1 * B1 * Rational(m1) - B2 * B2 * Rational(m2));
}
} // namespace

int sign_of(const QuadExt& x) { return sign1(x.a(), x.b(), x.d()); }

int compare(const QuadExt& x, const QuadExt& y) {
    if (x.is_rational() || y.is_rational() || x.d() == y.d()) {
        // single common surd
        Int d = x.is_rational() ? y.d() : x.d();
        return sign1(x.a() - y.a(), x.b() - y.b(), d);
    }
    // x - y = A + b1*sqrt(d1) - b2*sqrt(d2), distinct squarefree d1, d2
    Rational A = x.a() - y.a();
    int sL = sign2(x.b(), x.d(), -y.b(), y.d());
    int sA = sgn(A);
    if (sA == 0) return sL;
    if (sL == 0) return sA;
    if (sA == sL) return sA;
    // A and the surd part L have opposite signs; compare A^2 with
    // L^2 = b1^2 d1 + b2^2 d2 - 2 b1 b2 sqrt(d1 d2)
    Rational C = A * A - x.b() * x.b() * Rational(x.d()) - y.b() * y.b() * Rational(y.d());
    Rational E = 2 * x.b() * y.b();
    return sA * sign1(C, E, x.d() * y.d());
}

Rational field_norm(const QuadExt& x) {
    return x.a() * x.a() - x.b() * x.b() * Rational(x.d());
}

QuadExt field_conj(const QuadExt& x) {
    return QuadExt::make(x.a(), -x.b(), x.d());
}

namespace {
std::string rat_str(const Rational& r) {
    std::ostringstream os;
    os << num(r);
    if (den(r) != 1) os << "/" << den(r);
    return os.str();
}
} // namespace

// Parseable by the expression grammar, so emitted values round-trip.
std::string QuadExt::str() const {
    if (is_rational()) {
        if (a_ < 0) return "(" + rat_str(a_) + ")";
        return rat_str(a_);
    }
    std::string s;
    if (a_ != 0) s += "(" + rat_str(a_) + ")+";
    s += "(" + rat_str(b_) + ")*sqrt(" + d_.str() + ")";
    return s;
}

double QuadExt::approx() const {
    double av = a_.convert_to<double>();
    double bv = b_.convert_to<double>();
    return av + bv * std::sqrt(d_.convert_to<double>());
}

} // namespace fgc
