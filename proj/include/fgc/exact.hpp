#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

#include "fgc/errors.hpp"

namespace fgc {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Floor of the square root of a nonnegative integer.
Int isqrt(const Int& n);

bool is_perfect_square(const Int& n);

/// sqrt of a rational if it is an exact square of a rational.
std::optional<Rational> rational_sqrt(const Rational& r);

/// Trial-division factorization, smallest primes first.  Intended for the
/// small integers this library meets (radicands, denominators, lattice
/// coefficients).  Throws InvalidRadicand if a cofactor beyond `bound`^2
/// cannot be certified prime.
std::vector<std::pair<Int, int>> factorize(Int n, const Int& bound = Int(1000000));

/// Exact element a + b*sqrt(d) of a real quadratic field, rational when b = 0.
///
/// Canonical form: d squarefree, d > 1 unless b = 0 in which case d = 1.
/// Two values are equal iff their fields are equal, so operator== is
/// structural equality.
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), d_(1) {}
    QuadExt(const Rational& r) : a_(r), b_(0), d_(1) {}
    QuadExt(long r) : a_(r), b_(0), d_(1) {}

    /// Canonicalizing constructor: absorbs square factors of d into b,
    /// collapses d to 1 when b = 0.  Requires d >= 1.
    static QuadExt make(const Rational& a, const Rational& b, const Int& d);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Int& d() const { return d_; }

    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y);
    QuadExt operator-() const;

    bool operator==(const QuadExt& o) const {
        return a_ == o.a_ && b_ == o.b_ && d_ == o.d_;
    }
    bool operator!=(const QuadExt& o) const { return !(*this == o); }

    /// Integer exponent, negative n via exact inversion.
    QuadExt pow(long n) const;

    std::string str() const;
    double approx() const;

private:
    Rational a_, b_;
    Int d_;
};

/// Exact sign of x, using only integer arithmetic.
int sign_of(const QuadExt& x);

/// Exact three-way comparison of x and y; cross-field comparison is decided
/// by sign analysis and repeated squaring, never floating point.
/// Returns -1, 0, or +1.
int compare(const QuadExt& x, const QuadExt& y);

inline bool operator<(const QuadExt& x, const QuadExt& y) { return compare(x, y) < 0; }
inline bool operator>(const QuadExt& x, const QuadExt& y) { return compare(x, y) > 0; }
inline bool operator<=(const QuadExt& x, const QuadExt& y) { return compare(x, y) <= 0; }
inline bool operator>=(const QuadExt& x, const QuadExt& y) { return compare(x, y) >= 0; }

/// Field norm a^2 - b^2 d; multiplicative.
Rational field_norm(const QuadExt& x);

/// Field conjugate a - b*sqrt(d).
QuadExt field_conj(const QuadExt& x);

} // namespace fgc
