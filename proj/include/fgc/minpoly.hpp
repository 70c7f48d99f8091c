#pragma once

#include <string>
#include <variant>
#include <vector>

#include "fgc/exact.hpp"

namespace fgc {

enum class RootSign { plus, minus }; // plus selects (-l + sqrt(D)) / (2k)

/// A quadratic irrational given by its primitive minimal polynomial
/// k x^2 + l x + m = 0 (k > 0, gcd(k,l,m) = 1) plus the selected root.
struct QuadraticIrrational {
    Int k, l, m;
    RootSign root_sign;
    QuadExt value;

    bool operator==(const QuadraticIrrational& o) const {
        return k == o.k && l == o.l && m == o.m && root_sign == o.root_sign;
    }
};

/// Classification of a rotation parameter.
struct DeclaredNonQuadratic {
    std::string label;
    bool operator==(const DeclaredNonQuadratic& o) const { return label == o.label; }
};
using ThetaClass = std::variant<Rational, QuadraticIrrational, DeclaredNonQuadratic>;

/// Parse the expression grammar: signed integers, `/ * + -`,
/// sqrt(<integer >= 2>), parentheses; whitespace insignificant.
QuadExt parse_expr(const std::string& text);

/// Primitive minimal polynomial of a genuinely irrational value.
QuadraticIrrational minimal_polynomial(const QuadExt& x);

/// l^2 - 4km.
Int discriminant(const QuadraticIrrational& q);

struct CfExpansion {
    std::vector<Int> preperiod;
    std::vector<Int> period;
};

/// Eventually periodic continued fraction via the (P + sqrt(D))/Q recurrence;
/// the reported period is minimal.
CfExpansion cf_expansion(const QuadraticIrrational& q);

/// Convergents h_i/k_i of a digit stream (preperiod followed by `rounds`
/// copies of the period).
std::vector<std::pair<Int, Int>> cf_convergents(const CfExpansion& cf, int rounds);

/// Expressions classify as Rational or Quadratic; `nonquadratic:<label>` is
/// an explicit, unverified user assertion.
ThetaClass classify(const std::string& input);

} // namespace fgc
