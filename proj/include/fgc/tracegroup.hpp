#pragma once

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "fgc/exact.hpp"
#include "fgc/minpoly.hpp"

namespace fgc {

/// Formal product of prime powers with exponents in N or infinity
/// (nullopt encodes infinity).  Classifies UHF algebras.
struct SupernaturalNumber {
    struct Factor {
        Int prime;
        std::optional<Int> exponent; // nullopt = infinite
        bool operator==(const Factor& o) const { return prime == o.prime && exponent == o.exponent; }
    };
    std::vector<Factor> factors; // distinct primes, ascending, exponents >= 1

    static SupernaturalNumber make(std::vector<Factor> fs);
    std::vector<Int> infinite_primes() const;
    std::string str() const;
    bool operator==(const SupernaturalNumber& o) const { return factors == o.factors; }
};

// --- ring descriptors -------------------------------------------------------

struct LocalizationOfZ { Int n; bool operator==(const LocalizationOfZ&) const = default; }; // Z[1/n], n >= 2
struct QuadraticOrder { Int D; bool operator==(const QuadraticOrder&) const = default; };   // discriminant-D order
struct FullRationals { bool operator==(const FullRationals&) const = default; };
struct Integers { bool operator==(const Integers&) const = default; };                      // the degenerate ring Z

using RingDescriptor = std::variant<LocalizationOfZ, QuadraticOrder, FullRationals, Integers>;

std::string ring_str(const RingDescriptor& r);

// --- trace groups E = tau_*(K_0(A)) ----------------------------------------

struct RationalLattice { Rational step; };                  // (1/q) Z
struct QuadraticLattice { QuadraticIrrational theta; };     // Z + Z theta
struct SupernaturalModule { SupernaturalNumber m; };
struct RingByDescriptor { RingDescriptor ring; };

using TraceGroup = std::variant<RationalLattice, QuadraticLattice, SupernaturalModule, RingByDescriptor>;

TraceGroup make_rational_lattice(const Int& q); // validates q >= 1
std::string tg_str(const TraceGroup& e);

// --- symbolic presentations of multiplicative subgroups of R_{>0} ----------

struct FundamentalGroupValue;

struct Trivial { bool operator==(const Trivial&) const = default; };
struct InfiniteCyclic { QuadExt generator; bool operator==(const InfiniteCyclic&) const = default; };
struct FreeAbelianOnPrimes {
    std::vector<Int> primes; // sorted, nonempty
    bool operator==(const FreeAbelianOnPrimes&) const = default;
};
struct PositiveRationals { bool operator==(const PositiveRationals&) const = default; };
struct LowerBoundOnly { std::vector<FundamentalGroupValue> factors; };

struct FundamentalGroupValue {
    std::variant<Trivial, InfiniteCyclic, FreeAbelianOnPrimes, PositiveRationals, LowerBoundOnly> v;
    std::set<std::string> assumed_flags;
};

bool fg_equal(const FundamentalGroupValue& x, const FundamentalGroupValue& y);
std::string fg_str(const FundamentalGroupValue& f);

// --- operations -------------------------------------------------------------

/// Exact membership x in E.
bool contains(const TraceGroup& e, const QuadExt& x);

/// True iff lambda E = E and lambda, lambda^{-1} in E.  For Z + Z theta this
/// is the determinant-is-a-unit criterion on the coefficient matrix of
/// (lambda*1, lambda*theta) in the basis {1, theta}.
bool scales(const TraceGroup& e, const QuadExt& lambda);

/// Coordinates of x in the basis {1, theta}, if integral.
std::optional<std::pair<Int, Int>> lattice_coords(const QuadExt& theta, const QuadExt& x);

/// IM_+(E): the positive t with t, t^{-1} in E and tE = E.
FundamentalGroupValue inner_multiplier_group(const TraceGroup& e);

/// Positive unit group of a supported ring.
FundamentalGroupValue units_positive(const RingDescriptor& r);

struct RingGenerated {
    std::optional<RingDescriptor> ring;    // empty means unrepresentable
    std::optional<QuadExt> witness;        // positive unit of the ring not a power of any generator
    std::string note;
};

/// Smallest supported ring descriptor whose additive group contains the
/// multiplicative group generated by gens.  A witness, when present, shows
/// the ring's positive unit group strictly exceeds the generated group, so
/// the group cannot arise as IM_+(E).
RingGenerated ring_generated_by_group(const std::vector<QuadExt>& gens);

/// lambda = g^n for some integer n; requires g > 1.
std::optional<long> cyclic_log(const QuadExt& g, const QuadExt& lambda);

/// Membership of lambda in a presented group.  For LowerBoundOnly this
/// decides membership in the generated lower-bound subgroup.
bool fg_contains(const FundamentalGroupValue& f, const QuadExt& lambda);

/// Membership of target in the Z-span of the given integer vectors.
bool in_integer_span(std::vector<std::vector<Int>> vectors, std::vector<Int> target);

} // namespace fgc
