#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fgc/tracegroup.hpp"

namespace fgc {

struct Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

struct IrrationalRotation { ThetaClass theta; };        // A_theta
struct UHF { SupernaturalNumber m; };                   // M_m
struct ReducedFreeGroup { int n; };                     // C*_r(F_n), n >= 2
struct FreeProduct { int n, m; };                       // C*_r(Z/n * Z/m), (n-1)(m-1) >= 2
struct AF { RingDescriptor ring; };                     // simple AF algebra with K0 = (R, R_+, 1)
struct TensorWithFreeGroup { AlgebraPtr inner; int n; };
struct TensorMin { AlgebraPtr left, right; };

struct Algebra {
    std::variant<IrrationalRotation, UHF, ReducedFreeGroup, FreeProduct, AF,
                 TensorWithFreeGroup, TensorMin> v;
};

AlgebraPtr make_algebra(Algebra a);
std::string algebra_str(const Algebra& a);

enum class Exactness { Exact, LowerBound };

struct FgResult {
    FundamentalGroupValue group;
    Exactness exactness = Exactness::Exact;
    std::optional<TraceGroup> trace_group;
    std::vector<std::string> provenance;
};

/// The trace image of K0.  No rule exists for a minimal tensor product, and
/// a declared-non-quadratic rotation parameter has no computable lattice.
TraceGroup trace_k0(const Algebra& a);

FgResult fundamental_group(const Algebra& a);

/// For algebras whose trace group is a rank-one rational lattice the
/// fundamental group must be trivial; returns true after checking it.
bool check_torsion_free_rank_one(const Algebra& a);

} // namespace fgc
