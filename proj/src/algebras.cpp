#include "fgc/algebras.hpp"

#include <algorithm>

#include "fgc/pell.hpp"

namespace fgc {

namespace {

void validate(const Algebra& a) {
    if (auto* r = std::get_if<IrrationalRotation>(&a.v)) {
        if (std::holds_alternative<Rational>(r->theta))
            throw Error("rotation parameter must be irrational");
    } else if (auto* f = std::get_if<ReducedFreeGroup>(&a.v)) {
        if (f->n < 2) throw Error("free group rank must be >= 2");
    } else if (auto* p = std::get_if<FreeProduct>(&a.v)) {
        if ((p->n - 1) * (p->m - 1) < 2)
            throw Error("free product needs (n-1)(m-1) >= 2");
    } else if (auto* t = std::get_if<TensorWithFreeGroup>(&a.v)) {
        if (t->n < 2) throw Error("free group rank must be >= 2");
    } else if (auto* af = std::get_if<AF>(&a.v)) {
        if (auto* z = std::get_if<LocalizationOfZ>(&af->ring)) {
            if (z->n < 2) throw Error("Z[1/n] needs n >= 2");
        } else if (auto* q = std::get_if<QuadraticOrder>(&af->ring)) {
            check_discriminant(q->D);
        }
    }
}

Int lcm_int(int a, int b) { return boost::multiprecision::lcm(Int(a), Int(b)); }

std::string theta_str(const ThetaClass& t) {
    if (auto* r = std::get_if<Rational>(&t)) return QuadExt(*r).str();
    if (auto* q = std::get_if<QuadraticIrrational>(&t)) return q->value.str();
    return "nonquadratic:" + std::get<DeclaredNonQuadratic>(t).label;
}

std::string ring_dsl(const RingDescriptor& r) {
    if (auto* z = std::get_if<LocalizationOfZ>(&r)) return "zinv(" + z->n.str() + ")";
    if (auto* q = std::get_if<QuadraticOrder>(&r)) return "quadorder(" + q->D.str() + ")";
    if (std::holds_alternative<FullRationals>(r)) return "rationals";
    return "integers";
}

// product of two presented subgroups of R_{>0}, simplified when the result
// has one of the closed forms
FundamentalGroupValue combine_groups(const FundamentalGroupValue& x,
                                     const FundamentalGroupValue& y) {
    FundamentalGroupValue out;
    out.assumed_flags = x.assumed_flags;
    out.assumed_flags.insert(y.assumed_flags.begin(), y.assumed_flags.end());

    if (std::holds_alternative<Trivial>(x.v)) { out.v = y.v; return out; }
    if (std::holds_alternative<Trivial>(y.v)) { out.v = x.v; return out; }

    auto* px = std::get_if<FreeAbelianOnPrimes>(&x.v);
    auto* py = std::get_if<FreeAbelianOnPrimes>(&y.v);
    bool qx = std::holds_alternative<PositiveRationals>(x.v);
    bool qy = std::holds_alternative<PositiveRationals>(y.v);
    if ((qx && (qy || py)) || (qy && px)) { out.v = PositiveRationals{}; return out; }
    if (px && py) {
        std::vector<Int> ps = px->primes;
        for (const Int& p : py->primes)
            if (std::find(ps.begin(), ps.end(), p) == ps.end()) ps.push_back(p);
        std::sort(ps.begin(), ps.end());
        out.v = FreeAbelianOnPrimes{std::move(ps)};
        return out;
    }

    auto* cx = std::get_if<InfiniteCyclic>(&x.v);
    auto* cy = std::get_if<InfiniteCyclic>(&y.v);
    if (cx && cy && cx->generator.d() == cy->generator.d()) {
        // both generators are powers of the fundamental unit of the field
        Int d = cx->generator.d();
        Int dK = (d % 4 == 1) ? d : 4 * d;
        QuadExt epsK = solve_pell4(dK).epsilon0;
        auto nx = cyclic_log(epsK, cx->generator);
        auto ny = cyclic_log(epsK, cy->generator);
        if (!nx || !ny)
            throw InternalInvariant("order unit is not a power of the field's fundamental unit");
        long g = static_cast<long>(boost::multiprecision::gcd(Int(*nx), Int(*ny)).convert_to<long>());
        out.v = InfiniteCyclic{epsK.pow(g)};
        return out;
    }

    // no closed form claimed; keep the factors
    std::vector<FundamentalGroupValue> factors;
    auto push = [&](const FundamentalGroupValue& f) {
        if (auto* lb = std::get_if<LowerBoundOnly>(&f.v))
            for (const auto& g : lb->factors) factors.push_back(g);
        else
            factors.push_back(FundamentalGroupValue{f.v, {}});
    };
    push(x);
    push(y);
    out.v = LowerBoundOnly{std::move(factors)};
    return out;
}

const char* kRotationProvenance =
    "rotation algebra: trace image of K0 is Z + Z*theta; the fundamental group is "
    "IM+(Z + Z*theta), the positive unit group of the order of discriminant D_theta, "
    "generated by (t + u*sqrt(D))/2 from the minimal solution of t^2 - D u^2 = +-4";
const char* kOrderIsoHypothesis =
    "uses: the trace induces an order isomorphism on K0 (real-rank-zero classification)";
const char* kUhfProvenance =
    "UHF algebra: trace image of K0 is the supernatural localization of Z; the "
    "fundamental group is free abelian on the primes with infinite exponent";
const char* kRankOneProvenance =
    "K0 has torsion-free rank one, so the trace image is cyclic and the fundamental "
    "group is trivial";
const char* kAfProvenance =
    "AF algebra with K0 = (R, R+, 1): the fundamental group is the positive unit group of R";
const char* kTensorFgProvenance =
    "tensoring with a reduced free-group algebra preserves the trace image of K0, "
    "hence the fundamental group";
const char* kTensorMinProvenance =
    "minimal tensor product: F(A)F(B) is contained in F(A (x) B); only the lower "
    "bound is claimed";

} // namespace

AlgebraPtr make_algebra(Algebra a) {
    validate(a);
    return std::make_shared<const Algebra>(std::move(a));
}

std::string algebra_str(const Algebra& a) {
    if (auto* r = std::get_if<IrrationalRotation>(&a.v))
        return "rotation(" + theta_str(r->theta) + ")";
    if (auto* u = std::get_if<UHF>(&a.v)) return "uhf(" + u->m.str() + ")";
    if (auto* f = std::get_if<ReducedFreeGroup>(&a.v))
        return "freegroup(" + std::to_string(f->n) + ")";
    if (auto* p = std::get_if<FreeProduct>(&a.v))
        return "freeprod(" + std::to_string(p->n) + "," + std::to_string(p->m) + ")";
    if (auto* af = std::get_if<AF>(&a.v)) return "af(" + ring_dsl(af->ring) + ")";
    if (auto* t = std::get_if<TensorWithFreeGroup>(&a.v))
        return "tensor_fg(" + algebra_str(*t->inner) + "," + std::to_string(t->n) + ")";
    const auto& t = std::get<TensorMin>(a.v);
    return "tensor(" + algebra_str(*t.left) + "," + algebra_str(*t.right) + ")";
}

TraceGroup trace_k0(const Algebra& a) {
    validate(a);
    if (auto* r = std::get_if<IrrationalRotation>(&a.v)) {
        if (auto* q = std::get_if<QuadraticIrrational>(&r->theta))
            return QuadraticLattice{*q};
        throw NoTraceGroupRule(
            "a declared non-quadratic rotation parameter has no computable lattice");
    }
    if (auto* u = std::get_if<UHF>(&a.v)) return SupernaturalModule{u->m};
    if (std::holds_alternative<ReducedFreeGroup>(a.v)) return make_rational_lattice(1);
    if (auto* p = std::get_if<FreeProduct>(&a.v))
        return make_rational_lattice(lcm_int(p->n, p->m));
    if (auto* af = std::get_if<AF>(&a.v)) return RingByDescriptor{af->ring};
    if (auto* t = std::get_if<TensorWithFreeGroup>(&a.v)) return trace_k0(*t->inner);
    throw NoTraceGroupRule("no trace-group rule for a minimal tensor product");
}

FgResult fundamental_group(const Algebra& a) {
    validate(a);
    FgResult res;

    if (auto* r = std::get_if<IrrationalRotation>(&a.v)) {
        if (auto* q = std::get_if<QuadraticIrrational>(&r->theta)) {
            TraceGroup e = QuadraticLattice{*q};
            res.group = inner_multiplier_group(e);
            res.trace_group = e;
            res.provenance = {kRotationProvenance, kOrderIsoHypothesis};
        } else {
            res.group.v = Trivial{};
            res.group.assumed_flags.insert("declared-non-quadratic");
            res.provenance = {
                "rotation algebra with non-quadratic parameter: Z + Z*theta meets its "
                "own inverses only at 1, so the fundamental group is trivial",
                "assumes the declared classification of theta; not verified here"};
        }
        return res;
    }
    if (auto* u = std::get_if<UHF>(&a.v)) {
        TraceGroup e = SupernaturalModule{u->m};
        res.group = inner_multiplier_group(e);
        res.trace_group = e;
        res.provenance = {kUhfProvenance};
        return res;
    }
    if (std::holds_alternative<ReducedFreeGroup>(a.v) ||
        std::holds_alternative<FreeProduct>(a.v)) {
        res.group.v = Trivial{};
        res.trace_group = trace_k0(a);
        res.provenance = {kRankOneProvenance};
        return res;
    }
    if (auto* af = std::get_if<AF>(&a.v)) {
        res.group = units_positive(af->ring);
        res.trace_group = RingByDescriptor{af->ring};
        res.provenance = {kAfProvenance};
        return res;
    }
    if (auto* t = std::get_if<TensorWithFreeGroup>(&a.v)) {
        const Algebra& inner = *t->inner;
        bool covered = std::holds_alternative<IrrationalRotation>(inner.v) ||
                       std::holds_alternative<UHF>(inner.v) ||
                       std::holds_alternative<AF>(inner.v);
        if (!covered)
            throw UnsupportedComposition(
                "tensor with a free-group algebra is only supported over rotation, UHF, "
                "and AF algebras");
        res = fundamental_group(inner);
        res.provenance.push_back(kTensorFgProvenance);
        if (std::holds_alternative<AF>(inner.v))
            res.group.assumed_flags.insert("af-trace-separates-projections");
        return res;
    }

    const auto& t = std::get<TensorMin>(a.v);
    FgResult left = fundamental_group(*t.left);
    FgResult right = fundamental_group(*t.right);
    res.group = combine_groups(left.group, right.group);
    res.exactness = Exactness::LowerBound;
    res.provenance = {kTensorMinProvenance};
    return res;
}

bool check_torsion_free_rank_one(const Algebra& a) {
    TraceGroup e;
    try {
        e = trace_k0(a);
    } catch (const NoTraceGroupRule&) {
        throw NotApplicable("no trace group available");
    }
    if (!std::holds_alternative<RationalLattice>(e))
        throw NotApplicable("trace group is not a rank-one rational lattice");
    FgResult res = fundamental_group(a);
    if (!std::holds_alternative<Trivial>(res.group.v))
        throw InternalInvariant(
            "rank-one trace image must force a trivial fundamental group");
    return true;
}

} // namespace fgc
