#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fgc/pell.hpp"
#include "fgc/tracegroup.hpp"

using namespace fgc;

namespace {

QuadExt qe(long a, long b, long d) {
    return QuadExt::make(Rational(a), Rational(b), Int(d));
}

TraceGroup lattice_of(const QuadExt& theta) {
    return QuadraticLattice{minimal_polynomial(theta)};
}

SupernaturalNumber sn(std::vector<std::pair<long, long>> fs) {
    // exponent -1 encodes infinity
    std::vector<SupernaturalNumber::Factor> out;
    for (auto [p, e] : fs)
        out.push_back({Int(p), e < 0 ? std::nullopt : std::optional<Int>(Int(e))});
    return SupernaturalNumber::make(std::move(out));
}

} // namespace

TEST_CASE("supernatural numbers") {
    SupernaturalNumber m = sn({{3, 2}, {2, -1}});
    CHECK(m.str() == "2^inf*3^2");
    CHECK(m.infinite_primes() == std::vector<Int>{2});
    CHECK_THROWS_AS(sn({{4, 1}}), Error);
    CHECK_THROWS_AS(sn({{2, 1}, {2, 2}}), Error);
    CHECK_THROWS_AS(sn({{2, 0}}), Error);
}

TEST_CASE("rational lattice membership and scaling") {
    TraceGroup e = make_rational_lattice(Int(6));
    CHECK(contains(e, QuadExt(Rational(1, 6))));
    CHECK(contains(e, QuadExt(Rational(5, 3))));
    CHECK(!contains(e, QuadExt(Rational(1, 4))));
    CHECK(!contains(e, qe(0, 1, 2)));
    CHECK(scales(e, QuadExt(1)));
    CHECK(!scales(e, QuadExt(2)));
    CHECK(!scales(e, QuadExt(Rational(1, 2))));
    CHECK_THROWS_AS(scales(e, QuadExt(-1)), NotPositive);
    CHECK_THROWS_AS(make_rational_lattice(Int(0)), Error);
}

TEST_CASE("quadratic lattice coordinates") {
    QuadExt theta = qe(0, 1, 3);
    auto c = lattice_coords(theta, qe(2, 1, 3));
    REQUIRE(c.has_value());
    CHECK(c->first == 2);
    CHECK(c->second == 1);
    CHECK(!lattice_coords(theta, QuadExt::make(Rational(1, 2), Rational(0), Int(1))).has_value());
    CHECK(!lattice_coords(theta, QuadExt::make(Rational(0), Rational(1, 2), Int(3))).has_value());
    CHECK_THROWS_AS(lattice_coords(theta, qe(0, 1, 5)), MixedField);
    CHECK_THROWS_AS(lattice_coords(QuadExt(2), qe(0, 1, 5)), Error);
}

TEST_CASE("determinant scaling criterion on Z + Z sqrt(3)") {
    TraceGroup e = lattice_of(qe(0, 1, 3));
    // (2+sqrt3)*1 = 2 + sqrt3, (2+sqrt3)*sqrt3 = 3 + 2 sqrt3: det = 1
    CHECK(scales(e, qe(2, 1, 3)));
    CHECK(scales(e, qe(2, -1, 3))); // the inverse unit
    CHECK(scales(e, qe(7, 4, 3)));
    CHECK(!scales(e, QuadExt(2)));
    CHECK(!scales(e, qe(1, 1, 3)));  // norm -2, not a unit
    CHECK(!scales(e, qe(3, 1, 3)));  // in E but norm 6
    CHECK_THROWS_AS(scales(e, qe(0, 1, 5)), MixedField); // wrong field entirely
}

TEST_CASE("inner multiplier groups per shape") {
    CHECK(fg_equal(inner_multiplier_group(make_rational_lattice(Int(7))),
                   FundamentalGroupValue{Trivial{}, {}}));

    FundamentalGroupValue im3 = inner_multiplier_group(lattice_of(qe(0, 1, 3)));
    REQUIRE(std::holds_alternative<InfiniteCyclic>(im3.v));
    CHECK(std::get<InfiniteCyclic>(im3.v).generator == qe(2, 1, 3));

    FundamentalGroupValue gold = inner_multiplier_group(
        lattice_of(QuadExt::make(Rational(-1, 2), Rational(1, 2), Int(5))));
    REQUIRE(std::holds_alternative<InfiniteCyclic>(gold.v));
    CHECK(std::get<InfiniteCyclic>(gold.v).generator ==
          QuadExt::make(Rational(1, 2), Rational(1, 2), Int(5)));

    FundamentalGroupValue u = inner_multiplier_group(TraceGroup{SupernaturalModule{sn({{2, -1}, {3, 2}})}});
    REQUIRE(std::holds_alternative<FreeAbelianOnPrimes>(u.v));
    CHECK(std::get<FreeAbelianOnPrimes>(u.v).primes == std::vector<Int>{2});

    CHECK(fg_equal(inner_multiplier_group(TraceGroup{SupernaturalModule{sn({{5, 3}})}}),
                   FundamentalGroupValue{Trivial{}, {}}));

    FundamentalGroupValue rq = inner_multiplier_group(TraceGroup{RingByDescriptor{FullRationals{}}});
    CHECK(std::holds_alternative<PositiveRationals>(rq.v));

    FundamentalGroupValue rz = inner_multiplier_group(TraceGroup{RingByDescriptor{LocalizationOfZ{Int(6)}}});
    REQUIRE(std::holds_alternative<FreeAbelianOnPrimes>(rz.v));
    CHECK(std::get<FreeAbelianOnPrimes>(rz.v).primes == std::vector<Int>{Int(2), Int(3)});
}

TEST_CASE("IM consistency: determinant criterion equals double inclusion") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> coeff(-9, 9);
    const long rads[] = {2, 3, 5, 6, 7, 10};
    std::uniform_int_distribution<int> ri(0, 5);
    std::uniform_int_distribution<long> denom(1, 4);
    int done = 0;
    while (done < 500) {
        QuadExt theta = QuadExt::make(Rational(coeff(rng), denom(rng)),
                                      Rational(coeff(rng), denom(rng)), Int(rads[ri(rng)]));
        if (theta.is_rational()) continue;
        TraceGroup e = lattice_of(theta);
        QuadExt lambda = QuadExt::make(Rational(coeff(rng), denom(rng)),
                                       Rational(coeff(rng), denom(rng)), theta.d());
        if (sign_of(lambda) <= 0) continue;
        bool det = scales(e, lambda);
        QuadExt inv = QuadExt(1) / lambda;
        bool direct = contains(e, lambda) && contains(e, lambda * theta) &&
                      contains(e, inv) && contains(e, inv * theta);
        CAPTURE(theta.str());
        CAPTURE(lambda.str());
        CHECK(det == direct);
        ++done;
    }
}

TEST_CASE("IM members scale, sampled non-members do not") {
    TraceGroup e = lattice_of(qe(0, 1, 3));
    FundamentalGroupValue im = inner_multiplier_group(e);
    for (long n = -5; n <= 5; ++n) {
        QuadExt lambda = qe(2, 1, 3).pow(n);
        CHECK(fg_contains(im, lambda));
        CHECK(scales(e, lambda));
        CHECK(contains(e, lambda));
        CHECK(contains(e, QuadExt(1) / lambda));
    }
    // 100 positive elements of E that are not units: never scale
    std::mt19937_64 rng(71);
    std::uniform_int_distribution<long> coeff(-12, 12);
    int done = 0;
    while (done < 100) {
        QuadExt lambda = qe(coeff(rng), coeff(rng), 3);
        if (sign_of(lambda) <= 0) continue;
        Rational n = field_norm(lambda);
        if (n == 1 || n == -1) continue;
        CHECK(contains(e, lambda));
        CHECK(!scales(e, lambda));
        CHECK(!fg_contains(im, lambda));
        ++done;
    }
}

TEST_CASE("trace group is a module over its inner multipliers") {
    TraceGroup e = lattice_of(qe(0, 1, 3));
    QuadExt eps = qe(2, 1, 3);
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> coeff(-50, 50);
    for (int i = 0; i < 100; ++i) {
        QuadExt x = qe(coeff(rng), coeff(rng), 3);
        CHECK(contains(e, x));
        CHECK(contains(e, x * eps));
        CHECK(contains(e, x * eps.pow(-2)));
    }
}

TEST_CASE("ring generated by rational groups") {
    RingGenerated r = ring_generated_by_group({QuadExt(Rational(3, 2))});
    REQUIRE(r.ring.has_value());
    CHECK(*r.ring == RingDescriptor{LocalizationOfZ{Int(6)}});
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->is_rational());
    // 2 (or 3) alone is not a power of 3/2

    RingGenerated full = ring_generated_by_group({QuadExt(2), QuadExt(3)});
    REQUIRE(full.ring.has_value());
    CHECK(*full.ring == RingDescriptor{LocalizationOfZ{Int(6)}});
    CHECK(!full.witness.has_value()); // 2 and 3 generate all positive units

    RingGenerated one = ring_generated_by_group({QuadExt(1)});
    REQUIRE(one.ring.has_value());
    CHECK(*one.ring == RingDescriptor{Integers{}});
}

TEST_CASE("ring generated by sqrt(5): the key witness") {
    RingGenerated r = ring_generated_by_group({qe(0, 1, 5)});
    REQUIRE(r.ring.has_value());
    CHECK(*r.ring == RingDescriptor{QuadraticOrder{Int(20)}});
    REQUIRE(r.witness.has_value());
    // 1/eps0 = 1/(2+sqrt5) = sqrt5 - 2
    CHECK(*r.witness == qe(-2, 1, 5));
    // the witness is not a power of sqrt(5): |n| <= 50 exhaustively
    QuadExt g = qe(0, 1, 5);
    for (long n = -50; n <= 50; ++n) CHECK(g.pow(n) != *r.witness);
}

TEST_CASE("ring generated: unrepresentable cases") {
    CHECK(!ring_generated_by_group({qe(0, 1, 2), qe(0, 1, 3)}).ring.has_value());
    CHECK(!ring_generated_by_group({QuadExt(2), qe(0, 1, 5)}).ring.has_value());
    // 1/sqrt(5) is not an algebraic integer
    CHECK(!ring_generated_by_group({QuadExt::make(Rational(0), Rational(1, 5), Int(5))})
               .ring.has_value());
    CHECK_THROWS_AS(ring_generated_by_group({QuadExt(-2)}), NotPositive);
}

TEST_CASE("localization membership matches a denominator scan") {
    RingGenerated r = ring_generated_by_group({QuadExt(Rational(3, 2))});
    TraceGroup ring{RingByDescriptor{*r.ring}};
    for (long den = 1; den <= 100; ++den) {
        bool member = contains(ring, QuadExt(Rational(1, den)));
        long rest = den;
        while (rest % 2 == 0) rest /= 2;
        while (rest % 3 == 0) rest /= 3;
        CHECK(member == (rest == 1));
    }
}

TEST_CASE("cyclic log") {
    QuadExt g = qe(2, 1, 3);
    CHECK(cyclic_log(g, QuadExt(1)) == 0);
    CHECK(cyclic_log(g, g) == 1);
    CHECK(cyclic_log(g, g.pow(5)) == 5);
    CHECK(cyclic_log(g, g.pow(-3)) == -3);
    CHECK(!cyclic_log(g, QuadExt(2)).has_value());
    CHECK(!cyclic_log(g, qe(3, 1, 3)).has_value());
    CHECK(!cyclic_log(g, qe(0, 1, 5)).has_value());
    CHECK_THROWS_AS(cyclic_log(QuadExt(1), QuadExt(2)), Error);
}

TEST_CASE("presented-group membership") {
    FundamentalGroupValue triv{Trivial{}, {}};
    CHECK(fg_contains(triv, QuadExt(1)));
    CHECK(!fg_contains(triv, QuadExt(2)));

    FundamentalGroupValue cyc{InfiniteCyclic{qe(2, 1, 3)}, {}};
    CHECK(fg_contains(cyc, qe(7, 4, 3)));
    CHECK(!fg_contains(cyc, QuadExt(3)));

    FundamentalGroupValue fab{FreeAbelianOnPrimes{{Int(2), Int(5)}}, {}};
    CHECK(fg_contains(fab, QuadExt(Rational(4, 5))));
    CHECK(!fg_contains(fab, QuadExt(3)));
    CHECK(!fg_contains(fab, qe(0, 1, 2)));

    FundamentalGroupValue q{PositiveRationals{}, {}};
    CHECK(fg_contains(q, QuadExt(Rational(7, 11))));
    CHECK(!fg_contains(q, qe(0, 1, 2)));

    FundamentalGroupValue lb{LowerBoundOnly{{cyc, fab}}, {}};
    CHECK(fg_contains(lb, qe(7, 4, 3)));
    CHECK(fg_contains(lb, QuadExt(Rational(2, 5))));
    CHECK(fg_contains(lb, qe(4, 2, 3)));      // 2 * (2+sqrt3)
    CHECK(fg_contains(lb, qe(14, -8, 3)));    // 2 * (2+sqrt3)^{-2} * 4... check: 2*(7-4sqrt3)=14-8sqrt3
    CHECK(!fg_contains(lb, qe(3, 1, 3)));
    CHECK(!fg_contains(lb, QuadExt(7)));

    CHECK_THROWS_AS(fg_contains(triv, QuadExt(-1)), NotPositive);
}

TEST_CASE("group closure under products and inverses") {
    PellSolution s12 = solve_pell4(Int(12));
    PellSolution s5 = solve_pell4(Int(5));
    FundamentalGroupValue groups[] = {
        FundamentalGroupValue{InfiniteCyclic{s12.epsilon0}, {}},
        FundamentalGroupValue{InfiniteCyclic{s5.epsilon0}, {}},
        FundamentalGroupValue{FreeAbelianOnPrimes{{Int(2), Int(3)}}, {}},
        FundamentalGroupValue{PositiveRationals{}, {}},
    };
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> expo(-6, 6);
    std::uniform_int_distribution<int> gi(0, 3);
    auto sample = [&](const FundamentalGroupValue& f) -> QuadExt {
        if (auto* c = std::get_if<InfiniteCyclic>(&f.v)) return c->generator.pow(expo(rng));
        if (std::holds_alternative<FreeAbelianOnPrimes>(f.v))
            return QuadExt(Rational(2)).pow(expo(rng)) * QuadExt(Rational(3)).pow(expo(rng));
        long a = expo(rng) + 8, b = expo(rng) + 8;
        return QuadExt(Rational(a, b));
    };
    for (int i = 0; i < 200; ++i) {
        const FundamentalGroupValue& f = groups[gi(rng)];
        QuadExt x = sample(f), y = sample(f);
        CHECK(fg_contains(f, x * y));
        CHECK(fg_contains(f, QuadExt(1) / x));
        CHECK(fg_contains(f, QuadExt(1)));
    }
}

TEST_CASE("integer span membership") {
    CHECK(in_integer_span({{Int(2), Int(0)}, {Int(0), Int(3)}}, {Int(4), Int(-3)}));
    CHECK(!in_integer_span({{Int(2), Int(0)}, {Int(0), Int(3)}}, {Int(1), Int(0)}));
    CHECK(in_integer_span({{Int(1), Int(1)}, {Int(0), Int(2)}}, {Int(3), Int(1)}));
    CHECK(!in_integer_span({{Int(2), Int(2)}}, {Int(2), Int(0)}));
    CHECK(in_integer_span({}, {Int(0), Int(0)}));
    CHECK(!in_integer_span({}, {Int(1)}));
}

TEST_CASE("printing") {
    CHECK(tg_str(make_rational_lattice(Int(1))) == "Z");
    CHECK(tg_str(make_rational_lattice(Int(6))) == "(1/6)Z");
    CHECK(ring_str(LocalizationOfZ{Int(6)}) == "Z[1/6]");
    CHECK(fg_str(FundamentalGroupValue{Trivial{}, {}}) == "{1}");
    CHECK(fg_str(FundamentalGroupValue{FreeAbelianOnPrimes{{Int(2)}}, {}}) == "<2>");
}
