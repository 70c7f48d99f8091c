#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fgc/minpoly.hpp"

using namespace fgc;

namespace {
QuadExt qe(long a, long b, long d) {
    return QuadExt::make(Rational(a), Rational(b), Int(d));
}
} // namespace

TEST_CASE("expression parser") {
    CHECK(parse_expr("sqrt(3)") == qe(0, 1, 3));
    CHECK(parse_expr("(-1+sqrt(5))/2") == QuadExt::make(Rational(-1, 2), Rational(1, 2), Int(5)));
    CHECK(parse_expr("1/sqrt(5)") == QuadExt::make(Rational(0), Rational(1, 5), Int(5)));
    CHECK(parse_expr("2 + 3*sqrt(2) - sqrt(8)") == qe(2, 1, 2));
    CHECK(parse_expr(" -7/3 ") == QuadExt(Rational(-7, 3)));
    CHECK(parse_expr("sqrt(2)*sqrt(2)") == QuadExt(2));
    CHECK(parse_expr("(1+sqrt(5))/(1-sqrt(5))") ==
          QuadExt::make(Rational(-3, 2), Rational(-1, 2), Int(5)));

    CHECK_THROWS_AS(parse_expr("sqrt(-2)"), ParseError);
    CHECK_THROWS_AS(parse_expr("sqrt(1)"), ParseError);
    CHECK_THROWS_AS(parse_expr("sqrt(3/2)"), ParseError);
    CHECK_THROWS_AS(parse_expr("2 +"), ParseError);
    CHECK_THROWS_AS(parse_expr("2) "), ParseError);
    CHECK_THROWS_AS(parse_expr(""), ParseError);
    CHECK_THROWS_AS(parse_expr("1/(sqrt(4)-2)"), ParseError);

    try {
        parse_expr("1 + %");
    } catch (const ParseError& e) {
        CHECK(e.position == 4);
    }
}

TEST_CASE("minimal polynomial of known values") {
    QuadraticIrrational q = minimal_polynomial(qe(0, 1, 3));
    CHECK(q.k == 1);
    CHECK(q.l == 0);
    CHECK(q.m == -3);
    CHECK(q.root_sign == RootSign::plus);
    CHECK(discriminant(q) == 12);

    QuadraticIrrational g = minimal_polynomial(QuadExt::make(Rational(1, 2), Rational(1, 2), Int(5)));
    CHECK(g.k == 1);
    CHECK(g.l == -1);
    CHECK(g.m == -1);
    CHECK(discriminant(g) == 5);

    QuadraticIrrational inv5 = minimal_polynomial(QuadExt::make(Rational(0), Rational(1, 5), Int(5)));
    CHECK(inv5.k == 5);
    CHECK(inv5.l == 0);
    CHECK(inv5.m == -1);
    CHECK(discriminant(inv5) == 20);

    QuadraticIrrational neg = minimal_polynomial(qe(0, -1, 3));
    CHECK(neg.root_sign == RootSign::minus);
    CHECK(neg.k == 1);
    CHECK(neg.m == -3);

    CHECK_THROWS_AS(minimal_polynomial(QuadExt(Rational(3, 2))), NotIrrational);
}

TEST_CASE("minimal polynomial properties on random irrationals") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> coeff(-25, 25);
    std::uniform_int_distribution<long> denom(1, 10);
    const long rads[] = {2, 3, 5, 6, 7, 10, 13};
    std::uniform_int_distribution<int> ri(0, 6);
    int done = 0;
    while (done < 100) {
        Rational b(coeff(rng), denom(rng));
        if (b == 0) continue;
        QuadExt x = QuadExt::make(Rational(coeff(rng), denom(rng)), b, Int(rads[ri(rng)]));
        QuadraticIrrational q = minimal_polynomial(x);
        // substitution gives exactly zero
        QuadExt val = QuadExt(Rational(q.k)) * x * x + QuadExt(Rational(q.l)) * x +
                      QuadExt(Rational(q.m));
        CHECK(val.is_zero());
        CHECK(q.k > 0);
        CHECK(boost::multiprecision::gcd(boost::multiprecision::gcd(q.k, q.l), q.m) == 1);
        Int D = discriminant(q);
        CHECK(D > 0);
        Int mod = D % 4;
        CHECK((mod == 0 || mod == 1));
        // selected root matches
        CHECK((q.root_sign == RootSign::plus) == (x.b() > 0));
        // multiplying theta by an integer never changes the field, and the
        // discriminants differ by a square factor
        QuadExt y = QuadExt(3) * x;
        Int Dy = discriminant(minimal_polynomial(y));
        Rational ratio = Rational(Dy) / Rational(D);
        auto root = rational_sqrt(ratio);
        CHECK(root.has_value());
        ++done;
    }
}

TEST_CASE("continued fractions of known values") {
    CfExpansion s3 = cf_expansion(minimal_polynomial(qe(0, 1, 3)));
    CHECK(s3.preperiod == std::vector<Int>{1});
    CHECK(s3.period == std::vector<Int>{1, 2});

    CfExpansion s2 = cf_expansion(minimal_polynomial(qe(0, 1, 2)));
    CHECK(s2.preperiod == std::vector<Int>{1});
    CHECK(s2.period == std::vector<Int>{2});

    CfExpansion gold = cf_expansion(
        minimal_polynomial(QuadExt::make(Rational(1, 2), Rational(1, 2), Int(5))));
    CHECK(gold.preperiod.empty());
    CHECK(gold.period == std::vector<Int>{1});
}

TEST_CASE("convergents alternate around the value and improve") {
    QuadExt x = qe(0, 1, 7);
    CfExpansion cf = cf_expansion(minimal_polynomial(x));
    auto conv = cf_convergents(cf, 3);
    REQUIRE(conv.size() >= 4);
    for (size_t i = 0; i + 1 < conv.size(); ++i) {
        QuadExt ci{Rational(conv[i].first, conv[i].second)};
        QuadExt cn{Rational(conv[i + 1].first, conv[i + 1].second)};
        int si = compare(ci, x);
        int sn = compare(cn, x);
        CHECK(si * sn < 0); // strictly alternating sides
        // |c_{i+1} - x| < |c_i - x|
        QuadExt ei = si > 0 ? ci - x : x - ci;
        QuadExt en = sn > 0 ? cn - x : x - cn;
        CHECK(compare(en, ei) < 0);
    }
}

TEST_CASE("period minimality on a sample of discriminants") {
    for (long d : {2L, 3L, 7L, 13L, 19L, 31L, 61L}) {
        CfExpansion cf = cf_expansion(minimal_polynomial(qe(0, 1, d)));
        size_t p = cf.period.size();
        REQUIRE(p >= 1);
        // no proper divisor of the period length is itself a period
        for (size_t q = 1; q < p; ++q) {
            if (p % q != 0) continue;
            bool is_period = true;
            for (size_t i = 0; i < p; ++i)
                if (cf.period[i] != cf.period[i % q]) { is_period = false; break; }
            CHECK(!is_period);
        }
    }
}

TEST_CASE("classification of rotation parameters") {
    ThetaClass c1 = classify("sqrt(3)");
    CHECK(std::holds_alternative<QuadraticIrrational>(c1));
    ThetaClass c2 = classify("7/3");
    CHECK(std::holds_alternative<Rational>(c2));
    CHECK(std::get<Rational>(c2) == Rational(7, 3));
    ThetaClass c3 = classify("nonquadratic:cbrt2");
    REQUIRE(std::holds_alternative<DeclaredNonQuadratic>(c3));
    CHECK(std::get<DeclaredNonQuadratic>(c3).label == "cbrt2");
    CHECK_THROWS_AS(classify("sqrt(x)"), ParseError);
}
