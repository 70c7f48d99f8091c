#include "fgc/minpoly.hpp"

#include <cctype>
#include <map>

namespace fgc {

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", pos);
    }

    bool peek_digit() {
        skip_ws();
        return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
    }

    Int integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected integer", pos);
        return Int(s.substr(start, pos - start));
    }

    bool keyword(const std::string& kw) {
        skip_ws();
        if (s.compare(pos, kw.size(), kw) == 0) { pos += kw.size(); return true; }
        return false;
    }

    QuadExt expr() {
        QuadExt v = term();
        for (;;) {
            if (eat('+')) v = v + term();
            else if (eat('-')) v = v - term();
            else return v;
        }
    }

    QuadExt term() {
        QuadExt v = factor();
        for (;;) {
            std::size_t at = pos;
            if (eat('*')) v = v * factor();
            else if (eat('/')) {
                QuadExt rhs = factor();
                if (rhs.is_zero()) throw ParseError("division by zero", at);
                v = v / rhs;
            } else return v;
        }
    }

    QuadExt factor() {
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        return primary();
    }

    QuadExt primary() {
        skip_ws();
        if (eat('(')) {
            QuadExt v = expr();
            expect(')');
            return v;
        }
        if (keyword("sqrt")) {
            std::size_t at = pos;
            expect('(');
            Int n = integer();
            expect(')');
            if (n < 2)
                throw ParseError("sqrt radicand must be an integer >= 2, got " + n.str(), at);
            return QuadExt::make(0, 1, n);
        }
        if (peek_digit()) return QuadExt(Rational(integer()));
        throw ParseError("expected integer, sqrt(...), or parenthesized expression", pos);
    }
};

Int gcd3(const Int& a, const Int& b, const Int& c) {
    using boost::multiprecision::gcd;
    return gcd(gcd(abs(a), abs(b)), abs(c));
}

// floor(a / b) for b > 0
Int fdiv(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

// floor((P + sqrt(D)) / Q), D > 0 nonsquare, Q != 0
Int cf_floor(const Int& P, const Int& D, const Int& Q) {
    Int s = isqrt(D);
    if (Q > 0) return fdiv(P + s, Q);
    return fdiv(-P - s - 1, -Q);
}

} // namespace

QuadExt parse_expr(const std::string& text) {
    Parser p(text);
    QuadExt v = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) throw ParseError("trailing input", p.pos);
    return v;
}

QuadraticIrrational minimal_polynomial(const QuadExt& x) {
    if (x.is_rational())
        throw NotIrrational("minimal_polynomial expects an irrational value, got " + x.str());
    // x^2 - 2a x + (a^2 - b^2 d) = 0; clear denominators and make primitive
    Rational c1 = -2 * x.a();
    Rational c0 = field_norm(x);
    Int L = boost::multiprecision::lcm(den(c1), den(c0));
    Int k = L;
    Int l = num(c1 * Rational(L));
    Int m = num(c0 * Rational(L));
    Int g = gcd3(k, l, m);
    k /= g; l /= g; m /= g;
    QuadraticIrrational q{k, l, m, x.b() > 0 ? RootSign::plus : RootSign::minus, x};
    Int D = discriminant(q);
    if (D <= 0 || is_perfect_square(D))
        throw InternalInvariant("discriminant of an irrational value must be a positive nonsquare");
    return q;
}

Int discriminant(const QuadraticIrrational& q) { return q.l * q.l - 4 * q.k * q.m; }

CfExpansion cf_expansion(const QuadraticIrrational& q) {
    Int D = discriminant(q);
    // root = (P + sqrt(D)) / Q with Q | D - P^2
    Int P, Q;
    if (q.root_sign == RootSign::plus) { P = -q.l; Q = 2 * q.k; }
    else { P = q.l; Q = -2 * q.k; }

    CfExpansion out;
    std::vector<Int> digits;
    std::map<std::pair<Int, Int>, std::size_t> seen;
    for (;;) {
        auto state = std::make_pair(P, Q);
        auto it = seen.find(state);
        if (it != seen.end()) {
            std::size_t j = it->second;
            out.preperiod.assign(digits.begin(), digits.begin() + j);
            out.period.assign(digits.begin() + j, digits.end());
            return out;
        }
        seen[state] = digits.size();
        Int a = cf_floor(P, D, Q);
        digits.push_back(a);
        P = a * Q - P;
        Q = (D - P * P) / Q;
    }
}

std::vector<std::pair<Int, Int>> cf_convergents(const CfExpansion& cf, int rounds) {
    std::vector<Int> digits = cf.preperiod;
    for (int r = 0; r < rounds; ++r)
        digits.insert(digits.end(), cf.period.begin(), cf.period.end());
    std::vector<std::pair<Int, Int>> out;
    Int h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    for (const Int& a : digits) {
        Int h2 = a * h1 + h0, k2 = a * k1 + k0;
        out.emplace_back(h2, k2);
        h0 = h1; h1 = h2;
        k0 = k1; k1 = k2;
    }
    return out;
}

ThetaClass classify(const std::string& input) {
    const std::string tag = "nonquadratic:";
    if (input.rfind(tag, 0) == 0) {
        std::string label = input.substr(tag.size());
        if (label.empty()) throw ParseError("nonquadratic tag needs a label", tag.size());
        return DeclaredNonQuadratic{label};
    }
    QuadExt v = parse_expr(input);
    if (v.is_rational()) return v.a();
    return minimal_polynomial(v);
}

} // namespace fgc
