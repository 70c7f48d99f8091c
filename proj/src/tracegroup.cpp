#include "fgc/tracegroup.hpp"

#include <algorithm>
#include <sstream>

#include "fgc/pell.hpp"

namespace fgc {

// --- SupernaturalNumber ------------------------------------------------------

SupernaturalNumber SupernaturalNumber::make(std::vector<Factor> fs) {
    std::sort(fs.begin(), fs.end(),
              [](const Factor& x, const Factor& y) { return x.prime < y.prime; });
    for (std::size_t i = 0; i < fs.size(); ++i) {
        const auto& f = fs[i];
        if (f.prime < 2) throw Error(f.prime.str() + " is not prime");
        auto fac = factorize(f.prime);
        if (fac.size() != 1 || fac[0].second != 1)
            throw Error(f.prime.str() + " is not prime");
        if (f.exponent && *f.exponent < 1) throw Error("supernatural exponent must be >= 1");
        if (i > 0 && fs[i - 1].prime == f.prime) throw Error("duplicate prime in supernatural number");
    }
    SupernaturalNumber m;
    m.factors = std::move(fs);
    return m;
}

std::vector<Int> SupernaturalNumber::infinite_primes() const {
    std::vector<Int> out;
    for (const auto& f : factors)
        if (!f.exponent) out.push_back(f.prime);
    return out;
}

std::string SupernaturalNumber::str() const {
    std::string s;
    for (const auto& f : factors) {
        if (!s.empty()) s += "*";
        s += f.prime.str() + "^" + (f.exponent ? f.exponent->str() : "inf");
    }
    return s.empty() ? "1" : s;
}

// --- descriptors and trace groups -------------------------------------------

std::string ring_str(const RingDescriptor& r) {
    if (auto* z = std::get_if<LocalizationOfZ>(&r)) return "Z[1/" + z->n.str() + "]";
    if (auto* q = std::get_if<QuadraticOrder>(&r))
        return "quadratic order of discriminant " + q->D.str();
    if (std::holds_alternative<FullRationals>(r)) return "Q";
    return "Z";
}

TraceGroup make_rational_lattice(const Int& q) {
    if (q < 1) throw Error("rational lattice step must be 1/q with q >= 1");
    return RationalLattice{Rational(1, q)};
}

std::string tg_str(const TraceGroup& e) {
    if (auto* r = std::get_if<RationalLattice>(&e)) {
        Int q = den(r->step);
        return q == 1 ? "Z" : "(1/" + q.str() + ")Z";
    }
    if (auto* q = std::get_if<QuadraticLattice>(&e))
        return "Z + Z*(" + q->theta.value.str() + ")";
    if (auto* s = std::get_if<SupernaturalModule>(&e))
        return "tau_*K0 of UHF(" + s->m.str() + ")";
    return ring_str(std::get<RingByDescriptor>(e).ring);
}

// --- small arithmetic helpers ------------------------------------------------

namespace {

bool is_integer(const Rational& r) { return den(r) == 1; }

std::vector<Int> distinct_primes(const Int& n) {
    std::vector<Int> out;
    for (const auto& [p, e] : factorize(abs(n))) out.push_back(p);
    return out;
}

// exponent of p in a positive rational (negative when p divides the denominator)
Int valuation(const Int& p, Rational x) {
    Int v = 0;
    Int n = num(x), d = den(x);
    while (n % p == 0) { n /= p; ++v; }
    while (d % p == 0) { d /= p; --v; }
    return v;
}

std::vector<Int> primes_of_rational(const Rational& x) {
    std::vector<Int> ps = distinct_primes(num(x));
    for (const Int& p : distinct_primes(den(x)))
        if (std::find(ps.begin(), ps.end(), p) == ps.end()) ps.push_back(p);
    std::sort(ps.begin(), ps.end());
    return ps;
}

// theta of the order of discriminant D: (sigma + sqrt(D)) / 2
QuadExt order_generator(const Int& D) {
    Int sigma = D % 2;
    return QuadExt::make(Rational(sigma, 2), Rational(1, 2), D);
}

} // namespace

std::optional<std::pair<Int, Int>> lattice_coords(const QuadExt& theta, const QuadExt& x) {
    if (theta.is_rational()) throw Error("lattice generator must be irrational");
    if (!x.is_rational() && x.d() != theta.d())
        throw MixedField("element of Q(sqrt(" + x.d().str() + ")) against lattice in Q(sqrt(" +
                         theta.d().str() + "))");
    Rational b = x.b() / theta.b();
    Rational a = x.a() - b * theta.a();
    if (!is_integer(a) || !is_integer(b)) return std::nullopt;
    return std::make_pair(num(a), num(b));
}

// --- contains ----------------------------------------------------------------

bool contains(const TraceGroup& e, const QuadExt& x) {
    if (auto* r = std::get_if<RationalLattice>(&e)) {
        if (!x.is_rational()) return false;
        return is_integer(x.a() / r->step);
    }
    if (auto* q = std::get_if<QuadraticLattice>(&e))
        return lattice_coords(q->theta.value, x).has_value();
    if (auto* s = std::get_if<SupernaturalModule>(&e)) {
        if (!x.is_rational()) return false;
        for (const Int& p : distinct_primes(den(x.a()))) {
            auto it = std::find_if(s->m.factors.begin(), s->m.factors.end(),
                                   [&](const auto& f) { return f.prime == p; });
            if (it == s->m.factors.end()) return false;
            if (it->exponent && -valuation(p, x.a()) > *it->exponent) return false;
        }
        return true;
    }
    const RingDescriptor& r = std::get<RingByDescriptor>(e).ring;
    if (auto* z = std::get_if<LocalizationOfZ>(&r)) {
        if (!x.is_rational()) return false;
        for (const Int& p : distinct_primes(den(x.a())))
            if (z->n % p != 0) return false;
        return true;
    }
    if (auto* o = std::get_if<QuadraticOrder>(&r)) {
        if (x.is_rational()) return is_integer(x.a());
        return lattice_coords(order_generator(o->D), x).has_value();
    }
    if (std::holds_alternative<FullRationals>(r)) return x.is_rational();
    return x.is_rational() && is_integer(x.a()); // Integers
}

// --- scales ------------------------------------------------------------------

bool scales(const TraceGroup& e, const QuadExt& lambda) {
    if (sign_of(lambda) <= 0) throw NotPositive("scaling factor must be positive");
    if (lambda == QuadExt(1)) return true;

    if (std::holds_alternative<RationalLattice>(e)) {
        // lambda (1/q)Z = (1/q)Z forces lambda and 1/lambda integral
        if (!lambda.is_rational()) return false;
        return is_integer(lambda.a()) && is_integer(1 / lambda.a());
    }
    if (auto* q = std::get_if<QuadraticLattice>(&e)) {
        const QuadExt& theta = q->theta.value;
        auto row1 = lattice_coords(theta, lambda);
        auto row2 = lattice_coords(theta, lambda * theta);
        if (!row1 || !row2) return false;
        Int det = row1->first * row2->second - row1->second * row2->first;
        return det == 1 || det == -1;
    }
    if (auto* s = std::get_if<SupernaturalModule>(&e)) {
        if (!lambda.is_rational()) return false;
        for (const Int& p : primes_of_rational(lambda.a())) {
            auto it = std::find_if(s->m.factors.begin(), s->m.factors.end(),
                                   [&](const auto& f) { return f.prime == p; });
            if (it == s->m.factors.end() || it->exponent) return false;
        }
        return true;
    }
    // a ring scales by exactly its units
    return contains(e, lambda) && contains(e, QuadExt(1) / lambda);
}

// --- unit groups -------------------------------------------------------------

FundamentalGroupValue units_positive(const RingDescriptor& r) {
    FundamentalGroupValue f;
    if (auto* z = std::get_if<LocalizationOfZ>(&r)) {
        f.v = FreeAbelianOnPrimes{distinct_primes(z->n)};
    } else if (auto* o = std::get_if<QuadraticOrder>(&r)) {
        f.v = InfiniteCyclic{solve_pell4(o->D).epsilon0};
    } else if (std::holds_alternative<FullRationals>(r)) {
        f.v = PositiveRationals{};
    } else {
        f.v = Trivial{};
    }
    return f;
}

FundamentalGroupValue inner_multiplier_group(const TraceGroup& e) {
    FundamentalGroupValue f;
    if (std::holds_alternative<RationalLattice>(e)) {
        // E meets (0,1] in finitely many points, so IM_+ is finite, hence {1}
        f.v = Trivial{};
        return f;
    }
    if (auto* q = std::get_if<QuadraticLattice>(&e)) {
        Int D = discriminant(q->theta);
        PellSolution s = solve_pell4(D);
        // the identity IM(Z+Z theta) = units of the order of discriminant
        // D_theta is re-proved per instance by the determinant criterion
        if (!scales(e, s.epsilon0) || !contains(e, s.epsilon0) ||
            !contains(e, QuadExt(1) / s.epsilon0))
            throw InternalInvariant("fundamental unit of D=" + D.str() +
                                    " fails the lattice scaling check");
        f.v = InfiniteCyclic{s.epsilon0};
        return f;
    }
    if (auto* s = std::get_if<SupernaturalModule>(&e)) {
        auto ps = s->m.infinite_primes();
        if (ps.empty()) f.v = Trivial{};
        else f.v = FreeAbelianOnPrimes{std::move(ps)};
        return f;
    }
    return units_positive(std::get<RingByDescriptor>(e).ring);
}

// --- integer span membership ---------------------------------------------------

bool in_integer_span(std::vector<std::vector<Int>> vectors, std::vector<Int> target) {
    const std::size_t m = target.size();
    std::size_t lead = 0;
    for (std::size_t row = 0; row < m && !vectors.empty(); ++row) {
        // Euclidean column elimination on this row
        for (;;) {
            std::size_t best = vectors.size();
            for (std::size_t j = lead; j < vectors.size(); ++j) {
                if (vectors[j][row] == 0) continue;
                if (best == vectors.size() ||
                    abs(vectors[j][row]) < abs(vectors[best][row]))
                    best = j;
            }
            if (best == vectors.size()) break; // row is zero past lead
            std::swap(vectors[lead], vectors[best]);
            bool done = true;
            for (std::size_t j = lead + 1; j < vectors.size(); ++j) {
                if (vectors[j][row] == 0) continue;
                Int q = vectors[j][row] / vectors[lead][row];
                for (std::size_t i = 0; i < m; ++i) vectors[j][i] -= q * vectors[lead][i];
                if (vectors[j][row] != 0) done = false;
            }
            if (done) break;
        }
        if (lead < vectors.size() && vectors[lead][row] != 0) {
            if (target[row] % vectors[lead][row] != 0) return false;
            Int q = target[row] / vectors[lead][row];
            for (std::size_t i = 0; i < m; ++i) target[i] -= q * vectors[lead][i];
            ++lead;
        } else if (target[row] != 0) {
            return false;
        }
    }
    return std::all_of(target.begin(), target.end(), [](const Int& t) { return t == 0; });
}

// --- ring generated by a multiplicative group ---------------------------------

namespace {

RingGenerated unrepresentable(std::string why) {
    RingGenerated r;
    r.note = std::move(why);
    return r;
}

// is lambda a power of g (g != 1)?
bool power_of(const QuadExt& g, const QuadExt& lambda) {
    QuadExt base = g > QuadExt(1) ? g : QuadExt(1) / g;
    return cyclic_log(base, lambda).has_value();
}

} // namespace

RingGenerated ring_generated_by_group(const std::vector<QuadExt>& gens) {
    if (gens.empty()) throw Error("ring_generated_by_group needs at least one generator");
    for (const auto& g : gens)
        if (sign_of(g) <= 0) throw NotPositive("group generators must be positive");

    bool any_quadratic = std::any_of(gens.begin(), gens.end(),
                                     [](const QuadExt& g) { return !g.is_rational(); });
    bool any_rational_nontrivial =
        std::any_of(gens.begin(), gens.end(),
                    [](const QuadExt& g) { return g.is_rational() && g != QuadExt(1); });

    RingGenerated out;
    if (!any_quadratic) {
        // Z[g, g^{-1}] = Z[1/n] for n the product of the primes of num and den
        std::vector<Int> primes;
        for (const auto& g : gens)
            for (const Int& p : primes_of_rational(g.a()))
                if (std::find(primes.begin(), primes.end(), p) == primes.end())
                    primes.push_back(p);
        std::sort(primes.begin(), primes.end());
        if (primes.empty()) {
            out.ring = Integers{};
            out.note = "all generators equal 1";
            return out;
        }
        Int n = 1;
        for (const Int& p : primes) n *= p;
        out.ring = LocalizationOfZ{n};
        // witness: a prime of n outside the Z-span of the generators'
        // exponent vectors
        std::vector<std::vector<Int>> vecs;
        for (const auto& g : gens) {
            std::vector<Int> v;
            for (const Int& p : primes) v.push_back(valuation(p, g.a()));
            vecs.push_back(std::move(v));
        }
        for (std::size_t i = 0; i < primes.size(); ++i) {
            std::vector<Int> unit(primes.size(), 0);
            unit[i] = 1;
            if (!in_integer_span(vecs, unit)) {
                out.witness = QuadExt(Rational(primes[i]));
                out.note = primes[i].str() + " is a positive unit of Z[1/" + n.str() +
                           "] outside the generated group";
                break;
            }
        }
        return out;
    }

    if (any_rational_nontrivial)
        return unrepresentable("mixed rational and quadratic generators have no supported ring");

    Int d = 0;
    for (const auto& g : gens) {
        if (g.is_rational()) continue;
        if (d == 0) d = g.d();
        else if (g.d() != d)
            return unrepresentable("generators lie in distinct quadratic fields");
    }

    Int dK = (d % 4 == 1) ? d : 4 * d; // fundamental discriminant of Q(sqrt(d))
    Int f = 0;
    for (const auto& g : gens) {
        if (g.is_rational()) continue;
        QuadraticIrrational q = minimal_polynomial(g);
        if (q.k != 1)
            return unrepresentable("generator " + g.str() +
                                   " is not an algebraic integer; Z[gens] is not an order");
        Int Di = discriminant(q);
        Int fi = isqrt(Di / dK);
        if (fi * fi * dK != Di)
            throw InternalInvariant("discriminant " + Di.str() + " is not f^2 * " + dK.str());
        f = f == 0 ? fi : boost::multiprecision::gcd(f, fi);
    }
    Int D = f * f * dK;
    out.ring = QuadraticOrder{D};

    PellSolution s = solve_pell4(D);
    for (const QuadExt& cand : {QuadExt(1) / s.epsilon0, s.epsilon0}) {
        bool covered = false;
        for (const auto& g : gens)
            if (g != QuadExt(1) && power_of(g, cand)) { covered = true; break; }
        if (!covered) {
            out.witness = cand;
            out.note = cand.str() + " is a positive unit of the discriminant-" + D.str() +
                       " order but no power of a generator";
            break;
        }
    }
    return out;
}

// --- presented-group membership ------------------------------------------------

std::optional<long> cyclic_log(const QuadExt& g, const QuadExt& lambda) {
    if (!(g > QuadExt(1))) throw Error("cyclic_log requires a generator > 1");
    QuadExt one(1);
    if (lambda == one) return 0;
    if (lambda < one) {
        auto n = cyclic_log(g, one / lambda);
        if (n) return -*n;
        return std::nullopt;
    }
    // powers of g stay in g's field, and are rational only at exponent 0
    if (!g.is_rational() && !lambda.is_rational() && g.d() != lambda.d()) return std::nullopt;
    if (g.is_rational() != lambda.is_rational()) return std::nullopt;
    QuadExt p = g;
    long n = 1;
    while (p < lambda) { p = p * g; ++n; }
    if (p == lambda) return n;
    return std::nullopt;
}

namespace {

struct Flattened {
    std::vector<Int> primes;
    bool all_rationals = false;
    std::vector<QuadExt> cyclic_gens;
};

void flatten(const FundamentalGroupValue& f, Flattened& out) {
    if (std::holds_alternative<Trivial>(f.v)) return;
    if (auto* c = std::get_if<InfiniteCyclic>(&f.v)) { out.cyclic_gens.push_back(c->generator); return; }
    if (auto* p = std::get_if<FreeAbelianOnPrimes>(&f.v)) {
        for (const Int& q : p->primes)
            if (std::find(out.primes.begin(), out.primes.end(), q) == out.primes.end())
                out.primes.push_back(q);
        return;
    }
    if (std::holds_alternative<PositiveRationals>(f.v)) { out.all_rationals = true; return; }
    for (const auto& g : std::get<LowerBoundOnly>(f.v).factors) flatten(g, out);
}

bool rational_in(const Flattened& fl, const Rational& r) {
    if (r == 1) return true;
    if (fl.all_rationals) return true;
    for (const Int& p : primes_of_rational(r))
        if (std::find(fl.primes.begin(), fl.primes.end(), p) == fl.primes.end()) return false;
    return true;
}

} // namespace

bool fg_contains(const FundamentalGroupValue& f, const QuadExt& lambda) {
    if (sign_of(lambda) <= 0) throw NotPositive("group elements are positive reals");
    if (std::holds_alternative<Trivial>(f.v)) return lambda == QuadExt(1);
    if (auto* c = std::get_if<InfiniteCyclic>(&f.v))
        return cyclic_log(c->generator, lambda).has_value();
    if (auto* p = std::get_if<FreeAbelianOnPrimes>(&f.v)) {
        if (!lambda.is_rational()) return false;
        Flattened fl;
        fl.primes = p->primes;
        return rational_in(fl, lambda.a());
    }
    if (std::holds_alternative<PositiveRationals>(f.v)) return lambda.is_rational();

    // lower-bound subgroup generated by the factors
    Flattened fl;
    flatten(f, fl);
    if (lambda.is_rational()) return rational_in(fl, lambda.a());
    // lambda = g^n * r demands r^2 = |N(lambda)|
    auto r = rational_sqrt(abs(field_norm(lambda)));
    if (!r) return false;
    for (const auto& g : fl.cyclic_gens) {
        if (g.is_rational() || g.d() != lambda.d()) continue;
        QuadExt mu = lambda / QuadExt(*r);
        if (cyclic_log(g, mu) && rational_in(fl, *r)) return true;
    }
    return false;
}

// --- presentation equality and printing ----------------------------------------

bool fg_equal(const FundamentalGroupValue& x, const FundamentalGroupValue& y) {
    if (x.v.index() != y.v.index()) return false;
    if (auto* a = std::get_if<InfiniteCyclic>(&x.v))
        return a->generator == std::get<InfiniteCyclic>(y.v).generator;
    if (auto* a = std::get_if<FreeAbelianOnPrimes>(&x.v))
        return a->primes == std::get<FreeAbelianOnPrimes>(y.v).primes;
    if (auto* a = std::get_if<LowerBoundOnly>(&x.v)) {
        const auto& b = std::get<LowerBoundOnly>(y.v);
        if (a->factors.size() != b.factors.size()) return false;
        for (std::size_t i = 0; i < a->factors.size(); ++i)
            if (!fg_equal(a->factors[i], b.factors[i])) return false;
        return true;
    }
    return true; // Trivial / PositiveRationals
}

std::string fg_str(const FundamentalGroupValue& f) {
    if (std::holds_alternative<Trivial>(f.v)) return "{1}";
    if (auto* c = std::get_if<InfiniteCyclic>(&f.v))
        return "{(" + c->generator.str() + ")^n : n in Z}";
    if (auto* p = std::get_if<FreeAbelianOnPrimes>(&f.v)) {
        std::string s = "<";
        for (std::size_t i = 0; i < p->primes.size(); ++i) {
            if (i) s += ", ";
            s += p->primes[i].str();
        }
        return s + ">";
    }
    if (std::holds_alternative<PositiveRationals>(f.v)) return "Q_{>0}";
    const auto& lb = std::get<LowerBoundOnly>(f.v);
    std::string s = "at least the product of ";
    for (std::size_t i = 0; i < lb.factors.size(); ++i) {
        if (i) s += " and ";
        s += fg_str(lb.factors[i]);
    }
    return s;
}

} // namespace fgc
