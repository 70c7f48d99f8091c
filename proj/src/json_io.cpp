#include "fgc/json_io.hpp"

#include "fgc/dsl.hpp"

namespace fgc {

json to_json(const Rational& r) {
    return den(r) == 1 ? num(r).str() : num(r).str() + "/" + den(r).str();
}

Rational rational_from_json(const json& j) {
    std::string s = j.get<std::string>();
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Int(s));
    return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

json to_json(const QuadExt& x) {
    return json{{"a", to_json(x.a())}, {"b", to_json(x.b())}, {"d", x.d().str()}};
}

QuadExt quadext_from_json(const json& j) {
    return QuadExt::make(rational_from_json(j.at("a")), rational_from_json(j.at("b")),
                         Int(j.at("d").get<std::string>()));
}

json to_json(const QuadraticIrrational& q) {
    return json{{"k", q.k.str()},
                {"l", q.l.str()},
                {"m", q.m.str()},
                {"root_sign", q.root_sign == RootSign::plus ? "plus" : "minus"},
                {"value", to_json(q.value)}};
}

QuadraticIrrational quadirr_from_json(const json& j) {
    QuadraticIrrational q;
    q.k = Int(j.at("k").get<std::string>());
    q.l = Int(j.at("l").get<std::string>());
    q.m = Int(j.at("m").get<std::string>());
    q.root_sign = j.at("root_sign").get<std::string>() == "plus" ? RootSign::plus : RootSign::minus;
    q.value = quadext_from_json(j.at("value"));
    return q;
}

json to_json(const RingDescriptor& r) {
    if (auto* z = std::get_if<LocalizationOfZ>(&r))
        return json{{"kind", "zinv"}, {"n", z->n.str()}};
    if (auto* q = std::get_if<QuadraticOrder>(&r))
        return json{{"kind", "quadorder"}, {"D", q->D.str()}};
    if (std::holds_alternative<FullRationals>(r)) return json{{"kind", "rationals"}};
    return json{{"kind", "integers"}};
}

RingDescriptor ring_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "zinv") return LocalizationOfZ{Int(j.at("n").get<std::string>())};
    if (kind == "quadorder") return QuadraticOrder{Int(j.at("D").get<std::string>())};
    if (kind == "rationals") return FullRationals{};
    if (kind == "integers") return Integers{};
    throw Error("unknown ring kind '" + kind + "'");
}

json to_json(const TraceGroup& e) {
    if (auto* r = std::get_if<RationalLattice>(&e))
        return json{{"kind", "rational_lattice"}, {"q", den(r->step).str()}};
    if (auto* q = std::get_if<QuadraticLattice>(&e))
        return json{{"kind", "quadratic_lattice"}, {"theta", to_json(q->theta)}};
    if (auto* s = std::get_if<SupernaturalModule>(&e))
        return json{{"kind", "supernatural_module"}, {"m", s->m.str()}};
    return json{{"kind", "ring"}, {"ring", to_json(std::get<RingByDescriptor>(e).ring)}};
}

TraceGroup tracegroup_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "rational_lattice") return make_rational_lattice(Int(j.at("q").get<std::string>()));
    if (kind == "quadratic_lattice") return QuadraticLattice{quadirr_from_json(j.at("theta"))};
    if (kind == "supernatural_module")
        return SupernaturalModule{parse_supernatural(j.at("m").get<std::string>())};
    if (kind == "ring") return RingByDescriptor{ring_from_json(j.at("ring"))};
    throw Error("unknown trace group kind '" + kind + "'");
}

json to_json(const FundamentalGroupValue& f) {
    json j;
    if (std::holds_alternative<Trivial>(f.v)) {
        j["kind"] = "trivial";
    } else if (auto* c = std::get_if<InfiniteCyclic>(&f.v)) {
        j["kind"] = "infinite_cyclic";
        j["generator"] = to_json(c->generator);
    } else if (auto* p = std::get_if<FreeAbelianOnPrimes>(&f.v)) {
        j["kind"] = "free_abelian_on_primes";
        json ps = json::array();
        for (const Int& q : p->primes) ps.push_back(q.str());
        j["primes"] = ps;
    } else if (std::holds_alternative<PositiveRationals>(f.v)) {
        j["kind"] = "positive_rationals";
    } else {
        j["kind"] = "lower_bound_only";
        json fs = json::array();
        for (const auto& g : std::get<LowerBoundOnly>(f.v).factors) fs.push_back(to_json(g));
        j["factors"] = fs;
    }
    if (!f.assumed_flags.empty()) j["assumed_flags"] = f.assumed_flags;
    return j;
}

FundamentalGroupValue fgvalue_from_json(const json& j) {
    FundamentalGroupValue f;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "trivial") {
        f.v = Trivial{};
    } else if (kind == "infinite_cyclic") {
        f.v = InfiniteCyclic{quadext_from_json(j.at("generator"))};
    } else if (kind == "free_abelian_on_primes") {
        FreeAbelianOnPrimes p;
        for (const auto& q : j.at("primes")) p.primes.push_back(Int(q.get<std::string>()));
        f.v = std::move(p);
    } else if (kind == "positive_rationals") {
        f.v = PositiveRationals{};
    } else if (kind == "lower_bound_only") {
        LowerBoundOnly lb;
        for (const auto& g : j.at("factors")) lb.factors.push_back(fgvalue_from_json(g));
        f.v = std::move(lb);
    } else {
        throw Error("unknown group kind '" + kind + "'");
    }
    if (j.contains("assumed_flags"))
        for (const auto& fl : j.at("assumed_flags")) f.assumed_flags.insert(fl.get<std::string>());
    return f;
}

json to_json(const PellSolution& s) {
    return json{{"D", s.D.str()},
                {"t", s.t.str()},
                {"u", s.u.str()},
                {"sign", s.sign},
                {"epsilon0", to_json(s.epsilon0)}};
}

PellSolution pell_from_json(const json& j) {
    PellSolution s;
    s.D = Int(j.at("D").get<std::string>());
    s.t = Int(j.at("t").get<std::string>());
    s.u = Int(j.at("u").get<std::string>());
    s.sign = j.at("sign").get<int>();
    s.epsilon0 = quadext_from_json(j.at("epsilon0"));
    return s;
}

json to_json(const FgResult& r) {
    json j{{"group", to_json(r.group)},
           {"exactness", r.exactness == Exactness::Exact ? "exact" : "lower_bound"},
           {"provenance", r.provenance}};
    if (r.trace_group) j["trace_group"] = to_json(*r.trace_group);
    return j;
}

FgResult fgresult_from_json(const json& j) {
    FgResult r;
    r.group = fgvalue_from_json(j.at("group"));
    r.exactness = j.at("exactness").get<std::string>() == "exact" ? Exactness::Exact
                                                                  : Exactness::LowerBound;
    r.provenance = j.at("provenance").get<std::vector<std::string>>();
    if (j.contains("trace_group")) r.trace_group = tracegroup_from_json(j.at("trace_group"));
    return r;
}

} // namespace fgc
