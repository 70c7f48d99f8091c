// Command-line front end: fundamental groups of the cataloged algebras,
// Pell / fundamental-unit queries, minimal polynomials, inner-multiplier
// tests, and the finite-dimensional trace-functional sweep.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

#include "fgc/algebras.hpp"
#include "fgc/dsl.hpp"
#include "fgc/json_io.hpp"
#include "fgc/minpoly.hpp"
#include "fgc/modframe.hpp"
#include "fgc/pell.hpp"
#include "fgc/tracegroup.hpp"

namespace {

using fgc::json;

constexpr const char* kPellCitation =
    "minimal solution of t^2 - D u^2 = +-4 with (t + u sqrt(D))/2 > 1; epsilon0 generates "
    "the positive units of the quadratic order of discriminant D";
constexpr const char* kMinpolyCitation =
    "primitive k x^2 + l x + m with k > 0 and gcd(k,l,m) = 1; D = l^2 - 4km";
constexpr const char* kImCitation =
    "lambda is an inner multiplier of E iff lambda, lambda^{-1} in E and lambda E = E; "
    "for Z + Z theta this is the unimodularity of the coefficient matrix";

struct Options {
    std::string format = "text";
    bool verify = false;
};

void emit(const json& record, const Options& opt) {
    if (opt.format == "json") {
        std::cout << record.dump(2) << "\n";
        return;
    }
    std::cout << "query: " << record.at("query").get<std::string>() << "\n";
    for (auto& [key, val] : record.at("result").items()) {
        if (val.is_string()) std::cout << "  " << key << ": " << val.get<std::string>() << "\n";
        else std::cout << "  " << key << ": " << val.dump() << "\n";
    }
    if (record.contains("flags") && !record.at("flags").empty()) {
        std::cout << "  assumed: ";
        for (const auto& f : record.at("flags")) std::cout << f.get<std::string>() << " ";
        std::cout << "\n";
    }
    for (const auto& c : record.at("citations"))
        std::cout << "  # " << c.get<std::string>() << "\n";
}

void verify_unit_against_lattice(const fgc::TraceGroup& e, const fgc::QuadExt& eps) {
    const auto& theta = std::get<fgc::QuadraticLattice>(e).theta.value;
    fgc::QuadExt inv = fgc::QuadExt(1) / eps;
    bool direct = fgc::contains(e, eps) && fgc::contains(e, eps * theta) &&
                  fgc::contains(e, inv) && fgc::contains(e, inv * theta);
    if (direct != fgc::scales(e, eps))
        throw fgc::InternalInvariant("determinant criterion disagrees with double inclusion");
    fgc::Int D = fgc::discriminant(std::get<fgc::QuadraticLattice>(e).theta);
    auto oracle = fgc::brute_force_pell4(D, fgc::Int(10000000));
    if (!oracle || oracle->epsilon0 != eps)
        throw fgc::InternalInvariant("continued-fraction unit disagrees with the scan oracle");
}

int cmd_fg(const std::string& spec, const Options& opt) {
    fgc::AlgebraPtr alg = fgc::parse_algebra(spec);
    fgc::FgResult res = fgc::fundamental_group(*alg);

    if (opt.verify && res.trace_group &&
        std::holds_alternative<fgc::QuadraticLattice>(*res.trace_group)) {
        if (auto* c = std::get_if<fgc::InfiniteCyclic>(&res.group.v))
            verify_unit_against_lattice(*res.trace_group, c->generator);
    }

    json result = fgc::to_json(res);
    result["presentation"] = fgc::fg_str(res.group);
    if (res.trace_group) result["trace_group_text"] = fgc::tg_str(*res.trace_group);
    json record{{"query", spec},
                {"kind", "fg"},
                {"result", result},
                {"flags", res.group.assumed_flags},
                {"citations", res.provenance}};
    emit(record, opt);
    return 0;
}

int cmd_pell(const std::string& d_str, const Options& opt) {
    fgc::Int D(d_str);
    fgc::PellSolution s = fgc::solve_pell4(D);
    if (opt.verify) {
        auto oracle = fgc::brute_force_pell4(D, fgc::Int(10000000));
        if (!oracle || !(oracle->epsilon0 == s.epsilon0))
            throw fgc::InternalInvariant("scan oracle disagrees for D = " + D.str());
    }
    json result = fgc::to_json(s);
    result["epsilon0_text"] = s.epsilon0.str();
    json record{{"query", "pell " + d_str},
                {"kind", "pell"},
                {"result", result},
                {"flags", json::array()},
                {"citations", json::array({kPellCitation})}};
    emit(record, opt);
    return 0;
}

int cmd_minpoly(const std::string& expr, const Options& opt) {
    fgc::QuadExt x = fgc::parse_expr(expr);
    fgc::QuadraticIrrational q = fgc::minimal_polynomial(x);
    json result = fgc::to_json(q);
    result["D"] = fgc::discriminant(q).str();
    result["value_text"] = x.str();
    json record{{"query", expr},
                {"kind", "minpoly"},
                {"result", result},
                {"flags", json::array()},
                {"citations", json::array({kMinpolyCitation})}};
    emit(record, opt);
    return 0;
}

int cmd_im(const std::string& lambda_str, const std::string& group_str, const Options& opt) {
    fgc::QuadExt lambda = fgc::parse_expr(lambda_str);
    fgc::TraceGroup e = fgc::parse_trace_group(group_str);
    bool sc = fgc::scales(e, lambda);
    bool in = fgc::contains(e, lambda);
    bool inv_in = fgc::contains(e, fgc::QuadExt(1) / lambda);
    fgc::FundamentalGroupValue im = fgc::inner_multiplier_group(e);
    bool member = fgc::fg_contains(im, lambda);

    if (opt.verify && std::holds_alternative<fgc::QuadraticLattice>(e)) {
        const auto& theta = std::get<fgc::QuadraticLattice>(e).theta.value;
        fgc::QuadExt inv = fgc::QuadExt(1) / lambda;
        bool direct = in && inv_in && fgc::contains(e, lambda * theta) &&
                      fgc::contains(e, inv * theta);
        if (direct != sc)
            throw fgc::InternalInvariant("determinant criterion disagrees with double inclusion");
        if (member != sc)
            throw fgc::InternalInvariant("IM membership disagrees with the scaling test");
    }

    json result{{"scales", sc},
                {"contains_lambda", in},
                {"contains_inverse", inv_in},
                {"im_group", fgc::to_json(im)},
                {"im_group_text", fgc::fg_str(im)},
                {"lambda_in_im_group", member}};
    json record{{"query", "im lambda=" + lambda_str + " group=" + group_str},
                {"kind", "im"},
                {"result", result},
                {"flags", json::array()},
                {"citations", json::array({kImCitation})}};
    emit(record, opt);
    return 0;
}

int cmd_tmap(int n, int k, int rank, int trials, std::uint64_t seed, const Options& opt) {
    auto rows = fgc::sweep(n, k, rank, trials, 5, seed);
    double max_spread = 0.0, max_rank_dev = 0.0, max_mult_dev = 0.0;
    for (const auto& r : rows) {
        max_spread = std::max(max_spread, r.spread);
        max_rank_dev = std::max(max_rank_dev, std::abs(r.t - static_cast<double>(rank) / n));
    }
    int pairs = std::min(10, trials);
    for (int i = 0; i < pairs; ++i) {
        auto m1 = fgc::random_projection(n, k, rank, seed + static_cast<std::uint64_t>(i));
        auto m2 = fgc::random_bimodule(n, k, 1 + i % k, seed + static_cast<std::uint64_t>(i) + 1);
        auto f1 = fgc::frame_of(m1), f2 = fgc::frame_of(m2);
        auto f12 = fgc::tensor_modules(f1, f2);
        max_mult_dev = std::max(
            max_mult_dev, std::abs(fgc::t_value(f12) - fgc::t_value(f1) * fgc::t_value(f2)));
    }

    json result{{"csv", fgc::sweep_csv(rows)},
                {"max_resample_spread", max_spread},
                {"max_rank_over_n_deviation", max_rank_dev},
                {"max_multiplicativity_deviation", max_mult_dev}};
    json record{{"query", "tmap n=" + std::to_string(n) + " k=" + std::to_string(k) +
                              " rank=" + std::to_string(rank)},
                {"kind", "tmap"},
                {"result", result},
                {"flags", json::array()},
                {"citations",
                 json::array({"T([E]) = sum_i tau(<xi_i, xi_i>); frame-independent, "
                              "multiplicative, and equal to (tau (x) Tr)(p)"})}};
    if (opt.format == "text") {
        std::cout << fgc::sweep_csv(rows);
        std::cout << "max_resample_spread," << max_spread << "\n";
        std::cout << "max_rank_over_n_deviation," << max_rank_dev << "\n";
        std::cout << "max_multiplicativity_deviation," << max_mult_dev << "\n";
    } else {
        emit(record, opt);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact fundamental-group computations for simple C*-algebras with unique trace"};
    app.require_subcommand(1);
    Options opt;

    std::string fg_spec, pell_d, mp_expr, im_lambda, im_group;
    int tn = 2, tk = 2, trank = 1, ttrials = 10;
    std::uint64_t tseed = 1;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_flag("--verify", opt.verify, "re-run the brute-force oracles inline");
    };

    auto* fg = app.add_subcommand("fg", "fundamental group of an algebra description");
    fg->add_option("spec", fg_spec, "algebra description")->required();
    add_common(fg);

    auto* pell = app.add_subcommand("pell", "minimal solution of t^2 - D u^2 = +-4");
    pell->add_option("D", pell_d, "discriminant")->required();
    add_common(pell);

    auto* mp = app.add_subcommand("minpoly", "primitive minimal polynomial and discriminant");
    mp->add_option("expr", mp_expr, "quadratic expression")->required();
    add_common(mp);

    auto* im = app.add_subcommand("im", "inner-multiplier tests for lambda against E");
    im->add_option("--lambda", im_lambda)->required();
    im->add_option("--group", im_group)->required();
    add_common(im);

    auto* tmap = app.add_subcommand("tmap", "numerical trace-functional sweep");
    tmap->add_option("--n", tn, "matrix size");
    tmap->add_option("--k", tk, "amplification");
    tmap->add_option("--rank", trank, "projection rank");
    tmap->add_option("--trials", ttrials, "number of random modules");
    tmap->add_option("--seed", tseed, "rng seed");
    add_common(tmap);

    CLI11_PARSE(app, argc, argv);

    try {
        if (fg->parsed()) return cmd_fg(fg_spec, opt);
        if (pell->parsed()) return cmd_pell(pell_d, opt);
        if (mp->parsed()) return cmd_minpoly(mp_expr, opt);
        if (im->parsed()) return cmd_im(im_lambda, im_group, opt);
        if (tmap->parsed()) return cmd_tmap(tn, tk, trank, ttrials, tseed, opt);
    } catch (const fgc::UnsupportedComposition& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const fgc::NoTraceGroupRule& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const fgc::InternalInvariant& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
