// Command-line front end: exact p-adic Newton polygons, injectivity radii,
// generic radii of convergence of differential systems, and disk coverings.
// One subcommand per invocation; reports are single JSON documents on
// stdout.  Exit codes: 0 success, 1 domain error, 2 parse/config error.

#include "padic/batch.hpp"
#include "padic/covering.hpp"
#include "padic/diffsys.hpp"
#include "padic/expr.hpp"
#include "padic/json_io.hpp"
#include "padic/newton.hpp"
#include "padic/rolle.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace padic;

std::size_t max_degree_cap() {
    const char* env = std::getenv("PADIC_ROLLE_MAX_DEGREE");
    if (!env)
        return 4096;
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
        throw parse_error("PADIC_ROLLE_MAX_DEGREE must be a positive integer");
    return static_cast<std::size_t>(v);
}

// An invalid --prime is a configuration error (exit 2), not a domain error.
PrimeContext make_context(long p) {
    try {
        return PrimeContext(p);
    } catch (const domain_error& e) {
        throw parse_error(std::string("--prime: ") + e.what());
    }
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open file \"" + path + "\"");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw parse_error("invalid JSON in \"" + path + "\": " + e.what());
    }
    return j;
}

// Non-canonical decimal rendering of a radius p^{-v}, for human readers.
std::string approx_radius(long p, const Rat& v, unsigned digits) {
    long double lv = std::strtold(v.get_num().get_str().c_str(), nullptr) /
                     std::strtold(v.get_den().get_str().c_str(), nullptr);
    long double r = std::exp2l(-lv * std::log2l(static_cast<long double>(p)));
    std::ostringstream os;
    os.precision(static_cast<int>(digits));
    os << std::fixed << r;
    return os.str();
}

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

struct CommonArgs {
    long prime = 2;
    unsigned approx_digits = 0; // 0 = off
};

void attach_approx(json& doc, const CommonArgs& args,
                   std::initializer_list<const char*> keys) {
    if (args.approx_digits == 0)
        return;
    unsigned digits = std::min(args.approx_digits, 15u);
    json a;
    a["note"] = "non-canonical decimal rendering";
    a["digits"] = digits;
    for (const char* k : keys)
        if (doc.contains(k) && doc.at(k).is_string())
            a[k] = approx_radius(args.prime, rat_from_string(doc.at(k).get<std::string>()),
                                 digits);
    doc["approx"] = a;
}

int run(CLI::App& app, int argc, char** argv) {
    CommonArgs common;
    std::size_t cap = max_degree_cap();

    app.require_subcommand(1);
    app.add_option("--approx", common.approx_digits,
                   "decimal digits for non-canonical radius rendering");

    // polygon --prime P (--poly EXPR | --series-file F) [--emit-polygon-tsv PATH]
    auto* polygon = app.add_subcommand("polygon", "Newton polygon of a polynomial or series");
    std::string poly_expr, series_file, tsv_path;
    polygon->add_option("--prime", common.prime)->required();
    auto* poly_opt = polygon->add_option("--poly", poly_expr);
    auto* series_opt = polygon->add_option("--series-file", series_file);
    poly_opt->excludes(series_opt);
    polygon->add_option("--emit-polygon-tsv", tsv_path);
    polygon->callback([&] {
        PrimeContext ctx = make_context(common.prime);
        std::optional<NewtonPolygon> np;
        if (!poly_expr.empty())
            np = build_polygon(require_polynomial(parse_poly_expr(poly_expr, ctx, cap)), ctx);
        else if (!series_file.empty())
            np = build_polygon(pseries_from_json(load_json_file(series_file)));
        else
            throw parse_error("polygon needs --poly or --series-file");
        if (!tsv_path.empty()) {
            std::ofstream out(tsv_path);
            if (!out)
                throw parse_error("cannot write \"" + tsv_path + "\"");
            write_polygon_tsv(out, *np);
        }
        emit(polygon_report(*np));
    });

    // rolle --prime P --series-file F
    auto* rolle = app.add_subcommand("rolle", "etale and open-immersion checks of a series");
    std::string rolle_file;
    bool integral_tail = false;
    rolle->add_option("--prime", common.prime)->required();
    rolle->add_option("--series-file", rolle_file)->required();
    rolle->add_flag("--integral-tail", integral_tail,
                    "assume all tail coefficients are integral");
    rolle->callback([&] {
        PrimeContext ctx = make_context(common.prime);
        PSeries f = pseries_from_json(load_json_file(rolle_file));
        if (f.context() != ctx)
            throw parse_error("--prime disagrees with the series file");
        json doc = to_json(rolle_verify(f, integral_tail));
        attach_approx(doc, common, {"injectivity_log_radius", "rolle_bound"});
        emit(doc);
    });

    // radius --prime P --series-file F [--window W]
    auto* radius = app.add_subcommand("radius", "convergence slope estimate of a series");
    std::string radius_file;
    std::size_t window = 4;
    radius->add_option("--prime", common.prime)->required();
    radius->add_option("--series-file", radius_file)->required();
    radius->add_option("--window", window);
    radius->callback([&] {
        PrimeContext ctx = make_context(common.prime);
        PSeries f = pseries_from_json(load_json_file(radius_file));
        if (f.context() != ctx)
            throw parse_error("--prime disagrees with the series file");
        TailSlopeEstimate est = tail_slope_estimate(f, window);
        json doc{{"certified_max_prefix",
                  est.certified_max_prefix ? json(rat_to_string(*est.certified_max_prefix))
                                           : json(nullptr)},
                 {"prime", common.prime},
                 {"trunc", f.trunc()},
                 {"window", est.window},
                 {"window_estimate",
                  est.window_estimate ? json(rat_to_string(*est.window_estimate))
                                      : json(nullptr)}};
        emit(doc);
    });

    // generic-radius --prime P --system-file F --order N [--gauss-s RAT]
    auto* gradius = app.add_subcommand("generic-radius",
                                       "generic radius of convergence of a system");
    std::string system_file, gauss_s = "0";
    std::size_t order = 8;
    gradius->add_option("--prime", common.prime)->required();
    gradius->add_option("--system-file", system_file)->required();
    gradius->add_option("--order", order)->required();
    gradius->add_option("--gauss-s", gauss_s);
    gradius->callback([&] {
        DiffSystem sys = system_from_json(load_json_file(system_file));
        if (sys.ctx.prime() != common.prime)
            throw parse_error("--prime disagrees with the system file");
        GaussPoint pt{rat_from_string(gauss_s)};
        json doc = to_json(generic_radius(sys, pt, order));
        attach_approx(doc, common,
                      {"certified_prefix_min_log", "tail_window_log", "trivial_bound_log"});
        emit(doc);
    });

    // gauge --system-file F --gauge-file P.json [--gauss-s RAT]
    auto* gauge = app.add_subcommand("gauge", "gauge-transform a system by a matrix");
    std::string gauge_system, gauge_file, gauge_s = "0";
    gauge->add_option("--system-file", gauge_system)->required();
    gauge->add_option("--gauge-file", gauge_file)->required();
    gauge->add_option("--gauss-s", gauge_s);
    gauge->callback([&] {
        DiffSystem sys = system_from_json(load_json_file(gauge_system));
        RatFuncMatrix P = gauge_matrix_from_json(load_json_file(gauge_file));
        GaugeResult res = gauge_transform(sys, P, GaussPoint{rat_from_string(gauge_s)});
        json doc{{"gauss_s", gauge_s},
                 {"system", to_json(res.system)},
                 {"zeta_unimodular", res.zeta_unimodular}};
        emit(doc);
    });

    // solve-at --system-file F --at RAT --order N
    auto* solve = app.add_subcommand("solve-at", "fundamental solution matrix at a point");
    std::string solve_file, at_str;
    std::size_t solve_order = 8;
    solve->add_option("--system-file", solve_file)->required();
    solve->add_option("--at", at_str)->required();
    solve->add_option("--order", solve_order)->required();
    solve->callback([&] {
        DiffSystem sys = system_from_json(load_json_file(solve_file));
        SolutionMatrix sol = solution_at_point(sys, rat_from_string(at_str), solve_order);
        emit(to_json(sol, sys.ctx.prime()));
    });

    // section --prime P --phi EXPR --center RAT --branch RAT --trunc N
    auto* section = app.add_subcommand("section", "series branch w with phi(w(z)) = phi(z)");
    std::string phi_expr, center_str, branch_str, coeffs_tsv;
    std::size_t trunc = 16;
    bool inverse_mode = false;
    section->add_option("--prime", common.prime)->required();
    section->add_option("--phi", phi_expr)->required();
    section->add_option("--center", center_str)->required();
    section->add_option("--branch", branch_str)->required();
    section->add_option("--trunc", trunc)->required();
    section->add_flag("--inverse", inverse_mode,
                      "solve phi(w(x)) = x instead (local inverse branch)");
    section->add_option("--emit-coeffs-tsv", coeffs_tsv);
    section->callback([&] {
        PrimeContext ctx = make_context(common.prime);
        RatFunc phi = parse_poly_expr(phi_expr, ctx, cap);
        Rat z0 = rat_from_string(center_str);
        Rat w0 = rat_from_string(branch_str);
        SectionSeries s = inverse_mode ? inverse_series(phi, z0, w0, trunc)
                                       : section_series(phi, z0, w0, trunc);
        if (!coeffs_tsv.empty()) {
            std::ofstream out(coeffs_tsv);
            if (!out)
                throw parse_error("cannot write \"" + coeffs_tsv + "\"");
            out << "# n\tc_n\tord\tslope\n";
            for (std::size_t n = 1; n < s.w.trunc(); ++n) {
                if (s.w.coeff(n) == 0)
                    continue;
                Rat o = ord_p(s.w.coeff(n), ctx).finite();
                out << n << '\t' << rat_to_string(s.w.coeff(n)) << '\t'
                    << rat_to_string(o) << '\t'
                    << rat_to_string(-o / Rat(static_cast<long>(n))) << '\n';
            }
        }
        emit(to_json(s, common.prime));
    });

    // covering --prime P --phi EXPR
    auto* covering = app.add_subcommand("covering", "critical data of a disk covering");
    std::string cover_expr;
    covering->add_option("--prime", common.prime)->required();
    covering->add_option("--phi", cover_expr)->required();
    covering->callback([&] {
        PrimeContext ctx = make_context(common.prime);
        json doc = to_json(analyze_covering(parse_poly_expr(cover_expr, ctx, cap)));
        emit(doc);
    });

    // surjective --prime P --phi EXPR --target RAT
    auto* surjective = app.add_subcommand("surjective",
                                          "witness a preimage inside the open unit disk");
    std::string surj_expr, target_str;
    surjective->add_option("--prime", common.prime)->required();
    surjective->add_option("--phi", surj_expr)->required();
    surjective->add_option("--target", target_str)->required();
    surjective->callback([&] {
        PrimeContext ctx = make_context(common.prime);
        RatFunc phi = parse_poly_expr(surj_expr, ctx, cap);
        Rat a = rat_from_string(target_str);
        SurjectivityWitness w = surjectivity_witness(phi, a);
        json side = w.side ? json{{"length", w.side->length},
                                  {"slope", rat_to_string(w.side->slope)}}
                           : json(nullptr);
        emit(json{{"polygon", polygon_report(w.polygon)},
                  {"prime", common.prime},
                  {"surjective", w.surjective},
                  {"target", rat_to_string(a)},
                  {"witness_side", side},
                  {"zero_multiplicity", w.zero_multiplicity}});
    });

    // key-inequality --prime P --max N
    auto* keyineq = app.add_subcommand("key-inequality",
                                       "check ord_p(n) <= (n-1)/(p-1) for 2 <= n <= max");
    long long key_max = 0;
    keyineq->add_option("--prime", common.prime)->required();
    keyineq->add_option("--max", key_max)->required();
    keyineq->callback([&] {
        PrimeContext ctx = make_context(common.prime);
        if (key_max < 2)
            throw parse_error("--max must be >= 2");
        batch::KeySweepResult r = batch::key_inequality_sweep(ctx, 2, key_max);
        emit(json{{"all_hold", r.all_hold},
                  {"checked", r.checked},
                  {"first_failure", r.all_hold ? json(nullptr) : json(r.first_failure)},
                  {"max", key_max},
                  {"prime", common.prime}});
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // bad flags are config errors
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact p-adic disk analysis: polygons, radii, coverings"};
    try {
        return run(app, argc, argv);
    } catch (const padic::parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const padic::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
