#include "padic/json_io.hpp"

namespace padic {

namespace {

json rat_array(const std::vector<Rat>& v) {
    json a = json::array();
    for (const auto& x : v)
        a.push_back(rat_to_string(x));
    return a;
}

std::vector<Rat> rat_vector(const json& a, const char* what) {
    if (!a.is_array())
        throw parse_error(std::string(what) + " must be an array of rational strings");
    std::vector<Rat> v;
    v.reserve(a.size());
    for (const auto& x : a) {
        if (!x.is_string())
            throw parse_error(std::string(what) + " entries must be strings");
        v.push_back(rat_from_string(x.get<std::string>()));
    }
    return v;
}

long prime_field(const json& j) {
    if (!j.contains("prime") || !j.at("prime").is_number_integer())
        throw parse_error("missing integer field \"prime\"");
    return j.at("prime").get<long>();
}

json poly_array(const Poly& f) {
    return rat_array(f.coeffs());
}

Poly poly_from_array(const json& a, const char* what) {
    return Poly(rat_vector(a, what));
}

json ratfunc_entry(const RatFunc& f) {
    return json{{"den", poly_array(f.den())}, {"num", poly_array(f.num())}};
}

RatFunc ratfunc_entry_from_json(const json& j, const PrimeContext& ctx) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw parse_error("rational function entry needs \"num\" and \"den\"");
    return RatFunc(ctx, poly_from_array(j.at("num"), "num"),
                   poly_from_array(j.at("den"), "den"));
}

RatFuncMatrix matrix_from_json(const json& j, const char* key) {
    PrimeContext ctx(prime_field(j));
    if (!j.contains("n") || !j.at("n").is_number_unsigned())
        throw parse_error("missing dimension field \"n\"");
    std::size_t n = j.at("n").get<std::size_t>();
    const json& rows = j.at(key);
    if (!rows.is_array() || rows.size() != n)
        throw parse_error(std::string("\"") + key + "\" must be an n-row array");
    RatFuncMatrix m(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const json& row = rows.at(i);
        if (!row.is_array() || row.size() != n)
            throw parse_error("matrix rows must have n entries");
        for (std::size_t k = 0; k < n; ++k)
            m.at(i, k) = ratfunc_entry_from_json(row.at(k), ctx);
    }
    return m;
}

json matrix_to_json(const RatFuncMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k)
            row.push_back(ratfunc_entry(m.at(i, k)));
        rows.push_back(row);
    }
    return rows;
}

json opt_rat(const std::optional<Rat>& x) {
    return x ? json(rat_to_string(*x)) : json(nullptr);
}

json opt_index(const std::optional<std::size_t>& x) {
    return x ? json(*x) : json(nullptr);
}

} // namespace

json to_json(const PSeries& f) {
    return json{{"coeffs", rat_array(f.coeffs())},
                {"prime", f.context().prime()},
                {"trunc", f.trunc()}};
}

PSeries pseries_from_json(const json& j) {
    PrimeContext ctx(prime_field(j));
    if (!j.contains("coeffs") || !j.contains("trunc"))
        throw parse_error("series needs \"coeffs\" and \"trunc\"");
    std::vector<Rat> c = rat_vector(j.at("coeffs"), "coeffs");
    if (!j.at("trunc").is_number_unsigned() ||
        j.at("trunc").get<std::size_t>() != c.size())
        throw parse_error("\"trunc\" must equal the number of stored coefficients");
    return PSeries(ctx, std::move(c));
}

json to_json(const RatFunc& f) {
    json j = ratfunc_entry(f);
    j["prime"] = f.context().prime();
    return j;
}

RatFunc ratfunc_from_json(const json& j) {
    PrimeContext ctx(prime_field(j));
    return ratfunc_entry_from_json(j, ctx);
}

json to_json(const DiffSystem& sys) {
    return json{{"G", matrix_to_json(sys.G)},
                {"n", sys.dim},
                {"prime", sys.ctx.prime()}};
}

DiffSystem system_from_json(const json& j) {
    if (!j.contains("G"))
        throw parse_error("system needs a matrix field \"G\"");
    RatFuncMatrix G = matrix_from_json(j, "G");
    return DiffSystem(G.context(), G);
}

RatFuncMatrix gauge_matrix_from_json(const json& j) {
    if (!j.contains("P"))
        throw parse_error("gauge file needs a matrix field \"P\"");
    return matrix_from_json(j, "P");
}

json gauge_matrix_to_json(const RatFuncMatrix& P) {
    return json{{"P", matrix_to_json(P)},
                {"n", P.rows()},
                {"prime", P.context().prime()}};
}

json to_json(const RolleReport& r) {
    json j{{"achieving_index", opt_index(r.achieving_index)},
           {"bound_respected", r.bound_respected},
           {"etale", r.etale},
           {"injectivity_log_radius", rat_to_string(r.injectivity_log_radius.v)},
           {"rolle_bound", rat_to_string(r.bound.v)},
           {"verified_up_to", r.verified_up_to}};
    if (!r.etale)
        j["etale_witness_index"] = opt_index(r.etale_failing_index);
    return j;
}

RolleReport rolle_report_from_json(const json& j) {
    RolleReport r;
    r.etale = j.at("etale").get<bool>();
    if (j.contains("etale_witness_index") && !j.at("etale_witness_index").is_null())
        r.etale_failing_index = j.at("etale_witness_index").get<std::size_t>();
    r.etale_certified_all_orders = false;
    r.injectivity_log_radius =
        LogRadius(rat_from_string(j.at("injectivity_log_radius").get<std::string>()));
    if (!j.at("achieving_index").is_null())
        r.achieving_index = j.at("achieving_index").get<std::size_t>();
    r.bound = LogRadius(rat_from_string(j.at("rolle_bound").get<std::string>()));
    r.bound_respected = j.at("bound_respected").get<bool>();
    r.verified_up_to = j.at("verified_up_to").get<std::size_t>();
    return r;
}

json to_json(const RadiusEstimate& r) {
    return json{{"certified_prefix_min_log", rat_to_string(r.certified_prefix_min_log)},
                {"order_used", r.order_used},
                {"tail_window_log", rat_to_string(r.tail_window_log)},
                {"trivial_bound_log", rat_to_string(r.trivial_bound_log)}};
}

RadiusEstimate radius_estimate_from_json(const json& j) {
    RadiusEstimate r;
    r.certified_prefix_min_log =
        rat_from_string(j.at("certified_prefix_min_log").get<std::string>());
    r.tail_window_log = rat_from_string(j.at("tail_window_log").get<std::string>());
    r.trivial_bound_log = rat_from_string(j.at("trivial_bound_log").get<std::string>());
    r.order_used = j.at("order_used").get<std::size_t>();
    return r;
}

json to_json(const CoveringReport& r) {
    json radii = json::array();
    for (const auto& rc : r.critical_log_radii)
        radii.push_back(json{{"count", rc.count},
                             {"log_radius", rat_to_string(rc.log_radius)}});
    json phi = ratfunc_entry(r.phi);
    return json{{"branch_meets_disk_noncritical", r.branch_meets_disk_noncritical},
                {"critical_at_center", r.critical_at_center},
                {"critical_log_radii", radii},
                {"degree", r.degree},
                {"derivative_abs_constant", r.derivative_abs_constant},
                {"good_reduction_etale", r.good_reduction_etale},
                {"integral_coefficients", r.integral_coefficients},
                {"phi", phi},
                {"pi_phi_log", opt_rat(r.pi_phi_log)},
                {"poles_in_disk", r.poles_in_disk},
                {"prime", r.phi.context().prime()}};
}

json to_json(const SectionSeries& s, long prime) {
    json tail{{"certified_max_prefix", opt_rat(s.radius_report.certified_max_prefix)},
              {"window", s.radius_report.window},
              {"window_estimate", opt_rat(s.radius_report.window_estimate)}};
    return json{{"branch", rat_to_string(s.branch)},
                {"center", rat_to_string(s.center)},
                {"coeffs", rat_array(s.w.coeffs())},
                {"prime", prime},
                {"radius_report", tail},
                {"trunc", s.w.trunc()}};
}

json to_json(const SolutionMatrix& sol, long prime) {
    json rows = json::array();
    for (std::size_t i = 0; i < sol.dim; ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < sol.dim; ++k)
            row.push_back(rat_array(sol.entries[i * sol.dim + k].coeffs()));
        rows.push_back(row);
    }
    return json{{"center", rat_to_string(sol.center)},
                {"entries", rows},
                {"n", sol.dim},
                {"prime", prime},
                {"trunc", sol.entries.empty() ? 0 : sol.entries.front().trunc()}};
}

json polygon_report(const NewtonPolygon& np) {
    json points = json::array();
    for (const auto& p : np.points())
        points.push_back(json::array({p.index, rat_to_string(p.v)}));
    json vertices = json::array();
    for (const auto& p : np.vertices())
        vertices.push_back(json::array({p.index, rat_to_string(p.v)}));
    json sides = json::array();
    for (const auto& s : np.sides())
        sides.push_back(json{{"length", s.length}, {"slope", rat_to_string(s.slope)}});

    json j{{"points", points},
           {"provisional", np.provisional()},
           {"sides", sides},
           {"vertices", vertices}};
    if (np.provisional()) {
        j["roots_by_log_radius"] = nullptr;
        j["zero_multiplicity"] = nullptr;
    } else {
        RootRadiusReport rep = roots_by_log_radius(np);
        json roots = json::array();
        for (const auto& rc : rep.by_radius)
            roots.push_back(json{{"count", rc.count},
                                 {"log_radius", rat_to_string(rc.log_radius)}});
        j["roots_by_log_radius"] = roots;
        j["zero_multiplicity"] = rep.zero_multiplicity;
    }
    return j;
}

} // namespace padic
