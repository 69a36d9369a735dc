#include "padic/covering.hpp"

#include <algorithm>
#include <numeric>

namespace padic {

namespace {

struct InsideRoots {
    bool any;               // some root of log-radius > 0 or at the center
    std::size_t at_center;  // multiplicity of the root 0
};

InsideRoots roots_inside_disk(const Poly& f, const PrimeContext& ctx) {
    InsideRoots r{false, 0};
    if (f.degree() <= 0)
        return r;
    RootRadiusReport rep = roots_by_log_radius(build_polygon(f, ctx));
    r.at_center = rep.zero_multiplicity;
    r.any = rep.zero_multiplicity > 0;
    for (const auto& rc : rep.by_radius)
        if (rc.log_radius > 0)
            r.any = true;
    return r;
}

bool integral(const Poly& f, const PrimeContext& ctx) {
    for (const auto& c : f.coeffs())
        if (c != 0 && ord_p(c, ctx) < LogValue(Rat(0)))
            return false;
    return true;
}

// Evaluate a rational function at a series whose constant term is not a
// pole of f.
PSeries ratfunc_at_series(const RatFunc& f, const PSeries& at) {
    PSeries n = eval_poly_at_series(f.num(), at);
    PSeries d = eval_poly_at_series(f.den(), at);
    return n * d.inverse();
}

// Core solver: phi(w(z)) = rhs(z) around z0 with w(z0) = w0, by Newton
// lifting in the truncated-series ring (precision doubles per step; each
// correction divides by the unit phi'(w0)).
PSeries solve_section(const RatFunc& phi, const RatFunc& rhs, const Rat& z0,
                      const Rat& w0, std::size_t N) {
    const PrimeContext& ctx = phi.context();
    if (N < 1)
        throw domain_error("section order must be >= 1");
    if (phi.has_pole_at(w0))
        throw domain_error("branch point is a pole of the covering");
    if (rhs.has_pole_at(z0))
        throw domain_error("center is a pole");
    if (phi.eval(w0) != rhs.eval(z0))
        throw domain_error("branch point does not lie on the fiber");
    RatFunc dphi = phi.derivative();
    if (dphi.eval(w0) == 0)
        throw domain_error("critical branch point");

    PSeries g = rhs.series_at(z0, N);
    PSeries w(ctx, {w0});
    std::size_t prec = 1;
    while (prec < N) {
        std::size_t next = std::min(2 * prec, N);
        w = w.padded(next);
        PSeries value = ratfunc_at_series(phi, w) - g.truncate(next);
        PSeries slope = ratfunc_at_series(dphi, w);
        w = w - value * slope.inverse();
        prec = next;
    }

    // Exact compose-check after clearing denominators:
    // num(phi)(w) den(rhs)(z) - num(rhs)(z) den(phi)(w) = 0 mod u^N.
    std::vector<Rat> zc(N, Rat(0));
    zc[0] = z0;
    if (N > 1)
        zc[1] = 1;
    PSeries z(ctx, std::move(zc));
    PSeries lhs = eval_poly_at_series(phi.num(), w) * eval_poly_at_series(rhs.den(), z) -
                  eval_poly_at_series(rhs.num(), z) * eval_poly_at_series(phi.den(), w);
    if (!lhs.is_zero())
        throw std::logic_error("section solver lost the defining equation");
    return w;
}

TailSlopeEstimate section_tail(const PSeries& w) {
    if (w.trunc() >= 4 && !w.is_zero()) {
        std::size_t window = std::max<std::size_t>(2, (w.trunc() + 3) / 4);
        if (window < w.trunc())
            return tail_slope_estimate(w, window);
    }
    return TailSlopeEstimate{std::nullopt, std::nullopt, 0};
}

} // namespace

CoveringReport analyze_covering(const RatFunc& phi) {
    if (phi.is_constant())
        throw domain_error("covering map must be nonconstant");
    const PrimeContext& ctx = phi.context();

    CoveringReport rep{phi,   0, {}, 0, std::nullopt, false,
                       false, false, false, false};
    rep.degree = static_cast<std::size_t>(
        std::max(phi.num().degree(), phi.den().degree()));

    RatFunc dphi = phi.derivative(); // nonzero in characteristic zero

    RootRadiusReport crit = roots_by_log_radius(build_polygon(dphi.num(), ctx));
    rep.critical_log_radii = crit.by_radius;
    rep.critical_at_center = crit.zero_multiplicity;

    bool crit_inside = crit.zero_multiplicity > 0 ||
                       std::any_of(crit.by_radius.begin(), crit.by_radius.end(),
                                   [](const RootRadiusCount& rc) {
                                       return rc.log_radius > 0;
                                   });
    InsideRoots dpole = roots_inside_disk(dphi.den(), ctx);
    rep.derivative_abs_constant = !crit_inside && !dpole.any;
    if (rep.derivative_abs_constant)
        rep.pi_phi_log = gauss_valuation(dphi, GaussPoint{Rat(0)}).finite();

    rep.integral_coefficients = integral(phi.num(), ctx) && integral(phi.den(), ctx);
    rep.poles_in_disk = roots_inside_disk(phi.den(), ctx).any;
    rep.good_reduction_etale = rep.integral_coefficients &&
                               rep.derivative_abs_constant && !rep.poles_in_disk;
    rep.branch_meets_disk_noncritical = rep.poles_in_disk && !crit_inside;
    return rep;
}

SectionSeries section_series(const RatFunc& phi, const Rat& z0, const Rat& w0,
                             std::size_t N) {
    PSeries w = solve_section(phi, phi, z0, w0, N);
    return SectionSeries{z0, w0, w, section_tail(w)};
}

SectionSeries inverse_series(const RatFunc& phi, const Rat& x0, const Rat& w0,
                             std::size_t N) {
    PSeries w = solve_section(phi, RatFunc::variable(phi.context()), x0, w0, N);
    return SectionSeries{x0, w0, w, section_tail(w)};
}

SectionRadiusVerdict section_radius_check(const SectionSeries& s,
                                          const CoveringReport& report) {
    if (!report.good_reduction_etale)
        throw domain_error(
            "section radius bound requires disk-level good reduction");
    const PrimeContext& ctx = s.w.context();
    SectionRadiusVerdict v;
    v.bound = Rat(1, ctx.prime() - 1) + *report.pi_phi_log;
    for (std::size_t n = 1; n < s.w.trunc(); ++n) {
        if (s.w.coeff(n) == 0)
            continue;
        Rat slope = -ord_p(s.w.coeff(n), ctx).finite() / Rat(static_cast<long>(n));
        if (!v.max_slope || slope > *v.max_slope)
            v.max_slope = slope;
    }
    if (v.max_slope)
        v.margin = v.bound - *v.max_slope;
    v.window_estimate = s.radius_report.window_estimate;
    v.within_bound = !v.max_slope || *v.max_slope <= v.bound;
    return v;
}

SurjectivityWitness surjectivity_witness(const RatFunc& phi, const Rat& a) {
    if (phi.is_constant())
        throw domain_error("covering map must be nonconstant");
    RatFunc shifted = phi - RatFunc::constant(phi.context(), a);
    NewtonPolygon np = build_polygon(shifted.num(), phi.context());
    RootRadiusReport rep = roots_by_log_radius(np);

    SurjectivityWitness w{false, np, std::nullopt, rep.zero_multiplicity};
    w.surjective = rep.zero_multiplicity > 0;
    for (const auto& s : np.sides()) {
        if (s.slope < 0) {
            w.surjective = true;
            if (!w.side || s.slope < w.side->slope)
                w.side = s;
        }
    }
    return w;
}

DiffSystem kummer_direct_image_system(std::size_t d, const PrimeContext& ctx) {
    if (d == 0)
        throw domain_error("Kummer degree must be positive");
    if (std::gcd(d, static_cast<std::size_t>(ctx.prime())) != 1)
        throw domain_error("Kummer covering must be tame: gcd(d, p) = 1");
    RatFuncMatrix G(ctx, d, d);
    for (std::size_t m = 0; m < d; ++m) {
        // mpq_class(n, d) does not canonicalize on its own.
        Rat ratio(static_cast<long>(m), static_cast<long>(d));
        ratio.canonicalize();
        G.at(m, m) = RatFunc(ctx, Poly::constant(ratio), Poly::variable());
    }
    return DiffSystem(ctx, G);
}

} // namespace padic
