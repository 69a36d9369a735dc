#include "padic/newton.hpp"

#include <ostream>

namespace padic {

NewtonPolygon::NewtonPolygon(std::vector<PolygonPoint> points, bool provisional)
    : points_(std::move(points)), provisional_(provisional) {
    if (points_.empty())
        throw domain_error("Newton polygon of an identically-zero input");

    // Andrew monotone chain, lower hull only.  Points arrive sorted by
    // index with distinct indices.  Exact rational cross products; a
    // non-left turn pops the middle point, which also merges collinear
    // points into a single side.
    for (const auto& c : points_) {
        while (vertices_.size() >= 2) {
            const auto& a = vertices_[vertices_.size() - 2];
            const auto& b = vertices_[vertices_.size() - 1];
            Rat cross = Rat(static_cast<long>(b.index - a.index)) * (c.v - b.v) -
                        (b.v - a.v) * Rat(static_cast<long>(c.index - b.index));
            if (cross > 0)
                break;
            vertices_.pop_back();
        }
        vertices_.push_back(c);
    }

    for (std::size_t k = 1; k < vertices_.size(); ++k) {
        std::size_t len = vertices_[k].index - vertices_[k - 1].index;
        Rat slope = (vertices_[k].v - vertices_[k - 1].v) / Rat(static_cast<long>(len));
        sides_.push_back(PolygonSide{slope, len});
    }
}

static std::vector<PolygonPoint> coefficient_points(const std::vector<Rat>& coeffs,
                                                    const PrimeContext& ctx) {
    std::vector<PolygonPoint> pts;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0)
            continue;
        pts.push_back(PolygonPoint{i, ord_p(coeffs[i], ctx).finite()});
    }
    return pts;
}

NewtonPolygon build_polygon(const Poly& f, const PrimeContext& ctx) {
    return NewtonPolygon(coefficient_points(f.coeffs(), ctx), false);
}

NewtonPolygon build_polygon(const PSeries& f) {
    return NewtonPolygon(coefficient_points(f.coeffs(), f.context()), true);
}

RootRadiusReport roots_by_log_radius(const NewtonPolygon& np) {
    if (np.provisional())
        throw domain_error("root counts of a provisional polygon are not certified");
    RootRadiusReport r;
    r.zero_multiplicity = np.vertices().front().index;
    for (const auto& s : np.sides())
        r.by_radius.push_back(RootRadiusCount{-s.slope, s.length});
    return r;
}

UnitDiskRootWitness has_root_in_open_unit_disk(const Poly& f, const PrimeContext& ctx) {
    NewtonPolygon np = build_polygon(f, ctx);
    UnitDiskRootWitness w;
    w.zero_multiplicity = np.vertices().front().index;
    w.has_root = w.zero_multiplicity > 0;
    for (const auto& s : np.sides()) {
        if (s.slope < 0) {
            w.has_root = true;
            if (!w.side || s.slope < w.side->slope)
                w.side = s;
        }
    }
    return w;
}

TailSlopeEstimate tail_slope_estimate(const PSeries& f, std::size_t window) {
    if (window < 2 || f.trunc() <= window)
        throw domain_error("tail slope window must satisfy trunc > window >= 2");
    if (f.is_zero())
        throw domain_error("tail slope of an all-zero series");

    TailSlopeEstimate est;
    est.window = window;
    std::size_t window_start = f.trunc() - window;
    for (std::size_t n = 1; n < f.trunc(); ++n) {
        if (f.coeff(n) == 0)
            continue;
        Rat slope = -ord_p(f.coeff(n), f.context()).finite() / Rat(static_cast<long>(n));
        if (!est.certified_max_prefix || slope > *est.certified_max_prefix)
            est.certified_max_prefix = slope;
        if (n >= window_start && (!est.window_estimate || slope > *est.window_estimate))
            est.window_estimate = slope;
    }
    return est;
}

void write_polygon_tsv(std::ostream& os, const NewtonPolygon& np) {
    os << "# points\n";
    for (const auto& p : np.points())
        os << p.index << '\t' << rat_to_string(p.v) << '\n';
    os << "# vertices\n";
    for (const auto& p : np.vertices())
        os << p.index << '\t' << rat_to_string(p.v) << '\n';
}

} // namespace padic
