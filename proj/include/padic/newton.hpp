#pragma once

#include "padic/poly.hpp"
#include "padic/series.hpp"
#include "padic/valuation.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

namespace padic {

struct PolygonPoint {
    std::size_t index;
    Rat v; // ord_p of the coefficient (finite: zero coefficients carry no point)

    friend bool operator==(const PolygonPoint& a, const PolygonPoint& b) {
        return a.index == b.index && a.v == b.v;
    }
};

struct PolygonSide {
    Rat slope;
    std::size_t length; // horizontal length, positive

    friend bool operator==(const PolygonSide& a, const PolygonSide& b) {
        return a.slope == b.slope && a.length == b.length;
    }
};

// Lower convex hull of {(i, ord_p a_i) : a_i != 0}.  Vertices have strictly
// increasing slopes; collinear points are merged into one side.  Polygons
// built from a truncated series are provisional: the unknown tail may still
// change the hull, so root counting refuses them.
class NewtonPolygon {
public:
    NewtonPolygon(std::vector<PolygonPoint> points, bool provisional);

    const std::vector<PolygonPoint>& points() const { return points_; }
    const std::vector<PolygonPoint>& vertices() const { return vertices_; }
    const std::vector<PolygonSide>& sides() const { return sides_; }
    bool provisional() const { return provisional_; }

private:
    std::vector<PolygonPoint> points_;
    std::vector<PolygonPoint> vertices_;
    std::vector<PolygonSide> sides_;
    bool provisional_;
};

NewtonPolygon build_polygon(const Poly& f, const PrimeContext& ctx);
NewtonPolygon build_polygon(const PSeries& f);

struct RootRadiusCount {
    Rat log_radius; // roots of absolute value p^{-log_radius}
    std::size_t count;

    friend bool operator==(const RootRadiusCount& a, const RootRadiusCount& b) {
        return a.log_radius == b.log_radius && a.count == b.count;
    }
};

struct RootRadiusReport {
    std::vector<RootRadiusCount> by_radius; // one entry per side, slope order
    std::size_t zero_multiplicity;          // multiplicity of the root 0
};

// Side of slope -sigma and length l  <=>  l roots of log-radius sigma over
// the algebraic closure.  Refuses provisional polygons.
RootRadiusReport roots_by_log_radius(const NewtonPolygon& np);

struct UnitDiskRootWitness {
    bool has_root; // some root strictly inside the open unit disk
    std::optional<PolygonSide> side;
    std::size_t zero_multiplicity;
};

UnitDiskRootWitness has_root_in_open_unit_disk(const Poly& f, const PrimeContext& ctx);

struct TailSlopeEstimate {
    // max over 1 <= n < trunc of (-ord a_n)/n: a certified lower bound on
    // the convergence log-radius limsup.  Empty when every stored
    // coefficient of index >= 1 vanishes.
    std::optional<Rat> certified_max_prefix;
    // Same max over the last `window` indices (heuristic for the limsup).
    std::optional<Rat> window_estimate;
    std::size_t window;
};

TailSlopeEstimate tail_slope_estimate(const PSeries& f, std::size_t window);

// One line "i<TAB>v" per input point, then the hull vertices.
void write_polygon_tsv(std::ostream& os, const NewtonPolygon& np);

} // namespace padic
