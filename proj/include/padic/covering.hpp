#pragma once

#include "padic/diffsys.hpp"
#include "padic/newton.hpp"
#include "padic/ratfunc.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace padic {

// Disk-level critical data of a finite covering given by a rational map.
struct CoveringReport {
    RatFunc phi;
    std::size_t degree; // max(deg num, deg den)

    // Zeros of num(phi'), classified by log-radius; raw sides, any sign.
    std::vector<RootRadiusCount> critical_log_radii;
    std::size_t critical_at_center; // multiplicity of the critical root T = 0

    // v_0(phi') when |phi'| is certified constant on the open unit disk
    // (no zero or pole of phi' of log-radius > 0 or at the center).
    std::optional<Rat> pi_phi_log;
    bool derivative_abs_constant;

    bool integral_coefficients; // num and den of phi have ord >= 0 coefficients
    bool poles_in_disk;         // den(phi) has a root inside the open unit disk
    bool good_reduction_etale;

    // The branch locus meets the disk through a non-critical fiber point:
    // phi has a pole inside while phi' has no zero inside.  The good
    // reduction bounds do not apply there.
    bool branch_meets_disk_noncritical;
};

CoveringReport analyze_covering(const RatFunc& phi);

// Series branch w(z) solving phi(w(z)) = phi(z) (or a prescribed right-hand
// side) around z0, with w(z0) = w0.
struct SectionSeries {
    Rat center; // z0
    Rat branch; // w0
    PSeries w;  // in u = z - z0, constant term w0, trunc = requested order
    TailSlopeEstimate radius_report;
};

// Hensel linearization on phi(w) = phi(z): each coefficient is produced by
// dividing by the unit phi'(w0).  Requires phi(w0) = phi(z0) exactly and
// phi'(w0) != 0 (non-critical branch); exact compose-check at order N.
SectionSeries section_series(const RatFunc& phi, const Rat& z0, const Rat& w0,
                             std::size_t N);

// Local inverse: solves phi(w(x)) = x with w(x0) = w0, phi(w0) = x0.
SectionSeries inverse_series(const RatFunc& phi, const Rat& x0, const Rat& w0,
                             std::size_t N);

struct SectionRadiusVerdict {
    Rat bound; // 1/(p-1) + pi_phi_log
    std::optional<Rat> max_slope;
    std::optional<Rat> margin; // bound - max_slope
    std::optional<Rat> window_estimate;
    bool within_bound;
};

// Checks (-ord c_n)/n <= 1/(p-1) + pi_phi_log for every computed
// coefficient.  Requires report.good_reduction_etale; refuses otherwise.
SectionRadiusVerdict section_radius_check(const SectionSeries& s,
                                          const CoveringReport& report);

struct SurjectivityWitness {
    bool surjective; // a preimage of the target lies strictly inside the disk
    NewtonPolygon polygon;
    std::optional<PolygonSide> side;
    std::size_t zero_multiplicity;
};

// A root of num(phi - a) of log-radius > 0 (or at the center) witnesses a
// preimage of a strictly inside the open unit disk.
SurjectivityWitness surjectivity_witness(const RatFunc& phi, const Rat& a);

// Direct-image generator for the Kummer covering w^d = x, gcd(d, p) = 1:
// the diagonal system G = diag(m/d * 1/T), m = 0..d-1, whose solutions are
// the branches x^{m/d}.
DiffSystem kummer_direct_image_system(std::size_t d, const PrimeContext& ctx);

} // namespace padic
