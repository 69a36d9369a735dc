#pragma once

#include "padic/diffsys.hpp"
#include "padic/newton.hpp"
#include "padic/poly.hpp"
#include "padic/valuation.hpp"

#include <cstddef>
#include <vector>

namespace padic::batch {

// Data-parallel sweeps over independent instances.  Every kernel has an
// OpenMP version and a serial reference computing the identical result;
// tools/bench_kernels.cpp compares them.

struct KeySweepResult {
    bool all_hold;
    long long first_failure; // smallest failing n, 0 when all hold
    unsigned long long checked;
};

KeySweepResult key_inequality_sweep(const PrimeContext& ctx, long long lo, long long hi);
KeySweepResult key_inequality_sweep_serial(const PrimeContext& ctx, long long lo, long long hi);

std::vector<NewtonPolygon> build_polygons(const std::vector<Poly>& fs,
                                          const PrimeContext& ctx);
std::vector<NewtonPolygon> build_polygons_serial(const std::vector<Poly>& fs,
                                                 const PrimeContext& ctx);

std::vector<RadiusEstimate> generic_radius_batch(const std::vector<DiffSystem>& systems,
                                                 const GaussPoint& pt, std::size_t N);
std::vector<RadiusEstimate> generic_radius_batch_serial(
    const std::vector<DiffSystem>& systems, const GaussPoint& pt, std::size_t N);

} // namespace padic::batch
