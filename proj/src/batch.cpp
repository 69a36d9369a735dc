#include "padic/batch.hpp"

#include <climits>

namespace padic::batch {

KeySweepResult key_inequality_sweep_serial(const PrimeContext& ctx, long long lo,
                                           long long hi) {
    if (lo < 2)
        throw domain_error("key inequality sweep starts at n >= 2");
    long long fail = LLONG_MAX;
    for (long long n = lo; n <= hi; ++n)
        if (!key_inequality_check(n, ctx).holds) {
            fail = n;
            break;
        }
    KeySweepResult r;
    r.checked = hi >= lo ? static_cast<unsigned long long>(hi - lo + 1) : 0;
    r.all_hold = fail == LLONG_MAX;
    r.first_failure = r.all_hold ? 0 : fail;
    return r;
}

KeySweepResult key_inequality_sweep(const PrimeContext& ctx, long long lo,
                                    long long hi) {
    if (lo < 2)
        throw domain_error("key inequality sweep starts at n >= 2");
    long long fail = LLONG_MAX;
#pragma omp parallel for reduction(min : fail) schedule(static)
    for (long long n = lo; n <= hi; ++n)
        if (!key_inequality_check(n, ctx).holds && n < fail)
            fail = n;
    KeySweepResult r;
    r.checked = hi >= lo ? static_cast<unsigned long long>(hi - lo + 1) : 0;
    r.all_hold = fail == LLONG_MAX;
    r.first_failure = r.all_hold ? 0 : fail;
    return r;
}

std::vector<NewtonPolygon> build_polygons_serial(const std::vector<Poly>& fs,
                                                 const PrimeContext& ctx) {
    std::vector<NewtonPolygon> out;
    out.reserve(fs.size());
    for (const auto& f : fs)
        out.push_back(build_polygon(f, ctx));
    return out;
}

std::vector<NewtonPolygon> build_polygons(const std::vector<Poly>& fs,
                                          const PrimeContext& ctx) {
    std::vector<NewtonPolygon> out(fs.size(),
                                   NewtonPolygon({PolygonPoint{0, Rat(0)}}, false));
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < fs.size(); ++i)
        out[i] = build_polygon(fs[i], ctx);
    return out;
}

std::vector<RadiusEstimate> generic_radius_batch_serial(
    const std::vector<DiffSystem>& systems, const GaussPoint& pt, std::size_t N) {
    std::vector<RadiusEstimate> out;
    out.reserve(systems.size());
    for (const auto& sys : systems)
        out.push_back(generic_radius(sys, pt, N));
    return out;
}

std::vector<RadiusEstimate> generic_radius_batch(const std::vector<DiffSystem>& systems,
                                                 const GaussPoint& pt, std::size_t N) {
    std::vector<RadiusEstimate> out(systems.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < systems.size(); ++i)
        out[i] = generic_radius(systems[i], pt, N);
    return out;
}

} // namespace padic::batch
