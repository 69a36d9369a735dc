#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "padic/covering.hpp"

#include <random>

using namespace padic;

namespace {

RatFunc rf(const PrimeContext& ctx, std::vector<long> num, std::vector<long> den = {1}) {
    std::vector<Rat> n(num.begin(), num.end()), d(den.begin(), den.end());
    return RatFunc(ctx, Poly(std::move(n)), Poly(std::move(d)));
}

// (1 + T)^e - 1 as a polynomial map.
RatFunc binomial_cover(const PrimeContext& ctx, unsigned long e) {
    return RatFunc::from_poly(ctx, Poly{Rat(1), Rat(1)}.pow(e) - Poly::constant(Rat(1)));
}

Rat binomial_coefficient(const Rat& a, std::size_t n) {
    Rat acc(1);
    for (std::size_t i = 0; i < n; ++i)
        acc *= (a - Rat(static_cast<long>(i))) / Rat(static_cast<long>(i + 1));
    return acc;
}

} // namespace

TEST_CASE("covering analysis worked examples") {
    PrimeContext p2(2);

    // phi = T + 2T^2: phi' = 1 + 4T has its root outside the disk
    CoveringReport r1 = analyze_covering(rf(p2, {0, 1, 2}));
    CHECK(r1.degree == 2);
    CHECK(r1.critical_at_center == 0);
    REQUIRE(r1.critical_log_radii.size() == 1);
    CHECK(r1.critical_log_radii[0].log_radius == Rat(-2));
    CHECK(r1.derivative_abs_constant);
    REQUIRE(r1.pi_phi_log.has_value());
    CHECK(*r1.pi_phi_log == Rat(0));
    CHECK(r1.good_reduction_etale);

    // phi = (1+T)^3 - 1 over p = 3: phi' = 3(1+T)^2, boundary roots, pi log 1
    PrimeContext p3(3);
    CoveringReport r2 = analyze_covering(binomial_cover(p3, 3));
    CHECK(r2.critical_at_center == 0);
    REQUIRE(r2.critical_log_radii.size() == 1);
    CHECK(r2.critical_log_radii[0].log_radius == Rat(0));
    CHECK(r2.critical_log_radii[0].count == 2);
    REQUIRE(r2.pi_phi_log.has_value());
    CHECK(*r2.pi_phi_log == Rat(1));
    CHECK(r2.good_reduction_etale);

    // phi = T^2 over p = 2: ramified at the center
    CoveringReport r3 = analyze_covering(rf(p2, {0, 0, 1}));
    CHECK(r3.critical_at_center == 1);
    CHECK_FALSE(r3.good_reduction_etale);

    CHECK_THROWS_AS(analyze_covering(rf(p2, {5})), domain_error);
}

TEST_CASE("the height-one pole map is flagged as the off-critical branch case") {
    // phi = (T^3 - 2)/T over p = 2: etale on the disk but with a pole at the
    // center, so the good-reduction bounds do not apply.
    PrimeContext p2(2);
    CoveringReport r = analyze_covering(rf(p2, {-2, 0, 0, 1}, {0, 1}));
    CHECK(r.degree == 3);
    CHECK(r.critical_at_center == 0);
    for (const auto& rc : r.critical_log_radii)
        CHECK_FALSE(rc.log_radius > 0);
    CHECK(r.poles_in_disk);
    CHECK_FALSE(r.good_reduction_etale);
    CHECK(r.branch_meets_disk_noncritical);
}

TEST_CASE("sections of T + T^2 through both branch points") {
    PrimeContext p2(2);
    RatFunc phi = rf(p2, {0, 1, 1});

    // branch w0 = -1: w(z) = -1 - z exactly
    SectionSeries s1 = section_series(phi, Rat(0), Rat(-1), 8);
    CHECK(s1.w.coeff(0) == -1);
    CHECK(s1.w.coeff(1) == -1);
    for (std::size_t i = 2; i < 8; ++i)
        CHECK(s1.w.coeff(i) == 0);

    // identity branch
    SectionSeries s2 = section_series(phi, Rat(0), Rat(0), 8);
    CHECK(s2.w.coeff(0) == 0);
    CHECK(s2.w.coeff(1) == 1);
    for (std::size_t i = 2; i < 8; ++i)
        CHECK(s2.w.coeff(i) == 0);

    // sections through distinct fiber points never merge
    CHECK(s1.w.coeffs() != s2.w.coeffs());

    // critical branch point is refused: phi'(-1/2) = 0
    CHECK_THROWS_AS(section_series(phi, Rat(-1, 2), Rat(-1, 2), 4), domain_error);
    // off-fiber branch point is refused
    CHECK_THROWS_AS(section_series(phi, Rat(0), Rat(1), 4), domain_error);
}

TEST_CASE("inverse branch of (1+T)^2 - 1 is the binomial series") {
    PrimeContext p2(2);
    RatFunc phi = binomial_cover(p2, 2);
    SectionSeries s = inverse_series(phi, Rat(0), Rat(0), 8);
    // w(x) = -1 + (1+x)^{1/2}: c_n = C(1/2, n)
    CHECK(s.w.coeff(1) == Rat(1, 2));
    CHECK(s.w.coeff(2) == Rat(-1, 8));
    for (std::size_t n = 1; n < 8; ++n)
        CHECK(s.w.coeff(n) == binomial_coefficient(Rat(1, 2), n));
}

TEST_CASE("section ODE: w' (phi' o w) = phi' (z) for fiber sections") {
    std::mt19937_64 rng(301);
    std::uniform_int_distribution<long> coeff(-5, 5);
    PrimeContext p3(3);
    for (int trial = 0; trial < 25; ++trial) {
        // random quadratic a T^2 + b T with a, b units, fiber of z0 = 0
        long a = coeff(rng), b = coeff(rng);
        if (a == 0 || b == 0 || a % 3 == 0 || b % 3 == 0)
            continue;
        RatFunc phi = rf(p3, {0, b, a});
        // second point on the fiber of 0: w0 = -b/a
        Rat w0 = Rat(-b) / Rat(a);
        SectionSeries s = section_series(phi, Rat(0), w0, 7);

        PSeries wp = s.w.derivative(); // trunc 6
        RatFunc dphi = phi.derivative();
        PSeries dphi_w = eval_poly_at_series(dphi.num(), s.w.truncate(6)) *
                         eval_poly_at_series(dphi.den(), s.w.truncate(6)).inverse();
        PSeries dphi_z = dphi.series_at(Rat(0), 6);
        REQUIRE(wp * dphi_w == dphi_z);

        // distinct sections stay coefficientwise distinct
        SectionSeries ident = section_series(phi, Rat(0), Rat(0), 7);
        REQUIRE(s.w.coeffs() != ident.w.coeffs());
    }
}

TEST_CASE("section radius bound for tame binomial covers") {
    for (long p : {2L, 3L}) {
        PrimeContext ctx(p);
        RatFunc phi = binomial_cover(ctx, static_cast<unsigned long>(p));
        CoveringReport rep = analyze_covering(phi);
        REQUIRE(rep.good_reduction_etale);
        REQUIRE(rep.pi_phi_log.has_value());
        CHECK(*rep.pi_phi_log == Rat(1));

        SectionSeries s = inverse_series(phi, Rat(0), Rat(0), 64);
        SectionRadiusVerdict v = section_radius_check(s, rep);
        CHECK(v.bound == Rat(1, p - 1) + Rat(1));
        CHECK(v.within_bound);
        REQUIRE(v.max_slope.has_value());
        CHECK(*v.max_slope <= v.bound);
        CHECK(*v.margin >= 0);
    }

    // polynomial sections sit far inside the bound
    PrimeContext p3(3);
    RatFunc phi = rf(p3, {0, 1, 3}); // T + 3T^2
    CoveringReport rep = analyze_covering(phi);
    REQUIRE(rep.good_reduction_etale);
    SectionSeries ident = section_series(phi, Rat(0), Rat(0), 8);
    SectionRadiusVerdict v = section_radius_check(ident, rep);
    CHECK(v.within_bound);
    REQUIRE(v.max_slope.has_value());
    CHECK(*v.max_slope == Rat(0)); // w = z

    // hypothesis is enforced
    RatFunc faber = rf(p3, {-3, 0, 0, 0, 1}, {0, 1});
    CoveringReport bad = analyze_covering(faber);
    REQUIRE_FALSE(bad.good_reduction_etale);
    CHECK_THROWS_AS(section_radius_check(ident, bad), domain_error);
}

TEST_CASE("good-reduction distance identity") {
    std::mt19937_64 rng(302);
    std::uniform_int_distribution<long> unit(1, 40);
    std::uniform_int_distribution<int> extra(0, 3);
    for (long p : {2L, 3L}) {
        PrimeContext ctx(p);
        RatFunc phi = binomial_cover(ctx, static_cast<unsigned long>(p));
        long delta_min = p == 2 ? 2 : 1; // need ord(a1 - a2) > 1/(p-1)
        for (int trial = 0; trial < 30; ++trial) {
            long u = unit(rng), v = unit(rng);
            while (u % p == 0)
                u = unit(rng);
            while (v % p == 0)
                v = unit(rng);
            Rat a1 = Rat(u) * rat_pow(Rat(p), 1 + extra(rng));
            long delta = delta_min + extra(rng);
            Rat a2 = a1 + Rat(v) * rat_pow(Rat(p), delta);

            Rat diff_images = phi.eval(a1) - phi.eval(a2);
            REQUIRE(ord_p(diff_images, ctx) == LogValue(Rat(1 + delta)));
        }
    }
}

TEST_CASE("fiber count: a degree-d polynomial has d preimages with multiplicity") {
    std::mt19937_64 rng(303);
    std::uniform_int_distribution<long> coeff(-30, 30);
    PrimeContext p5(5);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Rat> c(5);
        for (auto& x : c)
            x = Rat(coeff(rng));
        if (c[4] == 0)
            c[4] = 1;
        RatFunc phi = RatFunc::from_poly(p5, Poly(c));
        Rat a(coeff(rng));
        SurjectivityWitness w = surjectivity_witness(phi, a);
        auto rep = roots_by_log_radius(w.polygon);
        std::size_t total = rep.zero_multiplicity;
        for (const auto& rc : rep.by_radius)
            total += rc.count;
        REQUIRE(total == 4);
    }
}

TEST_CASE("surjectivity witnesses") {
    PrimeContext p2(2);
    RatFunc faber = rf(p2, {-2, 0, 0, 1}, {0, 1}); // (T^3 - 2)/T

    SurjectivityWitness w0 = surjectivity_witness(faber, Rat(0));
    CHECK(w0.surjective);
    REQUIRE(w0.side.has_value());
    CHECK(w0.side->slope == Rat(-1, 3));

    SurjectivityWitness w1 = surjectivity_witness(faber, Rat(1));
    CHECK(w1.surjective);
    REQUIRE(w1.side.has_value());
    CHECK(w1.side->slope == Rat(-1));

    SurjectivityWitness w2 = surjectivity_witness(RatFunc::variable(p2), Rat(2));
    CHECK(w2.surjective);
    REQUIRE(w2.side.has_value());
    CHECK(w2.side->slope == Rat(-1));

    // T - 1 misses the open disk for target 0 hmm: preimage of 0 is 1, on the boundary
    SurjectivityWitness w3 = surjectivity_witness(rf(p2, {-1, 1}), Rat(0));
    CHECK_FALSE(w3.surjective);
}

TEST_CASE("Kummer direct image feeds the system machinery") {
    PrimeContext p2(2);
    DiffSystem sys = kummer_direct_image_system(3, p2);
    CHECK(sys.dim == 3);
    // branch m = 1 of w^3 = x at x = 1: (1 + u)^{1/3}
    SolutionMatrix sol = solution_at_point(sys, Rat(1), 6);
    for (std::size_t n = 0; n <= 6; ++n)
        CHECK(sol.entries[1 * 3 + 1].coeff(n) == binomial_coefficient(Rat(1, 3), n));

    // tame sections converge on the whole open disk: certified log 0
    RadiusEstimate r = generic_radius(sys, GaussPoint{Rat(0)}, 8);
    CHECK(r.certified_prefix_min_log == Rat(0));

    CHECK_THROWS_AS(kummer_direct_image_system(4, p2), domain_error);
}
