#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "padic/ratfunc.hpp"
#include "padic/series.hpp"

#include <random>

using namespace padic;

namespace {

PSeries series(long p, std::vector<long> coeffs) {
    std::vector<Rat> c(coeffs.begin(), coeffs.end());
    return PSeries(PrimeContext(p), std::move(c));
}

Poly random_poly(std::mt19937_64& rng, int max_deg, long span) {
    std::uniform_int_distribution<long> coeff(-span, span);
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::vector<Rat> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c)
        x = Rat(coeff(rng));
    return Poly(std::move(c));
}

Rat random_s(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(0, 12);
    std::uniform_int_distribution<long> den(1, 4);
    Rat s(num(rng), den(rng));
    s.canonicalize();
    return s;
}

} // namespace

TEST_CASE("series arithmetic carries the tightest truncation") {
    PSeries a = series(5, {1, 1, 0});        // 1 + T mod T^3
    PSeries b = series(5, {1, -1, 0});       // 1 - T mod T^3
    PSeries prod = a * b;
    CHECK(prod == series(5, {1, 0, -1}));    // 1 - T^2 mod T^3

    PSeries t = series(5, {0, 1, 0, 0});
    PSeries zero = PSeries::zero(PrimeContext(5), 4);
    CHECK(t + zero == t);

    PSeries f = series(5, {0, 3, 3, 1});
    PSeries one = series(5, {1, 0, 0, 0});
    CHECK(f * one == f);

    CHECK((series(5, {1, 2, 3, 4}) + series(5, {1, 1})).trunc() == 2);
    CHECK_THROWS_AS(series(2, {1}) + series(3, {1}), domain_error);
}

TEST_CASE("termwise derivative drops one order") {
    PSeries f = series(5, {0, 3, 3, 1}); // 3T + 3T^2 + T^3 mod T^4
    CHECK(f.derivative() == series(5, {3, 6, 3}));

    PSeries c = series(5, {7, 0, 0, 0});
    CHECK(c.derivative() == series(5, {0, 0, 0}));

    // d/dT T^p keeps the p multiplier exactly.
    PSeries tp = series(5, {0, 0, 0, 0, 0, 1});
    CHECK(tp.derivative() == series(5, {0, 0, 0, 0, 5}));

    CHECK_THROWS_AS(series(5, {1}).derivative(), domain_error);
}

TEST_CASE("compose requires a zero constant term") {
    PSeries outer = series(2, {0, 1, 1});  // T + T^2
    PSeries inner = series(2, {-1, -1});   // -1 - T
    CHECK_THROWS_AS(compose(outer, inner), domain_error);

    PSeries sq = series(2, {0, 0, 1, 0, 0});       // T^2 mod T^5
    PSeries shift = series(2, {0, 1, 0, 1, 0});    // T + T^3 mod T^5
    CHECK(compose(sq, shift) == series(2, {0, 0, 1, 0, 2})); // T^2 + 2T^4

    PSeries affine = series(2, {1, 1, 0, 0, 0, 0, 0, 0});
    PSeries ident = series(2, {0, 1, 0, 0, 0, 0, 0, 0});
    CHECK(compose(affine, ident) == affine);
}

TEST_CASE("compose is associative at matched truncations") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<long> coeff(-6, 6);
    PrimeContext ctx(3);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t t = 8;
        auto mk = [&](bool zero_const) {
            std::vector<Rat> c(t);
            for (std::size_t i = 0; i < t; ++i)
                c[i] = Rat(coeff(rng));
            if (zero_const)
                c[0] = 0;
            return PSeries(ctx, std::move(c));
        };
        PSeries f = mk(false), g = mk(true), h = mk(true);
        CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    }
}

TEST_CASE("Leibniz rule in the truncated ring") {
    std::mt19937_64 rng(78);
    std::uniform_int_distribution<long> coeff(-9, 9);
    PrimeContext ctx(2);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Rat> a(6), b(6);
        for (auto& x : a)
            x = Rat(coeff(rng));
        for (auto& x : b)
            x = Rat(coeff(rng));
        PSeries f(ctx, a), g(ctx, b);
        PSeries lhs = (f * g).derivative();
        PSeries rhs = f.derivative() * g + f * g.derivative();
        CHECK(lhs == rhs);
    }
}

TEST_CASE("series inverse is the Cauchy-product inverse") {
    PSeries f = series(3, {1, 1, 0, 0, 0, 0});
    PSeries inv = f.inverse();
    PSeries prod = f * inv;
    CHECK(prod.coeff(0) == 1);
    for (std::size_t i = 1; i < prod.trunc(); ++i)
        CHECK(prod.coeff(i) == 0);
    CHECK_THROWS_AS(series(3, {0, 1}).inverse(), domain_error);
}

TEST_CASE("Gauss valuation examples") {
    PrimeContext p3(3);
    // T^2 + 3T at s = 0
    CHECK(gauss_valuation(Poly{Rat(0), Rat(3), Rat(1)}, GaussPoint{Rat(0)}, p3) ==
          LogValue(Rat(0)));
    // 1/T at s = 0
    RatFunc inv_t(p3, Poly::constant(Rat(1)), Poly::variable());
    CHECK(gauss_valuation(inv_t, GaussPoint{Rat(0)}) == LogValue(Rat(0)));
    // T^2 + 9 at s = 1: min(2, 0 + 2) = 2
    CHECK(gauss_valuation(Poly{Rat(9), Rat(0), Rat(1)}, GaussPoint{Rat(1)}, p3) ==
          LogValue(Rat(2)));
    // zero polynomial
    CHECK(gauss_valuation(Poly{}, GaussPoint{Rat(0)}, p3).is_infinite());
}

TEST_CASE("Gauss valuation is multiplicative and ultrametric") {
    std::mt19937_64 rng(79);
    for (long p : {2L, 3L, 5L}) {
        PrimeContext ctx(p);
        for (int trial = 0; trial < 1000 / 3; ++trial) {
            GaussPoint pt{random_s(rng)};
            Poly f = random_poly(rng, 7, 400);
            Poly g = random_poly(rng, 7, 400);
            LogValue vf = gauss_valuation(f, pt, ctx);
            LogValue vg = gauss_valuation(g, pt, ctx);
            CHECK(gauss_valuation(f * g, pt, ctx) == vf + vg);
            CHECK(gauss_valuation(f + g, pt, ctx) >= min(vf, vg));

            if (!f.is_zero() && !g.is_zero()) {
                RatFunc q(ctx, f, g);
                CHECK(gauss_valuation(q, pt) == LogValue(vf.finite() - vg.finite()));
            }
        }
    }
}

TEST_CASE("derivative contracts by at most s at the Gauss point") {
    std::mt19937_64 rng(80);
    PrimeContext ctx(2);
    for (int trial = 0; trial < 300; ++trial) {
        Poly f = random_poly(rng, 9, 1000);
        if (f.degree() < 1)
            continue;
        GaussPoint pt{random_s(rng)};
        LogValue vf = gauss_valuation(f, pt, ctx);
        LogValue vdf = gauss_valuation(f.derivative(), pt, ctx);
        CHECK(vdf >= vf + LogValue(-pt.s));
    }
}

TEST_CASE("truncated-series Gauss valuation certifies or refuses") {
    PrimeContext p3(3);
    // 9 + T^2 known mod T^4 at s = 1: min = 2, tail floor 4 > 2: certified.
    PSeries f(p3, {Rat(9), Rat(0), Rat(1), Rat(0)});
    CHECK(gauss_valuation(f, GaussPoint{Rat(1)}) == LogValue(Rat(2)));
    // Same series at s = 0: tail floor 0 is not > 0, refuse.
    CHECK_THROWS_AS(gauss_valuation(f, GaussPoint{Rat(0)}), domain_error);
    // All-zero prefix certifies nothing.
    CHECK_THROWS_AS(gauss_valuation(PSeries::zero(p3, 5), GaussPoint{Rat(1)}),
                    domain_error);
}

TEST_CASE("rational function arithmetic normalizes eagerly") {
    PrimeContext p2(2);
    RatFunc t = RatFunc::variable(p2);
    RatFunc one = RatFunc::constant(p2, Rat(1));

    // d/dT (1/T) = -1/T^2
    RatFunc inv_t = one / t;
    CHECK(inv_t.derivative() ==
          RatFunc(p2, Poly::constant(Rat(-1)), Poly{Rat(0), Rat(0), Rat(1)}));

    // T/(T+1) + 1/(T+1) = 1
    Poly tp1{Rat(1), Rat(1)};
    RatFunc a(p2, Poly::variable(), tp1);
    RatFunc b(p2, Poly::constant(Rat(1)), tp1);
    CHECK(a + b == one);

    // (T^2 - 1)/(T - 1) normalizes to T + 1
    RatFunc c(p2, Poly{Rat(-1), Rat(0), Rat(1)}, Poly{Rat(-1), Rat(1)});
    CHECK(c == RatFunc::from_poly(p2, tp1));

    CHECK_THROWS_AS(one / RatFunc::constant(p2, Rat(0)), domain_error);
    CHECK_THROWS_AS(RatFunc(p2, Poly::constant(Rat(1)), Poly{}), domain_error);
}

TEST_CASE("series expansion of a rational function") {
    PrimeContext p2(2);
    // 1/(1 - T) = sum T^i
    RatFunc geo(p2, Poly::constant(Rat(1)), Poly{Rat(1), Rat(-1)});
    PSeries g = geo.series_at(Rat(0), 6);
    for (std::size_t i = 0; i < 6; ++i)
        CHECK(g.coeff(i) == 1);

    // expansion of 1/T around 1: alternating signs in (T - 1)
    RatFunc inv_t(p2, Poly::constant(Rat(1)), Poly::variable());
    PSeries h = inv_t.series_at(Rat(1), 5);
    for (std::size_t i = 0; i < 5; ++i)
        CHECK(h.coeff(i) == (i % 2 == 0 ? Rat(1) : Rat(-1)));

    CHECK_THROWS_AS(inv_t.series_at(Rat(0), 4), domain_error);
    CHECK(inv_t.eval(Rat(2)) == Rat(1, 2));
    CHECK_THROWS_AS(inv_t.eval(Rat(0)), domain_error);
}
