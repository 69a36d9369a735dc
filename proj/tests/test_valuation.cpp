#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "padic/valuation.hpp"

#include <random>

using namespace padic;

TEST_CASE("prime context validates primality") {
    CHECK_NOTHROW(PrimeContext(2));
    CHECK_NOTHROW(PrimeContext(97));
    CHECK_THROWS_AS(PrimeContext(1), domain_error);
    CHECK_THROWS_AS(PrimeContext(4), domain_error);
    CHECK_THROWS_AS(PrimeContext(91), domain_error); // 7 * 13
}

TEST_CASE("ord_p on prime powers and mixed rationals") {
    CHECK(ord_p(Rat(8), PrimeContext(2)) == LogValue(Rat(3)));
    CHECK(ord_p(Rat(6) / 5, PrimeContext(3)) == LogValue(Rat(1)));
    CHECK(ord_p(Rat(0), PrimeContext(5)).is_infinite());
    CHECK(ord_p(Rat(1, 4), PrimeContext(2)) == LogValue(Rat(-2)));
    CHECK(ord_p(Rat(-18, 25), PrimeContext(5)) == LogValue(Rat(-2)));
}

TEST_CASE("ord_p is multiplicative") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> d(-5000, 5000);
    for (long p : {2L, 3L, 7L}) {
        PrimeContext ctx(p);
        for (int trial = 0; trial < 10000 / 3; ++trial) {
            Rat x(d(rng)), y(d(rng));
            long dx = d(rng), dy = d(rng);
            if (dx != 0)
                x /= dx;
            if (dy != 0)
                y /= dy;
            CHECK(ord_p(x * y, ctx) == ord_p(x, ctx) + ord_p(y, ctx));
        }
    }
}

TEST_CASE("ultrametric inequality, equality when valuations differ") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<long> d(-2000, 2000);
    PrimeContext ctx(3);
    for (int trial = 0; trial < 2000; ++trial) {
        Rat x(d(rng)), y(d(rng));
        LogValue vx = ord_p(x, ctx), vy = ord_p(y, ctx), vs = ord_p(x + y, ctx);
        CHECK(vs >= min(vx, vy));
        if (vx != vy)
            CHECK(vs == min(vx, vy));
    }
}

TEST_CASE("factorial valuation agrees with the floor-sum oracle") {
    CHECK(factorial_valuation(4, PrimeContext(2)) == LogValue(Rat(3)));
    CHECK(factorial_valuation(0, PrimeContext(5)) == LogValue(Rat(0)));
    CHECK(factorial_valuation(16, PrimeContext(2)) == LogValue(Rat(15)));

    for (long p : {2L, 3L, 5L, 7L}) {
        PrimeContext ctx(p);
        for (unsigned long n = 0; n <= 10000; ++n) {
            long long sum = 0;
            for (unsigned long q = static_cast<unsigned long>(p); q <= n;
                 q *= static_cast<unsigned long>(p)) {
                sum += static_cast<long long>(n / q);
                if (q > n / static_cast<unsigned long>(p))
                    break;
            }
            REQUIRE(factorial_valuation(n, ctx) == LogValue(Rat(static_cast<long>(sum))));
        }
    }
}

TEST_CASE("key inequality witnesses") {
    auto w = key_inequality_check(2, PrimeContext(2));
    CHECK(w.holds);
    CHECK(w.k == 1);
    CHECK(w.m == 1);
    CHECK(w.lhs == w.rhs); // equality case p^k m - 1 = k (p - 1)

    w = key_inequality_check(9, PrimeContext(3));
    CHECK(w.holds);
    CHECK(w.k == 2);
    CHECK(w.lhs == 8);
    CHECK(w.rhs == 4);

    w = key_inequality_check(6, PrimeContext(5));
    CHECK(w.holds);
    CHECK(w.k == 0);
    CHECK(w.m == 6);

    CHECK_THROWS_AS(key_inequality_check(1, PrimeContext(2)), domain_error);
}

TEST_CASE("LogValue algebra") {
    LogValue inf = LogValue::infinity();
    CHECK((inf + LogValue(Rat(5))).is_infinite());
    CHECK(min(inf, LogValue(Rat(-7))) == LogValue(Rat(-7)));
    CHECK(min(LogValue(Rat(1, 2)), LogValue(Rat(1, 3))) == LogValue(Rat(1, 3)));
    CHECK(inf == LogValue::infinity());
    CHECK(LogValue(Rat(1)) < inf);
    CHECK(inf.str() == "inf");
    CHECK(LogValue(Rat(-3, 2)).str() == "-3/2");
    CHECK_THROWS_AS(inf.finite(), domain_error);
    CHECK_THROWS_AS(LogRadius(Rat(-1)), domain_error);
}
