#pragma once

#include "padic/poly.hpp"
#include "padic/series.hpp"
#include "padic/valuation.hpp"

namespace padic {

// Quotient of two polynomials over Q.  Eagerly normalized: gcd(num, den) = 1
// and den is monic, so equality is structural.
class RatFunc {
public:
    RatFunc(PrimeContext ctx, Poly num, Poly den);

    static RatFunc from_poly(PrimeContext ctx, Poly f) {
        return RatFunc(ctx, std::move(f), Poly::constant(Rat(1)));
    }
    static RatFunc constant(PrimeContext ctx, const Rat& c) {
        return from_poly(ctx, Poly::constant(c));
    }
    static RatFunc variable(PrimeContext ctx) {
        return from_poly(ctx, Poly::variable());
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const PrimeContext& context() const { return ctx_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    RatFunc operator+(const RatFunc& g) const;
    RatFunc operator-(const RatFunc& g) const;
    RatFunc operator*(const RatFunc& g) const;
    RatFunc operator/(const RatFunc& g) const; // throws on division by zero
    RatFunc operator-() const;
    bool operator==(const RatFunc& g) const {
        return ctx_ == g.ctx_ && num_ == g.num_ && den_ == g.den_;
    }

    RatFunc derivative() const; // quotient rule, normalized

    bool has_pole_at(const Rat& x) const { return den_.eval(x) == 0; }
    Rat eval(const Rat& x) const; // throws at a pole

    // Taylor expansion around x as a series in (T - x); x must not be a pole.
    PSeries series_at(const Rat& x, std::size_t trunc) const;

private:
    PrimeContext ctx_;
    Poly num_;
    Poly den_;
};

// v_s(num) - v_s(den); +inf iff the function is zero.
LogValue gauss_valuation(const RatFunc& f, const GaussPoint& pt);

} // namespace padic
