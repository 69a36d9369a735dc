#pragma once

#include "padic/poly.hpp"
#include "padic/valuation.hpp"

#include <cstddef>
#include <vector>

namespace padic {

// Power series in T truncated at order `trunc`: the coefficients 0..trunc-1
// are known exactly, everything beyond is unknown.  Arithmetic always
// carries the tightest truncation implied by its inputs and never silently
// extends precision.
class PSeries {
public:
    // trunc = coeffs.size(), must be >= 1.
    PSeries(PrimeContext ctx, std::vector<Rat> coeffs);

    static PSeries zero(PrimeContext ctx, std::size_t trunc);
    static PSeries truncated(PrimeContext ctx, const Poly& f, std::size_t trunc);

    std::size_t trunc() const { return c_.size(); }
    const PrimeContext& context() const { return ctx_; }
    const Rat& coeff(std::size_t i) const { return c_.at(i); }
    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const;

    PSeries operator+(const PSeries& g) const;
    PSeries operator-(const PSeries& g) const;
    PSeries operator*(const PSeries& g) const; // Cauchy product, min trunc
    PSeries operator*(const Rat& a) const;
    PSeries operator-() const;
    bool operator==(const PSeries& g) const {
        return ctx_ == g.ctx_ && c_ == g.c_;
    }

    // Termwise derivative; drops one order, so requires trunc >= 2.
    PSeries derivative() const;

    // Multiplicative inverse modulo T^trunc; requires coeff(0) != 0.
    PSeries inverse() const;

    // Tighten the truncation order to t <= trunc.
    PSeries truncate(std::size_t t) const;

    // Extend with zero coefficients up to order t.  This asserts the new
    // coefficients are exactly zero; callers must overwrite or correct them
    // (used by the Hensel lifting loop, not a precision claim).
    PSeries padded(std::size_t t) const;

private:
    PrimeContext ctx_;
    std::vector<Rat> c_;
};

// outer(inner) in the truncated ring; inner must have zero constant term.
PSeries compose(const PSeries& outer, const PSeries& inner);

// Plain Horner evaluation of a polynomial at a series (no restriction on
// the constant term of `at`).
PSeries eval_poly_at_series(const Poly& f, const PSeries& at);

// The point t_{0,rho} with rho = p^{-s}; s = 0 is the Gauss point of the
// closed unit disk, arbitrary rational s is allowed for annulus work.
struct GaussPoint {
    Rat s;
};

// v_s(sum a_i T^i) = min_i (ord_p a_i + i s); +inf for the zero polynomial.
LogValue gauss_valuation(const Poly& f, const GaussPoint& pt, const PrimeContext& ctx);

// Same for a truncated series.  The minimum over stored coefficients is
// returned only when it is certified stable against the (integral) tail:
// i*s must exceed it for all i >= trunc.  Otherwise this throws rather than
// guessing.
LogValue gauss_valuation(const PSeries& f, const GaussPoint& pt);

} // namespace padic
