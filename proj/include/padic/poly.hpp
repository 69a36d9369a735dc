#pragma once

#include "padic/errors.hpp"
#include "padic/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace padic {

// Dense univariate polynomial over Q, coefficients stored in ascending
// degree.  Normal form: no trailing zero coefficient; the zero polynomial
// stores nothing and has degree -1.  Degrees stay at desk scale, so the
// arithmetic is plain schoolbook.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(const Rat& c) { return Poly({c}); }
    static Poly variable() { return Poly({Rat(0), Rat(1)}); }
    static Poly monomial(const Rat& c, std::size_t k);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    const Rat& leading() const;

    // Index of the lowest nonzero coefficient (multiplicity of the root 0).
    std::size_t order_at_zero() const;

    Poly operator-() const;
    Poly operator+(const Poly& g) const;
    Poly operator-(const Poly& g) const;
    Poly operator*(const Poly& g) const;
    Poly operator*(const Rat& a) const;
    Poly operator/(const Rat& a) const;
    Poly& operator+=(const Poly& g) { return *this = *this + g; }
    Poly& operator-=(const Poly& g) { return *this = *this - g; }
    Poly& operator*=(const Poly& g) { return *this = *this * g; }
    bool operator==(const Poly& g) const { return c_ == g.c_; }

    Poly derivative() const;
    Poly pow(unsigned long e) const;
    Poly shifted(const Rat& a) const; // f(T + a)
    Rat eval(const Rat& x) const;
    Poly monic() const;

    // Euclidean division: *this = q * d + r, deg r < deg d.
    std::pair<Poly, Poly> divrem(const Poly& d) const;
    Poly divexact(const Poly& d) const;

    // Monic gcd; gcd(0, 0) = 0.
    friend Poly gcd(Poly a, Poly b);

private:
    void trim();
    std::vector<Rat> c_;
};

} // namespace padic
