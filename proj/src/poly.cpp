#include "padic/poly.hpp"

#include <algorithm>

namespace padic {

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Poly Poly::monomial(const Rat& c, std::size_t k) {
    if (c == 0)
        return {};
    std::vector<Rat> v(k + 1, Rat(0));
    v[k] = c;
    Poly f;
    f.c_ = std::move(v);
    return f;
}

const Rat& Poly::leading() const {
    if (c_.empty())
        throw domain_error("leading coefficient of the zero polynomial");
    return c_.back();
}

std::size_t Poly::order_at_zero() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0)
            return i;
    throw domain_error("order at zero of the zero polynomial");
}

Poly Poly::operator-() const {
    Poly r;
    r.c_.reserve(c_.size());
    for (const auto& x : c_)
        r.c_.push_back(-x);
    return r;
}

Poly Poly::operator+(const Poly& g) const {
    Poly r;
    r.c_.assign(std::max(c_.size(), g.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        r.c_[i] = c_[i];
    for (std::size_t i = 0; i < g.c_.size(); ++i)
        r.c_[i] += g.c_[i];
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& g) const { return *this + (-g); }

Poly Poly::operator*(const Poly& g) const {
    if (is_zero() || g.is_zero())
        return {};
    Poly r;
    r.c_.assign(c_.size() + g.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < g.c_.size(); ++j)
            r.c_[i + j] += c_[i] * g.c_[j];
    }
    r.trim();
    return r;
}

Poly Poly::operator*(const Rat& a) const {
    if (a == 0)
        return {};
    Poly r;
    r.c_.reserve(c_.size());
    for (const auto& x : c_)
        r.c_.push_back(x * a);
    return r;
}

Poly Poly::operator/(const Rat& a) const {
    if (a == 0)
        throw domain_error("division of a polynomial by zero");
    return *this * (Rat(1) / a);
}

Poly Poly::derivative() const {
    Poly r;
    if (c_.size() <= 1)
        return r;
    r.c_.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r.c_.push_back(c_[i] * Rat(static_cast<long>(i)));
    r.trim();
    return r;
}

Poly Poly::pow(unsigned long e) const {
    Poly acc = constant(Rat(1));
    Poly b = *this;
    while (e) {
        if (e & 1)
            acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

Poly Poly::shifted(const Rat& a) const {
    // Horner in T + a.
    Poly r;
    Poly lin({a, Rat(1)});
    for (int i = degree(); i >= 0; --i)
        r = r * lin + constant(c_[static_cast<std::size_t>(i)]);
    return r;
}

Rat Poly::eval(const Rat& x) const {
    Rat r(0);
    for (int i = degree(); i >= 0; --i)
        r = r * x + c_[static_cast<std::size_t>(i)];
    return r;
}

Poly Poly::monic() const {
    if (is_zero())
        return {};
    return *this / leading();
}

std::pair<Poly, Poly> Poly::divrem(const Poly& d) const {
    if (d.is_zero())
        throw domain_error("polynomial division by zero");
    Poly q;
    Poly r = *this;
    const int dd = d.degree();
    const Rat& lc = d.leading();
    while (!r.is_zero() && r.degree() >= dd) {
        std::size_t shift = static_cast<std::size_t>(r.degree() - dd);
        Rat factor = r.leading() / lc;
        q += monomial(factor, shift);
        r -= d * monomial(factor, shift);
    }
    return {q, r};
}

Poly Poly::divexact(const Poly& d) const {
    auto [q, r] = divrem(d);
    if (!r.is_zero())
        throw domain_error("inexact polynomial division");
    return q;
}

Poly gcd(Poly a, Poly b) {
    // Euclid over Q; remainders are made monic to limit coefficient growth.
    while (!b.is_zero()) {
        Poly r = a.divrem(b).second;
        a = std::move(b);
        b = r.is_zero() ? Poly() : r.monic();
    }
    return a.is_zero() ? a : a.monic();
}

} // namespace padic
