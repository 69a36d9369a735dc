#include "padic/series.hpp"

#include <algorithm>

namespace padic {

PSeries::PSeries(PrimeContext ctx, std::vector<Rat> coeffs)
    : ctx_(ctx), c_(std::move(coeffs)) {
    if (c_.empty())
        throw domain_error("series truncation order must be positive");
}

PSeries PSeries::zero(PrimeContext ctx, std::size_t trunc) {
    return PSeries(ctx, std::vector<Rat>(trunc, Rat(0)));
}

PSeries PSeries::truncated(PrimeContext ctx, const Poly& f, std::size_t trunc) {
    std::vector<Rat> c(trunc, Rat(0));
    for (std::size_t i = 0; i < trunc; ++i)
        c[i] = f.coeff(i);
    return PSeries(ctx, std::move(c));
}

bool PSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& x) { return x == 0; });
}

static void require_same_context(const PSeries& a, const PSeries& b) {
    if (a.context() != b.context())
        throw domain_error("prime context mismatch");
}

PSeries PSeries::operator+(const PSeries& g) const {
    require_same_context(*this, g);
    std::size_t t = std::min(trunc(), g.trunc());
    std::vector<Rat> c(t);
    for (std::size_t i = 0; i < t; ++i)
        c[i] = c_[i] + g.c_[i];
    return PSeries(ctx_, std::move(c));
}

PSeries PSeries::operator-(const PSeries& g) const {
    require_same_context(*this, g);
    std::size_t t = std::min(trunc(), g.trunc());
    std::vector<Rat> c(t);
    for (std::size_t i = 0; i < t; ++i)
        c[i] = c_[i] - g.c_[i];
    return PSeries(ctx_, std::move(c));
}

PSeries PSeries::operator*(const PSeries& g) const {
    require_same_context(*this, g);
    std::size_t t = std::min(trunc(), g.trunc());
    std::vector<Rat> c(t, Rat(0));
    for (std::size_t i = 0; i < t; ++i) {
        if (c_[i] == 0)
            continue;
        for (std::size_t j = 0; i + j < t; ++j)
            c[i + j] += c_[i] * g.c_[j];
    }
    return PSeries(ctx_, std::move(c));
}

PSeries PSeries::operator*(const Rat& a) const {
    std::vector<Rat> c(c_);
    for (auto& x : c)
        x *= a;
    return PSeries(ctx_, std::move(c));
}

PSeries PSeries::operator-() const { return *this * Rat(-1); }

PSeries PSeries::derivative() const {
    if (trunc() < 2)
        throw domain_error("derivative needs truncation order >= 2");
    std::vector<Rat> c(trunc() - 1);
    for (std::size_t i = 1; i < trunc(); ++i)
        c[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return PSeries(ctx_, std::move(c));
}

PSeries PSeries::inverse() const {
    if (c_[0] == 0)
        throw domain_error("series inverse needs a unit constant term");
    std::vector<Rat> b(trunc(), Rat(0));
    b[0] = Rat(1) / c_[0];
    for (std::size_t i = 1; i < trunc(); ++i) {
        Rat acc(0);
        for (std::size_t j = 1; j <= i; ++j)
            acc += c_[j] * b[i - j];
        b[i] = -acc / c_[0];
    }
    return PSeries(ctx_, std::move(b));
}

PSeries PSeries::truncate(std::size_t t) const {
    if (t == 0 || t > trunc())
        throw domain_error("invalid truncation order");
    return PSeries(ctx_, std::vector<Rat>(c_.begin(), c_.begin() + t));
}

PSeries PSeries::padded(std::size_t t) const {
    if (t < trunc())
        throw domain_error("padding cannot shrink a series");
    std::vector<Rat> c(c_);
    c.resize(t, Rat(0));
    return PSeries(ctx_, std::move(c));
}

PSeries compose(const PSeries& outer, const PSeries& inner) {
    require_same_context(outer, inner);
    if (inner.coeff(0) != 0)
        throw domain_error("compose requires inner series with zero constant term");
    std::size_t t = std::min(outer.trunc(), inner.trunc());
    PSeries in = inner.truncate(t);
    PSeries r = PSeries::zero(outer.context(), t);
    // Horner: terms of outer beyond degree t-1 only affect orders >= t.
    std::size_t top = std::min(outer.trunc(), t);
    for (std::size_t i = top; i-- > 0;) {
        r = r * in;
        std::vector<Rat> c(r.coeffs());
        c[0] += outer.coeff(i);
        r = PSeries(outer.context(), std::move(c));
    }
    return r;
}

PSeries eval_poly_at_series(const Poly& f, const PSeries& at) {
    PSeries r = PSeries::zero(at.context(), at.trunc());
    for (int i = f.degree(); i >= 0; --i) {
        r = r * at;
        std::vector<Rat> c(r.coeffs());
        c[0] += f.coeff(static_cast<std::size_t>(i));
        r = PSeries(at.context(), std::move(c));
    }
    return r;
}

LogValue gauss_valuation(const Poly& f, const GaussPoint& pt, const PrimeContext& ctx) {
    LogValue best = LogValue::infinity();
    const auto& c = f.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0)
            continue;
        LogValue v = ord_p(c[i], ctx) + LogValue(pt.s * Rat(static_cast<long>(i)));
        best = min(best, v);
    }
    return best;
}

LogValue gauss_valuation(const PSeries& f, const GaussPoint& pt) {
    LogValue best = LogValue::infinity();
    for (std::size_t i = 0; i < f.trunc(); ++i) {
        if (f.coeff(i) == 0)
            continue;
        LogValue v = ord_p(f.coeff(i), f.context()) +
                     LogValue(pt.s * Rat(static_cast<long>(i)));
        best = min(best, v);
    }
    // Certify against the tail: with integral tail coefficients, term i
    // contributes at least i*s, so trunc*s must strictly exceed the minimum.
    LogValue tail_floor(pt.s * Rat(static_cast<long>(f.trunc())));
    if (best.is_infinite() || !(best < tail_floor))
        throw domain_error(
            "Gauss valuation of a truncated series is not certified at s = " +
            rat_to_string(pt.s) + " (minimum may move into the tail)");
    return best;
}

} // namespace padic
