#include "padic/ratfunc.hpp"

namespace padic {

RatFunc::RatFunc(PrimeContext ctx, Poly num, Poly den)
    : ctx_(ctx), num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(Rat(1));
        return;
    }
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divexact(g);
        den_ = den_.divexact(g);
    }
    Rat lc = den_.leading();
    num_ = num_ / lc;
    den_ = den_ / lc;
}

static void require_same_context(const RatFunc& a, const RatFunc& b) {
    if (a.context() != b.context())
        throw domain_error("prime context mismatch");
}

RatFunc RatFunc::operator+(const RatFunc& g) const {
    require_same_context(*this, g);
    return RatFunc(ctx_, num_ * g.den_ + g.num_ * den_, den_ * g.den_);
}

RatFunc RatFunc::operator-(const RatFunc& g) const {
    require_same_context(*this, g);
    return RatFunc(ctx_, num_ * g.den_ - g.num_ * den_, den_ * g.den_);
}

RatFunc RatFunc::operator*(const RatFunc& g) const {
    require_same_context(*this, g);
    return RatFunc(ctx_, num_ * g.num_, den_ * g.den_);
}

RatFunc RatFunc::operator/(const RatFunc& g) const {
    require_same_context(*this, g);
    if (g.is_zero())
        throw domain_error("division by the zero rational function");
    return RatFunc(ctx_, num_ * g.den_, den_ * g.num_);
}

RatFunc RatFunc::operator-() const { return RatFunc(ctx_, -num_, den_); }

RatFunc RatFunc::derivative() const {
    return RatFunc(ctx_, num_.derivative() * den_ - num_ * den_.derivative(),
                   den_ * den_);
}

Rat RatFunc::eval(const Rat& x) const {
    Rat d = den_.eval(x);
    if (d == 0)
        throw domain_error("evaluation at a pole");
    return num_.eval(x) / d;
}

PSeries RatFunc::series_at(const Rat& x, std::size_t trunc) const {
    if (has_pole_at(x))
        throw domain_error("series expansion at a pole");
    PSeries n = PSeries::truncated(ctx_, num_.shifted(x), trunc);
    PSeries d = PSeries::truncated(ctx_, den_.shifted(x), trunc);
    return n * d.inverse();
}

LogValue gauss_valuation(const RatFunc& f, const GaussPoint& pt) {
    if (f.is_zero())
        return LogValue::infinity();
    LogValue vn = gauss_valuation(f.num(), pt, f.context());
    LogValue vd = gauss_valuation(f.den(), pt, f.context());
    return LogValue(vn.finite() - vd.finite());
}

} // namespace padic
