#include "padic/diffsys.hpp"

namespace padic {

RatFuncMatrix::RatFuncMatrix(PrimeContext ctx, std::size_t rows, std::size_t cols)
    : ctx_(ctx), rows_(rows), cols_(cols),
      e_(rows * cols, RatFunc::constant(ctx, Rat(0))) {
    if (rows == 0 || cols == 0)
        throw domain_error("empty matrix");
}

RatFuncMatrix RatFuncMatrix::identity(PrimeContext ctx, std::size_t n) {
    RatFuncMatrix m(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = RatFunc::constant(ctx, Rat(1));
    return m;
}

static void require_same_shape(const RatFuncMatrix& a, const RatFuncMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw domain_error("matrix shape mismatch");
    if (a.context() != b.context())
        throw domain_error("prime context mismatch");
}

RatFuncMatrix RatFuncMatrix::operator+(const RatFuncMatrix& b) const {
    require_same_shape(*this, b);
    RatFuncMatrix r(ctx_, rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k)
        r.e_[k] = e_[k] + b.e_[k];
    return r;
}

RatFuncMatrix RatFuncMatrix::operator-(const RatFuncMatrix& b) const {
    require_same_shape(*this, b);
    RatFuncMatrix r(ctx_, rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k)
        r.e_[k] = e_[k] - b.e_[k];
    return r;
}

RatFuncMatrix RatFuncMatrix::operator*(const RatFuncMatrix& b) const {
    if (cols_ != b.rows_ || ctx_ != b.ctx_)
        throw domain_error("matrix shape mismatch");
    RatFuncMatrix r(ctx_, rows_, b.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) {
            RatFunc acc = RatFunc::constant(ctx_, Rat(0));
            for (std::size_t k = 0; k < cols_; ++k)
                acc = acc + at(i, k) * b.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

RatFuncMatrix RatFuncMatrix::derivative() const {
    RatFuncMatrix r(ctx_, rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k)
        r.e_[k] = e_[k].derivative();
    return r;
}

bool RatFuncMatrix::is_zero() const {
    for (const auto& f : e_)
        if (!f.is_zero())
            return false;
    return true;
}

RatFuncMatrix RatFuncMatrix::inverse() const {
    if (rows_ != cols_)
        throw domain_error("inverse of a non-square matrix");
    std::size_t n = rows_;
    RatFuncMatrix a = *this;
    RatFuncMatrix inv = identity(ctx_, n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a.at(pivot, col).is_zero())
            ++pivot;
        if (pivot == n)
            throw domain_error("singular matrix");
        if (pivot != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        RatFunc d = a.at(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a.at(col, j) = a.at(col, j) / d;
            inv.at(col, j) = inv.at(col, j) / d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a.at(i, col).is_zero())
                continue;
            RatFunc f = a.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) = a.at(i, j) - f * a.at(col, j);
                inv.at(i, j) = inv.at(i, j) - f * inv.at(col, j);
            }
        }
    }
    return inv;
}

LogValue gauss_valuation(const RatFuncMatrix& m, const GaussPoint& pt) {
    LogValue best = LogValue::infinity();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            best = min(best, gauss_valuation(m.at(i, j), pt));
    return best;
}

DiffSystem::DiffSystem(PrimeContext c, RatFuncMatrix g) : ctx(c), dim(g.rows()), G(g) {
    if (g.rows() != g.cols())
        throw domain_error("system matrix must be square");
    if (g.context() != c)
        throw domain_error("prime context mismatch");
}

static Poly poly_lcm(const Poly& a, const Poly& b) {
    Poly g = gcd(a, b);
    return (a * b).divexact(g).monic();
}

SystemIterates iterate_system(const DiffSystem& sys, std::size_t N) {
    if (N < 1)
        throw domain_error("iteration order must be >= 1");
    std::size_t n = sys.dim;

    Poly den = Poly::constant(Rat(1));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            den = poly_lcm(den, sys.G.at(i, j).den());

    SystemIterates it(sys.ctx, n, den);

    // P_1 with G = P_1 / den.
    std::vector<Poly> p1(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            p1[i * n + j] =
                sys.G.at(i, j).num() * den.divexact(sys.G.at(i, j).den());
    it.nums_.push_back(p1);

    // P_{i+1} = (P_i' den - i P_i den' + P_i P_1) / (i+1).
    Poly dden = den.derivative();
    for (std::size_t i = 1; i < N; ++i) {
        const std::vector<Poly>& pi = it.nums_.back();
        std::vector<Poly> next(n * n);
        Rat inv_ip1(1, static_cast<long>(i + 1));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                Poly acc = pi[r * n + c].derivative() * den -
                           pi[r * n + c] * dden * Rat(static_cast<long>(i));
                for (std::size_t k = 0; k < n; ++k)
                    acc += pi[r * n + k] * p1[k * n + c];
                next[r * n + c] = acc * inv_ip1;
            }
        it.nums_.push_back(std::move(next));
    }
    return it;
}

LogValue SystemIterates::norm_at(const GaussPoint& pt, std::size_t i) const {
    if (i < 1 || i > order())
        throw domain_error("iterate index out of range");
    LogValue best = LogValue::infinity();
    for (const auto& f : nums_[i - 1])
        best = min(best, gauss_valuation(f, pt, ctx_));
    if (best.is_infinite())
        return best;
    // v_s(P_i / den^i) = v_s(P_i) - i v_s(den); exactness does not require
    // the fraction to be reduced.
    LogValue vden = gauss_valuation(den_, pt, ctx_);
    return LogValue(best.finite() - Rat(static_cast<long>(i)) * vden.finite());
}

RatFuncMatrix SystemIterates::iterate(std::size_t i) const {
    if (i < 1 || i > order())
        throw domain_error("iterate index out of range");
    RatFuncMatrix m(ctx_, n_, n_);
    Poly deni = den_.pow(i);
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t c = 0; c < n_; ++c)
            m.at(r, c) = RatFunc(ctx_, nums_[i - 1][r * n_ + c], deni);
    return m;
}

std::vector<Rat> SystemIterates::evaluate(const Rat& x, std::size_t i) const {
    if (i < 1 || i > order())
        throw domain_error("iterate index out of range");
    Rat d = den_.eval(x);
    if (d == 0)
        throw domain_error("evaluation at a pole of the system");
    Rat di = rat_pow(d, static_cast<long>(i));
    std::vector<Rat> out(n_ * n_);
    for (std::size_t k = 0; k < n_ * n_; ++k)
        out[k] = nums_[i - 1][k].eval(x) / di;
    return out;
}

LogRadius trivial_estimate(const DiffSystem& sys, const GaussPoint& pt) {
    LogValue v = gauss_valuation(sys.G, pt);
    Rat defect(0);
    if (!v.is_infinite() && v.finite() < 0)
        defect = -v.finite();
    return LogRadius(defect + Rat(1, sys.ctx.prime() - 1));
}

RadiusEstimate generic_radius(const DiffSystem& sys, const GaussPoint& pt, std::size_t N) {
    SystemIterates it = iterate_system(sys, N);
    RadiusEstimate est;
    est.order_used = N;
    est.certified_prefix_min_log = Rat(0);
    est.tail_window_log = Rat(0);
    std::size_t window_start = N - (N + 3) / 4 + 1; // last ceil(N/4) indices
    for (std::size_t i = 1; i <= N; ++i) {
        LogValue v = it.norm_at(pt, i);
        Rat deficit(0);
        if (!v.is_infinite() && v.finite() < 0)
            deficit = -v.finite() / Rat(static_cast<long>(i));
        if (deficit > est.certified_prefix_min_log)
            est.certified_prefix_min_log = deficit;
        if (i >= window_start && deficit > est.tail_window_log)
            est.tail_window_log = deficit;
    }
    est.trivial_bound_log = trivial_estimate(sys, pt).v;
    return est;
}

GaugeResult gauge_transform(const DiffSystem& sys, const RatFuncMatrix& P,
                            const GaussPoint& pt) {
    if (P.rows() != sys.dim || P.cols() != sys.dim)
        throw domain_error("gauge matrix shape mismatch");
    RatFuncMatrix Pinv = P.inverse(); // throws on singular P
    RatFuncMatrix Gp = (P.derivative() + P * sys.G) * Pinv;
    bool unimodular = gauss_valuation(P, pt) == LogValue(Rat(0)) &&
                      gauss_valuation(Pinv, pt) == LogValue(Rat(0));
    return GaugeResult{DiffSystem(sys.ctx, Gp), unimodular};
}

SolutionMatrix solution_at_point(const DiffSystem& sys, const Rat& x, std::size_t N) {
    SystemIterates it = iterate_system(sys, N);
    if (it.pole_at(x))
        throw domain_error("solution center is a pole of the system");
    std::size_t n = sys.dim;
    std::vector<std::vector<Rat>> coeffs(n * n, std::vector<Rat>(N + 1, Rat(0)));
    for (std::size_t d = 0; d < n; ++d)
        coeffs[d * n + d][0] = 1;
    for (std::size_t i = 1; i <= N; ++i) {
        std::vector<Rat> gi = it.evaluate(x, i);
        for (std::size_t k = 0; k < n * n; ++k)
            coeffs[k][i] = gi[k];
    }
    SolutionMatrix sol{x, n, {}};
    sol.entries.reserve(n * n);
    for (std::size_t k = 0; k < n * n; ++k)
        sol.entries.emplace_back(sys.ctx, std::move(coeffs[k]));
    return sol;
}

} // namespace padic
