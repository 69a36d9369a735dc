#pragma once

#include "padic/ratfunc.hpp"
#include "padic/series.hpp"
#include "padic/valuation.hpp"

#include <cstddef>
#include <vector>

namespace padic {

// Square matrix of rational functions over a shared prime context.
class RatFuncMatrix {
public:
    RatFuncMatrix(PrimeContext ctx, std::size_t rows, std::size_t cols);
    static RatFuncMatrix identity(PrimeContext ctx, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const PrimeContext& context() const { return ctx_; }

    RatFunc& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const RatFunc& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    RatFuncMatrix operator+(const RatFuncMatrix& b) const;
    RatFuncMatrix operator-(const RatFuncMatrix& b) const;
    RatFuncMatrix operator*(const RatFuncMatrix& b) const;
    bool operator==(const RatFuncMatrix& b) const {
        return rows_ == b.rows_ && cols_ == b.cols_ && e_ == b.e_;
    }

    RatFuncMatrix derivative() const;
    bool is_zero() const;

    // Gauss-Jordan over the function field; throws on a singular matrix.
    RatFuncMatrix inverse() const;

private:
    PrimeContext ctx_;
    std::size_t rows_, cols_;
    std::vector<RatFunc> e_;
};

// Matrix valuation: min over entries (so |M| is the max of entry norms);
// +inf for the zero matrix.
LogValue gauss_valuation(const RatFuncMatrix& m, const GaussPoint& pt);

// The system dY/dT = G Y.
struct DiffSystem {
    DiffSystem(PrimeContext ctx, RatFuncMatrix g);

    PrimeContext ctx;
    std::size_t dim;
    RatFuncMatrix G;
};

// Iterates G_[1..N] of the recurrence G_[i+1] = (d/dT G_[i] + G_[i] G)/(i+1),
// so that (1/n!) d^n Y/dT^n = G_[n] Y.  Stored internally as polynomial
// matrices over the common denominator power den^i: the recurrence only
// ever divides by den(G), so no gcd is taken along the way.
class SystemIterates {
public:
    std::size_t order() const { return nums_.size(); }
    std::size_t dim() const { return n_; }
    const Poly& common_denominator() const { return den_; }

    // v_s(G_[i]) at the given point, i in [1, order].
    LogValue norm_at(const GaussPoint& pt, std::size_t i) const;

    // G_[i] as a normalized rational-function matrix.
    RatFuncMatrix iterate(std::size_t i) const;

    // G_[i](x) as exact rationals; x must not be a pole.
    std::vector<Rat> evaluate(const Rat& x, std::size_t i) const;

    bool pole_at(const Rat& x) const { return den_.eval(x) == 0; }

private:
    friend SystemIterates iterate_system(const DiffSystem& sys, std::size_t N);
    SystemIterates(PrimeContext ctx, std::size_t n, Poly den)
        : ctx_(ctx), n_(n), den_(std::move(den)) {}

    PrimeContext ctx_;
    std::size_t n_;
    Poly den_;                             // common denominator d of G
    std::vector<std::vector<Poly>> nums_;  // nums_[i-1]: entries of P_i, G_[i] = P_i / d^i
};

SystemIterates iterate_system(const DiffSystem& sys, std::size_t N);

// Finite-order reading of the generic radius of convergence at a point:
// a certified prefix bound and a tail-window heuristic, never "the" radius.
struct RadiusEstimate {
    Rat certified_prefix_min_log; // max over i <= N of max(0, -v_s(G_[i]))/i, >= 0
    Rat tail_window_log;          // same max over the last ceil(N/4) indices
    Rat trivial_bound_log;        // max(0, -v_s(G)) + 1/(p-1)
    std::size_t order_used;
};

RadiusEstimate generic_radius(const DiffSystem& sys, const GaussPoint& pt, std::size_t N);

// Lower bound on the radius of convergence of solutions at the point:
// radius >= p^{-bound} with bound = max(0, -v_s(G)) + 1/(p-1).
LogRadius trivial_estimate(const DiffSystem& sys, const GaussPoint& pt);

struct GaugeResult {
    DiffSystem system;     // dY/dT = G^[P] Y with G^[P] = (P' + P G) P^{-1}
    bool zeta_unimodular;  // |P| = |P^{-1}| = 1 at the given point
};

GaugeResult gauge_transform(const DiffSystem& sys, const RatFuncMatrix& P,
                            const GaussPoint& pt = GaussPoint{Rat(0)});

// Fundamental solution matrix at x: Y(T) = sum_i G_[i](x) (T - x)^i with
// Y(x) = I, entries as series in (T - x) with coefficients 0..N.
struct SolutionMatrix {
    Rat center;
    std::size_t dim;
    std::vector<PSeries> entries; // row-major, trunc N + 1
};

SolutionMatrix solution_at_point(const DiffSystem& sys, const Rat& x, std::size_t N);

} // namespace padic
