#pragma once

#include "padic/errors.hpp"
#include "padic/rational.hpp"

#include <string>

namespace padic {

// The prime p; primality is checked at construction.
class PrimeContext {
public:
    explicit PrimeContext(long p);

    long prime() const { return p_; }

    friend bool operator==(const PrimeContext& a, const PrimeContext& b) {
        return a.p_ == b.p_;
    }
    friend bool operator!=(const PrimeContext& a, const PrimeContext& b) {
        return a.p_ != b.p_;
    }

private:
    long p_;
};

// Element of Q ∪ {+inf}.  +inf is ord_p(0); it absorbs addition and is the
// neutral element of min.  Radii are carried multiplicatively as p^{-v}.
class LogValue {
public:
    LogValue() : finite_(true), v_(0) {}
    LogValue(Rat v) : finite_(true), v_(std::move(v)) {}
    LogValue(long v) : finite_(true), v_(v) {}

    static LogValue infinity() {
        LogValue x;
        x.finite_ = false;
        return x;
    }

    bool is_infinite() const { return !finite_; }

    // Finite part; throws on +inf.
    const Rat& finite() const {
        if (!finite_)
            throw domain_error("LogValue is +inf");
        return v_;
    }

    LogValue operator+(const LogValue& o) const {
        if (!finite_ || !o.finite_)
            return infinity();
        return LogValue(v_ + o.v_);
    }

    friend LogValue min(const LogValue& a, const LogValue& b) {
        return a < b ? a : b;
    }

    friend bool operator==(const LogValue& a, const LogValue& b) {
        if (a.finite_ != b.finite_)
            return false;
        return !a.finite_ || a.v_ == b.v_;
    }
    friend bool operator!=(const LogValue& a, const LogValue& b) { return !(a == b); }
    friend bool operator<(const LogValue& a, const LogValue& b) {
        if (!a.finite_)
            return false;
        if (!b.finite_)
            return true;
        return a.v_ < b.v_;
    }
    friend bool operator<=(const LogValue& a, const LogValue& b) { return !(b < a); }
    friend bool operator>(const LogValue& a, const LogValue& b) { return b < a; }
    friend bool operator>=(const LogValue& a, const LogValue& b) { return !(a < b); }

    std::string str() const { return finite_ ? rat_to_string(v_) : "inf"; }

private:
    bool finite_;
    Rat v_;
};

// Log-radius v >= 0 of a disk of radius p^{-v}; v = 0 is the unit disk and
// the ordering is reversed versus radii.
struct LogRadius {
    LogRadius() : v(0) {}
    explicit LogRadius(Rat value) : v(std::move(value)) {
        if (v < 0)
            throw domain_error("negative log-radius");
    }
    Rat v;

    friend bool operator==(const LogRadius& a, const LogRadius& b) { return a.v == b.v; }
    friend bool operator<(const LogRadius& a, const LogRadius& b) { return a.v < b.v; }
    friend bool operator<=(const LogRadius& a, const LogRadius& b) { return a.v <= b.v; }
};

// ord_p of an exact rational: exponent of p in x, +inf iff x = 0.
LogValue ord_p(const Rat& x, const PrimeContext& ctx);

// ord_p(n!) by Legendre's formula (n - digit-sum_p(n)) / (p - 1).
LogValue factorial_valuation(unsigned long n, const PrimeContext& ctx);

// Witness for ord_p(n) <= (n-1)/(p-1), n >= 2, in the integer form
// p^k m - 1 >= k (p-1) with n = p^k m and gcd(m, p) = 1.
struct KeyInequalityWitness {
    long long n;
    long k;        // ord_p(n)
    long long m;   // n / p^k, prime to p
    long long lhs; // p^k m - 1
    long long rhs; // k (p - 1)
    bool holds;    // lhs >= rhs
};

KeyInequalityWitness key_inequality_check(long long n, const PrimeContext& ctx);

} // namespace padic
