#include "padic/valuation.hpp"

namespace padic {

PrimeContext::PrimeContext(long p) : p_(p) {
    if (p < 2)
        throw domain_error("prime must be >= 2");
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            throw domain_error(std::to_string(p) + " is not prime");
}

LogValue ord_p(const Rat& x, const PrimeContext& ctx) {
    if (x == 0)
        return LogValue::infinity();
    Int p(ctx.prime());
    Int scratch;
    long vn = static_cast<long>(
        mpz_remove(scratch.get_mpz_t(), x.get_num_mpz_t(), p.get_mpz_t()));
    long vd = static_cast<long>(
        mpz_remove(scratch.get_mpz_t(), x.get_den_mpz_t(), p.get_mpz_t()));
    return LogValue(Rat(vn - vd));
}

LogValue factorial_valuation(unsigned long n, const PrimeContext& ctx) {
    unsigned long p = static_cast<unsigned long>(ctx.prime());
    unsigned long digit_sum = 0;
    for (unsigned long m = n; m != 0; m /= p)
        digit_sum += m % p;
    // (n - digit_sum) is always divisible by p - 1.
    return LogValue(Rat(static_cast<long>((n - digit_sum) / (p - 1))));
}

KeyInequalityWitness key_inequality_check(long long n, const PrimeContext& ctx) {
    if (n < 2)
        throw domain_error("key inequality requires n >= 2");
    long long p = ctx.prime();
    KeyInequalityWitness w;
    w.n = n;
    w.k = 0;
    w.m = n;
    while (w.m % p == 0) {
        w.m /= p;
        ++w.k;
    }
    w.lhs = n - 1; // p^k m - 1
    w.rhs = w.k * (p - 1);
    w.holds = w.lhs >= w.rhs;
    return w;
}

} // namespace padic
