#pragma once

#include "padic/series.hpp"
#include "padic/valuation.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace padic {

// The guaranteed injectivity log-radius 1/(p-1) of an etale map on a
// normalized disk.
inline LogRadius rolle_bound(const PrimeContext& ctx) {
    return LogRadius(Rat(1, ctx.prime() - 1));
}

struct EtaleCheck {
    bool etale;
    // Smallest stored n >= 2 with ord a_1 > ord(n a_n), when not etale.
    std::optional<std::size_t> failing_index;
    std::size_t verified_up_to; // checks cover stored indices < this order
    // True when the integral-tail hypothesis plus ord a_1 = 0 certify the
    // condition for every n, not just the stored ones.
    bool certified_all_orders;
};

// Etaleness of f on the open unit disk, read off the coefficients:
// ord a_1 <= ord(n a_n) for all n >= 2.  The paper's strict inequalities
// over all rho < 1 reduce to this non-strict valuation form at rho = 1.
// Requires trunc >= 2 and a_1 != 0 (a_1 = 0 means f is critical at the
// center and throws).
EtaleCheck etale_check(const PSeries& f, bool integral_tail = false);

struct ImmersionRadius {
    LogRadius v; // f is an open immersion on every centered open disk of
                 // log-radius > v (radius < p^{-v})
    std::optional<std::size_t> achieving_index;
    std::size_t verified_up_to;
};

// v = max(0, max_{n>=2, a_n != 0} (ord a_1 - ord a_n)/(n-1)), a closed
// formula, no search.  Certified for stored indices only.
ImmersionRadius open_immersion_log_radius(const PSeries& f);

struct RolleReport {
    bool etale;
    std::optional<std::size_t> etale_failing_index;
    bool etale_certified_all_orders;
    LogRadius injectivity_log_radius;
    std::optional<std::size_t> achieving_index;
    LogRadius bound; // 1/(p-1)
    bool bound_respected;
    std::size_t verified_up_to;
    // One key-inequality witness per stored index n >= 2 with a_n != 0:
    // together with the etale condition these force the bound.
    std::vector<KeyInequalityWitness> proof_trail;
};

RolleReport rolle_verify(const PSeries& f, bool integral_tail = false);

} // namespace padic
