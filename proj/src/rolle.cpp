#include "padic/rolle.hpp"

namespace padic {

static void require_noncritical(const PSeries& f) {
    if (f.trunc() < 2)
        throw domain_error("need truncation order >= 2 to see the linear term");
    if (f.coeff(1) == 0)
        throw domain_error("critical at the center: a_1 = 0");
}

EtaleCheck etale_check(const PSeries& f, bool integral_tail) {
    require_noncritical(f);
    const PrimeContext& ctx = f.context();
    LogValue v1 = ord_p(f.coeff(1), ctx);

    EtaleCheck r;
    r.etale = true;
    r.verified_up_to = f.trunc();
    for (std::size_t n = 2; n < f.trunc(); ++n) {
        if (f.coeff(n) == 0)
            continue;
        LogValue vn = ord_p(Rat(static_cast<long>(n)) * f.coeff(n), ctx);
        if (!(v1 <= vn)) {
            r.etale = false;
            r.failing_index = n;
            break;
        }
    }
    r.certified_all_orders = r.etale && integral_tail && v1 == LogValue(Rat(0));
    return r;
}

ImmersionRadius open_immersion_log_radius(const PSeries& f) {
    require_noncritical(f);
    const PrimeContext& ctx = f.context();
    Rat v1 = ord_p(f.coeff(1), ctx).finite();

    ImmersionRadius r;
    r.verified_up_to = f.trunc();
    std::optional<Rat> best;
    for (std::size_t n = 2; n < f.trunc(); ++n) {
        if (f.coeff(n) == 0)
            continue;
        Rat contrib = (v1 - ord_p(f.coeff(n), ctx).finite()) / Rat(static_cast<long>(n - 1));
        if (!best || contrib > *best) {
            best = contrib;
            r.achieving_index = n;
        }
    }
    if (best && *best >= 0) {
        r.v = LogRadius(*best);
    } else {
        r.v = LogRadius(Rat(0));
        r.achieving_index.reset();
    }
    return r;
}

RolleReport rolle_verify(const PSeries& f, bool integral_tail) {
    EtaleCheck e = etale_check(f, integral_tail);
    ImmersionRadius im = open_immersion_log_radius(f);

    RolleReport rep;
    rep.etale = e.etale;
    rep.etale_failing_index = e.failing_index;
    rep.etale_certified_all_orders = e.certified_all_orders;
    rep.injectivity_log_radius = im.v;
    rep.achieving_index = im.achieving_index;
    rep.bound = rolle_bound(f.context());
    rep.verified_up_to = f.trunc();

    if (e.etale) {
        for (std::size_t n = 2; n < f.trunc(); ++n)
            if (f.coeff(n) != 0)
                rep.proof_trail.push_back(
                    key_inequality_check(static_cast<long long>(n), f.context()));
    }
    rep.bound_respected = !e.etale || im.v <= rep.bound;
    return rep;
}

} // namespace padic
