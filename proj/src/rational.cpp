#include "padic/rational.hpp"

#include "padic/errors.hpp"

namespace padic {

std::string rat_to_string(const Rat& x) {
    if (x.get_den() == 1)
        return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rat rat_from_string(const std::string& text) {
    if (text.empty())
        throw parse_error("empty rational literal");
    Rat x;
    if (mpq_set_str(x.get_mpq_t(), text.c_str(), 10) != 0)
        throw parse_error("malformed rational \"" + text + "\"");
    if (x.get_den() == 0)
        throw parse_error("zero denominator in \"" + text + "\"");
    x.canonicalize();
    return x;
}

Rat rat_pow(const Rat& base, long exp) {
    if (exp == 0)
        return Rat(1);
    if (base == 0) {
        if (exp < 0)
            throw domain_error("0 raised to a negative power");
        return Rat(0);
    }
    Rat b = base;
    unsigned long e = exp < 0 ? -static_cast<unsigned long>(exp) : exp;
    if (exp < 0)
        b = 1 / b;
    Rat acc(1);
    while (e) {
        if (e & 1)
            acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

} // namespace padic
