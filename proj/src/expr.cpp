#include "padic/expr.hpp"

#include <cctype>

namespace padic {

namespace {

class ExprParser {
public:
    ExprParser(const std::string& text, const PrimeContext& ctx, std::size_t max_degree)
        : s_(text), ctx_(ctx), cap_(max_degree) {}

    RatFunc parse() {
        RatFunc r = expression();
        skip_ws();
        if (pos_ != s_.size())
            throw parse_error("unexpected trailing input", pos_);
        return r;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    void enforce_cap(const RatFunc& f, std::size_t at) {
        if (f.num().degree() > static_cast<int>(cap_) ||
            f.den().degree() > static_cast<int>(cap_))
            throw parse_error("polynomial degree exceeds the configured cap of " +
                                  std::to_string(cap_),
                              at);
    }

    RatFunc expression() {
        RatFunc r = term();
        for (;;) {
            if (accept('+'))
                r = r + term();
            else if (accept('-'))
                r = r - term();
            else
                return r;
        }
    }

    RatFunc term() {
        RatFunc r = factor();
        for (;;) {
            std::size_t at = pos_;
            if (accept('*')) {
                r = r * factor();
                enforce_cap(r, at);
            } else if (accept('/')) {
                RatFunc d = factor();
                if (d.is_zero())
                    throw parse_error("division by zero", at);
                r = r / d;
                enforce_cap(r, at);
            } else {
                return r;
            }
        }
    }

    RatFunc factor() {
        if (accept('-'))
            return -factor();
        return power();
    }

    RatFunc power() {
        RatFunc base = primary();
        std::size_t at = pos_;
        if (!accept('^'))
            return base;
        skip_ws();
        std::size_t start = pos_;
        unsigned long e = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            e = e * 10 + static_cast<unsigned long>(s_[pos_] - '0');
            if (e > 8 * cap_)
                throw parse_error("exponent too large", start);
            ++pos_;
        }
        if (pos_ == start)
            throw parse_error("expected a nonnegative integer exponent", pos_);
        RatFunc r = RatFunc(ctx_, base.num().pow(e), base.den().pow(e));
        enforce_cap(r, at);
        return r;
    }

    RatFunc primary() {
        skip_ws();
        if (pos_ >= s_.size())
            throw parse_error("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RatFunc r = expression();
            if (!accept(')'))
                throw parse_error("expected ')'", pos_);
            return r;
        }
        if (c == 'T') {
            ++pos_;
            return RatFunc::variable(ctx_);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            Int n(s_.substr(start, pos_ - start));
            return RatFunc::constant(ctx_, Rat(n));
        }
        if (std::isalpha(static_cast<unsigned char>(c)))
            throw parse_error(std::string("unknown identifier '") + c + "'", pos_);
        throw parse_error("expected an operand", pos_);
    }

    const std::string& s_;
    const PrimeContext& ctx_;
    std::size_t cap_;
    std::size_t pos_ = 0;
};

} // namespace

RatFunc parse_poly_expr(const std::string& text, const PrimeContext& ctx,
                        std::size_t max_degree) {
    return ExprParser(text, ctx, max_degree).parse();
}

Poly require_polynomial(const RatFunc& f) {
    if (f.den().degree() != 0)
        throw domain_error("expected a polynomial, got a rational function");
    // den is monic, hence exactly 1.
    return f.num();
}

std::string render_poly(const Poly& f) {
    if (f.is_zero())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        Rat c = f.coeff(i);
        if (c == 0)
            continue;
        bool negative = c < 0;
        Rat a = negative ? Rat(-c) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        std::string mag = rat_to_string(a);
        if (i == 0) {
            out += mag;
        } else {
            if (a != 1)
                out += mag + "*";
            out += "T";
            if (i > 1)
                out += "^" + std::to_string(i);
        }
    }
    return out;
}

} // namespace padic
