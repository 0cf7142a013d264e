#include "skewseries/parse.hpp"

#include <cctype>
#include <string>
#include <utility>

#include "skewseries/errors.hpp"

namespace skewseries {

namespace {

constexpr int kMaxExponent = 512;

struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    ContextPtr ctx;
    RingTag tag;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    bool peek_digit() {
        skip_ws();
        return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
    }

    bool eat_word(const std::string& w) {
        skip_ws();
        if (s.compare(pos, w.size(), w) == 0) {
            pos += w.size();
            return true;
        }
        return false;
    }

    std::string read_digits() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw parse_error("expected an integer", pos);
        return s.substr(start, pos - start);
    }

    SkewPoly parse_expr() {
        skip_ws();
        bool neg = eat('-');
        SkewPoly acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            skip_ws();
            if (eat('+')) {
                acc = acc + parse_term();
            } else if (eat('-')) {
                acc = acc - parse_term();
            } else {
                return acc;
            }
        }
    }

    SkewPoly parse_term() {
        SkewPoly acc = parse_factor();
        while (eat('*')) {
            acc = acc * parse_factor();
        }
        return acc;
    }

    SkewPoly parse_factor() {
        SkewPoly base = parse_atom();
        skip_ws();
        if (!eat('^')) return base;
        std::size_t at = pos;
        long e = 0;
        try {
            e = std::stol(read_digits());
        } catch (const std::exception&) {
            throw parse_error("exponent out of range", at);
        }
        if (e > kMaxExponent) throw parse_error("exponent too large", at);
        SkewPoly acc = SkewPoly::scalar(ctx, tag, FieldElem::one(ctx->field));
        for (long i = 0; i < e; ++i) acc = acc * base;
        return acc;
    }

    SkewPoly parse_atom() {
        skip_ws();
        if (pos >= s.size()) throw parse_error("unexpected end of input", pos);
        if (eat('(')) {
            SkewPoly inner = parse_expr();
            if (!eat(')')) throw parse_error("expected ')'", pos);
            return inner;
        }
        if (eat_word("theta") || eat_word("\xCE\xB8")) {
            return SkewPoly::theta(ctx, tag);
        }
        if (eat_word("X")) {
            return SkewPoly::x(ctx, tag);
        }
        if (peek_digit()) {
            std::size_t at = pos;
            std::string num = read_digits();
            if (eat('/')) {
                std::string den = read_digits();
                if (den == "0") throw parse_error("zero denominator", at);
                FieldElem n = FieldElem::from_string(ctx->field, num);
                FieldElem d = FieldElem::from_string(ctx->field, den);
                return SkewPoly::scalar(ctx, tag, n / d);
            }
            return SkewPoly::scalar(ctx, tag, FieldElem::from_string(ctx->field, num));
        }
        throw parse_error("expected a number, 'X', 'theta' or '('", pos);
    }
};

}  // namespace

SkewPoly parse_element(const std::string& src, ContextPtr ctx, RingTag tag) {
    Parser p{src, 0, std::move(ctx), tag};
    SkewPoly z = p.parse_expr();
    p.skip_ws();
    if (p.pos != src.size()) throw parse_error("trailing input", p.pos);
    return z;
}

Series parse_series(const std::string& src, Field field, int abs_prec) {
    // Series expressions are element expressions without theta; reuse the
    // element parser over a throwaway context with the same precision.
    ContextPtr tmp = make_context(field, std::vector<long>{1}, std::max(abs_prec, 1), 1024);
    SkewPoly z = parse_element(src, tmp, RingTag::S);
    if (!z.is_zero() && z.degree() > 0) {
        throw parse_error("a series expression must not mention theta");
    }
    return z.coeff(0).truncated(std::min(abs_prec, z.coeff(0).abs_prec()));
}

std::string print_element(const SkewPoly& z) { return z.to_string(); }

}  // namespace skewseries
