#include "ckx/parse.hpp"

namespace ckx {

namespace {

struct Lexer {
    std::string text;
    std::size_t pos = 0;

    explicit Lexer(std::string t) : text(std::move(t)) {}

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n'))
            ++pos;
    }

    bool done() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    /// The unicode minus U+2212 (e2 88 92) is treated as '-'.
    bool eat_sign(char& sign) {
        skip_ws();
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            sign = text[pos++];
            return true;
        }
        if (pos + 2 < text.size() && static_cast<unsigned char>(text[pos]) == 0xe2 &&
            static_cast<unsigned char>(text[pos + 1]) == 0x88 &&
            static_cast<unsigned char>(text[pos + 2]) == 0x92) {
            sign = '-';
            pos += 3;
            return true;
        }
        return false;
    }

    bool peek_digit() { return std::isdigit(static_cast<unsigned char>(peek())); }

    unsigned read_uint() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected an unsigned integer", pos);
        unsigned long long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + static_cast<unsigned>(text[pos] - '0');
            if (v > 1'000'000'000ULL) throw ParseError("integer too large", pos);
            ++pos;
        }
        return static_cast<unsigned>(v);
    }

    Rational read_rational() {
        BigInt num(read_uint());
        skip_ws();
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            unsigned den = read_uint();
            if (den == 0) throw ParseError("zero denominator", pos);
            return Rational(num, BigInt(den));
        }
        return Rational(num, BigInt(1));
    }
};

}  // namespace

CliffordPolynomial parse_polynomial(const std::string& text, unsigned m) {
    Lexer lex(text);
    CliffordPolynomial poly(m);
    bool first = true;
    char sign = '+';
    while (true) {
        if (first) {
            lex.eat_sign(sign);  // optional leading sign
            first = false;
        } else {
            if (lex.done()) break;
            if (!lex.eat_sign(sign))
                throw ParseError("expected '+' or '-' between terms", lex.pos);
        }
        if (lex.done()) throw ParseError("expected a term", lex.pos);

        Rational coeff(1);
        bool saw_anything = false;
        if (lex.peek_digit()) {
            coeff = lex.read_rational();
            saw_anything = true;
        }
        Monomial mono(m + 1, 0);
        CliffordElement blade = CliffordElement::one(m);
        while (true) {
            char c = lex.peek();
            if (c == 'x') {
                ++lex.pos;
                unsigned idx = lex.read_uint();
                if (idx > m)
                    throw ParseError("variable x" + std::to_string(idx) + " exceeds m=" +
                                         std::to_string(m),
                                     lex.pos);
                unsigned exp = 1;
                if (lex.peek() == '^') {
                    ++lex.pos;
                    exp = lex.read_uint();
                }
                mono[idx] += exp;
                saw_anything = true;
            } else if (c == 'e') {
                ++lex.pos;
                std::string token;
                lex.skip_ws();
                while (lex.pos < lex.text.size() &&
                       std::isdigit(static_cast<unsigned char>(lex.text[lex.pos])))
                    token += lex.text[lex.pos++];
                if (token.empty()) throw ParseError("blade needs at least one index", lex.pos);
                BladeMask mask;
                try {
                    mask = blade_from_token(token, m);
                } catch (const std::invalid_argument& err) {
                    throw ParseError(err.what(), lex.pos);
                }
                blade = clifford_mul(blade, CliffordElement::blade(m, mask));
                saw_anything = true;
            } else {
                break;
            }
        }
        if (!saw_anything) throw ParseError("empty term", lex.pos);
        if (sign == '-') coeff = -coeff;
        poly.add_term(mono, blade * coeff);
    }
    return poly;
}

std::string print_polynomial(const CliffordPolynomial& p) { return p.str(); }

}  // namespace ckx
