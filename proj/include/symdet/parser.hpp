#pragma once

#include <cctype>
#include <string>

#include "symdet/polynomial.hpp"

namespace symdet {

/// Recursive-descent parser for the polynomial grammar:
///
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := ('-'|'+')* atom ('^' nat)?
///   atom   := nat ('/' nat)? | variable | '(' expr ')'
///
/// Integer and rational literals have arbitrary precision. Errors carry the
/// character position.
class PolynomialParser {
public:
    PolynomialParser(std::string text, RingPtr ring)
        : s_(std::move(text)), ring_(std::move(ring)) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw InputError("parse error at position " + std::to_string(pos_) + ": " + msg);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
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

    Polynomial expr() {
        Polynomial acc = term();
        for (;;) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (eat('*')) acc *= factor();
        return acc;
    }

    Polynomial factor() {
        int sign = 1;
        for (;;) {
            if (eat('-'))
                sign = -sign;
            else if (eat('+'))
                ;
            else
                break;
        }
        Polynomial base = atom();
        if (eat('^')) {
            std::string digits = read_digits();
            if (digits.empty()) fail("exponent expected after '^'");
            long e = 0;
            try {
                e = std::stol(digits);
            } catch (...) {
                fail("exponent too large");
            }
            base = base.pow(static_cast<int>(e));
        }
        return sign < 0 ? -base : base;
    }

    Polynomial atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = read_digits();
            if (eat('/')) {
                std::string den = read_digits();
                if (den.empty()) fail("denominator expected after '/'");
                Rational r{mpz_class(num), mpz_class(den)};
                return Polynomial::constant(ring_, r);
            }
            return Polynomial::constant(ring_, Rational(mpz_class(num)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = read_name();
            int v = ring_->find(name);
            if (v < 0) fail("unknown variable name '" + name + "'");
            return Polynomial::variable(ring_, v);
        }
        if (c == '\0') fail("unexpected end of input");
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string read_digits() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return s_.substr(start, pos_ - start);
    }

    std::string read_name() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        return s_.substr(start, pos_ - start);
    }

    std::string s_;
    RingPtr ring_;
    size_t pos_ = 0;
};

inline Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
    return PolynomialParser(text, ring).parse();
}

} // namespace symdet
