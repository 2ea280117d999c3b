#include "hijac/parse.hpp"

#include <cctype>

namespace hijac {

namespace {

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string>& names)
        : text_(text), names_(names), d_(static_cast<int>(names.size())) {}

    Polynomial run() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    std::string_view text_;
    const std::vector<std::string>& names_;
    int d_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Int uint_lit() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected an unsigned integer");
        return Int(std::string(text_.substr(start, pos_ - start)), 10);
    }

    Polynomial expr() {
        bool neg = false;
        char c = peek();
        if (c == '+' || c == '-') { ++pos_; neg = (c == '-'); }
        Polynomial p = term();
        if (neg) p = -p;
        while (true) {
            c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            Polynomial t = term();
            p = (c == '+') ? p + t : p - t;
        }
        return p;
    }

    Polynomial term() {
        Polynomial p = factor();
        while (eat('*')) p = p * factor();
        return p;
    }

    Polynomial factor() {
        Polynomial b = base();
        if (eat('^')) {
            skip_ws();
            if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
                fail("exponent must be a non-negative integer");
            Int e = uint_lit();
            if (e > 100000) fail("exponent too large");
            return b.pow(static_cast<unsigned>(e.get_ui()));
        }
        return b;
    }

    Polynomial base() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) return rational();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable();
        fail("expected a rational, a variable, or '('");
    }

    Polynomial rational() {
        bool neg = false;
        if (text_[pos_] == '-') { ++pos_; neg = true; }
        Int num = uint_lit();
        Int den = 1;
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            std::size_t at = pos_;
            den = uint_lit();
            if (den == 0) throw ParseError("zero denominator", at);
        }
        Rat q(num, den);
        q.canonicalize();
        if (neg) q = -q;
        return Polynomial::constant(d_, q);
    }

    Polynomial variable() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        for (int i = 0; i < d_; ++i)
            if (names_[static_cast<std::size_t>(i)] == name) return Polynomial::variable(d_, i);
        throw ParseError("unknown variable '" + name + "'", start);
    }
};

}  // namespace

Polynomial parse_poly(std::string_view text, const std::vector<std::string>& var_names) {
    if (var_names.empty()) throw std::invalid_argument("parse_poly: need at least one variable");
    return Parser(text, var_names).run();
}

Polynomial parse_poly(std::string_view text, int d) { return parse_poly(text, x_names(d)); }

Rat parse_rat(std::string_view text) {
    // reuse the polynomial parser on a constant expression
    Polynomial p = parse_poly(text, 1);
    if (!p.is_constant()) throw ParseError("expected a rational constant", 0);
    return p.constant_term();
}

}  // namespace hijac
