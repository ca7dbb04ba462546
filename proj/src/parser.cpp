#include <cctype>
#include <string>

#include "izeta/poly.hpp"

namespace izeta {

namespace {

constexpr int kMaxExponent = 1 << 20;

class Parser {
  public:
    explicit Parser(const std::string& text) : s_(text) {}

    BivariatePoly run() {
        skip_ws();
        BivariatePoly p = parse_poly();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

  private:
    BivariatePoly parse_poly() {
        // Optional leading sign so serialized polynomials round-trip.
        bool neg = false;
        skip_ws();
        if (peek() == '-' && !std::isdigit(static_cast<unsigned char>(peek_at(1)))) {
            ++pos_;
            neg = true;
        }
        BivariatePoly acc = parse_term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                BivariatePoly t = parse_term();
                acc = (c == '+') ? acc + t : acc - t;
            } else {
                return acc;
            }
        }
    }

    BivariatePoly parse_term() {
        BivariatePoly acc = parse_factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                acc = acc * parse_factor();
            } else {
                return acc;
            }
        }
    }

    BivariatePoly parse_factor() {
        BivariatePoly base = parse_base();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            long long e = parse_nat();
            if (e > kMaxExponent) fail("exponent too large");
            return base.pow(static_cast<int>(e));
        }
        return base;
    }

    BivariatePoly parse_base() {
        skip_ws();
        char c = peek();
        if (c == 'x') {
            ++pos_;
            return BivariatePoly::var_x();
        }
        if (c == 'y') {
            ++pos_;
            return BivariatePoly::var_y();
        }
        if (c == '(') {
            ++pos_;
            BivariatePoly p = parse_poly();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return p;
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) return BivariatePoly(parse_rational());
        fail("expected 'x', 'y', a rational literal or '('");
        return {};
    }

    Rational parse_rational() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            ++pos_;
            neg = true;
        }
        Int n(parse_digits());
        if (neg) n = -n;
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            skip_ws();
            Int d(parse_digits());
            if (d == 0) fail("zero denominator");
            return Rational(n, d);
        }
        return Rational(n);
    }

    long long parse_nat() {
        skip_ws();
        std::string digits = parse_digits();
        if (digits.size() > 9) fail("exponent too large");
        return std::stoll(digits);
    }

    std::string parse_digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected digits");
        return s_.substr(start, pos_ - start);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char peek_at(std::size_t k) const { return pos_ + k < s_.size() ? s_[pos_ + k] : '\0'; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

BivariatePoly parse_polynomial(const std::string& text) { return Parser(text).run(); }

Rational rational_from_string(const std::string& text) {
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(text));
        Int n(text.substr(0, slash)), d(text.substr(slash + 1));
        if (d <= 0) throw InputError("rational denominator must be positive: " + text);
        return Rational(n, d);
    } catch (const std::runtime_error& e) {
        throw InputError("malformed rational '" + text + "'");
    }
}

}  // namespace izeta
