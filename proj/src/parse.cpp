#include <cctype>
#include <stdexcept>

#include "polyconf/lpoly.hpp"

namespace polyconf {

PolyParseError::PolyParseError(const std::string& msg, size_t pos)
    : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}

namespace {

class Parser {
  public:
    Parser(const std::string& text, int dim) : text_(text), dim_(dim) {}

    LaurentPoly run() {
        LaurentPoly f = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return f;
    }

  private:
    const std::string& text_;
    int dim_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw PolyParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    LaurentPoly expr() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        LaurentPoly acc = product();
        if (neg) acc = -acc;
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc = acc + product();
            } else if (c == '-') {
                ++pos_;
                acc = acc - product();
            } else {
                break;
            }
        }
        return acc;
    }

    LaurentPoly product() {
        LaurentPoly acc = factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * factor();
            } else if (c == '(' || std::isalpha(static_cast<unsigned char>(c)) ||
                       std::isdigit(static_cast<unsigned char>(c))) {
                acc = acc * factor();  // implicit product
            } else {
                break;
            }
        }
        return acc;
    }

    LaurentPoly factor() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            LaurentPoly inner = expr();
            if (!eat(')')) fail("expected ')'");
            if (peek() == '^') {
                ++pos_;
                Int n = unsigned_int();
                if (n > 64) fail("group exponent too large");
                return inner.pow(static_cast<unsigned>(n.get_ui()));
            }
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = unsigned_int();
            if (peek() == '/') {
                ++pos_;
                size_t den_pos = pos_;
                Int den = unsigned_int();
                if (den == 0) throw PolyParseError("zero denominator", den_pos);
                Rat q(num, den);
                q.canonicalize();
                return LaurentPoly::constant(dim_, q);
            }
            return LaurentPoly::constant(dim_, Rat(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) return variable();
        fail("expected a term");
    }

    LaurentPoly variable() {
        size_t start = pos_;
        char c = text_[pos_++];
        int index = -1;
        if (c == 'x' && pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            Int n = unsigned_int();
            if (n < 1 || n > dim_) throw PolyParseError("variable index outside dimension", start);
            index = static_cast<int>(n.get_si()) - 1;
        } else if (dim_ <= 3 && (c == 'x' || c == 'y' || c == 'z')) {
            index = c - 'x';
            if (index >= dim_) throw PolyParseError("variable outside declared dimension", start);
        } else {
            throw PolyParseError("unknown variable", start);
        }
        std::int64_t e = 1;
        if (peek() == '^') {
            ++pos_;
            e = signed_int();
        }
        ExpVec ev(dim_, 0);
        ev[index] = e;
        return LaurentPoly::monomial(ev, 1);
    }

    Int unsigned_int() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected an integer");
        return Int(text_.substr(start, pos_ - start));
    }

    std::int64_t signed_int() {
        skip_ws();
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Int n = unsigned_int();
        if (neg) n = -n;
        return to_i64(n);
    }
};

}  // namespace

LaurentPoly parse_poly(const std::string& text, int dim) {
    if (dim < 1) throw std::invalid_argument("parse_poly: dimension must be >= 1");
    return Parser(text, dim).run();
}

}  // namespace polyconf
