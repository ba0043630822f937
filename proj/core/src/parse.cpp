#include <cctype>
#include <string>

#include "gredcheck/errors.hpp"
#include "gredcheck/polynomial.hpp"

namespace gredcheck {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const Ring& ring, MonomialOrder order)
      : text_(text), ring_(ring), order_(order) {}

  Polynomial run() {
    Polynomial p = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) {
      throw ParseError("unexpected trailing input", pos_);
    }
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
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

  Polynomial parse_expr() {
    bool negate = eat('-');  // unary minus at expression head
    Polynomial acc = parse_term();
    if (negate) acc = -acc;
    for (;;) {
      if (eat('+')) {
        acc = acc + parse_term();
      } else if (eat('-')) {
        acc = acc - parse_term();
      } else {
        return acc;
      }
    }
  }

  Polynomial parse_term() {
    Polynomial acc = parse_factor();
    while (eat('*')) acc = acc * parse_factor();
    return acc;
  }

  Polynomial parse_factor() {
    Polynomial base = parse_base();
    if (eat('^')) return base.pow(parse_nat());
    return base;
  }

  Polynomial parse_base() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = parse_expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      return parse_rational();
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_name();
    throw ParseError("expected a number, a variable or '('", pos_);
  }

  Polynomial parse_rational() {
    size_t start = pos_;
    std::string digits;
    if (eat('-')) digits += '-';
    digits += parse_digits();
    if (peek() == '/') {
      ++pos_;
      digits += '/';
      digits += parse_digits();
    }
    try {
      return Polynomial::constant(ring_, Rational::from_string(digits),
                                  order_);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), start);
    }
  }

  std::string parse_digits() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected digits", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  unsigned parse_nat() {
    size_t start = pos_;
    std::string digits = parse_digits();
    unsigned long v = 0;
    try {
      v = std::stoul(digits);
    } catch (const std::exception&) {
      throw ParseError("exponent out of range", start);
    }
    if (v > 1'000'000) throw ParseError("exponent out of range", start);
    return static_cast<unsigned>(v);
  }

  Polynomial parse_name() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        ++pos_;
      } else {
        break;
      }
    }
    std::string name(text_.substr(start, pos_ - start));
    auto idx = ring_.index_of(name);
    if (!idx) {
      throw ParseError("unknown variable '" + name + "'", start);
    }
    return Polynomial::variable(ring_, *idx, order_);
  }

  std::string_view text_;
  const Ring& ring_;
  MonomialOrder order_;
  size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Ring& ring,
                            MonomialOrder order) {
  return PolyParser(text, ring, order).run();
}

}  // namespace gredcheck
