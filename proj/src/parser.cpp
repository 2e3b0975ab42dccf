#include "idealiser/parser.hpp"

#include <cctype>
#include <string>

#include "idealiser/errors.hpp"

namespace idealiser {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const PolyRing& ring) : text_(text), ring_(ring) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_digit() const {
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  Integer integer() {
    skip_ws();
    std::size_t start = pos_;
    while (at_digit()) ++pos_;
    if (start == pos_) fail("expected integer literal");
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  Poly unary() {
    if (accept('-')) return -unary();
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (!accept('^')) return base;
    skip_ws();
    std::size_t at = pos_;
    if (!at_digit()) fail("exponent must be a non-negative integer literal");
    Integer e = integer();
    if (e > 100000) {
      pos_ = at;
      fail("exponent too large");
    }
    return base.pow(static_cast<unsigned>(e.get_ui()));
  }

  Poly atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = integer();
      Integer den = 1;
      std::size_t save = pos_;
      if (accept('/')) {
        skip_ws();
        if (!at_digit()) fail("expected denominator after '/'");
        den = integer();
        if (den == 0) {
          pos_ = save;
          fail("zero denominator");
        }
      }
      return Poly::constant(ring_, Rational(num, den));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      long idx = ring_.index_of(name);
      if (idx < 0) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Poly::variable(ring_, static_cast<std::size_t>(idx));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const PolyRing& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const PolyRing& ring) { return PolyParser(text, ring).parse(); }

}  // namespace idealiser
