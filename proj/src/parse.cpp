#include <cctype>
#include <string>

#include "pairzeta/errors.hpp"
#include "pairzeta/scalar.hpp"

namespace pairzeta {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ScalarValue parse() {
    ScalarValue v = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  ScalarValue expression() {
    ScalarValue v = term();
    while (true) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  ScalarValue term() {
    ScalarValue v = unary();
    while (true) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        ScalarValue d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  ScalarValue unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  ScalarValue power() {
    ScalarValue base = primary();
    if (!accept('^')) return base;
    std::int64_t e = exponent();
    if (e < 0 && base.is_zero()) fail("zero to a negative power");
    return base.pow(e);
  }

  std::int64_t exponent() {
    bool paren = accept('(');
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    BigInt value = integer_literal();
    if (paren && !accept(')')) fail("expected ')'");
    if (value > 100000) fail("exponent too large");
    std::int64_t e = to_int64(value);
    return negative ? -e : e;
  }

  BigInt integer_literal() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return BigInt(std::string(text_.substr(start, pos_ - start)), 10);
  }

  ScalarValue primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      ScalarValue v = expression();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) return ScalarValue(BigRational(integer_literal()));
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      if (name == "q") return ScalarValue::q();
      auto idx = variable_index(name);
      if (!idx) {
        pos_ = start;
        fail("unknown symbol '" + std::string(name) + "'");
      }
      return ScalarValue::polynomial(MultiPoly::variable(*idx));
    }
    fail("unexpected character");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ScalarValue parse_scalar(std::string_view text) { return Parser(text).parse(); }

}  // namespace pairzeta
