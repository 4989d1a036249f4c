#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <string_view>

#include "pairzeta/multipoly.hpp"
#include "pairzeta/rational.hpp"

namespace pairzeta {

// Element of Q(s, t, c1, ..., c6) in canonical form: numerator and denominator
// coprime, denominator with leading coefficient 1. Canonical forms are unique,
// so operator== is structural. The Lefschetz class is q = s^2.
class ScalarValue {
 public:
  ScalarValue() : den_(1L) {}
  ScalarValue(long value) : num_(value), den_(1L) {}  // NOLINT: numeric literals read naturally
  ScalarValue(int value) : ScalarValue(static_cast<long>(value)) {}  // NOLINT
  ScalarValue(const BigRational& value) : num_(value), den_(1L) {}   // NOLINT

  // Reduces an arbitrary fraction. Throws DomainError when den = 0.
  static ScalarValue fraction(const MultiPoly& num, const MultiPoly& den);
  static ScalarValue polynomial(const MultiPoly& p);

  static ScalarValue s();
  static ScalarValue q();
  static ScalarValue t();
  static ScalarValue curve_param(int i);
  static ScalarValue s_power(std::int64_t e);
  static ScalarValue q_power(std::int64_t e) { return s_power(2 * e); }
  // (-s)^e, sign resolved at construction.
  static ScalarValue neg_s_power(std::int64_t e);

  const MultiPoly& numerator() const { return num_; }
  const MultiPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool depends_on(std::size_t var) const { return ((num_.support() | den_.support()) >> var) & 1u; }
  bool is_q_integral() const;

  ScalarValue operator-() const;
  friend ScalarValue operator+(const ScalarValue& a, const ScalarValue& b);
  friend ScalarValue operator-(const ScalarValue& a, const ScalarValue& b);
  friend ScalarValue operator*(const ScalarValue& a, const ScalarValue& b);
  friend ScalarValue operator/(const ScalarValue& a, const ScalarValue& b);
  ScalarValue& operator+=(const ScalarValue& o) { return *this = *this + o; }
  ScalarValue& operator-=(const ScalarValue& o) { return *this = *this - o; }
  ScalarValue& operator*=(const ScalarValue& o) { return *this = *this * o; }
  ScalarValue& operator/=(const ScalarValue& o) { return *this = *this / o; }

  ScalarValue inverse() const;
  ScalarValue pow(std::int64_t e) const;

  // Substitutions in t. The first two are field automorphisms, so they only
  // need monomial cancellation; the third is a specialization.
  ScalarValue scale_t(std::int64_t k) const;        // t -> s^k t
  ScalarValue invert_t(std::int64_t k) const;       // t -> 1 / (s^k t)
  ScalarValue substitute_t(std::int64_t k) const;   // t -> s^k

  friend bool operator==(const ScalarValue& a, const ScalarValue& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // "N / D"; parenthesized where the grammar would otherwise misread it.
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const ScalarValue& v) { return os << v.to_string(); }

 private:
  // Caller guarantees num and den are coprime; only rescales.
  static ScalarValue from_reduced(MultiPoly num, MultiPoly den);

  MultiPoly num_;
  MultiPoly den_;
};

enum class ArithOp { add, sub, mul, div };

ScalarValue scalar_arith(const ScalarValue& a, const ScalarValue& b, ArithOp op);
ScalarValue scalar_pow_q(std::int64_t e);
bool is_q_integral(const ScalarValue& v);

// Symbol name -> value. Names: "s", "q" (binds s^2; the value must be
// q-integral), "t", "c1".."c6".
using Bindings = std::map<std::string, BigRational, std::less<>>;
BigRational scalar_eval(const ScalarValue& v, const Bindings& bindings);

// Grammar: + - * / ^, parentheses, integers, symbols s, q (= s^2), t, c1..c6.
// Exponents are (possibly negative) integer literals.
ScalarValue parse_scalar(std::string_view text);

}  // namespace pairzeta
