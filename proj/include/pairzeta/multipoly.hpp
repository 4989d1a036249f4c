#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "pairzeta/rational.hpp"

namespace pairzeta {

// Every polynomial lives in Q[s, t, c1, ..., c6]. The variable order is fixed
// and doubles as the lexicographic monomial order (s is most significant).
inline constexpr std::size_t kMaxVars = 8;
inline constexpr std::size_t kVarS = 0;
inline constexpr std::size_t kVarT = 1;
inline constexpr std::size_t kFirstCurveVar = 2;
inline constexpr int kMaxCurveParams = static_cast<int>(kMaxVars - kFirstCurveVar);

std::string_view variable_name(std::size_t var);
std::optional<std::size_t> variable_index(std::string_view name);
// Index of c_i, 1 <= i <= kMaxCurveParams.
std::size_t curve_param_var(int i);

class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  static Monomial var(std::size_t v, unsigned power = 1);

  Exponent operator[](std::size_t v) const { return exps_[v]; }
  void set(std::size_t v, unsigned power);

  bool is_one() const;
  unsigned total_degree() const;
  std::uint32_t support() const;  // bit v set iff exponent of v is nonzero
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  Monomial operator/(const Monomial& other) const;  // requires divides
  Monomial pow(unsigned k) const;
  static Monomial gcd(const Monomial& a, const Monomial& b);
  static Monomial lcm(const Monomial& a, const Monomial& b);

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::array<Exponent, kMaxVars> exps_{};
};

class MultiPoly {
 public:
  struct Term {
    Monomial mono;
    BigRational coeff;
  };

  MultiPoly() = default;
  explicit MultiPoly(const BigRational& c);
  explicit MultiPoly(long c) : MultiPoly(BigRational(c)) {}

  static MultiPoly variable(std::size_t v, unsigned power = 1);
  static MultiPoly monomial(const Monomial& m, const BigRational& c);
  // Sorts, merges equal monomials and drops zeros.
  static MultiPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  // Largest term under lex order. Requires !is_zero().
  const Term& leading_term() const { return terms_.front(); }
  const BigRational& leading_coeff() const { return terms_.front().coeff; }
  BigRational constant_term() const;

  unsigned degree(std::size_t v) const;
  unsigned min_degree(std::size_t v) const;
  std::uint32_t support() const;
  bool has_integer_coefficients() const;

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly scaled(const BigRational& c) const;
  MultiPoly times_monomial(const Monomial& m) const;
  MultiPoly divided_by_monomial(const Monomial& m) const;  // requires m | every term
  MultiPoly pow(unsigned k) const;

  // Exact quotient, or nullopt when `divisor` does not divide *this over Q.
  std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;

  // Substitute a number for one variable.
  MultiPoly evaluate(std::size_t v, const BigRational& x) const;
  // Substitute numbers for all variables in `mask`; remaining variables must be absent.
  BigRational evaluate_all(const std::array<std::optional<BigRational>, kMaxVars>& values) const;
  // Coefficients with respect to v: map from power to coefficient polynomial (free of v).
  std::map<unsigned, MultiPoly> coefficients(std::size_t v) const;
  MultiPoly coefficient(std::size_t v, unsigned k) const;
  // Term-wise map c*m -> c*m*factor^{deg_v(m)}.
  MultiPoly scale_variable(std::size_t v, const Monomial& factor) const;

  Monomial monomial_content() const;
  // Positive rational g with (*this / g) integral and primitive.
  BigRational content() const;
  // *this / content(), sign-normalized so the leading coefficient is positive.
  MultiPoly primitive_part() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

 private:
  explicit MultiPoly(std::vector<Term> sorted_terms, bool) : terms_(std::move(sorted_terms)) {}

  std::vector<Term> terms_;  // strictly decreasing monomials, nonzero coefficients
};

std::string monomial_to_string(const Monomial& m);

}  // namespace pairzeta
