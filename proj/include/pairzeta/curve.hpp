#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "pairzeta/scalar.hpp"

namespace pairzeta {

// Truncated power series sum_{n < order} coefficients[n] t^n + O(t^order).
struct TruncatedSeries {
  std::vector<ScalarValue> coefficients;
  std::size_t order() const { return coefficients.size(); }
};

// A rational function in t over K, kept as a canonical ScalarValue.
class RationalSeries {
 public:
  RationalSeries() = default;
  RationalSeries(ScalarValue value) : value_(std::move(value)) {}  // NOLINT: scalars are constants in t

  static RationalSeries t_power(std::int64_t k);

  const ScalarValue& value() const { return value_; }

  friend RationalSeries operator+(const RationalSeries& a, const RationalSeries& b) { return a.value_ + b.value_; }
  friend RationalSeries operator-(const RationalSeries& a, const RationalSeries& b) { return a.value_ - b.value_; }
  friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) { return a.value_ * b.value_; }
  friend RationalSeries operator/(const RationalSeries& a, const RationalSeries& b) { return a.value_ / b.value_; }
  RationalSeries operator-() const { return -value_; }
  friend bool operator==(const RationalSeries& a, const RationalSeries& b) { return a.value_ == b.value_; }

  RationalSeries scale_t(std::int64_t s_exponent) const { return value_.scale_t(s_exponent); }
  RationalSeries invert_t(std::int64_t s_exponent) const { return value_.invert_t(s_exponent); }
  // Value at t = s^k.
  ScalarValue at_s_power(std::int64_t k) const { return value_.substitute_t(k); }
  // Value at an arbitrary t-free point.
  ScalarValue evaluate(const ScalarValue& x) const;

  // Requires no pole at t = 0.
  TruncatedSeries expand(std::size_t order) const;
  // t^n coefficient of the expansion at 0; zero for n < 0.
  ScalarValue coefficient(std::int64_t n) const;

  bool is_polynomial() const;
  // Requires is_polynomial().
  std::vector<ScalarValue> polynomial_coefficients() const;
  std::int64_t polynomial_degree() const;  // -1 for the zero polynomial

  std::string to_string() const { return value_.to_string(); }

 private:
  ScalarValue value_;
};

// Thread-safe memo table shared by all copies of a Curve.
class ScalarMemo {
 public:
  using Key = std::vector<std::int64_t>;
  std::optional<ScalarValue> find(const Key& key) const;
  void store(const Key& key, const ScalarValue& value);
  std::size_t size() const;
  void clear();

 private:
  mutable std::mutex mutex_;
  std::map<Key, ScalarValue> table_;
};

// Memo-table tags; each module owns a range of keys.
enum class MemoTag : std::int64_t { sym_power = 1, b_r, beta, slice, inverse };

enum class CurveMode { symbolic, numeric };

class Curve {
 public:
  // a_i = c_i for 1 <= i <= g, g <= 6.
  static Curve symbolic(int genus);
  // a_1..a_g given as t-free, q-integral scalars.
  static Curve numeric(int genus, std::vector<ScalarValue> free_coefficients);

  int genus() const { return genus_; }
  CurveMode mode() const { return mode_; }
  // a_0 .. a_{2g} with a_0 = 1 and a_{2g-i} = q^{g-i} a_i.
  const std::vector<ScalarValue>& numerator_coefficients() const { return a_; }

  ScalarMemo& memo() const { return *memo_; }
  std::string description() const;

 private:
  Curve(int genus, CurveMode mode, std::vector<ScalarValue> free_coefficients);

  int genus_ = 0;
  CurveMode mode_ = CurveMode::symbolic;
  std::vector<ScalarValue> a_;
  std::shared_ptr<ScalarMemo> memo_;
};

RationalSeries numerator_polynomial(const Curve& c);  // P_X(t)
RationalSeries zeta(const Curve& c);                  // P_X(t) / ((1 - t)(1 - qt))
RationalSeries zeta_hat(const Curve& c);              // t^{1-g} Z_X(t)
ScalarValue zeta_hat_at_q_power(const Curve& c, std::int64_t i);
ScalarValue sym_power(const Curve& c, std::int64_t n);  // [S^n X], zero for n < 0
ScalarValue jacobian_class(const Curve& c);              // P_X(1)
ScalarValue b_r(const Curve& c, std::int64_t r);

// 1 + q + ... + q^{n}; zero for n < 0.
ScalarValue q_geometric_sum(std::int64_t n);

}  // namespace pairzeta
