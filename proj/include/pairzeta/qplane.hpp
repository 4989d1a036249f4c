#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "pairzeta/chern.hpp"
#include "pairzeta/parallel.hpp"
#include "pairzeta/scalar.hpp"

namespace pairzeta {

// Exponent (r, d, v) of x_1^r x_2^d x_3^v; v is the framing rank.
struct FramedClass {
  std::int64_t r = 0;
  std::int64_t d = 0;
  std::int64_t v = 0;
  auto operator<=>(const FramedClass&) const = default;
  bool is_unit() const { return r == 0 && d == 0 && v == 0; }
  ChernClass underlying() const { return {r, d}; }
  std::string to_string() const;
};

FramedClass operator+(const FramedClass& a, const FramedClass& b);

std::int64_t framed_chi(int g, const FramedClass& a, const FramedClass& b);
std::int64_t framed_bracket(int g, const FramedClass& a, const FramedClass& b);

// Ranks 0..max_rank and framings 0..max_framing are tracked.
struct Window {
  int max_rank = 1;
  int max_framing = 1;
  bool operator==(const Window&) const = default;
};

// Degree bookkeeping for one (rank, framing) slot: every coefficient of degree
// below lo is zero, and coefficients are exactly known up to degree hi.
// Both bounds may be kInfinite.
struct Extent {
  static constexpr std::int64_t kInfinite = std::int64_t{1} << 60;
  std::int64_t lo = kInfinite;
  std::int64_t hi = kInfinite;
  bool knows(std::int64_t d) const { return d < lo || d <= hi; }
  bool operator==(const Extent&) const = default;
};

// A finitely stored piece of a skew power series. Slots whose extent has a
// finite hi stand for series that continue past the stored terms.
class SkewSeries {
 public:
  using Terms = std::map<FramedClass, ScalarValue>;
  using ExtentFn = std::function<Extent(int r, int v)>;

  SkewSeries() : SkewSeries(Window{}, {}) {}
  // A finite series; every coefficient in the window is known.
  SkewSeries(Window window, Terms terms);
  // Terms are truncated to the extents; extents are tightened so lo never
  // exceeds the lowest stored degree.
  static SkewSeries with_extents(Window window, Terms terms, const ExtentFn& extent);
  static SkewSeries unit(Window window);
  static SkewSeries monomial(Window window, FramedClass c, ScalarValue coefficient);

  const Window& window() const { return window_; }
  const Terms& terms() const { return terms_; }
  const Extent& extent(int r, int v) const;
  bool in_window(const FramedClass& c) const;
  bool knows(const FramedClass& c) const;
  // Throws WindowError when the coefficient is not determined.
  ScalarValue coefficient(const FramedClass& c) const;
  bool is_exact() const;

  SkewSeries operator+(const SkewSeries& other) const;
  SkewSeries operator-(const SkewSeries& other) const;
  SkewSeries operator-() const;
  SkewSeries scaled(const ScalarValue& k) const;

  // Same window, same extents, same terms.
  bool operator==(const SkewSeries& other) const = default;
  // Equal on every class both series determine.
  bool agrees_with(const SkewSeries& other) const;
  std::string to_string() const;

 private:
  SkewSeries(Window window, Terms terms, std::vector<Extent> extents);
  std::size_t slot(int r, int v) const { return static_cast<std::size_t>(r * (window_.max_framing + 1) + v); }
  void validate_and_normalize();

  Window window_;
  Terms terms_;
  std::vector<Extent> extents_;
};

enum class SlopeCmp { le, lt, eq, ge, gt };
std::string to_string(SlopeCmp cmp);

// Keeps the terms of positive rank whose slope d/r satisfies the comparison.
// Rank-zero terms other than the unit have no slope and are dropped; the unit
// stays when keep_unit is set.
SkewSeries truncate_slope(const SkewSeries& s, SlopeCmp cmp, const BigRational& tau, bool keep_unit = true);

// The algebra with x^a o x^b = (-s)^{<a, b>} x^{a+b} for a curve of genus g.
class QuantumPlane {
 public:
  explicit QuantumPlane(int genus) : genus_(genus) {}
  int genus() const { return genus_; }

  ScalarValue twist(const FramedClass& a, const FramedClass& b) const;
  SkewSeries multiply(const SkewSeries& a, const SkewSeries& b, Exec exec = Exec::serial) const;
  // Two-sided inverse of a series with constant term exactly 1.
  SkewSeries inverse(const SkewSeries& a, Exec exec = Exec::serial) const;

 private:
  int genus_;
};

}  // namespace pairzeta
