#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pairzeta {

using BigInt = mpz_class;
using BigRational = mpq_class;

struct FloorCeilFrac {
  BigInt floor;
  BigInt ceil;
  BigRational frac;  // x - floor, in [0, 1)
};

FloorCeilFrac rat_floor_ceil_frac(const BigRational& x);

BigInt floor_of(const BigRational& x);
BigInt ceil_of(const BigRational& x);
BigRational frac_of(const BigRational& x);
bool is_integer(const BigRational& x);

// Throws std::overflow_error when the value does not fit.
std::int64_t to_int64(const BigInt& v);
std::int64_t floor_int(const BigRational& x);
std::int64_t ceil_int(const BigRational& x);

BigRational make_rational(std::int64_t num, std::int64_t den = 1);

// Accepts "p", "-p", "p/q". Throws ParseError otherwise or when q = 0.
BigRational parse_rational(std::string_view text);
std::string to_string(const BigRational& x);

// A rational number or one of the two infinities; used for slope bounds.
class ExtendedRational {
 public:
  ExtendedRational() = default;
  ExtendedRational(const BigRational& value) : value_(value) {}  // NOLINT: implicit by design
  ExtendedRational(std::int64_t value) : value_(value) {}         // NOLINT

  static ExtendedRational infinity() { return ExtendedRational(Kind::plus_infinity); }
  static ExtendedRational minus_infinity() { return ExtendedRational(Kind::minus_infinity); }

  bool is_finite() const { return kind_ == Kind::finite; }
  bool is_plus_infinity() const { return kind_ == Kind::plus_infinity; }
  bool is_minus_infinity() const { return kind_ == Kind::minus_infinity; }
  // Requires is_finite().
  const BigRational& value() const;

  friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b);
  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }
  friend std::strong_ordering operator<=>(const ExtendedRational& a, const BigRational& b) {
    return a <=> ExtendedRational(b);
  }
  friend bool operator==(const ExtendedRational& a, const BigRational& b) {
    return a == ExtendedRational(b);
  }

  std::string to_string() const;

 private:
  enum class Kind : std::uint8_t { minus_infinity, finite, plus_infinity };
  explicit ExtendedRational(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::finite;
  BigRational value_;
};

}  // namespace pairzeta
