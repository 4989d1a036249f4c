#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "pairzeta/rational.hpp"

namespace pairzeta {

// Chern character (rank, degree) of a vector bundle on a genus-g curve.
struct ChernClass {
  std::int64_t r = 1;
  std::int64_t d = 0;
  auto operator<=>(const ChernClass&) const = default;
  BigRational slope() const { return make_rational(d, r); }
  std::string to_string() const { return "(" + std::to_string(r) + "," + std::to_string(d) + ")"; }
};

// Riemann-Roch: chi(alpha) = d + (1 - g) r.
inline std::int64_t chi(int g, ChernClass a) { return a.d + (1 - g) * a.r; }
inline std::int64_t chi2(int g, ChernClass a, ChernClass b) { return a.r * b.d - b.r * a.d + (1 - g) * a.r * b.r; }
inline std::int64_t bracket(ChernClass a, ChernClass b) { return 2 * (a.r * b.d - b.r * a.d); }

}  // namespace pairzeta
