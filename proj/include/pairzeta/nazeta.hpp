#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pairzeta/curve.hpp"
#include "pairzeta/parallel.hpp"

namespace pairzeta {

// Coefficients of Z_{X,r}(t) for k = 0..N: q^{(g-1) C(r,2)} f_k(r, rk), each
// evaluated on the wall tau = k. Rank 1 gives [S^k X].
std::vector<ScalarValue> zeta_r_series(const Curve& c, std::int64_t r, std::int64_t N, Exec exec = Exec::serial);

// Z_{X,r}(t) in closed form (Z_X(t) itself for r = 1).
RationalSeries zeta_r_closed(const Curve& c, std::int64_t r);
// Zhat_{X,r}(t) = t^{1-g} Z_{X,r}(t).
RationalSeries zeta_r_hat(const Curve& c, std::int64_t r);

// P_{X,r}(t) = (1 - t)(1 - q^r t) Z_{X,r}(t). Throws ConsistencyError unless it
// is a polynomial of degree <= 2g.
RationalSeries numerator_P(const Curve& c, std::int64_t r);

// Zhat_{X,r}(1 / (q^r t)) == Zhat_{X,r}(t)
bool functional_equation_check(const Curve& c, std::int64_t r);
// q^{(1-g) C(r,2)} Z_{X,r}(0) == beta_{(r-1, 0)}, r >= 2
bool counting_miracle_check(const Curve& c, std::int64_t r);

// Zhat^{SL_r}_X(t) for r in {2, 3}.
RationalSeries sl_group_zeta(const Curve& c, std::int64_t r);
// Zhat_{X,r} == q^{(g-1) C(r,2)} b_1 Zhat^{SL_r}_X, r in {2, 3}
bool uniformity_check(const Curve& c, std::int64_t r);

struct ZetaResult {
  std::int64_t rank = 1;
  std::vector<ScalarValue> series;
  RationalSeries closed;
  RationalSeries numerator;
  std::map<std::string, bool> checks;
};

// Series, closed form, numerator and every applicable check for one rank.
ZetaResult zeta_r(const Curve& c, std::int64_t r, std::int64_t terms, Exec exec = Exec::serial);

}  // namespace pairzeta
