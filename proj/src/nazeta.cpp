#include "pairzeta/nazeta.hpp"

#include "pairzeta/errors.hpp"
#include "pairzeta/motivic.hpp"
#include "pairzeta/slices.hpp"
#include "pairzeta/wallcross.hpp"

namespace pairzeta {

namespace {

ScalarValue qp(std::int64_t e) { return ScalarValue::q_power(e); }
std::int64_t binom2(std::int64_t r) { return r * (r - 1) / 2; }

RationalSeries rs(const ScalarValue& x) { return RationalSeries(x); }
RationalSeries t_series() { return RationalSeries::t_power(1); }
// 1 - q^a t
RationalSeries geo(std::int64_t a) { return rs(ScalarValue(1)) - rs(qp(a)) * t_series(); }
// Zhat_X(q^a t)
RationalSeries zhat_shift(const Curve& c, std::int64_t a) { return zeta_hat(c).scale_t(2 * a); }

void require_rank(std::int64_t r, std::int64_t lo) {
  if (r < lo) throw DomainError("rank must be at least " + std::to_string(lo));
}

}  // namespace

std::vector<ScalarValue> zeta_r_series(const Curve& c, std::int64_t r, std::int64_t N, Exec exec) {
  require_rank(r, 1);
  if (N < 0) throw DomainError("term count must be non-negative");
  std::vector<ScalarValue> out(static_cast<std::size_t>(N + 1));
  const ScalarValue scale = qp((c.genus() - 1) * binom2(r));
  parallel_for(out.size(), exec, [&](std::size_t i) {
    const auto k = static_cast<std::int64_t>(i);
    PairQuery q{r, r * k, BigRational(k)};
    out[i] = r == 1 ? f_tau_product(c, q) : scale * f_tau_lemma(c, q);
  });
  return out;
}

RationalSeries zeta_r_hat(const Curve& c, std::int64_t r) {
  require_rank(r, 1);
  if (r == 1) return zeta_hat(c);
  const RationalSeries t = t_series();
  RationalSeries total;
  for (const auto& parts : slices::compositions(static_cast<int>(r - 1))) {
    const std::size_t k = parts.size();
    std::vector<std::int64_t> le(k + 1, 0);  // r_{<=i}
    for (std::size_t i = 1; i <= k; ++i) le[i] = le[i - 1] + parts[i - 1];
    ScalarValue weight(1), den(1);
    for (int p : parts) weight *= b_r(c, p);
    for (std::size_t i = 0; i + 1 < k; ++i) den *= ScalarValue(1) - qp(parts[i] + parts[i + 1]);
    weight /= den;

    RationalSeries inner = zeta_hat(c) / geo(parts[0] + 1);
    for (std::size_t i = 1; i + 1 <= k; ++i) {
      const std::int64_t w = parts[i - 1] + parts[i];
      inner = inner - rs((ScalarValue(1) - qp(w)) * qp(le[i - 1])) * t * zhat_shift(c, le[i]) /
                          (geo(le[i - 1]) * geo(le[i + 1] + 1));
    }
    inner = inner - rs(qp(le[k - 1])) * t * zhat_shift(c, r - 1) / geo(le[k - 1]);
    total = total + rs(weight) * inner;
  }
  return rs(qp((c.genus() - 1) * binom2(r))) * total;
}

RationalSeries zeta_r_closed(const Curve& c, std::int64_t r) {
  if (r == 1) return zeta(c);
  return zeta_r_hat(c, r) * RationalSeries::t_power(c.genus() - 1);
}

RationalSeries numerator_P(const Curve& c, std::int64_t r) {
  RationalSeries p = zeta_r_closed(c, r) * geo(0) * geo(r);
  if (!p.is_polynomial())
    throw ConsistencyError("(1 - t)(1 - q^" + std::to_string(r) + " t) Z_{X,r}(t) is not a polynomial in t");
  if (p.polynomial_degree() > 2 * c.genus())
    throw ConsistencyError("numerator of Z_{X," + std::to_string(r) + "} has degree " +
                           std::to_string(p.polynomial_degree()) + " > 2g");
  return p;
}

bool functional_equation_check(const Curve& c, std::int64_t r) {
  RationalSeries z = zeta_r_hat(c, r);
  return z.invert_t(2 * r) == z;
}

bool counting_miracle_check(const Curve& c, std::int64_t r) {
  require_rank(r, 2);
  ScalarValue z0 = zeta_r_closed(c, r).coefficient(0);
  return qp((1 - c.genus()) * binom2(r)) * z0 == beta(c, {r - 1, 0});
}

RationalSeries sl_group_zeta(const Curve& c, std::int64_t r) {
  const RationalSeries t = t_series();
  const RationalSeries zh = zeta_hat(c);
  if (r == 2) return zh / geo(2) - t * zhat_shift(c, 1) / geo(0);
  if (r != 3) throw DomainError("group zeta functions are available for SL_2 and SL_3 only");
  const ScalarValue at_minus_two = zeta_hat_at_q_power(c, -2);
  if (at_minus_two != zeta_hat_at_q_power(c, 1))
    throw ConsistencyError("Zhat_X(q^-2) differs from Zhat_X(q)");
  const ScalarValue p1 = jacobian_class(c), qm1 = ScalarValue::q() - 1;
  return rs(at_minus_two) * (zh / geo(3) - t * zhat_shift(c, 2) / geo(0)) +
         rs(p1 / (qm1 * (ScalarValue(1) - qp(2)))) * (zh / geo(2) - rs(ScalarValue::q()) * t * zhat_shift(c, 2) / geo(1)) -
         rs(p1 / qm1) * t * zhat_shift(c, 1) / (geo(0) * geo(3));
}

bool uniformity_check(const Curve& c, std::int64_t r) {
  RationalSeries lhs = zeta_r_hat(c, r);
  RationalSeries rhs = rs(qp((c.genus() - 1) * binom2(r)) * b_r(c, 1)) * sl_group_zeta(c, r);
  return lhs == rhs;
}

ZetaResult zeta_r(const Curve& c, std::int64_t r, std::int64_t terms, Exec exec) {
  ZetaResult out;
  out.rank = r;
  out.series = zeta_r_series(c, r, terms, exec);
  out.closed = zeta_r_closed(c, r);
  bool polynomial = true;
  try {
    out.numerator = numerator_P(c, r);
  } catch (const ConsistencyError&) {
    polynomial = false;
  }
  out.checks["rationality"] = polynomial;
  bool agree = true;
  for (std::size_t k = 0; k < out.series.size(); ++k)
    agree = agree && out.closed.coefficient(static_cast<std::int64_t>(k)) == out.series[k];
  out.checks["series_matches_closed_form"] = agree;
  out.checks["functional_equation"] = functional_equation_check(c, r);
  bool integral = true;
  for (const auto& x : out.series) integral = integral && is_q_integral(x);
  out.checks["q_integral"] = integral;
  if (r == 1) out.checks["equals_curve_zeta"] = out.closed == zeta(c);
  if (r >= 2) out.checks["counting_miracle"] = counting_miracle_check(c, r);
  if (r == 2 || r == 3) out.checks["uniformity"] = uniformity_check(c, r);
  return out;
}

}  // namespace pairzeta
