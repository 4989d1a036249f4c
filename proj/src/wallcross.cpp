#include "pairzeta/wallcross.hpp"

#include <algorithm>

#include "pairzeta/errors.hpp"
#include "pairzeta/motivic.hpp"
#include "pairzeta/qplane.hpp"
#include "pairzeta/slices.hpp"

namespace pairzeta {

namespace {

using Composition = std::vector<int>;

ScalarValue qp(std::int64_t e) { return ScalarValue::q_power(e); }

std::int64_t binom2(std::int64_t r) { return r * (r - 1) / 2; }

std::int64_t to_int(const BigRational& x) {
  if (!is_integer(x)) throw ConsistencyError("expected an integer exponent, got " + to_string(x));
  return floor_int(x);
}

std::int64_t floor_times(std::int64_t k, const BigRational& tau) { return floor_int(BigRational(k) * tau); }
std::int64_t ceil_times(std::int64_t k, const BigRational& tau) { return ceil_int(BigRational(k) * tau); }

BigRational fractional(const BigRational& x) { return x - BigRational(floor_int(x)); }

void require_rank_two(const PairQuery& q, const char* route) {
  if (q.r < 2) throw DomainError(std::string(route) + " needs rank >= 2");
}

// Prefix sums r_{<=i} (index i = 0..k) and tail sums r_{>=i} (index i = 1..k+1).
struct Sums {
  std::vector<std::int64_t> le;
  std::vector<std::int64_t> ge;
  explicit Sums(const Composition& parts) : le(parts.size() + 1, 0), ge(parts.size() + 2, 0) {
    const std::size_t k = parts.size();
    for (std::size_t i = 1; i <= k; ++i) le[i] = le[i - 1] + parts[i - 1];
    for (std::size_t i = k; i >= 1; --i) ge[i] = ge[i + 1] + parts[i - 1];
  }
};

// b_{r_1} .. b_{r_k} / prod_{i<k} (1 - q^{r_i + r_{i+1}})
ScalarValue composition_weight(const Curve& c, const Composition& parts) {
  ScalarValue num(1), den(1);
  for (int p : parts) num *= b_r(c, p);
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) den *= ScalarValue(1) - qp(parts[i] + parts[i + 1]);
  return num / den;
}

}  // namespace

std::string to_string(PairMethod m) {
  switch (m) {
    case PairMethod::product: return "product";
    case PairMethod::convolution: return "convolution";
    case PairMethod::lemma: return "lemma";
    case PairMethod::explicit_form: return "explicit";
  }
  return "?";
}

std::optional<PairMethod> parse_pair_method(std::string_view name) {
  for (auto m : {PairMethod::product, PairMethod::convolution, PairMethod::lemma, PairMethod::explicit_form})
    if (to_string(m) == name) return m;
  return std::nullopt;
}

bool is_generic(const BigRational& tau, std::int64_t r, std::int64_t d) {
  if (r < 1) throw DomainError("rank must be positive");
  if (tau == make_rational(d, r)) return false;
  for (std::int64_t rp = 1; rp < r; ++rp)
    if (is_integer(tau * BigRational(rp))) return false;
  return true;
}

ScalarValue f_infinity_coeff(const Curve& c, std::int64_t d) { return sym_power(c, d); }

// ---------------------------------------------------------------------------
// Product route

namespace {

// Re-embeds an unframed series of ranks <= R in a framed window of rank top.
// Ranks above R are unknown past their lowest degree; framing 1 is zero.
SkewSeries widen(const SkewSeries& u, int top, const SliceBounds& bounds) {
  const int R = u.window().max_rank;
  return SkewSeries::with_extents(Window{top, 1}, u.terms(), [&](int r, int v) -> Extent {
    if (v == 1) return Extent{};
    if (r <= R) return u.extent(r, 0);
    std::int64_t lo = u_min_degree(bounds, r);
    return {lo, lo - 1};
  });
}

// Lowest degree at rank r of u_{>=tau} (ge) or u_{>tau}^{-1} (gt); rank 0 is the unit.
std::int64_t min_degree(SliceMode mode, const BigRational& tau, std::int64_t r) {
  if (r == 0) return 0;
  return u_min_degree(SliceBounds{mode, tau}, r);
}

ScalarValue product_at(const Curve& c, const PairQuery& q, const BigRational& max_slope, Exec exec,
                       bool& determined) {
  const int R = static_cast<int>(q.r - 1), top = static_cast<int>(q.r);
  const DegreeWindow window{R, max_slope};
  QuantumPlane plane(c.genus());
  auto u_ge = widen(u_series_from_rays(c, SliceMode::ge, q.tau, window, exec), top, {SliceMode::ge, q.tau});
  auto u_gt = widen(u_series_from_rays(c, SliceMode::gt, q.tau, window, exec), top, {SliceMode::gt, q.tau});
  auto u_gt_inv = plane.inverse(u_gt, exec);

  // f_inf = sum_{e >= 0} [S^e X] x^{(1, e, 1)}, stored up to the degree the
  // query can reach: every other factor has degree at least its minimum.
  std::int64_t reach = q.d;
  for (std::int64_t r1 = 0; r1 <= R; ++r1)
    for (std::int64_t r2 = 0; r1 + r2 <= R; ++r2)
      reach = std::max(reach, q.d - min_degree(SliceMode::gt, q.tau, r1) - min_degree(SliceMode::ge, q.tau, r2));
  SkewSeries::Terms terms;
  for (std::int64_t e = 0; e <= reach; ++e) terms.emplace(FramedClass{1, e, 1}, f_infinity_coeff(c, e));
  auto f_inf = SkewSeries::with_extents(Window{top, 1}, std::move(terms), [&](int r, int v) -> Extent {
    if (r == 1 && v == 1) return {0, reach};
    return Extent{};
  });

  auto result = plane.multiply(plane.multiply(u_gt_inv, f_inf, exec), u_ge, exec);
  const FramedClass target{q.r, q.d, 1};
  determined = result.knows(target);
  return determined ? result.coefficient(target) : ScalarValue(0);
}

}  // namespace

ScalarValue f_tau_product(const Curve& c, const PairQuery& q, Exec exec) {
  if (q.r < 1) throw DomainError("rank must be positive");
  if (make_rational(q.d, q.r) > q.tau) return ScalarValue(0);
  if (q.r == 1) return f_infinity_coeff(c, q.d);
  // Rays up to slope S determine rank-j degrees up to floor(j S); grow S until
  // the target coefficient is determined.
  BigRational span = BigRational(std::max<std::int64_t>(q.d, 0)) + abs(q.tau) + BigRational(q.r) * (abs(q.tau) + 1);
  BigRational max_slope = std::max(q.tau, BigRational(0)) + BigRational(1) + span / BigRational(q.r - 1);
  for (int attempt = 0; attempt < 8; ++attempt) {
    bool determined = false;
    ScalarValue value = product_at(c, q, max_slope, exec, determined);
    if (determined) return value;
    max_slope = max_slope * 2;
  }
  throw WindowError("product route could not determine the coefficient of " + FramedClass{q.r, q.d, 1}.to_string());
}

// ---------------------------------------------------------------------------
// Convolution route

ScalarValue f_tau_convolution(const Curve& c, const PairQuery& q) {
  require_rank_two(q, "convolution route");
  const std::int64_t r = q.r, d = q.d, g = c.genus();
  const BigRational& tau = q.tau;
  if (make_rational(d, r) > tau) return ScalarValue(0);
  const SliceBounds ge{SliceMode::ge, tau}, gt{SliceMode::gt, tau};
  auto a = [&](std::int64_t rr, std::int64_t dd) { return slice_closed(c, {rr, dd}, ge).value; };
  auto cc = [&](std::int64_t rr, std::int64_t dd) { return inverse_closed(c, {rr, dd}, gt).value; };

  ScalarValue sum(0);
  // e runs while (r-1, d-e) keeps slope >= tau, resp. > tau
  for (std::int64_t e = 0; d - e >= ceil_times(r - 1, tau); ++e)
    sum += sym_power(c, e) * a(r - 1, d - e) * qp(d - r * e);
  for (std::int64_t e = 0; d - e >= floor_times(r - 1, tau) + 1; ++e)
    sum += sym_power(c, e) * cc(r - 1, d - e) * qp((1 - g + e) * (r - 1));
  for (std::int64_t rp = 1; rp + 1 <= r - 1; ++rp) {
    const std::int64_t rpp = r - 1 - rp;
    const std::int64_t dp_min = floor_times(rp, tau) + 1, dpp_min = ceil_times(rpp, tau);
    for (std::int64_t e = 0; d - e >= dp_min + dpp_min; ++e)
      for (std::int64_t dpp = dpp_min; d - e - dpp >= dp_min; ++dpp) {
        const std::int64_t dp = d - e - dpp;
        sum += sym_power(c, e) * cc(rp, dp) * a(rpp, dpp) *
               qp((1 - g + e) * rp - rpp * e + (rp + 1) * dpp - rpp * dp);
      }
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Lemma route

ScalarValue f_tau_lemma(const Curve& c, const PairQuery& q) {
  require_rank_two(q, "lemma route");
  const std::int64_t r = q.r, d = q.d, g = c.genus();
  const BigRational& tau = q.tau;
  if (make_rational(d, r) > tau) return ScalarValue(0);
  const BigRational top = BigRational(d) - BigRational(r - 1) * tau;  // d - (r-1) tau
  const std::int64_t e_end = ceil_int(top);                           // e < e_end
  const bool wall_term = is_integer(top) && top >= 0;
  if (e_end <= 0 && !wall_term) return ScalarValue(0);

  ScalarValue total(0);
  for (const auto& parts : slices::compositions(static_cast<int>(r - 1))) {
    const std::size_t k = parts.size();
    const Sums s(parts);
    auto rp = [&](std::size_t i) -> std::int64_t { return parts[i - 1]; };  // 1-based r_i
    auto w = [&](std::size_t i) -> std::int64_t { return rp(i) + rp(i + 1); };
    // sum_{i=lo..k-1} w_i ceil(r_{>=i+1} tau) and sum_{i=1..hi} w_i floor(r_{<=i} tau)
    auto ceil_tail = [&](std::size_t lo) {
      std::int64_t acc = 0;
      for (std::size_t i = lo; i + 1 <= k; ++i) acc += w(i) * ceil_times(s.ge[i + 1], tau);
      return acc;
    };
    auto floor_head = [&](std::size_t hi) {
      std::int64_t acc = 0;
      for (std::size_t i = 1; i <= hi && i + 1 <= k; ++i) acc += w(i) * floor_times(s.le[i], tau);
      return acc;
    };

    ScalarValue inner(0);
    if (wall_term) {
      BigRational a0 = BigRational(r - 1) * (BigRational(rp(1) + 1) * tau - BigRational(d)) + BigRational(ceil_tail(1));
      inner += sym_power(c, to_int(top)) * qp(to_int(a0));
    }
    for (std::int64_t e = 0; e < e_end; ++e) {
      const std::int64_t A = -(r - 1 - rp(1)) * (d - e) + d - r * e + ceil_tail(1);
      const std::int64_t B = (r - 1 - rp(k)) * (d - e) + (1 - g + e) * (r - 1) - floor_head(k - 1);
      ScalarValue term = qp(A) - qp(B);
      for (std::size_t p = 1; p + 1 <= k; ++p) {
        const std::int64_t Cp = (1 - g) * s.le[p] + (s.le[p - 1] - s.ge[p + 1]) * d + rp(p) * e - floor_head(p - 1) +
                                ceil_tail(p + 1);
        const std::int64_t wp1 = w(p) + 1;
        const std::int64_t Dp = wp1 * ceil_times(s.ge[p + 1], tau);
        const std::int64_t Ep = wp1 * ceil_int(BigRational(d - e) - BigRational(s.le[p]) * tau);
        term -= qp(Cp) * (qp(Dp) - qp(Ep)) * (ScalarValue(1) - qp(w(p))) / (ScalarValue(1) - qp(wp1));
      }
      inner += sym_power(c, e) * term;
    }
    total += composition_weight(c, parts) * inner;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Closed form at generic tau

ScalarValue pairs_moduli_motive(const Curve& c, const PairQuery& q) {
  require_rank_two(q, "closed form");
  if (!is_generic(q.tau, q.r, q.d))
    throw NonGenericTauError("tau = " + to_string(q.tau) + " is a wall for " + ChernClass{q.r, q.d}.to_string() +
                             "; use the lemma route there");
  const std::int64_t r = q.r, d = q.d, g = c.genus();
  const BigRational& tau = q.tau;
  const std::int64_t N = d - ceil_times(r - 1, tau);
  if (N < 0 || make_rational(d, r) > tau) return ScalarValue(0);
  const RationalSeries t = RationalSeries::t_power(1);
  const RationalSeries one(ScalarValue(1));
  const RationalSeries Z = zeta(c);

  ScalarValue total(0);
  for (const auto& parts : slices::compositions(static_cast<int>(r - 1))) {
    const std::size_t k = parts.size();
    const Sums s(parts);
    // r_0 = r_{k+1} = 0
    auto rp = [&](std::size_t i) -> std::int64_t { return i == 0 || i > k ? 0 : parts[i - 1]; };
    auto w = [&](std::size_t i) -> std::int64_t { return rp(i) + rp(i + 1); };
    auto F = [&](std::size_t p) {
      std::int64_t f = (1 - g) * s.le[p] + (s.le[p] - s.ge[p + 1]) * d - rp(p) * ceil_times(s.le[p], tau) +
                       (rp(p + 1) + 1) * ceil_times(s.ge[p + 1], tau);
      for (std::size_t i = 1; i + 1 <= p; ++i) f -= w(i) * floor_times(s.le[i], tau);
      for (std::size_t i = p + 1; i + 1 <= k; ++i) f += w(i) * ceil_times(s.ge[i + 1], tau);
      return f;
    };
    RationalSeries bracket = RationalSeries(qp(F(0))) / (one - RationalSeries(qp(rp(1) + 1)) * t) -
                             RationalSeries(qp(F(k))) / (one - RationalSeries(qp(-rp(k))) * t);
    for (std::size_t p = 1; p + 1 <= k; ++p) {
      const BigRational x = BigRational(s.le[p]) * tau, y = BigRational(s.ge[p + 1]) * tau;
      const bool delta = fractional(x) + fractional(y) < 1;
      RationalSeries num = RationalSeries(qp(F(p)) * (ScalarValue(1) - qp(w(p))));
      if (delta) num = num * t;
      bracket = bracket - num / ((one - RationalSeries(qp(rp(p + 1) + 1)) * t) * (one - RationalSeries(qp(-rp(p))) * t));
    }
    total += composition_weight(c, parts) * (Z * bracket).coefficient(N);
  }
  return qp((g - 1) * binom2(r)) * total;
}

ScalarValue motive_to_f(const Curve& c, std::int64_t r, const ScalarValue& motive) {
  return qp((1 - c.genus()) * binom2(r)) * motive;
}

ScalarValue rank2_motive(const Curve& c, std::int64_t d, const BigRational& tau) {
  if (!is_generic(tau, 2, d)) throw NonGenericTauError("rank-2 formula needs generic tau; use the lemma route");
  const std::int64_t g = c.genus(), ct = ceil_int(tau);
  const RationalSeries t = RationalSeries::t_power(1), one(ScalarValue(1));
  RationalSeries bracket = RationalSeries(qp(g - 1 - d + 2 * ct)) / (one - RationalSeries(qp(2)) * t) -
                           RationalSeries(qp(d - ct)) / (one - RationalSeries(qp(-1)) * t);
  return jacobian_class(c) / (ScalarValue::q() - 1) * (zeta(c) * bracket).coefficient(d - ct);
}

ScalarValue rank3_motive(const Curve& c, std::int64_t d, const BigRational& tau) {
  if (!is_generic(tau, 3, d)) throw NonGenericTauError("rank-3 formula needs generic tau; use the lemma route");
  const std::int64_t g = c.genus(), c1 = ceil_int(tau), c2 = ceil_times(2, tau);
  const RationalSeries t = RationalSeries::t_power(1), one(ScalarValue(1));
  auto geo = [&](std::int64_t a) { return one - RationalSeries(qp(a)) * t; };
  const ScalarValue P1 = jacobian_class(c), Pq = numerator_polynomial(c).at_s_power(2);
  RationalSeries first = RationalSeries(qp(2 * g - 2 - 2 * d + 3 * c2)) / geo(3) - RationalSeries(qp(2 * d - 2 * c2)) / geo(-2);
  RationalSeries second = RationalSeries(qp(3 * g - 3 - 2 * d + 2 * c2 + 2 * c1)) / geo(2) -
                          RationalSeries(qp(2 * g - 2 + c1) * (ScalarValue(1) - qp(2))) *
                              RationalSeries::t_power(2 * c1 - c2) / (geo(2) * geo(-1)) -
                          RationalSeries(qp(g + 1 + 2 * d - c2 - 2 * c1)) / geo(-1);
  RationalSeries bracket = RationalSeries(-Pq) * first + RationalSeries(P1) * second;
  const ScalarValue one_q = ScalarValue(1) - ScalarValue::q();
  const ScalarValue pre = P1 / (one_q * one_q * (ScalarValue(1) - qp(2)));
  return pre * (zeta(c) * bracket).coefficient(d - c2);
}

// ---------------------------------------------------------------------------

ScalarValue f_tau(const Curve& c, const PairQuery& q, PairMethod method, Exec exec) {
  switch (method) {
    case PairMethod::product: return f_tau_product(c, q, exec);
    case PairMethod::convolution: return f_tau_convolution(c, q);
    case PairMethod::lemma: return f_tau_lemma(c, q);
    case PairMethod::explicit_form: return motive_to_f(c, q.r, pairs_moduli_motive(c, q));
  }
  throw DomainError("unknown method");
}

std::vector<PairMethod> applicable_methods(const PairQuery& q) {
  std::vector<PairMethod> out{PairMethod::product};
  if (q.r >= 2) {
    out.push_back(PairMethod::convolution);
    out.push_back(PairMethod::lemma);
    if (is_generic(q.tau, q.r, q.d)) out.push_back(PairMethod::explicit_form);
  }
  return out;
}

std::vector<std::int64_t> support_range(std::int64_t r, const BigRational& tau) {
  if (r < 1) throw DomainError("rank must be positive");
  std::vector<std::int64_t> out;
  const std::int64_t hi = floor_times(r, tau);
  if (r == 1) {
    for (std::int64_t d = 0; d <= hi; ++d) out.push_back(d);
    return out;
  }
  // d > (r-1) tau and d >= 0
  for (std::int64_t d = std::max<std::int64_t>(0, floor_times(r - 1, tau) + 1); d <= hi; ++d) out.push_back(d);
  return out;
}

std::vector<ScalarValue> f_tau_grid(const Curve& c, const std::vector<PairQuery>& queries, PairMethod method,
                                    Exec exec) {
  std::vector<ScalarValue> out(queries.size());
  parallel_for(queries.size(), exec, [&](std::size_t i) { out[i] = f_tau(c, queries[i], method, Exec::serial); });
  return out;
}

}  // namespace pairzeta
