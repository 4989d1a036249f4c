#include "pairzeta/motivic.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "pairzeta/errors.hpp"

namespace pairzeta {

namespace {

using Composition = std::vector<int>;

std::vector<std::int64_t> prefix_sums(const Composition& parts) {
  std::vector<std::int64_t> out(parts.size());
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) out[i] = acc += parts[i];
  return out;
}

ScalarValue b_product(const Curve& c, const Composition& parts) {
  ScalarValue acc(1);
  for (int r : parts) acc = acc * b_r(c, r);
  return acc;
}

// 1 / prod_{i<k} (1 - q^{r_i + r_{i+1}})
ScalarValue geometric_denominators(const Composition& parts) {
  ScalarValue den(1);
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) den = den * (ScalarValue(1) - ScalarValue::q_power(parts[i] + parts[i + 1]));
  return den.inverse();
}

std::int64_t weight(const Composition& parts, std::size_t i) { return parts[i] + parts[i + 1]; }

const BigRational& finite(const ExtendedRational& x, const char* what) {
  if (!x.is_finite()) throw DomainError(std::string("closed forms need a finite ") + what);
  return x.value();
}

std::optional<std::string> outside(ChernClass alpha, const SliceBounds& bounds) {
  if (alpha.r < 1) throw DomainError("Chern class needs rank >= 1");
  if (slices::in_slice(bounds, alpha.slope())) return std::nullopt;
  return "slope " + to_string(alpha.slope()) + " of " + alpha.to_string() + " is outside the " +
         slices::to_string(bounds.mode) + " slice; value is the empty sum 0";
}

// Memo key for (mode, alpha, bounds), when the bounds fit in machine words.
std::optional<ScalarMemo::Key> slice_key(MemoTag tag, ChernClass alpha, const SliceBounds& bounds) {
  ScalarMemo::Key key{static_cast<std::int64_t>(tag), static_cast<std::int64_t>(bounds.mode), alpha.r, alpha.d};
  for (const auto* x : {&bounds.tau, &bounds.lower}) {
    if (!x->is_finite()) {
      key.insert(key.end(), {x->is_plus_infinity() ? 1 : -1, 0, 0});
      continue;
    }
    const auto& v = x->value();
    if (!v.get_num().fits_slong_p() || !v.get_den().fits_slong_p()) return std::nullopt;
    key.insert(key.end(), {0, v.get_num().get_si(), v.get_den().get_si()});
  }
  return key;
}

template <class Compute>
Evaluated<ScalarValue> memoized(const Curve& c, MemoTag tag, ChernClass alpha, const SliceBounds& bounds,
                                Compute compute) {
  if (auto why = outside(alpha, bounds)) return {ScalarValue(0), *why};
  auto key = slice_key(tag, alpha, bounds);
  if (key) {
    if (auto hit = c.memo().find(*key)) return {*hit, {}};
  }
  ScalarValue value = compute();
  if (key) c.memo().store(*key, value);
  return {value, {}};
}

// sum over compositions of r of b_{r_1}..b_{r_k} q^{E} / prod (1 - q^{w_i}),
// with E = head(k-part composition) + sum_i exponent(i).
template <class Exponent>
ScalarValue composition_sum(const Curve& c, std::int64_t r, Exponent exponent) {
  ScalarValue total(0);
  for (const auto& parts : slices::compositions(static_cast<int>(r))) {
    total = total + b_product(c, parts) * ScalarValue::q_power(exponent(parts, prefix_sums(parts))) *
                        geometric_denominators(parts);
  }
  return total;
}

// The generic lower-bound form: sign * q^{(r - r_k) d} prod q^{w_i (1 - m_i)} / (1 - q^{w_i}),
// where d'_i >= m_i is the prefix condition.
template <class LowerBound>
ScalarValue lower_bound_form(const Curve& c, ChernClass alpha, int sign, LowerBound m) {
  ScalarValue total = composition_sum(c, alpha.r, [&](const Composition& parts, const std::vector<std::int64_t>& pre) {
    std::int64_t e = (alpha.r - parts.back()) * alpha.d;
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) e += weight(parts, i) * (1 - m(pre[i]));
    return e;
  });
  return sign > 0 ? total : -total;
}

// d - (r - r') tau
BigRational co_bound(ChernClass alpha, std::int64_t rp, const BigRational& tau) {
  return BigRational(alpha.d) - BigRational(alpha.r - rp) * tau;
}

}  // namespace

ScalarValue beta(const Curve& c, ChernClass alpha) {
  if (alpha.r < 1) throw DomainError("beta needs rank >= 1");
  std::int64_t residue = ((alpha.d % alpha.r) + alpha.r) % alpha.r;
  ScalarMemo::Key key{static_cast<std::int64_t>(MemoTag::beta), alpha.r, residue};
  if (auto hit = c.memo().find(key)) return *hit;
  // the Zagier exponent sum_i w_i {r'_i d / r} equals (r - r_k) d - sum_i w_i floor(r'_i d / r)
  ScalarValue value = composition_sum(c, alpha.r, [&](const Composition& parts, const std::vector<std::int64_t>& pre) {
    std::int64_t e = (alpha.r - parts.back()) * residue;
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) e -= weight(parts, i) * floor_int(make_rational(pre[i] * residue, alpha.r));
    return e;
  });
  c.memo().store(key, value);
  return value;
}

Evaluated<ScalarValue> slice_closed(const Curve& c, ChernClass alpha, const SliceBounds& bounds) {
  return memoized(c, MemoTag::slice, alpha, bounds, [&] {
    const BigRational& tau = finite(bounds.tau, "slope bound");
    const std::int64_t r = alpha.r, d = alpha.d;
    auto floor_at = [&](std::int64_t rp) { return floor_int(tau * BigRational(rp)); };
    auto ceil_at = [&](std::int64_t rp) { return ceil_int(tau * BigRational(rp)); };
    return composition_sum(c, r, [&](const Composition& parts, const std::vector<std::int64_t>& pre) {
      const std::int64_t head = (r - parts.back()) * d;
      std::int64_t e = 0;
      switch (bounds.mode) {
        case SliceMode::le:
          e = head;
          for (std::size_t i = 0; i + 1 < parts.size(); ++i) e -= weight(parts, i) * floor_at(pre[i]);
          break;
        case SliceMode::ge:
          e = -head;
          for (std::size_t i = 0; i + 1 < parts.size(); ++i) e += weight(parts, i) * ceil_at(pre[i]);
          break;
        case SliceMode::lt:
          e = head;
          for (std::size_t i = 0; i + 1 < parts.size(); ++i) e += weight(parts, i) * (1 - ceil_at(pre[i]));
          break;
        case SliceMode::gt:
          e = -head;
          for (std::size_t i = 0; i + 1 < parts.size(); ++i) e += weight(parts, i) * (1 + floor_at(pre[i]));
          break;
        case SliceMode::interval:
          e = head;
          for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
            BigRational bound = tau * BigRational(pre[i]);
            if (bounds.lower.is_finite()) bound = std::min(bound, BigRational(BigRational(d) + BigRational(pre[i] - r) * bounds.lower.value()));
            e -= weight(parts, i) * floor_int(bound);
          }
          break;
      }
      return e;
    });
  });
}

Evaluated<ScalarValue> inverse_closed(const Curve& c, ChernClass alpha, const SliceBounds& bounds) {
  if (bounds.mode == SliceMode::interval) return inverse_by_partial_sums(c, alpha, bounds);
  return memoized(c, MemoTag::inverse, alpha, bounds, [&] {
    const BigRational& tau = finite(bounds.tau, "slope bound");
    const std::int64_t r = alpha.r, d = alpha.d;
    auto floor_at = [&](std::int64_t rp) { return floor_int(tau * BigRational(rp)); };
    auto ceil_at = [&](std::int64_t rp) { return ceil_int(tau * BigRational(rp)); };
    ScalarValue sum = composition_sum(c, r, [&](const Composition& parts, const std::vector<std::int64_t>& pre) {
      const std::int64_t head = (r - parts.back()) * d;
      std::int64_t e = 0;
      switch (bounds.mode) {
        case SliceMode::le:
          e = -head;
          for (std::size_t i = 0; i + 1 < parts.size(); ++i) e += weight(parts, i) * (1 + floor_at(pre[i]));
          break;
        case SliceMode::ge:
          e = head;
          for (std::size_t i = 0; i + 1 < parts.size(); ++i) e += weight(parts, i) * (1 - ceil_at(pre[i]));
          break;
        case SliceMode::lt:
          e = -head;
          for (std::size_t i = 0; i + 1 < parts.size(); ++i) e += weight(parts, i) * ceil_at(pre[i]);
          break;
        case SliceMode::gt:
          e = head;
          for (std::size_t i = 0; i + 1 < parts.size(); ++i) e -= weight(parts, i) * floor_at(pre[i]);
          break;
        case SliceMode::interval: break;
      }
      return e;
    });
    return -sum;
  });
}

Evaluated<ScalarValue> slice_by_partial_sums(const Curve& c, ChernClass alpha, const SliceBounds& bounds) {
  if (auto why = outside(alpha, bounds)) return {ScalarValue(0), *why};
  const BigRational& tau = finite(bounds.tau, "slope bound");
  auto m = [&](std::int64_t rp) -> std::int64_t {
    BigRational head = tau * BigRational(rp);
    switch (bounds.mode) {
      case SliceMode::le: return floor_int(head) + 1;
      case SliceMode::ge: return floor_int(co_bound(alpha, rp, tau)) + 1;
      case SliceMode::lt: return ceil_int(head);
      case SliceMode::gt: return ceil_int(co_bound(alpha, rp, tau));
      case SliceMode::interval:
        if (bounds.lower.is_finite()) head = std::min(head, co_bound(alpha, rp, bounds.lower.value()));
        return floor_int(head) + 1;
    }
    return 0;
  };
  return {lower_bound_form(c, alpha, +1, m), {}};
}

Evaluated<ScalarValue> inverse_by_partial_sums(const Curve& c, ChernClass alpha, const SliceBounds& bounds) {
  if (auto why = outside(alpha, bounds)) return {ScalarValue(0), *why};
  const BigRational& tau = finite(bounds.tau, "slope bound");
  auto m = [&](std::int64_t rp) -> std::int64_t {
    BigRational head = tau * BigRational(rp);
    switch (bounds.mode) {
      case SliceMode::le: return ceil_int(co_bound(alpha, rp, tau));
      case SliceMode::ge: return ceil_int(head);
      case SliceMode::lt: return floor_int(co_bound(alpha, rp, tau)) + 1;
      case SliceMode::gt: return floor_int(head) + 1;
      case SliceMode::interval: {
        std::int64_t tail = ceil_int(co_bound(alpha, rp, tau));
        if (!bounds.lower.is_finite()) return tail;
        return std::max(ceil_int(bounds.lower.value() * BigRational(rp)), tail);
      }
    }
    return 0;
  };
  return {lower_bound_form(c, alpha, -1, m), {}};
}

Evaluated<ScalarValue> slice_ge_tail_form(const Curve& c, ChernClass alpha, const BigRational& tau) {
  if (auto why = outside(alpha, {SliceMode::ge, tau})) return {ScalarValue(0), *why};
  ScalarValue value = composition_sum(c, alpha.r, [&](const Composition& parts, const std::vector<std::int64_t>& pre) {
    std::int64_t e = -(alpha.r - parts.front()) * alpha.d;
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) e += weight(parts, i) * ceil_int(tau * BigRational(alpha.r - pre[i]));
    return e;
  });
  return {value, {}};
}

Evaluated<ScalarValue> slice_bruteforce(const Curve& c, ChernClass alpha, const SliceBounds& bounds, Exec exec) {
  if (auto why = outside(alpha, bounds)) return {ScalarValue(0), *why};
  const SliceMode mode = bounds.mode;
  // per-part degree bounds from the slope bound on every part of a decreasing chain
  auto upper = [&](std::int64_t ri) -> std::optional<std::int64_t> {
    if (!bounds.tau.is_finite()) return std::nullopt;
    BigRational x = bounds.tau.value() * BigRational(ri);
    if (mode == SliceMode::le || mode == SliceMode::interval) return floor_int(x);
    if (mode == SliceMode::lt) return ceil_int(x) - 1;
    return std::nullopt;
  };
  auto lower = [&](std::int64_t ri) -> std::optional<std::int64_t> {
    if (mode == SliceMode::ge || mode == SliceMode::gt) {
      if (!bounds.tau.is_finite()) return std::nullopt;
      BigRational x = bounds.tau.value() * BigRational(ri);
      return mode == SliceMode::ge ? ceil_int(x) : floor_int(x) + 1;
    }
    if (mode == SliceMode::interval && bounds.lower.is_finite()) return ceil_int(bounds.lower.value() * BigRational(ri));
    return std::nullopt;
  };
  auto comps = slices::compositions(static_cast<int>(alpha.r));
  std::vector<ScalarValue> partial(comps.size(), ScalarValue(0));
  parallel_for(comps.size(), exec, [&](std::size_t index) {
    const auto& parts = comps[index];
    const std::size_t k = parts.size();
    std::vector<std::optional<std::int64_t>> lo(k), hi(k);
    for (std::size_t i = 0; i < k; ++i) {
      lo[i] = lower(parts[i]);
      hi[i] = upper(parts[i]);
    }
    // close the missing side through the fixed total degree
    for (std::size_t i = 0; i < k; ++i) {
      if (!lo[i]) {
        std::int64_t rest = 0;
        for (std::size_t j = 0; j < k; ++j) {
          if (j == i) continue;
          if (!hi[j]) throw DomainError("slice_bruteforce: unbounded chain set");
          rest += *hi[j];
        }
        lo[i] = alpha.d - rest;
      }
      if (!hi[i]) {
        std::int64_t rest = 0;
        for (std::size_t j = 0; j < k; ++j) {
          if (j == i) continue;
          if (!lo[j]) throw DomainError("slice_bruteforce: unbounded chain set");
          rest += *lo[j];
        }
        hi[i] = alpha.d - rest;
      }
    }
    std::vector<std::int64_t> deg(k);
    ScalarValue acc(0);
    auto emit = [&] {
      std::int64_t twist = 0;
      ScalarValue term(1);
      for (std::size_t i = 0; i < k; ++i) {
        term = term * beta(c, {parts[i], deg[i]});
        for (std::size_t j = i + 1; j < k; ++j) twist += parts[i] * deg[j] - parts[j] * deg[i];
      }
      acc = acc + term * ScalarValue::q_power(twist);
    };
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t used) {
      if (i + 1 == k) {
        std::int64_t last = alpha.d - used;
        if (last < *lo[i] || last > *hi[i]) return;
        if (i > 0 && !(make_rational(deg[i - 1], parts[i - 1]) > make_rational(last, parts[i]))) return;
        deg[i] = last;
        emit();
        return;
      }
      for (std::int64_t x = *lo[i]; x <= *hi[i]; ++x) {
        if (i > 0 && !(make_rational(deg[i - 1], parts[i - 1]) > make_rational(x, parts[i]))) break;
        deg[i] = x;
        rec(i + 1, used + x);
      }
    };
    rec(0, 0);
    partial[index] = acc;
  });
  return {std::accumulate(partial.begin(), partial.end(), ScalarValue(0)), {}};
}

std::int64_t u_min_degree(const SliceBounds& bounds, std::int64_t r) {
  switch (bounds.mode) {
    case SliceMode::ge: return ceil_int(finite(bounds.tau, "slope bound") * BigRational(r));
    case SliceMode::gt: return floor_int(finite(bounds.tau, "slope bound") * BigRational(r)) + 1;
    case SliceMode::interval: return ceil_int(finite(bounds.lower, "lower slope bound") * BigRational(r));
    default: throw DomainError("u-type series are defined for modes ge, gt and interval");
  }
}

namespace {

using Coefficient = std::function<ScalarValue(ChernClass)>;

SkewSeries build_u_type(const Curve& c, const SliceBounds& bounds, const DegreeWindow& window, Exec exec,
                        const Coefficient& coefficient) {
  if (window.max_rank < 1) throw DomainError("empty series window");
  std::vector<ChernClass> classes;
  std::vector<std::int64_t> top(static_cast<std::size_t>(window.max_rank) + 1);
  std::vector<bool> exact(top.size(), false);
  for (std::int64_t r = 1; r <= window.max_rank; ++r) {
    std::int64_t hi = window.max_degree(r);
    if (bounds.mode == SliceMode::interval) {
      std::int64_t cap = floor_int(finite(bounds.tau, "slope bound") * BigRational(r));
      if (cap <= hi) exact[static_cast<std::size_t>(r)] = true;
      hi = std::min(hi, cap);
    }
    top[static_cast<std::size_t>(r)] = hi;
    for (std::int64_t d = u_min_degree(bounds, r); d <= hi; ++d) classes.push_back({r, d});
  }
  std::vector<ScalarValue> values(classes.size(), ScalarValue(0));
  parallel_for(classes.size(), exec, [&](std::size_t i) {
    values[i] = ScalarValue::neg_s_power(chi(c.genus(), classes[i])) * coefficient(classes[i]);
  });
  SkewSeries::Terms terms{{FramedClass{}, ScalarValue(1)}};
  for (std::size_t i = 0; i < classes.size(); ++i) terms.emplace(FramedClass{classes[i].r, classes[i].d, 0}, values[i]);
  return SkewSeries::with_extents(Window{window.max_rank, 0}, std::move(terms), [&](int r, int) -> Extent {
    if (r == 0) return {0, Extent::kInfinite};
    auto idx = static_cast<std::size_t>(r);
    return {u_min_degree(bounds, r), exact[idx] ? Extent::kInfinite : top[idx]};
  });
}

}  // namespace

SkewSeries u_series(const Curve& c, const SliceBounds& bounds, const DegreeWindow& window, Exec exec) {
  return build_u_type(c, bounds, window, exec, [&](ChernClass a) { return slice_closed(c, a, bounds).value; });
}

SkewSeries u_inverse_closed(const Curve& c, const SliceBounds& bounds, const DegreeWindow& window, Exec exec) {
  return build_u_type(c, bounds, window, exec, [&](ChernClass a) { return inverse_closed(c, a, bounds).value; });
}

SkewSeries ray_series(const Curve& c, const BigRational& tau, int max_rank) {
  SkewSeries::Terms terms{{FramedClass{}, ScalarValue(1)}};
  for (std::int64_t r = 1; r <= max_rank; ++r) {
    BigRational d = tau * BigRational(r);
    if (!is_integer(d)) continue;
    ChernClass a{r, floor_int(d)};
    terms.emplace(FramedClass{a.r, a.d, 0}, ScalarValue::neg_s_power(chi(c.genus(), a)) * beta(c, a));
  }
  return SkewSeries(Window{max_rank, 0}, std::move(terms));
}

SkewSeries u_series_from_rays(const Curve& c, SliceMode mode, const BigRational& tau, const DegreeWindow& window,
                              Exec exec) {
  if (mode != SliceMode::ge && mode != SliceMode::gt) throw DomainError("ray products build modes ge and gt");
  const SliceBounds bounds{mode, tau};
  std::set<BigRational, std::greater<>> slopes;
  for (std::int64_t r = 1; r <= window.max_rank; ++r)
    for (std::int64_t d = u_min_degree(bounds, r); d <= window.max_degree(r); ++d) slopes.insert(make_rational(d, r));
  QuantumPlane plane(c.genus());
  SkewSeries product = SkewSeries::unit(Window{window.max_rank, 0});
  for (const auto& sigma : slopes) product = plane.multiply(product, ray_series(c, sigma, window.max_rank), exec);
  // rays above max_slope first reach rank r1 at degree floor(r1 * max_slope) + 1
  auto extent = [&](int r, int) -> Extent {
    if (r == 0) return {0, Extent::kInfinite};
    std::int64_t hi = Extent::kInfinite;
    for (std::int64_t r1 = 1; r1 <= r; ++r1) {
      std::int64_t rest = r1 == r ? 0 : u_min_degree(bounds, r - r1);
      hi = std::min(hi, window.max_degree(r1) + rest);
    }
    return {u_min_degree(bounds, r), hi};
  };
  return SkewSeries::with_extents(Window{window.max_rank, 0}, product.terms(), extent);
}

}  // namespace pairzeta
