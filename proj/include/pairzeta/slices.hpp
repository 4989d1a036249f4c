#pragma once

#include <concepts>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pairzeta/parallel.hpp"
#include "pairzeta/rational.hpp"

namespace pairzeta::slices {

using LatticeClass = std::vector<std::int64_t>;
using Chain = std::vector<LatticeClass>;
using ChainPredicate = std::function<bool(const Chain&)>;

// Cone N^n \ {0} with slope <num, alpha> / <den, alpha>; the denominator
// functional must be positive on the cone.
class StabilityContext {
 public:
  StabilityContext(std::vector<std::int64_t> slope_numerator, std::vector<std::int64_t> slope_denominator);
  // N^2 with slope a_2 / (a_1 + a_2).
  static StabilityContext plane_default();

  std::size_t dimension() const { return num_.size(); }
  bool in_cone(const LatticeClass& a) const;
  BigRational slope(const LatticeClass& a) const;
  std::int64_t size(const LatticeClass& a) const;

 private:
  std::vector<std::int64_t> num_;
  std::vector<std::int64_t> den_;
};

LatticeClass add(const LatticeClass& a, const LatticeClass& b);
LatticeClass subtract(const LatticeClass& a, const LatticeClass& b);

// Every sequence (a_1, ..., a_k) of cone elements summing to alpha that satisfies `keep`.
std::vector<Chain> ordered_partitions(const StabilityContext& ctx, const LatticeClass& alpha,
                                      const ChainPredicate& keep = {});
// All cone elements of component sum at most max_size, in a fixed order.
std::vector<LatticeClass> classes_up_to(const StabilityContext& ctx, std::int64_t max_size);
// Integer compositions of n >= 1, in lexicographic order.
std::vector<std::vector<int>> compositions(int n);

enum class SliceMode { le, ge, lt, gt, interval };

std::string to_string(SliceMode mode);
std::optional<SliceMode> parse_slice_mode(std::string_view text);

// For mode interval the slice is [lower, tau]; elsewhere `lower` is ignored.
struct SliceBounds {
  SliceMode mode;
  ExtendedRational tau;
  ExtendedRational lower = ExtendedRational::minus_infinity();
};

// Whether a class of slope mu lies in the support of the slice series.
bool in_slice(const SliceBounds& bounds, const BigRational& mu);

template <class V>
struct Evaluated {
  V value;
  std::string diagnostic;  // empty when the query was inside the slice support
  bool in_support() const { return diagnostic.empty(); }
};

template <class R>
concept CoefficientRing = requires(const R& ring, const typename R::value_type& x) {
  { ring.zero() } -> std::convertible_to<typename R::value_type>;
  { ring.one() } -> std::convertible_to<typename R::value_type>;
  { ring.add(x, x) } -> std::convertible_to<typename R::value_type>;
  { ring.mul(x, x) } -> std::convertible_to<typename R::value_type>;
  { ring.neg(x) } -> std::convertible_to<typename R::value_type>;
  { ring.equal(x, x) } -> std::convertible_to<bool>;
};

// Sums over ordered partitions with coefficients in a possibly noncommutative
// ring. An optional twist t(a, b) makes the monoid algebra y^a y^b = t(a, b) y^{a+b};
// it must be central and bimultiplicative.
template <CoefficientRing Ring>
class SliceEngine {
 public:
  using Value = typename Ring::value_type;
  using Family = std::map<LatticeClass, Value>;
  using Twist = std::function<Value(const LatticeClass&, const LatticeClass&)>;

  SliceEngine(StabilityContext ctx, Ring ring, Twist twist = {})
      : ctx_(std::move(ctx)), ring_(std::move(ring)), twist_(std::move(twist)) {}

  const StabilityContext& context() const { return ctx_; }
  const Ring& ring() const { return ring_; }

  // Product of the family values along the chain, with twist factors.
  Value chain_product(const Family& f, const Chain& chain) const {
    Value acc = ring_.one();
    for (const auto& part : chain) acc = ring_.mul(acc, lookup(f, part));
    if (twist_) {
      for (std::size_t i = 0; i < chain.size(); ++i) {
        for (std::size_t j = i + 1; j < chain.size(); ++j) acc = ring_.mul(acc, twist_(chain[i], chain[j]));
      }
    }
    return acc;
  }

  // sum over chains of sign(k) * chain_product, sign(k) = +1 or (-1)^k or (-1)^{k-1}.
  enum class Sign { plus, alternating_k, alternating_k_minus_1 };

  Value chain_sum(const Family& f, const std::vector<Chain>& chains, Sign sign, Exec exec = Exec::serial) const {
    auto term = [&](const Chain& chain) {
      Value v = chain_product(f, chain);
      bool negate = (sign == Sign::alternating_k && chain.size() % 2 == 1) ||
                    (sign == Sign::alternating_k_minus_1 && chain.size() % 2 == 0);
      return negate ? ring_.neg(v) : v;
    };
    if (exec == Exec::serial) {
      Value acc = ring_.zero();
      for (const auto& chain : chains) acc = ring_.add(acc, term(chain));
      return acc;
    }
    std::vector<Value> terms(chains.size(), ring_.zero());
    parallel_for(chains.size(), exec, [&](std::size_t i) { terms[i] = term(chains[i]); });
    Value acc = ring_.zero();
    for (const auto& v : terms) acc = ring_.add(acc, v);
    return acc;
  }

  // b_alpha = sum over slope-decreasing chains of a_{alpha_1} ... a_{alpha_k}.
  Value b_from_a(const Family& a, const LatticeClass& alpha, Exec exec = Exec::serial) const {
    return chain_sum(a, ordered_partitions(ctx_, alpha, decreasing()), Sign::plus, exec);
  }

  Value a_from_b(const Family& b, const LatticeClass& alpha, Exec exec = Exec::serial) const {
    BigRational mu = ctx_.slope(alpha);
    auto keep = [this, mu](const Chain& c) {
      return all_prefixes(c, [&](const LatticeClass& prefix, const LatticeClass&) { return ctx_.slope(prefix) > mu; });
    };
    return chain_sum(b, ordered_partitions(ctx_, alpha, keep), Sign::alternating_k_minus_1, exec);
  }

  // Definitional slice: slope-decreasing chains whose slopes stay inside the bounds.
  Evaluated<Value> slice(const Family& a, const LatticeClass& alpha, const SliceBounds& bounds,
                         Exec exec = Exec::serial) const {
    if (auto why = outside_support(alpha, bounds)) return {ring_.zero(), *why};
    auto keep = [this, bounds](const Chain& c) {
      if (!decreasing()(c)) return false;
      BigRational first = ctx_.slope(c.front()), last = ctx_.slope(c.back());
      switch (bounds.mode) {
        case SliceMode::le: return first <= bounds.tau;
        case SliceMode::lt: return first < bounds.tau;
        case SliceMode::ge: return last >= bounds.tau;
        case SliceMode::gt: return last > bounds.tau;
        case SliceMode::interval: return first <= bounds.tau && last >= bounds.lower;
      }
      return false;
    };
    return {chain_sum(a, ordered_partitions(ctx_, alpha, keep), Sign::plus, exec), {}};
  }

  // The same slice computed from b by the alternating partial-sum formulas.
  Evaluated<Value> slice_via_b(const Family& b, const LatticeClass& alpha, const SliceBounds& bounds,
                               Exec exec = Exec::serial) const {
    if (auto why = outside_support(alpha, bounds)) return {ring_.zero(), *why};
    auto keep = [this, bounds](const Chain& c) {
      return all_prefixes(c, [&](const LatticeClass& head, const LatticeClass& tail) {
        switch (bounds.mode) {
          case SliceMode::le: return ctx_.slope(head) > bounds.tau;
          case SliceMode::ge: return ctx_.slope(tail) < bounds.tau;
          case SliceMode::lt: return ctx_.slope(head) >= bounds.tau;
          case SliceMode::gt: return ctx_.slope(tail) <= bounds.tau;
          case SliceMode::interval: return ctx_.slope(head) > bounds.tau || ctx_.slope(tail) < bounds.lower;
        }
        return false;
      });
    };
    return {chain_sum(b, ordered_partitions(ctx_, alpha, keep), Sign::alternating_k_minus_1, exec), {}};
  }

  // Coefficients of the inverse of the slice series, from b.
  Evaluated<Value> inverse_coefficient(const Family& b, const LatticeClass& alpha, const SliceBounds& bounds,
                                       Exec exec = Exec::serial) const {
    if (auto why = outside_support(alpha, bounds)) return {ring_.zero(), *why};
    auto keep = [this, bounds](const Chain& c) {
      return all_prefixes(c, [&](const LatticeClass& head, const LatticeClass& tail) {
        switch (bounds.mode) {
          case SliceMode::le: return ctx_.slope(tail) <= bounds.tau;
          case SliceMode::ge: return ctx_.slope(head) >= bounds.tau;
          case SliceMode::lt: return ctx_.slope(tail) < bounds.tau;
          case SliceMode::gt: return ctx_.slope(head) > bounds.tau;
          case SliceMode::interval: return ctx_.slope(head) >= bounds.lower && ctx_.slope(tail) <= bounds.tau;
        }
        return false;
      });
    };
    return {chain_sum(b, ordered_partitions(ctx_, alpha, keep), Sign::alternating_k, exec), {}};
  }

  // Inverse of the ray series 1 + sum_{mu = tau} a y^alpha, at a class of slope tau.
  Evaluated<Value> ray_inverse(const Family& b, const LatticeClass& alpha, Exec exec = Exec::serial) const {
    BigRational tau = ctx_.slope(alpha);
    auto keep = [this, tau](const Chain& c) {
      return all_prefixes(c, [&](const LatticeClass& head, const LatticeClass&) { return ctx_.slope(head) >= tau; });
    };
    return {chain_sum(b, ordered_partitions(ctx_, alpha, keep), Sign::alternating_k, exec), {}};
  }

  // (1 + sum x) (1 + sum y) - 1 on all classes of size <= max_size; absent entries are zero.
  Family multiply(const Family& x, const Family& y, std::int64_t max_size) const {
    Family out;
    for (const auto& gamma : classes_up_to(ctx_, max_size)) {
      Value acc = ring_.add(get_or_zero(x, gamma), get_or_zero(y, gamma));
      for (const auto& [alpha, xv] : x) {
        LatticeClass beta = subtract(gamma, alpha);
        if (!ctx_.in_cone(beta)) continue;
        auto it = y.find(beta);
        if (it == y.end()) continue;
        Value term = ring_.mul(xv, it->second);
        if (twist_) term = ring_.mul(term, twist_(alpha, beta));
        acc = ring_.add(acc, term);
      }
      out.emplace(gamma, acc);
    }
    return out;
  }

  bool families_equal(const Family& x, const Family& y, std::int64_t max_size) const {
    for (const auto& gamma : classes_up_to(ctx_, max_size)) {
      if (!ring_.equal(get_or_zero(x, gamma), get_or_zero(y, gamma))) return false;
    }
    return true;
  }

  // Restriction of a family to the classes whose slope is in the slice.
  Family restrict(const Family& f, const SliceBounds& bounds) const {
    Family out;
    for (const auto& [alpha, v] : f) {
      if (in_slice(bounds, ctx_.slope(alpha))) out.emplace(alpha, v);
    }
    return out;
  }

 private:
  Value lookup(const Family& f, const LatticeClass& alpha) const {
    auto it = f.find(alpha);
    if (it == f.end()) throw std::out_of_range("family is not defined on a required class");
    return it->second;
  }

  Value get_or_zero(const Family& f, const LatticeClass& alpha) const {
    auto it = f.find(alpha);
    return it == f.end() ? ring_.zero() : it->second;
  }

  ChainPredicate decreasing() const {
    return [this](const Chain& c) {
      for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        if (!(ctx_.slope(c[i]) > ctx_.slope(c[i + 1]))) return false;
      }
      return true;
    };
  }

  // pred(alpha'_i, alpha - alpha'_i) for all 1 <= i < k.
  template <class Pred>
  static bool all_prefixes(const Chain& c, Pred pred) {
    LatticeClass total(c.front().size(), 0);
    for (const auto& part : c) total = add(total, part);
    LatticeClass head(total.size(), 0);
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
      head = add(head, c[i]);
      if (!pred(head, subtract(total, head))) return false;
    }
    return true;
  }

  std::optional<std::string> outside_support(const LatticeClass& alpha, const SliceBounds& bounds) const {
    if (in_slice(bounds, ctx_.slope(alpha))) return std::nullopt;
    return "slope " + ctx_.slope(alpha).get_str() + " is outside the " + to_string(bounds.mode) + " slice; value is the empty sum";
  }

  StabilityContext ctx_;
  Ring ring_;
  Twist twist_;
};

}  // namespace pairzeta::slices
