#include "pairzeta/slices.hpp"

#include <numeric>

#include "pairzeta/errors.hpp"

namespace pairzeta::slices {

StabilityContext::StabilityContext(std::vector<std::int64_t> slope_numerator, std::vector<std::int64_t> slope_denominator)
    : num_(std::move(slope_numerator)), den_(std::move(slope_denominator)) {
  if (num_.empty() || num_.size() != den_.size()) throw DomainError("slope functionals must have equal, positive arity");
  for (auto d : den_) {
    if (d <= 0) throw DomainError("slope denominator must be positive on the cone");
  }
}

StabilityContext StabilityContext::plane_default() { return StabilityContext({0, 1}, {1, 1}); }

bool StabilityContext::in_cone(const LatticeClass& a) const {
  if (a.size() != dimension()) return false;
  bool nonzero = false;
  for (auto x : a) {
    if (x < 0) return false;
    if (x > 0) nonzero = true;
  }
  return nonzero;
}

BigRational StabilityContext::slope(const LatticeClass& a) const {
  std::int64_t n = 0, d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    n += num_[i] * a[i];
    d += den_[i] * a[i];
  }
  return make_rational(n, d);
}

std::int64_t StabilityContext::size(const LatticeClass& a) const { return std::accumulate(a.begin(), a.end(), std::int64_t{0}); }

LatticeClass add(const LatticeClass& a, const LatticeClass& b) {
  LatticeClass out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

LatticeClass subtract(const LatticeClass& a, const LatticeClass& b) {
  LatticeClass out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

namespace {

// All nonzero beta with 0 <= beta <= alpha componentwise.
std::vector<LatticeClass> sub_classes(const LatticeClass& alpha) {
  std::vector<LatticeClass> out;
  LatticeClass beta(alpha.size(), 0);
  while (true) {
    std::size_t i = 0;
    while (i < beta.size() && beta[i] == alpha[i]) {
      beta[i] = 0;
      ++i;
    }
    if (i == beta.size()) break;
    ++beta[i];
    out.push_back(beta);
  }
  return out;
}

const std::vector<Chain>& all_partitions(const LatticeClass& alpha, std::map<LatticeClass, std::vector<Chain>>& memo) {
  if (auto it = memo.find(alpha); it != memo.end()) return it->second;
  std::vector<Chain> out;
  for (const auto& beta : sub_classes(alpha)) {
    if (beta == alpha) {
      out.push_back({alpha});
      continue;
    }
    for (const auto& rest : all_partitions(subtract(alpha, beta), memo)) {
      Chain c;
      c.reserve(rest.size() + 1);
      c.push_back(beta);
      c.insert(c.end(), rest.begin(), rest.end());
      out.push_back(std::move(c));
    }
  }
  return memo.emplace(alpha, std::move(out)).first->second;
}

}  // namespace

std::vector<Chain> ordered_partitions(const StabilityContext& ctx, const LatticeClass& alpha, const ChainPredicate& keep) {
  if (!ctx.in_cone(alpha)) throw DomainError("ordered_partitions: class outside the cone");
  std::map<LatticeClass, std::vector<Chain>> memo;
  const auto& all = all_partitions(alpha, memo);
  if (!keep) return all;
  std::vector<Chain> out;
  for (const auto& c : all) {
    if (keep(c)) out.push_back(c);
  }
  return out;
}

std::vector<LatticeClass> classes_up_to(const StabilityContext& ctx, std::int64_t max_size) {
  std::vector<LatticeClass> out;
  LatticeClass box(ctx.dimension(), max_size);
  for (auto& c : sub_classes(box)) {
    if (ctx.size(c) <= max_size) out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::vector<int>> compositions(int n) {
  std::vector<std::vector<int>> out;
  if (n < 1) return out;
  std::vector<int> current;
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int first = 1; first <= remaining; ++first) {
      current.push_back(first);
      rec(remaining - first);
      current.pop_back();
    }
  };
  rec(n);
  return out;
}

std::string to_string(SliceMode mode) {
  switch (mode) {
    case SliceMode::le: return "le";
    case SliceMode::ge: return "ge";
    case SliceMode::lt: return "lt";
    case SliceMode::gt: return "gt";
    case SliceMode::interval: return "interval";
  }
  return "?";
}

std::optional<SliceMode> parse_slice_mode(std::string_view text) {
  for (auto m : {SliceMode::le, SliceMode::ge, SliceMode::lt, SliceMode::gt, SliceMode::interval}) {
    if (to_string(m) == text) return m;
  }
  return std::nullopt;
}

bool in_slice(const SliceBounds& bounds, const BigRational& mu) {
  switch (bounds.mode) {
    case SliceMode::le: return mu <= bounds.tau;
    case SliceMode::ge: return mu >= bounds.tau;
    case SliceMode::lt: return mu < bounds.tau;
    case SliceMode::gt: return mu > bounds.tau;
    case SliceMode::interval: return bounds.lower <= mu && mu <= bounds.tau;
  }
  return false;
}

}  // namespace pairzeta::slices
