#include "pairzeta/qplane.hpp"

#include <algorithm>

#include "pairzeta/errors.hpp"

namespace pairzeta {

namespace {

constexpr std::int64_t kInf = Extent::kInfinite;

std::int64_t sat(std::int64_t x) { return x >= kInf ? kInf : x; }
std::int64_t sat_add(std::int64_t a, std::int64_t b) { return (a >= kInf || b >= kInf) ? kInf : sat(a + b); }

}  // namespace

std::string FramedClass::to_string() const {
  return "(" + std::to_string(r) + "," + std::to_string(d) + "," + std::to_string(v) + ")";
}

FramedClass operator+(const FramedClass& a, const FramedClass& b) { return {a.r + b.r, a.d + b.d, a.v + b.v}; }

std::int64_t framed_chi(int g, const FramedClass& a, const FramedClass& b) {
  return (1 - g) * a.v * b.v + chi2(g, a.underlying(), b.underlying()) - a.v * chi(g, b.underlying());
}

std::int64_t framed_bracket(int g, const FramedClass& a, const FramedClass& b) {
  return bracket(a.underlying(), b.underlying()) - a.v * chi(g, b.underlying()) + b.v * chi(g, a.underlying());
}

SkewSeries::SkewSeries(Window window, Terms terms)
    : SkewSeries(window, std::move(terms),
                 std::vector<Extent>(static_cast<std::size_t>((window.max_rank + 1) * (window.max_framing + 1)))) {}

SkewSeries::SkewSeries(Window window, Terms terms, std::vector<Extent> extents)
    : window_(window), terms_(std::move(terms)), extents_(std::move(extents)) {
  validate_and_normalize();
}

SkewSeries SkewSeries::with_extents(Window window, Terms terms, const ExtentFn& extent) {
  if (window.max_rank < 0 || window.max_framing < 0) throw DomainError("empty series window");
  std::vector<Extent> ext;
  for (int r = 0; r <= window.max_rank; ++r)
    for (int v = 0; v <= window.max_framing; ++v) ext.push_back(extent(r, v));
  std::erase_if(terms, [&](const auto& kv) {
    const auto& c = kv.first;
    if (c.r < 0 || c.v < 0 || c.r > window.max_rank || c.v > window.max_framing) return false;  // rejected below
    return c.d > ext[static_cast<std::size_t>(c.r * (window.max_framing + 1) + c.v)].hi;
  });
  return SkewSeries(window, std::move(terms), std::move(ext));
}

SkewSeries SkewSeries::unit(Window window) { return SkewSeries(window, {{FramedClass{}, ScalarValue(1)}}); }

SkewSeries SkewSeries::monomial(Window window, FramedClass c, ScalarValue coefficient) {
  return SkewSeries(window, {{c, std::move(coefficient)}});
}

void SkewSeries::validate_and_normalize() {
  if (window_.max_rank < 0 || window_.max_framing < 0) throw DomainError("empty series window");
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
  // an exact slot is described by its lowest stored degree alone
  for (auto& e : extents_) {
    if (e.hi >= kInf) e.lo = kInf;
  }
  for (const auto& [c, value] : terms_) {
    if (!in_window(c)) throw WindowError("term " + c.to_string() + " lies outside the series window");
    if (c.r == 0 && c.v == 0 && c.d != 0) throw DomainError("class " + c.to_string() + " is not a framed class");
    auto& e = extents_[slot(static_cast<int>(c.r), static_cast<int>(c.v))];
    if (c.d > e.hi) throw WindowError("term " + c.to_string() + " lies beyond the known degree range");
    e.lo = std::min(e.lo, c.d);
  }
  // an empty slot with no lower bound is zero throughout
  for (auto& e : extents_) {
    if (e.lo >= kInf) e.hi = kInf;
  }
}

const Extent& SkewSeries::extent(int r, int v) const {
  if (r < 0 || v < 0 || r > window_.max_rank || v > window_.max_framing) throw WindowError("slot outside the window");
  return extents_[slot(r, v)];
}

bool SkewSeries::in_window(const FramedClass& c) const {
  return c.r >= 0 && c.v >= 0 && c.r <= window_.max_rank && c.v <= window_.max_framing;
}

bool SkewSeries::knows(const FramedClass& c) const {
  return in_window(c) && extents_[slot(static_cast<int>(c.r), static_cast<int>(c.v))].knows(c.d);
}

ScalarValue SkewSeries::coefficient(const FramedClass& c) const {
  if (!knows(c)) throw WindowError("coefficient of " + c.to_string() + " is not determined by this series window");
  auto it = terms_.find(c);
  return it == terms_.end() ? ScalarValue(0) : it->second;
}

bool SkewSeries::is_exact() const {
  return std::all_of(extents_.begin(), extents_.end(), [](const Extent& e) { return e.hi >= kInf || e.lo >= kInf; });
}

SkewSeries SkewSeries::operator+(const SkewSeries& other) const {
  Window w{std::min(window_.max_rank, other.window_.max_rank), std::min(window_.max_framing, other.window_.max_framing)};
  std::vector<Extent> ext;
  for (int r = 0; r <= w.max_rank; ++r)
    for (int v = 0; v <= w.max_framing; ++v) {
      const Extent &a = extent(r, v), &b = other.extent(r, v);
      ext.push_back({std::min(a.lo, b.lo), std::min(a.hi, b.hi)});
    }
  Terms out;
  auto absorb = [&](const Terms& t) {
    for (const auto& [c, value] : t) {
      if (c.r > w.max_rank || c.v > w.max_framing) continue;
      if (c.d > ext[static_cast<std::size_t>(c.r * (w.max_framing + 1) + c.v)].hi) continue;
      auto [it, fresh] = out.emplace(c, value);
      if (!fresh) it->second = it->second + value;
    }
  };
  absorb(terms_);
  absorb(other.terms_);
  return SkewSeries(w, std::move(out), std::move(ext));
}

SkewSeries SkewSeries::operator-() const { return scaled(ScalarValue(-1)); }

SkewSeries SkewSeries::operator-(const SkewSeries& other) const { return *this + (-other); }

SkewSeries SkewSeries::scaled(const ScalarValue& k) const {
  Terms out;
  if (!k.is_zero()) {
    for (const auto& [c, value] : terms_) out.emplace(c, value * k);
  }
  return SkewSeries(window_, std::move(out), extents_);
}

bool SkewSeries::agrees_with(const SkewSeries& other) const {
  auto check = [&](const Terms& t) {
    for (const auto& [c, value] : t) {
      (void)value;
      if (knows(c) && other.knows(c) && coefficient(c) != other.coefficient(c)) return false;
    }
    return true;
  };
  return check(terms_) && check(other.terms_);
}

std::string SkewSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [c, value] : terms_) {
    if (!out.empty()) out += " + ";
    out += "[" + value.to_string() + "]x^" + c.to_string();
  }
  return out;
}

std::string to_string(SlopeCmp cmp) {
  switch (cmp) {
    case SlopeCmp::le: return "le";
    case SlopeCmp::lt: return "lt";
    case SlopeCmp::eq: return "eq";
    case SlopeCmp::ge: return "ge";
    case SlopeCmp::gt: return "gt";
  }
  return "?";
}

SkewSeries truncate_slope(const SkewSeries& s, SlopeCmp cmp, const BigRational& tau, bool keep_unit) {
  const Window& w = s.window();
  // admissible degrees [lower, upper] at rank r
  auto bounds = [&](std::int64_t r) -> std::pair<std::int64_t, std::int64_t> {
    BigRational x = tau * BigRational(r);
    std::int64_t f = floor_int(x), c = ceil_int(x);
    switch (cmp) {
      case SlopeCmp::le: return {-kInf, f};
      case SlopeCmp::lt: return {-kInf, c - 1};
      case SlopeCmp::eq: return f == c ? std::pair{f, f} : std::pair{kInf, -kInf};
      case SlopeCmp::ge: return {c, kInf};
      case SlopeCmp::gt: return {f + 1, kInf};
    }
    return {kInf, -kInf};
  };
  SkewSeries::Terms kept;
  for (const auto& [c, value] : s.terms()) {
    if (c.r == 0) {
      if (c.is_unit() && keep_unit) kept.emplace(c, value);
      continue;
    }
    auto [lo, hi] = bounds(c.r);
    if (c.d >= lo && c.d <= hi) kept.emplace(c, value);
  }
  auto extent = [&](int r, int v) -> Extent {
    const Extent& e = s.extent(r, v);
    if (r == 0) return (v == 0 && keep_unit) ? e : Extent{};
    auto [lo, hi] = bounds(r);
    if (lo > hi) return Extent{};
    Extent out{std::max(e.lo, lo), e.hi};
    if (e.hi >= hi) out.hi = kInf;
    if (out.lo > hi) out = Extent{};
    return out;
  };
  return SkewSeries::with_extents(w, std::move(kept), extent);
}

ScalarValue QuantumPlane::twist(const FramedClass& a, const FramedClass& b) const {
  return ScalarValue::neg_s_power(framed_bracket(genus_, a, b));
}

SkewSeries QuantumPlane::multiply(const SkewSeries& a, const SkewSeries& b, Exec exec) const {
  Window w{std::min(a.window().max_rank, b.window().max_rank),
           std::min(a.window().max_framing, b.window().max_framing)};
  const int framings = w.max_framing + 1;
  std::vector<Extent> ext;
  for (int r = 0; r <= w.max_rank; ++r)
    for (int v = 0; v <= w.max_framing; ++v) {
      Extent out{kInf, kInf};
      for (int r1 = 0; r1 <= r; ++r1)
        for (int v1 = 0; v1 <= v; ++v1) {
          const Extent &x = a.extent(r1, v1), &y = b.extent(r - r1, v - v1);
          out.lo = std::min(out.lo, sat_add(x.lo, y.lo));
          // an unknown term of either factor first reaches degree max(lo, hi + 1) + (other lo)
          std::int64_t first_unknown =
              std::min(sat_add(std::max(x.lo, sat_add(x.hi, 1)), y.lo), sat_add(std::max(y.lo, sat_add(y.hi, 1)), x.lo));
          if (first_unknown < kInf) out.hi = std::min(out.hi, first_unknown - 1);
        }
      ext.push_back(out);
    }
  auto slot_of = [&](const FramedClass& c) { return static_cast<std::size_t>(c.r * framings + c.v); };
  auto accumulate = [&](SkewSeries::Terms& out, const FramedClass& ca, const ScalarValue& xa, const FramedClass& cb,
                        const ScalarValue& xb) {
    FramedClass c = ca + cb;
    if (c.r > w.max_rank || c.v > w.max_framing) return;
    if (c.d > ext[slot_of(c)].hi) return;
    ScalarValue term = xa * xb * twist(ca, cb);
    auto [it, fresh] = out.emplace(c, term);
    if (!fresh) it->second = it->second + term;
  };

  SkewSeries::Terms out;
  if (exec == Exec::serial) {
    for (const auto& [ca, xa] : a.terms())
      for (const auto& [cb, xb] : b.terms()) accumulate(out, ca, xa, cb, xb);
  } else {
    // one task per output slot; each task sees only the factor slots that feed it
    std::vector<std::vector<std::pair<FramedClass, ScalarValue>>> by_slot_a(ext.size()), by_slot_b(ext.size());
    for (const auto& [c, x] : a.terms())
      if (c.r <= w.max_rank && c.v <= w.max_framing) by_slot_a[slot_of(c)].emplace_back(c, x);
    for (const auto& [c, x] : b.terms())
      if (c.r <= w.max_rank && c.v <= w.max_framing) by_slot_b[slot_of(c)].emplace_back(c, x);
    std::vector<SkewSeries::Terms> partial(ext.size());
    parallel_for(ext.size(), exec, [&](std::size_t k) {
      int r = static_cast<int>(k) / framings, v = static_cast<int>(k) % framings;
      for (int r1 = 0; r1 <= r; ++r1)
        for (int v1 = 0; v1 <= v; ++v1) {
          for (const auto& [ca, xa] : by_slot_a[static_cast<std::size_t>(r1 * framings + v1)])
            for (const auto& [cb, xb] : by_slot_b[static_cast<std::size_t>((r - r1) * framings + (v - v1))])
              accumulate(partial[k], ca, xa, cb, xb);
        }
    });
    for (auto& p : partial) out.merge(p);
  }
  return SkewSeries::with_extents(w, std::move(out), [&](int r, int v) { return ext[static_cast<std::size_t>(r * framings + v)]; });
}

SkewSeries QuantumPlane::inverse(const SkewSeries& a, Exec exec) const {
  if (!a.knows(FramedClass{}) || !a.coefficient(FramedClass{}).is_one())
    throw DomainError("skew inverse needs constant term 1");
  const Window& w = a.window();
  SkewSeries unit = SkewSeries::unit(w);
  SkewSeries minus_x = unit - a;  // no constant term, so every product raises r + v
  SkewSeries power = unit, sum = unit;
  for (int n = 1; n <= w.max_rank + w.max_framing; ++n) {
    power = multiply(power, minus_x, exec);
    sum = sum + power;
  }
  return sum;
}

}  // namespace pairzeta
