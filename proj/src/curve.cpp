#include "pairzeta/curve.hpp"

#include "pairzeta/errors.hpp"

namespace pairzeta {

// ---- RationalSeries ----

RationalSeries RationalSeries::t_power(std::int64_t k) {
  if (k >= 0) return ScalarValue::polynomial(MultiPoly::variable(kVarT, static_cast<unsigned>(k)));
  return ScalarValue::fraction(MultiPoly(1L), MultiPoly::variable(kVarT, static_cast<unsigned>(-k)));
}

namespace {

std::vector<ScalarValue> t_coefficients(const MultiPoly& p) {
  std::vector<ScalarValue> out(p.degree(kVarT) + 1);
  for (auto& [k, c] : p.coefficients(kVarT)) out[k] = ScalarValue::polynomial(c);
  return out;
}

}  // namespace

ScalarValue RationalSeries::evaluate(const ScalarValue& x) const {
  if (x.depends_on(kVarT)) throw DomainError("evaluation point must not involve t");
  auto horner = [&](const MultiPoly& p) {
    auto cs = t_coefficients(p);
    ScalarValue acc;
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * x + *it;
    return acc;
  };
  ScalarValue d = horner(value_.denominator());
  if (d.is_zero()) throw DomainError("pole at the evaluation point");
  return horner(value_.numerator()) / d;
}

TruncatedSeries RationalSeries::expand(std::size_t order) const {
  auto num = t_coefficients(value_.numerator());
  auto den = t_coefficients(value_.denominator());
  if (den[0].is_zero()) throw DomainError("pole at t = 0; no power-series expansion");
  ScalarValue inv0 = den[0].inverse();
  TruncatedSeries out;
  out.coefficients.resize(order);
  for (std::size_t n = 0; n < order; ++n) {
    ScalarValue acc = n < num.size() ? num[n] : ScalarValue();
    for (std::size_t j = 1; j <= n && j < den.size(); ++j) acc -= den[j] * out.coefficients[n - j];
    out.coefficients[n] = acc * inv0;
  }
  return out;
}

ScalarValue RationalSeries::coefficient(std::int64_t n) const {
  if (n < 0) return {};
  return expand(static_cast<std::size_t>(n) + 1).coefficients.back();
}

bool RationalSeries::is_polynomial() const { return value_.denominator().degree(kVarT) == 0; }

std::vector<ScalarValue> RationalSeries::polynomial_coefficients() const {
  if (!is_polynomial()) throw DomainError("not a polynomial in t");
  ScalarValue den = ScalarValue::polynomial(value_.denominator());
  auto cs = t_coefficients(value_.numerator());
  for (auto& c : cs) c = c / den;
  if (value_.is_zero()) cs.clear();
  return cs;
}

std::int64_t RationalSeries::polynomial_degree() const {
  if (!is_polynomial()) throw DomainError("not a polynomial in t");
  if (value_.is_zero()) return -1;
  return value_.numerator().degree(kVarT);
}

// ---- ScalarMemo ----

std::optional<ScalarValue> ScalarMemo::find(const Key& key) const {
  std::lock_guard lock(mutex_);
  auto it = table_.find(key);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void ScalarMemo::store(const Key& key, const ScalarValue& value) {
  std::lock_guard lock(mutex_);
  table_.emplace(key, value);
}

std::size_t ScalarMemo::size() const {
  std::lock_guard lock(mutex_);
  return table_.size();
}

void ScalarMemo::clear() {
  std::lock_guard lock(mutex_);
  table_.clear();
}

// ---- Curve ----

Curve::Curve(int genus, CurveMode mode, std::vector<ScalarValue> free_coefficients)
    : genus_(genus), mode_(mode), memo_(std::make_shared<ScalarMemo>()) {
  a_.resize(2 * static_cast<std::size_t>(genus) + 1);
  a_[0] = 1;
  for (int i = 1; i <= genus; ++i) a_[i] = free_coefficients[i - 1];
  for (int i = 0; i < genus; ++i) a_[2 * genus - i] = ScalarValue::q_power(genus - i) * a_[i];
}

Curve Curve::symbolic(int genus) {
  if (genus < 0) throw DomainError("genus must be non-negative");
  if (genus > kMaxCurveParams) {
    throw DomainError("symbolic genus is limited to " + std::to_string(kMaxCurveParams));
  }
  std::vector<ScalarValue> cs;
  for (int i = 1; i <= genus; ++i) cs.push_back(ScalarValue::curve_param(i));
  return Curve(genus, CurveMode::symbolic, std::move(cs));
}

Curve Curve::numeric(int genus, std::vector<ScalarValue> free_coefficients) {
  if (genus < 0) throw DomainError("genus must be non-negative");
  if (static_cast<int>(free_coefficients.size()) != genus) {
    throw DomainError("expected " + std::to_string(genus) + " numerator coefficients, got " +
                      std::to_string(free_coefficients.size()));
  }
  for (const auto& a : free_coefficients) {
    if (a.depends_on(kVarT)) throw DomainError("numerator coefficients must not involve t");
    if (!a.is_q_integral()) throw DomainError("numerator coefficients must be functions of q");
  }
  return Curve(genus, CurveMode::numeric, std::move(free_coefficients));
}

std::string Curve::description() const {
  std::string out = "genus " + std::to_string(genus_) + (mode_ == CurveMode::symbolic ? ", symbolic" : ", numeric");
  return out;
}

// ---- zeta data ----

RationalSeries numerator_polynomial(const Curve& c) {
  ScalarValue p;
  const auto& a = c.numerator_coefficients();
  ScalarValue t = ScalarValue::t();
  for (std::size_t i = a.size(); i-- > 0;) p = p * t + a[i];
  return p;
}

RationalSeries zeta(const Curve& c) {
  ScalarValue t = ScalarValue::t();
  ScalarValue den = (ScalarValue(1) - t) * (ScalarValue(1) - ScalarValue::q() * t);
  return numerator_polynomial(c).value() / den;
}

RationalSeries zeta_hat(const Curve& c) { return RationalSeries::t_power(1 - c.genus()) * zeta(c); }

ScalarValue zeta_hat_at_q_power(const Curve& c, std::int64_t i) { return zeta_hat(c).at_s_power(2 * i); }

ScalarValue q_geometric_sum(std::int64_t n) {
  ScalarValue acc;
  for (std::int64_t k = 0; k <= n; ++k) acc += ScalarValue::q_power(k);
  return acc;
}

ScalarValue sym_power(const Curve& c, std::int64_t n) {
  if (n < 0) return {};
  ScalarMemo::Key key{static_cast<std::int64_t>(MemoTag::sym_power), n};
  if (auto hit = c.memo().find(key)) return *hit;
  const auto& a = c.numerator_coefficients();
  ScalarValue acc;
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(a.size()) && i <= n; ++i) acc += a[i] * q_geometric_sum(n - i);
  c.memo().store(key, acc);
  return acc;
}

ScalarValue jacobian_class(const Curve& c) {
  ScalarValue acc;
  for (const auto& a : c.numerator_coefficients()) acc += a;
  return acc;
}

ScalarValue b_r(const Curve& c, std::int64_t r) {
  if (r < 1) throw DomainError("b_r requires r >= 1");
  ScalarMemo::Key key{static_cast<std::int64_t>(MemoTag::b_r), r};
  if (auto hit = c.memo().find(key)) return *hit;
  ScalarValue acc = jacobian_class(c) / (ScalarValue::q() - ScalarValue(1));
  RationalSeries zh = zeta_hat(c);
  for (std::int64_t i = 1; i < r; ++i) acc *= zh.at_s_power(2 * i);
  c.memo().store(key, acc);
  return acc;
}

}  // namespace pairzeta
