#include "pairzeta/scalar.hpp"

#include "pairzeta/errors.hpp"
#include "pairzeta/polygcd.hpp"

namespace pairzeta {

namespace {

MultiPoly divide_known(const MultiPoly& a, const MultiPoly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw std::logic_error("scalar: gcd does not divide");
  return *std::move(q);
}

// s^{2k} -> s^k term-wise; requires only even powers of s.
MultiPoly halve_s(const MultiPoly& p) {
  std::vector<MultiPoly::Term> out;
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    m.set(kVarS, t.mono[kVarS] / 2u);
    out.push_back({m, t.coeff});
  }
  return MultiPoly::from_terms(std::move(out));
}

bool only_even_s(const MultiPoly& p) {
  for (const auto& t : p.terms()) {
    if (t.mono[kVarS] % 2 != 0) return false;
  }
  return true;
}

}  // namespace

ScalarValue ScalarValue::from_reduced(MultiPoly num, MultiPoly den) {
  ScalarValue out;
  if (num.is_zero()) return out;
  const BigRational& lc = den.leading_coeff();
  if (lc != 1) {
    BigRational inv = 1 / lc;
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  out.num_ = std::move(num);
  out.den_ = std::move(den);
  return out;
}

ScalarValue ScalarValue::fraction(const MultiPoly& num, const MultiPoly& den) {
  if (den.is_zero()) throw DomainError("division by zero");
  if (num.is_zero()) return {};
  if (den.is_constant()) return from_reduced(num, den);
  MultiPoly g = poly_gcd(num, den);
  if (g.is_constant()) return from_reduced(num, den);
  return from_reduced(divide_known(num, g), divide_known(den, g));
}

ScalarValue ScalarValue::polynomial(const MultiPoly& p) { return from_reduced(p, MultiPoly(1L)); }

ScalarValue ScalarValue::s() { return polynomial(MultiPoly::variable(kVarS)); }
ScalarValue ScalarValue::q() { return polynomial(MultiPoly::variable(kVarS, 2)); }
ScalarValue ScalarValue::t() { return polynomial(MultiPoly::variable(kVarT)); }
ScalarValue ScalarValue::curve_param(int i) { return polynomial(MultiPoly::variable(curve_param_var(i))); }

ScalarValue ScalarValue::s_power(std::int64_t e) {
  if (e >= 0) return polynomial(MultiPoly::variable(kVarS, static_cast<unsigned>(e)));
  return from_reduced(MultiPoly(1L), MultiPoly::variable(kVarS, static_cast<unsigned>(-e)));
}

ScalarValue ScalarValue::neg_s_power(std::int64_t e) {
  ScalarValue v = s_power(e);
  return (e % 2 == 0) ? v : -v;
}

bool ScalarValue::is_q_integral() const { return only_even_s(num_) && only_even_s(den_); }

ScalarValue ScalarValue::operator-() const {
  ScalarValue out = *this;
  out.num_ = -out.num_;
  return out;
}

ScalarValue operator+(const ScalarValue& a, const ScalarValue& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return ScalarValue::fraction(a.num_ + b.num_, a.den_);
  if (a.den_.is_constant() || b.den_.is_constant()) {
    // one denominator is 1 after normalization
    return ScalarValue::from_reduced(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  MultiPoly g = poly_gcd(a.den_, b.den_);
  if (g.is_constant()) {
    return ScalarValue::from_reduced(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  MultiPoly ad = divide_known(a.den_, g);
  MultiPoly bd = divide_known(b.den_, g);
  MultiPoly t = a.num_ * bd + b.num_ * ad;
  if (t.is_zero()) return {};
  MultiPoly g2 = poly_gcd(t, g);
  if (g2.is_constant()) return ScalarValue::from_reduced(std::move(t), ad * b.den_);
  return ScalarValue::from_reduced(divide_known(t, g2), ad * divide_known(b.den_, g2));
}

ScalarValue operator-(const ScalarValue& a, const ScalarValue& b) { return a + (-b); }

ScalarValue operator*(const ScalarValue& a, const ScalarValue& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.den_.is_constant() && b.den_.is_constant()) return ScalarValue::from_reduced(a.num_ * b.num_, a.den_ * b.den_);
  MultiPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  if (!bd.is_constant() && !an.is_constant()) {
    MultiPoly g1 = poly_gcd(an, bd);
    if (!g1.is_constant()) {
      an = divide_known(an, g1);
      bd = divide_known(bd, g1);
    }
  }
  if (!ad.is_constant() && !bn.is_constant()) {
    MultiPoly g2 = poly_gcd(bn, ad);
    if (!g2.is_constant()) {
      bn = divide_known(bn, g2);
      ad = divide_known(ad, g2);
    }
  }
  return ScalarValue::from_reduced(an * bn, ad * bd);
}

ScalarValue ScalarValue::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  return from_reduced(den_, num_);
}

ScalarValue operator/(const ScalarValue& a, const ScalarValue& b) { return a * b.inverse(); }

ScalarValue ScalarValue::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  if (e == 0) return ScalarValue(1L);
  return from_reduced(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

namespace {

struct RawTerm {
  std::int64_t s_exp;
  std::int64_t t_exp;
  Monomial rest;
  BigRational coeff;
};

// Applies (a, j) -> map(a, j) to the (s, t) exponents of both sides, then shifts
// so that all exponents are non-negative again.
template <class Map>
std::pair<MultiPoly, MultiPoly> remap_st(const MultiPoly& num, const MultiPoly& den, Map map) {
  std::vector<RawTerm> raw_num, raw_den;
  std::int64_t min_s = 0, min_t = 0;
  auto collect = [&](const MultiPoly& p, std::vector<RawTerm>& out) {
    for (const auto& term : p.terms()) {
      auto [a, j] = map(static_cast<std::int64_t>(term.mono[kVarS]), static_cast<std::int64_t>(term.mono[kVarT]));
      Monomial rest = term.mono;
      rest.set(kVarS, 0);
      rest.set(kVarT, 0);
      out.push_back({a, j, rest, term.coeff});
      min_s = std::min(min_s, a);
      min_t = std::min(min_t, j);
    }
  };
  collect(num, raw_num);
  collect(den, raw_den);
  auto build = [&](const std::vector<RawTerm>& raw) {
    std::vector<MultiPoly::Term> terms;
    terms.reserve(raw.size());
    for (const auto& r : raw) {
      Monomial m = r.rest;
      m.set(kVarS, static_cast<unsigned>(r.s_exp - min_s));
      m.set(kVarT, static_cast<unsigned>(r.t_exp - min_t));
      terms.push_back({m, r.coeff});
    }
    return MultiPoly::from_terms(std::move(terms));
  };
  return {build(raw_num), build(raw_den)};
}

}  // namespace

ScalarValue ScalarValue::scale_t(std::int64_t k) const {
  if (k == 0 || !depends_on(kVarT)) return *this;
  auto [n, d] = remap_st(num_, den_, [k](std::int64_t a, std::int64_t j) { return std::pair{a + k * j, j}; });
  Monomial common = Monomial::gcd(n.monomial_content(), d.monomial_content());
  return from_reduced(n.divided_by_monomial(common), d.divided_by_monomial(common));
}

ScalarValue ScalarValue::invert_t(std::int64_t k) const {
  if (!depends_on(kVarT)) return *this;
  auto [n, d] = remap_st(num_, den_, [k](std::int64_t a, std::int64_t j) { return std::pair{a - k * j, -j}; });
  Monomial common = Monomial::gcd(n.monomial_content(), d.monomial_content());
  return from_reduced(n.divided_by_monomial(common), d.divided_by_monomial(common));
}

ScalarValue ScalarValue::substitute_t(std::int64_t k) const {
  if (!depends_on(kVarT)) return *this;
  auto [n, d] = remap_st(num_, den_, [k](std::int64_t a, std::int64_t j) { return std::pair{a + k * j, std::int64_t{0}}; });
  return fraction(n, d);
}

std::string ScalarValue::to_string() const {
  std::string num = num_.to_string();
  std::string den = den_.to_string();
  if (num_.size() > 1) num = "(" + num + ")";
  // a product monomial in the denominator needs parentheses too: a / s*c1 is (a/s)*c1
  if (den_.size() > 1 || den.find('*') != std::string::npos) den = "(" + den + ")";
  return num + " / " + den;
}

ScalarValue scalar_arith(const ScalarValue& a, const ScalarValue& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw std::invalid_argument("unknown arithmetic operation");
}

ScalarValue scalar_pow_q(std::int64_t e) { return ScalarValue::q_power(e); }

bool is_q_integral(const ScalarValue& v) { return v.is_q_integral(); }

BigRational scalar_eval(const ScalarValue& v, const Bindings& bindings) {
  std::array<std::optional<BigRational>, kMaxVars> values;
  bool q_bound = false;
  for (const auto& [name, value] : bindings) {
    if (name == "q") {
      q_bound = true;
      continue;
    }
    auto idx = variable_index(name);
    if (!idx) throw DomainError("unknown symbol '" + name + "'");
    values[*idx] = value;
  }
  MultiPoly num = v.numerator(), den = v.denominator();
  if (q_bound) {
    if (values[kVarS]) throw DomainError("bind either s or q, not both");
    if (!v.is_q_integral()) throw DomainError("value is not a function of q = s^2");
    num = halve_s(num);
    den = halve_s(den);
    values[kVarS] = bindings.find("q")->second;
  }
  BigRational d = den.evaluate_all(values);
  if (sgn(d) == 0) throw DomainError("pole at the given binding");
  return num.evaluate_all(values) / d;
}

}  // namespace pairzeta
