#include "pairzeta/multipoly.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "pairzeta/errors.hpp"

namespace pairzeta {

namespace {

constexpr std::array<std::string_view, kMaxVars> kNames = {"s", "t", "c1", "c2", "c3", "c4", "c5", "c6"};

Monomial::Exponent checked_exponent(unsigned long e) {
  if (e > std::numeric_limits<Monomial::Exponent>::max()) throw std::overflow_error("monomial exponent overflow");
  return static_cast<Monomial::Exponent>(e);
}

bool term_greater(const MultiPoly::Term& a, const MultiPoly::Term& b) { return a.mono > b.mono; }

}  // namespace

std::string_view variable_name(std::size_t var) {
  if (var >= kMaxVars) throw std::out_of_range("variable index");
  return kNames[var];
}

std::optional<std::size_t> variable_index(std::string_view name) {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (kNames[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t curve_param_var(int i) {
  if (i < 1 || i > kMaxCurveParams) throw std::out_of_range("curve parameter index " + std::to_string(i));
  return kFirstCurveVar + static_cast<std::size_t>(i - 1);
}

// ---- Monomial ----

Monomial Monomial::var(std::size_t v, unsigned power) {
  Monomial m;
  m.set(v, power);
  return m;
}

void Monomial::set(std::size_t v, unsigned power) { exps_[v] = checked_exponent(power); }

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (auto e : exps_) d += e;
  return d;
}

std::uint32_t Monomial::support() const {
  std::uint32_t mask = 0;
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    if (exps_[v] != 0) mask |= (1u << v);
  }
  return mask;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    if (exps_[v] > other.exps_[v]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    m.exps_[v] = checked_exponent(static_cast<unsigned long>(exps_[v]) + other.exps_[v]);
  }
  return m;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial m;
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    if (other.exps_[v] > exps_[v]) throw std::logic_error("monomial division is not exact");
    m.exps_[v] = static_cast<Exponent>(exps_[v] - other.exps_[v]);
  }
  return m;
}

Monomial Monomial::pow(unsigned k) const {
  Monomial m;
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    m.exps_[v] = checked_exponent(static_cast<unsigned long>(exps_[v]) * k);
  }
  return m;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t v = 0; v < kMaxVars; ++v) m.exps_[v] = std::min(a.exps_[v], b.exps_[v]);
  return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t v = 0; v < kMaxVars; ++v) m.exps_[v] = std::max(a.exps_[v], b.exps_[v]);
  return m;
}

std::string monomial_to_string(const Monomial& m) {
  std::string out;
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    if (m[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += kNames[v];
    if (m[v] != 1) {
      out += '^';
      out += std::to_string(m[v]);
    }
  }
  return out.empty() ? "1" : out;
}

// ---- MultiPoly ----

MultiPoly::MultiPoly(const BigRational& c) {
  if (sgn(c) != 0) terms_.push_back({Monomial{}, c});
}

MultiPoly MultiPoly::variable(std::size_t v, unsigned power) {
  return monomial(Monomial::var(v, power), BigRational(1));
}

MultiPoly MultiPoly::monomial(const Monomial& m, const BigRational& c) {
  MultiPoly p;
  if (sgn(c) != 0) p.terms_.push_back({m, c});
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
  return MultiPoly(std::move(out), true);
}

bool MultiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

bool MultiPoly::is_one() const { return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1; }

BigRational MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return BigRational(0);
}

unsigned MultiPoly::degree(std::size_t v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono[v]);
  return d;
}

unsigned MultiPoly::min_degree(std::size_t v) const {
  if (terms_.empty()) return 0;
  unsigned d = std::numeric_limits<unsigned>::max();
  for (const auto& t : terms_) d = std::min<unsigned>(d, t.mono[v]);
  return d;
}

std::uint32_t MultiPoly::support() const {
  std::uint32_t mask = 0;
  for (const auto& t : terms_) mask |= t.mono.support();
  return mask;
}

bool MultiPoly::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff.get_den() == 1; });
}

MultiPoly MultiPoly::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = -t.coeff;
  return MultiPoly(std::move(out), true);
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    const auto& a = terms_[i];
    const auto& b = o.terms_[j];
    if (a.mono > b.mono) {
      out.push_back(a);
      ++i;
    } else if (b.mono > a.mono) {
      out.push_back(b);
      ++j;
    } else {
      BigRational c = a.coeff + b.coeff;
      if (sgn(c) != 0) out.push_back({a.mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  return MultiPoly(std::move(out), true);
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  if (o.terms_.size() == 1) return times_monomial(o.terms_[0].mono).scaled(o.terms_[0].coeff);
  if (terms_.size() == 1) return o.times_monomial(terms_[0].mono).scaled(terms_[0].coeff);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) prod.push_back({a.mono * b.mono, a.coeff * b.coeff});
  }
  return from_terms(std::move(prod));
}

MultiPoly MultiPoly::scaled(const BigRational& c) const {
  if (sgn(c) == 0) return {};
  if (c == 1) return *this;
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff *= c;
  return MultiPoly(std::move(out), true);
}

MultiPoly MultiPoly::times_monomial(const Monomial& m) const {
  if (m.is_one()) return *this;
  std::vector<Term> out = terms_;
  for (auto& t : out) t.mono = t.mono * m;  // order preserved: lex is a monomial order
  return MultiPoly(std::move(out), true);
}

MultiPoly MultiPoly::divided_by_monomial(const Monomial& m) const {
  if (m.is_one()) return *this;
  std::vector<Term> out = terms_;
  for (auto& t : out) t.mono = t.mono / m;
  return MultiPoly(std::move(out), true);
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result(BigRational(1));
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  if (is_zero()) return MultiPoly{};
  if (divisor.is_monomial()) {
    const auto& [dm, dc] = divisor.terms_[0];
    std::vector<Term> out = terms_;
    for (auto& t : out) {
      if (!dm.divides(t.mono)) return std::nullopt;
      t.mono = t.mono / dm;
      t.coeff /= dc;
    }
    return MultiPoly(std::move(out), true);
  }
  std::array<unsigned, kMaxVars> max_deg{};
  std::array<unsigned, kMaxVars> div_deg{};
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    max_deg[v] = degree(v);
    div_deg[v] = divisor.degree(v);
    if (div_deg[v] > max_deg[v]) return std::nullopt;
    if (divisor.min_degree(v) > min_degree(v)) return std::nullopt;
  }
  std::map<Monomial, BigRational, std::greater<>> rem;
  for (const auto& t : terms_) rem.emplace(t.mono, t.coeff);
  const Term& lead = divisor.terms_.front();
  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lead.mono.divides(it->first)) return std::nullopt;
    Monomial qm = it->first / lead.mono;
    for (std::size_t v = 0; v < kMaxVars; ++v) {
      if (qm[v] + div_deg[v] > max_deg[v]) return std::nullopt;
    }
    BigRational qc = it->second / lead.coeff;
    rem.erase(it);
    for (std::size_t k = 1; k < divisor.terms_.size(); ++k) {
      const auto& dt = divisor.terms_[k];
      Monomial m = qm * dt.mono;
      BigRational c = qc * dt.coeff;
      auto [pos, inserted] = rem.emplace(m, -c);
      if (!inserted) {
        pos->second -= c;
        if (sgn(pos->second) == 0) rem.erase(pos);
      }
    }
    quotient.push_back({qm, std::move(qc)});
  }
  return MultiPoly(std::move(quotient), true);
}

MultiPoly MultiPoly::evaluate(std::size_t v, const BigRational& x) const {
  if (degree(v) == 0) return *this;
  std::vector<BigRational> powers(degree(v) + 1);
  powers[0] = 1;
  for (std::size_t k = 1; k < powers.size(); ++k) powers[k] = powers[k - 1] * x;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    BigRational c = t.coeff * powers[t.mono[v]];
    if (sgn(c) == 0) continue;
    Monomial m = t.mono;
    m.set(v, 0);
    out.push_back({m, std::move(c)});
  }
  return from_terms(std::move(out));
}

BigRational MultiPoly::evaluate_all(const std::array<std::optional<BigRational>, kMaxVars>& values) const {
  BigRational total = 0;
  for (const auto& t : terms_) {
    BigRational c = t.coeff;
    for (std::size_t v = 0; v < kMaxVars; ++v) {
      if (t.mono[v] == 0) continue;
      if (!values[v]) throw DomainError("unbound variable " + std::string(kNames[v]));
      BigRational p;
      mpz_pow_ui(p.get_num_mpz_t(), values[v]->get_num_mpz_t(), t.mono[v]);
      mpz_pow_ui(p.get_den_mpz_t(), values[v]->get_den_mpz_t(), t.mono[v]);
      p.canonicalize();
      c *= p;
    }
    total += c;
  }
  return total;
}

std::map<unsigned, MultiPoly> MultiPoly::coefficients(std::size_t v) const {
  std::map<unsigned, std::vector<Term>> groups;
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    m.set(v, 0);
    groups[t.mono[v]].push_back({m, t.coeff});
  }
  std::map<unsigned, MultiPoly> out;
  for (auto& [k, ts] : groups) out.emplace(k, MultiPoly(std::move(ts), true));  // order survives removing v
  return out;
}

MultiPoly MultiPoly::coefficient(std::size_t v, unsigned k) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono[v] != k) continue;
    Monomial m = t.mono;
    m.set(v, 0);
    out.push_back({m, t.coeff});
  }
  return MultiPoly(std::move(out), true);
}

MultiPoly MultiPoly::scale_variable(std::size_t v, const Monomial& factor) const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.mono = t.mono * factor.pow(t.mono[v]);
  return from_terms(std::move(out));
}

Monomial MultiPoly::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial m = terms_.front().mono;
  for (const auto& t : terms_) m = Monomial::gcd(m, t.mono);
  return m;
}

BigRational MultiPoly::content() const {
  if (terms_.empty()) return BigRational(0);
  BigInt num = 0, den = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  BigRational c(num, den);
  c.canonicalize();
  return c;
}

MultiPoly MultiPoly::primitive_part() const {
  if (terms_.empty()) return {};
  BigRational c = content();
  if (sgn(leading_coeff()) < 0) c = -c;
  BigRational inv = 1 / c;
  return scaled(inv);
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = sgn(t.coeff) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    BigRational mag = abs(t.coeff);
    if (t.mono.is_one()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += monomial_to_string(t.mono);
    } else {
      out += mag.get_str();
      out += '*';
      out += monomial_to_string(t.mono);
    }
  }
  return out;
}

}  // namespace pairzeta
