#include "pairzeta/polygcd.hpp"

#include <bit>
#include <map>

namespace pairzeta {

namespace {

// All polynomials below have integer coefficients.

BigInt integer_content(const MultiPoly& p) {
  BigInt g = 0;
  for (const auto& t : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
  return g;
}

MultiPoly sign_normalized(const MultiPoly& p) {
  if (!p.is_zero() && sgn(p.leading_coeff()) < 0) return -p;
  return p;
}

std::size_t first_var(std::uint32_t mask) { return static_cast<std::size_t>(std::countr_zero(mask)); }

BigInt max_norm(const MultiPoly& p) {
  BigInt m = 0;
  for (const auto& t : p.terms()) {
    BigInt a = abs(t.coeff.get_num());
    if (a > m) m = a;
  }
  return m;
}

MultiPoly divide_known(const MultiPoly& a, const MultiPoly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw std::logic_error("gcd: expected exact division failed");
  return *q;
}

class GcdEngine {
 public:
  explicit GcdEngine(bool heuristic) : heuristic_(heuristic) {}

  // Full gcd over Z (content included), positive leading coefficient.
  MultiPoly gcd(const MultiPoly& a0, const MultiPoly& b0) {
    if (a0.is_zero()) return sign_normalized(b0);
    if (b0.is_zero()) return sign_normalized(a0);
    BigInt ca = integer_content(a0), cb = integer_content(b0);
    BigInt c;
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    MultiPoly a = a0.scaled(BigRational(1) / BigRational(ca));
    MultiPoly b = b0.scaled(BigRational(1) / BigRational(cb));
    Monomial ma = a.monomial_content(), mb = b.monomial_content();
    Monomial m = Monomial::gcd(ma, mb);
    a = a.divided_by_monomial(ma);
    b = b.divided_by_monomial(mb);
    MultiPoly h = (a.is_constant() || b.is_constant()) ? MultiPoly(1L) : gcd_primitive(a, b);
    return h.times_monomial(m).scaled(BigRational(c));
  }

 private:
  // a, b primitive, free of monomial factors, nonconstant.
  MultiPoly gcd_primitive(const MultiPoly& a, const MultiPoly& b) {
    if (a == b) return sign_normalized(a);
    if (a == -b) return sign_normalized(a);
    std::uint32_t va = a.support(), vb = b.support();
    if (va != vb) {
      std::uint32_t common = va & vb;
      if (common == 0) return MultiPoly(1L);
      MultiPoly ca = (va & ~common) ? content_wrt(a, va & ~common) : a;
      if (ca.is_constant()) return MultiPoly(1L);
      MultiPoly cb = (vb & ~common) ? content_wrt(b, vb & ~common) : b;
      return gcd(ca, cb);
    }
    if (heuristic_) {
      if (auto h = heuristic_gcd(a, b)) return *h;
    }
    return prs_gcd(a, b);
  }

  // gcd of the coefficients of p viewed as a polynomial in the variables of `mask`.
  MultiPoly content_wrt(const MultiPoly& p, std::uint32_t mask) {
    std::map<Monomial, std::vector<MultiPoly::Term>> groups;
    for (const auto& t : p.terms()) {
      Monomial key, rest = t.mono;
      for (std::size_t v = 0; v < kMaxVars; ++v) {
        if (mask & (1u << v)) {
          key.set(v, t.mono[v]);
          rest.set(v, 0);
        }
      }
      groups[key].push_back({rest, t.coeff});
    }
    MultiPoly g;
    for (auto& [key, terms] : groups) {
      g = gcd(g, MultiPoly::from_terms(std::move(terms)));
      if (g.is_constant()) break;
    }
    return g;
  }

  static MultiPoly interpolate(MultiPoly g, std::size_t x, const BigInt& xi) {
    std::vector<MultiPoly::Term> out;
    BigInt half = xi / 2;
    unsigned k = 0;
    while (!g.is_zero()) {
      std::vector<MultiPoly::Term> digit;
      for (const auto& t : g.terms()) {
        BigInt r;
        mpz_fdiv_r(r.get_mpz_t(), t.coeff.get_num_mpz_t(), xi.get_mpz_t());
        if (r > half) r -= xi;
        if (r != 0) digit.push_back({t.mono, BigRational(r)});
      }
      MultiPoly d = MultiPoly::from_terms(digit);
      for (auto& t : digit) {
        Monomial m = t.mono;
        m.set(x, k);
        out.push_back({m, t.coeff});
      }
      g = (g - d).scaled(BigRational(1) / BigRational(xi));
      ++k;
    }
    return MultiPoly::from_terms(std::move(out));
  }

  std::optional<MultiPoly> heuristic_gcd(const MultiPoly& a, const MultiPoly& b) {
    std::size_t x = first_var(a.support());
    BigInt na = max_norm(a), nb = max_norm(b);
    // Keeping xi above 2*min(norms)+2 makes a divisor that passes the trial
    // divisions provably the gcd.
    BigInt xi = 2 * (na < nb ? na : nb) + 29;
    for (int attempt = 0; attempt < 6; ++attempt) {
      MultiPoly ae = a.evaluate(x, BigRational(xi));
      MultiPoly be = b.evaluate(x, BigRational(xi));
      if (!ae.is_zero() && !be.is_zero()) {
        MultiPoly ge = gcd(ae, be);
        MultiPoly h = interpolate(ge, x, xi).primitive_part();
        if (!h.is_zero() && a.divide_exact(h) && b.divide_exact(h)) return h;
        if (auto cfa = ae.divide_exact(ge)) {
          MultiPoly cf = interpolate(*cfa, x, xi);
          if (!cf.is_zero()) {
            if (auto h2 = a.divide_exact(cf); h2 && b.divide_exact(*h2)) return h2->primitive_part();
          }
        }
        if (auto cfb = be.divide_exact(ge)) {
          MultiPoly cf = interpolate(*cfb, x, xi);
          if (!cf.is_zero()) {
            if (auto h3 = b.divide_exact(cf); h3 && a.divide_exact(*h3)) return h3->primitive_part();
          }
        }
      }
      BigInt r1;
      mpz_sqrt(r1.get_mpz_t(), xi.get_mpz_t());
      mpz_sqrt(r1.get_mpz_t(), r1.get_mpz_t());
      xi = xi * 73794 * r1 / 27011;
    }
    return std::nullopt;
  }

  // Pseudo-remainder of a by b with respect to x.
  static MultiPoly prem(MultiPoly a, const MultiPoly& b, std::size_t x) {
    unsigned db = b.degree(x);
    MultiPoly lcb = b.coefficient(x, db);
    while (!a.is_zero() && a.degree(x) >= db) {
      unsigned da = a.degree(x);
      MultiPoly lca = a.coefficient(x, da);
      a = a * lcb - (lca * b).times_monomial(Monomial::var(x, da - db));
    }
    return a;
  }

  MultiPoly primitive_wrt(const MultiPoly& p, std::size_t x) {
    MultiPoly c = content_wrt(p, 1u << x);
    MultiPoly q = divide_known(p, c);
    return q.primitive_part();
  }

  MultiPoly prs_gcd(const MultiPoly& a0, const MultiPoly& b0) {
    std::size_t x = first_var(a0.support() | b0.support());
    MultiPoly ca = content_wrt(a0, 1u << x);
    MultiPoly cb = content_wrt(b0, 1u << x);
    MultiPoly cont = gcd(ca, cb);
    MultiPoly a = divide_known(a0, ca).primitive_part();
    MultiPoly b = divide_known(b0, cb).primitive_part();
    if (a.degree(x) < b.degree(x)) std::swap(a, b);
    MultiPoly g;
    if (b.degree(x) == 0) {
      g = MultiPoly(1L);
    } else {
      while (true) {
        MultiPoly r = prem(a, b, x);
        if (r.is_zero()) {
          g = b;
          break;
        }
        if (r.degree(x) == 0) {
          g = MultiPoly(1L);
          break;
        }
        a = std::move(b);
        b = primitive_wrt(r, x);
      }
    }
    return sign_normalized(cont * g);
  }

  bool heuristic_;
};

MultiPoly gcd_over_q(const MultiPoly& a, const MultiPoly& b, bool heuristic) {
  if (a.is_zero() && b.is_zero()) return {};
  GcdEngine engine(heuristic);
  return engine.gcd(a.primitive_part(), b.primitive_part()).primitive_part();
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) { return gcd_over_q(a, b, true); }

MultiPoly poly_gcd_prs(const MultiPoly& a, const MultiPoly& b) { return gcd_over_q(a, b, false); }

}  // namespace pairzeta
