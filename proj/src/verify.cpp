#include "pairzeta/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "pairzeta/errors.hpp"
#include "pairzeta/motivic.hpp"
#include "pairzeta/nazeta.hpp"
#include "pairzeta/qplane.hpp"
#include "pairzeta/rings.hpp"
#include "pairzeta/slices.hpp"
#include "pairzeta/wallcross.hpp"

namespace pairzeta::verify {

namespace {

class Recorder {
 public:
  Recorder(std::string suite, Report& out, std::ostream* progress)
      : suite_(std::move(suite)), out_(out), progress_(progress) {}

  // A check passes when body returns true without throwing.
  void check(const std::string& name, const std::function<bool()>& body) {
    Check c{suite_, name, false, {}};
    try {
      c.passed = body();
      if (!c.passed) c.detail = "identity does not hold";
    } catch (const std::exception& e) {
      c.detail = e.what();
    }
    if (progress_) *progress_ << "[" << suite_ << "] " << name << ": " << (c.passed ? "ok" : "FAILED") << '\n';
    out_.push_back(std::move(c));
  }

 private:
  std::string suite_;
  Report& out_;
  std::ostream* progress_;
};

BigRational R(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

std::vector<Curve> sample_curves() {
  return {Curve::symbolic(0), Curve::symbolic(1), Curve::numeric(2, {parse_scalar("q-2"), ScalarValue(3)})};
}

std::string curve_tag(const Curve& c) {
  return "g" + std::to_string(c.genus()) + (c.mode() == CurveMode::symbolic ? "_symbolic_" : "_numeric_");
}

// Random element of Q(s, c1) with small coefficients.
ScalarValue random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-4, 4), deg(0, 3);
  auto poly = [&] {
    ScalarValue acc(0);
    for (int i = 0; i < 3; ++i)
      acc += ScalarValue(coeff(rng)) * ScalarValue::s_power(deg(rng)) * ScalarValue::curve_param(1).pow(deg(rng));
    return acc;
  };
  ScalarValue den = poly();
  while (den.is_zero()) den = poly();
  return poly() / den;
}

void scalar_suite(Recorder& rec, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<ScalarValue> xs;
  for (int i = 0; i < 12; ++i) xs.push_back(random_scalar(rng));
  rec.check("field_axioms", [&] {
    for (std::size_t i = 0; i + 2 < xs.size(); ++i) {
      const auto &a = xs[i], &b = xs[i + 1], &c = xs[i + 2];
      if ((a + b) + c != a + (b + c) || a * (b + c) != a * b + a * c || a * b != b * a) return false;
      if (!b.is_zero() && (a / b) * b != a) return false;
    }
    return true;
  });
  rec.check("print_parse_round_trip", [&] {
    return std::all_of(xs.begin(), xs.end(), [](const ScalarValue& x) { return parse_scalar(x.to_string()) == x; });
  });
  rec.check("q_is_s_squared", [] { return parse_scalar("q") == ScalarValue::s() * ScalarValue::s(); });
  rec.check("q_integrality", [] {
    return is_q_integral(parse_scalar("(1+q)/(1-q^2)")) && !is_q_integral(ScalarValue::s()) &&
           is_q_integral(ScalarValue::neg_s_power(3) * ScalarValue::neg_s_power(5));
  });
}

void curve_suite(Recorder& rec) {
  for (int g : {0, 1, 2}) {
    auto c = Curve::symbolic(g);
    const std::string tag = "g" + std::to_string(g) + "_";
    rec.check(tag + "zeta_coefficients_are_symmetric_powers", [&] {
      auto z = zeta(c);
      for (std::int64_t n = 0; n <= 5; ++n)
        if (z.coefficient(n) != sym_power(c, n)) return false;
      return true;
    });
    rec.check(tag + "functional_equation", [&] { return zeta_hat(c).invert_t(2) == zeta_hat(c); });
    rec.check(tag + "numerator_degree", [&] { return numerator_polynomial(c).polynomial_degree() == 2 * g; });
    rec.check(tag + "b1_is_jacobian_over_q_minus_1", [&] {
      return b_r(c, 1) == jacobian_class(c) / (ScalarValue::q() - 1);
    });
    rec.check(tag + "zeta_hat_at_q_powers", [&] {
      for (std::int64_t i = 2; i <= 3; ++i)
        if (zeta_hat_at_q_power(c, i) != zeta_hat(c).evaluate(ScalarValue::q_power(i))) return false;
      return true;
    });
  }
}

// 2^{a_1 b_2 - a_2 b_1} as a central scalar matrix.
slices::SliceEngine<rings::MatrixRing>::Twist matrix_twist(const rings::MatrixRing& ring) {
  return [ring](const slices::LatticeClass& a, const slices::LatticeClass& b) {
    std::int64_t e = a[0] * b[1] - a[1] * b[0];
    BigRational x = 1;
    for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) x *= 2;
    if (e < 0) x = 1 / x;
    return ring.scalar(x);
  };
}

template <class Ring>
void appendix_checks(Recorder& rec, const slices::SliceEngine<Ring>& eng,
                     const typename slices::SliceEngine<Ring>::Family& a, std::int64_t window, const std::string& tag) {
  using Family = typename slices::SliceEngine<Ring>::Family;
  using slices::SliceMode;
  const auto& ctx = eng.context();
  const auto classes = slices::classes_up_to(ctx, window);
  Family b;
  for (const auto& alpha : classes) b.emplace(alpha, eng.b_from_a(a, alpha));

  std::vector<BigRational> taus{R(0), R(1, 4), R(1, 3), R(1, 2), R(2, 3), R(1)};
  std::vector<SliceBounds> bounds;
  for (const auto& tau : taus)
    for (auto m : {SliceMode::le, SliceMode::ge, SliceMode::lt, SliceMode::gt}) bounds.push_back({m, tau});
  bounds.push_back({SliceMode::interval, R(2, 3), R(1, 3)});
  bounds.push_back({SliceMode::interval, R(1, 2), R(1, 2)});
  bounds.push_back({SliceMode::interval, R(1), R(1, 4)});

  auto slice_family = [&](const SliceBounds& sb) {
    Family out;
    for (const auto& alpha : classes)
      if (auto v = eng.slice(a, alpha, sb); v.in_support()) out.emplace(alpha, v.value);
    return out;
  };
  const Family empty;

  rec.check(tag + "a_b_round_trip", [&] {
    return std::all_of(classes.begin(), classes.end(),
                       [&](const auto& alpha) { return eng.ring().equal(eng.a_from_b(b, alpha), a.at(alpha)); });
  });
  rec.check(tag + "hn_factorization", [&] {
    for (const auto& tau : taus) {
      auto prod = eng.multiply(slice_family({SliceMode::ge, tau}), slice_family({SliceMode::lt, tau}), window);
      if (!eng.families_equal(prod, b, window)) return false;
    }
    return true;
  });
  rec.check(tag + "slice_closed_forms", [&] {
    for (const auto& sb : bounds)
      for (const auto& alpha : classes) {
        auto lhs = eng.slice(a, alpha, sb), rhs = eng.slice_via_b(b, alpha, sb);
        if (lhs.in_support() != rhs.in_support() || !eng.ring().equal(lhs.value, rhs.value)) return false;
      }
    return true;
  });
  rec.check(tag + "two_sided_inverses", [&] {
    for (const auto& sb : bounds) {
      Family s = slice_family(sb), c;
      for (const auto& alpha : classes)
        if (auto v = eng.inverse_coefficient(b, alpha, sb); v.in_support()) c.emplace(alpha, v.value);
      if (!eng.families_equal(eng.multiply(s, c, window), empty, window)) return false;
      if (!eng.families_equal(eng.multiply(c, s, window), empty, window)) return false;
    }
    return true;
  });
  rec.check(tag + "ray_inverse", [&] {
    for (const auto& tau : taus) {
      Family ray, inv;
      for (const auto& alpha : classes) {
        if (ctx.slope(alpha) != tau) continue;
        ray.emplace(alpha, a.at(alpha));
        auto c = eng.ray_inverse(b, alpha).value;
        if (!eng.ring().equal(c, eng.inverse_coefficient(b, alpha, {SliceMode::le, tau}).value)) return false;
        inv.emplace(alpha, c);
      }
      if (!eng.families_equal(eng.multiply(ray, inv, window), empty, window)) return false;
      if (!eng.families_equal(eng.multiply(inv, ray, window), empty, window)) return false;
    }
    return true;
  });
}

void slices_suite(Recorder& rec, std::uint64_t seed) {
  rings::MatrixRing ring{2};
  for (std::uint64_t k = 0; k < 3; ++k) {
    slices::SliceEngine eng(slices::StabilityContext::plane_default(), ring);
    std::mt19937_64 rng(seed + k);
    auto a = rings::random_family(ring, eng.context(), 5, rng);
    appendix_checks(rec, eng, a, 5, "matrix_seed" + std::to_string(seed + k) + "_");
  }
  slices::SliceEngine twisted(slices::StabilityContext::plane_default(), ring, matrix_twist(ring));
  std::mt19937_64 rng(seed ^ 0x5eedU);
  appendix_checks(rec, twisted, rings::random_family(ring, twisted.context(), 4, rng), 4, "twisted_");
  rings::WordAlgebra words{3, 6};
  slices::SliceEngine free_eng(slices::StabilityContext::plane_default(), words);
  appendix_checks(rec, free_eng, rings::random_family(words, free_eng.context(), 4, rng), 4, "free_algebra_");
}

SkewSeries random_series(std::mt19937_64& rng, Window w, bool with_unit) {
  std::uniform_int_distribution<int> coeff(-3, 3), deg(-2, 3);
  SkewSeries::Terms terms;
  if (with_unit) terms.emplace(FramedClass{}, ScalarValue(1));
  for (int r = 0; r <= w.max_rank; ++r)
    for (int v = 0; v <= w.max_framing; ++v) {
      if (r == 0 && v == 0) continue;
      terms[FramedClass{r, deg(rng), v}] = ScalarValue(coeff(rng)) + ScalarValue(coeff(rng)) * ScalarValue::s();
    }
  return SkewSeries(w, std::move(terms));
}

void qplane_suite(Recorder& rec, std::uint64_t seed, Exec exec) {
  std::mt19937_64 rng(seed);
  const Window w{2, 1};
  for (int g : {0, 1, 2}) {
    QuantumPlane plane(g);
    const std::string tag = "g" + std::to_string(g) + "_";
    auto a = random_series(rng, w, true), b = random_series(rng, w, false), c = random_series(rng, w, true);
    rec.check(tag + "associativity", [&] {
      return plane.multiply(plane.multiply(a, b), c) == plane.multiply(a, plane.multiply(b, c));
    });
    rec.check(tag + "two_sided_inverse", [&] {
      auto inv = plane.inverse(a, exec);
      return plane.multiply(a, inv) == SkewSeries::unit(w) && plane.multiply(inv, a) == SkewSeries::unit(w);
    });
    rec.check(tag + "parallel_matches_serial", [&] {
      return plane.multiply(a, c, Exec::serial) == plane.multiply(a, c, Exec::parallel);
    });
    rec.check(tag + "bracket_antisymmetry", [&] {
      for (const auto& [x, vx] : a.terms())
        for (const auto& [y, vy] : c.terms())
          if (framed_bracket(g, x, y) != -framed_bracket(g, y, x)) return false;
      return true;
    });
  }
}

void motivic_suite(Recorder& rec, Exec exec) {
  const std::vector<BigRational> taus{R(-1, 2), R(0), R(1, 2), R(2, 3), R(1), R(3, 2)};
  for (const auto& c : sample_curves()) {
    const std::string tag = curve_tag(c);
    rec.check(tag + "closed_equals_bruteforce", [&] {
      for (std::int64_t r = 1; r <= 3; ++r)
        for (std::int64_t d = -1; d <= 4; ++d)
          for (const auto& tau : taus)
            for (auto m : {SliceMode::le, SliceMode::ge, SliceMode::lt, SliceMode::gt}) {
              SliceBounds sb{m, tau};
              if (slice_closed(c, {r, d}, sb).value != slice_bruteforce(c, {r, d}, sb, exec).value) return false;
            }
      return true;
    });
    rec.check(tag + "tail_presentation", [&] {
      for (std::int64_t r = 1; r <= 3; ++r)
        for (std::int64_t d = -1; d <= 4; ++d)
          for (const auto& tau : taus)
            if (slice_ge_tail_form(c, {r, d}, tau).value != slice_closed(c, {r, d}, {SliceMode::ge, tau}).value)
              return false;
      return true;
    });
    rec.check(tag + "beta_q_integral", [&] {
      for (std::int64_t r = 1; r <= 3; ++r)
        for (std::int64_t d = -2; d <= 3; ++d)
          if (!is_q_integral(beta(c, {r, d}))) return false;
      return true;
    });
  }
  auto c = Curve::symbolic(1);
  rec.check("inverse_via_qplane_matches_closed_form", [&] {
    QuantumPlane plane(c.genus());
    for (const auto& tau : {R(0), R(1, 2), R(2, 3)}) {
      DegreeWindow w{3, tau + 3};
      SliceBounds gt{SliceMode::gt, tau};
      if (!plane.inverse(u_series(c, gt, w, exec), exec).agrees_with(u_inverse_closed(c, gt, w, exec))) return false;
    }
    return true;
  });
  rec.check("ray_products_match_closed_forms", [&] {
    for (const auto& tau : {R(0), R(1, 2)}) {
      DegreeWindow w{2, tau + 2};
      for (auto m : {SliceMode::ge, SliceMode::gt})
        if (!u_series_from_rays(c, m, tau, w, exec).agrees_with(u_series(c, {m, tau}, w, exec))) return false;
    }
    return true;
  });
}

void wallcross_suite(Recorder& rec, Exec exec) {
  const std::vector<BigRational> taus{R(1, 3), R(3, 4), R(1), R(7, 5), R(3, 2), R(2), R(9, 4)};
  for (int g : {0, 1}) {
    auto c = Curve::symbolic(g);
    for (std::int64_t r : {2, 3}) {
      std::vector<PairQuery> grid;
      for (const auto& tau : taus)
        for (std::int64_t d = -1; d <= floor_int(tau * BigRational(r)) + 1; ++d) grid.push_back({r, d, tau});
      const std::string tag = "g" + std::to_string(g) + "_r" + std::to_string(r) + "_";
      std::vector<ScalarValue> lemma;
      rec.check(tag + "product_equals_lemma", [&] {
        lemma = f_tau_grid(c, grid, PairMethod::lemma, exec);
        return f_tau_grid(c, grid, PairMethod::product, exec) == lemma;
      });
      rec.check(tag + "convolution_equals_lemma", [&] {
        return f_tau_grid(c, grid, PairMethod::convolution, exec) == lemma;
      });
      rec.check(tag + "explicit_equals_lemma_at_generic_tau", [&] {
        for (std::size_t i = 0; i < grid.size(); ++i)
          if (is_generic(grid[i].tau, r, grid[i].d) && f_tau(c, grid[i], PairMethod::explicit_form) != lemma[i])
            return false;
        return true;
      });
      rec.check(tag + "vanishing_outside_support", [&] {
        for (std::size_t i = 0; i < grid.size(); ++i) {
          const auto& q = grid[i];
          bool inside = q.d >= 0 && BigRational(q.d) >= BigRational(r - 1) * q.tau &&
                        BigRational(q.d) <= q.tau * BigRational(r);
          if (!inside && !lemma[i].is_zero()) return false;
        }
        return true;
      });
      rec.check(tag + "q_integral", [&] {
        return std::all_of(lemma.begin(), lemma.end(), [](const ScalarValue& x) { return is_q_integral(x); });
      });
    }
  }
  rec.check("rank_one_route", [] {
    auto c = Curve::symbolic(1);
    for (std::int64_t d = -1; d <= 3; ++d)
      for (const auto& tau : {R(0), R(2), R(5, 2)}) {
        ScalarValue expect = BigRational(d) <= tau ? sym_power(c, d) : ScalarValue(0);
        if (f_tau_product(c, {1, d, tau}) != expect) return false;
      }
    return true;
  });
  rec.check("elliptic_point_counts", [] {
    for (int a = -2; a <= 2; ++a) {
      auto c = Curve::numeric(1, {ScalarValue(a)});
      for (std::int64_t r : {2, 3})
        for (const auto& tau : {R(3, 4), R(7, 4)})
          for (auto d : support_range(r, tau)) {
            if (!is_generic(tau, r, d)) continue;
            BigRational n = scalar_eval(pairs_moduli_motive(c, {r, d, tau}), {{"q", BigRational(2)}});
            if (!is_integer(n) || n < 0) return false;
          }
    }
    return true;
  });
}

void nazeta_suite(Recorder& rec, Exec exec) {
  for (int g : {0, 1, 2}) {
    auto c = Curve::symbolic(g);
    const std::string tag = "g" + std::to_string(g) + "_";
    rec.check(tag + "rank_one_is_curve_zeta", [&] { return zeta_r_closed(c, 1) == zeta(c); });
    for (std::int64_t r : {2, 3}) {
      const std::string rt = tag + "r" + std::to_string(r) + "_";
      rec.check(rt + "rationality", [&] { return numerator_P(c, r).polynomial_degree() == 2 * g; });
      rec.check(rt + "functional_equation", [&] { return functional_equation_check(c, r); });
      rec.check(rt + "uniformity", [&] { return uniformity_check(c, r); });
      if (g <= 1)
        rec.check(rt + "series_matches_closed_form", [&] {
          auto series = zeta_r_series(c, r, 4, exec);
          auto closed = zeta_r_closed(c, r);
          for (std::size_t k = 0; k < series.size(); ++k)
            if (closed.coefficient(static_cast<std::int64_t>(k)) != series[k]) return false;
          return true;
        });
    }
    for (std::int64_t r : {2, 3, 4})
      rec.check(tag + "counting_miracle_r" + std::to_string(r), [&] { return counting_miracle_check(c, r); });
  }
  rec.check("numeric_rank4_functional_equation", [] {
    return functional_equation_check(Curve::numeric(1, {ScalarValue(-1)}), 4);
  });
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all",    "scalar", "curve",     "slices",
                                              "motivic", "qplane", "wallcross", "nazeta"};
  return names;
}

bool is_suite(std::string_view name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

Report run(std::string_view selector, std::uint64_t seed, Exec exec, std::ostream* progress) {
  if (!is_suite(selector)) throw DomainError("unknown suite '" + std::string(selector) + "'");
  Report report;
  auto want = [&](std::string_view s) { return selector == "all" || selector == s; };
  auto recorder = [&](const char* s) { return Recorder(s, report, progress); };
  if (want("scalar")) {
    auto rec = recorder("scalar");
    scalar_suite(rec, seed);
  }
  if (want("curve")) {
    auto rec = recorder("curve");
    curve_suite(rec);
  }
  if (want("slices")) {
    auto rec = recorder("slices");
    slices_suite(rec, seed);
  }
  if (want("qplane")) {
    auto rec = recorder("qplane");
    qplane_suite(rec, seed, exec);
  }
  if (want("motivic")) {
    auto rec = recorder("motivic");
    motivic_suite(rec, exec);
  }
  if (want("wallcross")) {
    auto rec = recorder("wallcross");
    wallcross_suite(rec, exec);
  }
  if (want("nazeta")) {
    auto rec = recorder("nazeta");
    nazeta_suite(rec, exec);
  }
  return report;
}

Report appendix_identities(std::uint64_t seed, std::int64_t window) {
  Report report;
  Recorder rec("slices", report, nullptr);
  rings::MatrixRing ring{2};
  slices::SliceEngine eng(slices::StabilityContext::plane_default(), ring);
  std::mt19937_64 rng(seed);
  appendix_checks(rec, eng, rings::random_family(ring, eng.context(), window, rng), window,
                  "matrix_seed" + std::to_string(seed) + "_");
  return report;
}

bool all_passed(const Report& report) {
  return std::all_of(report.begin(), report.end(), [](const Check& c) { return c.passed; });
}

}  // namespace pairzeta::verify
