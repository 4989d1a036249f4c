#include "doctest.h"

#include "pairzeta/errors.hpp"
#include "pairzeta/motivic.hpp"
#include "pairzeta/wallcross.hpp"

using namespace pairzeta;

namespace {

BigRational R(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

ScalarValue S(const char* text) { return parse_scalar(text); }

// Generic samples and walls at a given rank.
std::vector<BigRational> tau_samples(std::int64_t r) {
  std::vector<BigRational> out{R(-1, 2), R(0), R(1, 3), R(3, 4), R(1), R(7, 5), R(2), R(9, 4)};
  if (r == 3) out.push_back(R(3, 2));
  return out;
}

}  // namespace

TEST_CASE("genericity") {
  CHECK(is_generic(R(7, 4), 2, 3));
  CHECK_FALSE(is_generic(R(2), 2, 4));
  CHECK_FALSE(is_generic(R(3, 2), 3, 1));
  CHECK(is_generic(R(3, 2), 2, 1));
  CHECK_FALSE(is_generic(R(1), 2, 5));
  CHECK(is_generic(R(5, 3), 3, 4));
}

TEST_CASE("f_infinity and the rank-one route") {
  auto c0 = Curve::symbolic(0), c1 = Curve::symbolic(1);
  CHECK(f_infinity_coeff(c1, 0) == ScalarValue(1));
  CHECK(f_infinity_coeff(c0, 1) == S("1+q"));
  CHECK(f_infinity_coeff(c0, -1) == ScalarValue(0));
  for (const auto& c : {c0, c1})
    for (std::int64_t d = -1; d <= 4; ++d)
      for (const auto& tau : {R(-1), R(0), R(3, 2), R(3)}) {
        ScalarValue expect = BigRational(d) <= tau ? sym_power(c, d) : ScalarValue(0);
        CHECK(f_tau_product(c, {1, d, tau}) == expect);
      }
  CHECK(f_tau_product(c0, {1, 2, R(3)}) == S("1+q+q^2"));
}

TEST_CASE("support ranges") {
  CHECK(support_range(2, R(7, 4)) == std::vector<std::int64_t>{2, 3});
  CHECK(support_range(1, R(2)) == std::vector<std::int64_t>{0, 1, 2});
  CHECK(support_range(3, R(-1, 2)).empty());
  CHECK(support_range(1, R(-1)).empty());
  CHECK(support_range(3, R(5, 4)) == std::vector<std::int64_t>{3});
}

TEST_CASE("hand-expanded rank-two convolution") {
  // for r = 2 the third sum is empty
  auto c = Curve::symbolic(1);
  const BigRational tau = R(7, 4);
  for (std::int64_t d : {2, 3}) {
    ScalarValue expect(0);
    for (std::int64_t e = 0; e <= d; ++e) {
      expect += sym_power(c, e) * slice_closed(c, {1, d - e}, {SliceMode::ge, tau}).value * ScalarValue::q_power(d - 2 * e);
      expect += sym_power(c, e) * inverse_closed(c, {1, d - e}, {SliceMode::gt, tau}).value *
                ScalarValue::q_power(e);
    }
    CHECK(f_tau_convolution(c, {2, d, tau}) == expect);
  }
}

TEST_CASE("route agreement") {
  for (int g : {0, 1}) {
    auto c = Curve::symbolic(g);
    for (std::int64_t r : {2, 3})
      for (const auto& tau : tau_samples(r)) {
        const std::int64_t lo = -1, hi = floor_int(tau * BigRational(r)) + 1;
        for (std::int64_t d = lo; d <= hi; ++d) {
          PairQuery q{r, d, tau};
          CAPTURE(g);
          CAPTURE(r);
          CAPTURE(d);
          CAPTURE(to_string(tau));
          ScalarValue lemma = f_tau_lemma(c, q);
          CHECK(f_tau_convolution(c, q) == lemma);
          CHECK(f_tau_product(c, q) == lemma);
          CHECK(is_q_integral(lemma));
          if (is_generic(tau, r, d)) {
            ScalarValue m = pairs_moduli_motive(c, q);
            CHECK(motive_to_f(c, r, m) == lemma);
            CHECK(m * ScalarValue::q_power((1 - g) * r * (r - 1) / 2) == lemma);
            CHECK(is_q_integral(m));
          } else {
            CHECK_THROWS_AS(pairs_moduli_motive(c, q), NonGenericTauError);
          }
        }
      }
  }
}

TEST_CASE("route agreement for a numeric genus-two curve") {
  auto c = Curve::numeric(2, {S("q-2"), ScalarValue(3)});
  for (const auto& tau : {R(5, 4), R(2), R(5, 2)})
    for (std::int64_t d = 1; d <= 5; ++d) {
      PairQuery q{2, d, tau};
      ScalarValue lemma = f_tau_lemma(c, q);
      CHECK(f_tau_convolution(c, q) == lemma);
      CHECK(f_tau_product(c, q) == lemma);
    }
}

TEST_CASE("vanishing outside the support") {
  for (int g : {0, 1}) {
    auto c = Curve::symbolic(g);
    for (std::int64_t r : {2, 3})
      for (const auto& tau : tau_samples(r))
        for (std::int64_t d = -3; d <= floor_int(tau * BigRational(r)) + 3; ++d) {
          // closed support: max(0, (r-1) tau) <= d <= r tau
          bool inside = d >= 0 && BigRational(d) >= BigRational(r - 1) * tau && BigRational(d) <= tau * BigRational(r);
          if (inside) continue;
          PairQuery q{r, d, tau};
          CAPTURE(d);
          CAPTURE(to_string(tau));
          for (auto m : applicable_methods(q)) CHECK(f_tau(c, q, m).is_zero());
        }
  }
}

TEST_CASE("strict support and its boundary") {
  auto c = Curve::symbolic(1);
  // d = (r-1) tau lies outside the strict range yet carries a nonzero invariant
  PairQuery q{2, 1, R(1)};
  CHECK(support_range(2, R(1)) == std::vector<std::int64_t>{2});
  CHECK(f_tau_lemma(c, q) == ScalarValue::q() * b_r(c, 1));
  CHECK(f_tau_product(c, q) == f_tau_lemma(c, q));
}

TEST_CASE("low-rank closed forms") {
  for (int g : {0, 1, 2}) {
    auto c = Curve::symbolic(g);
    for (const auto& tau : {R(1, 3), R(3, 4), R(7, 4), R(5, 2)})
      for (std::int64_t d = 0; d <= floor_int(2 * tau); ++d) {
        if (!is_generic(tau, 2, d)) continue;
        CHECK(rank2_motive(c, d, tau) == pairs_moduli_motive(c, {2, d, tau}));
      }
    for (const auto& tau : {R(1, 3), R(3, 4), R(4, 3), R(7, 4)})
      for (std::int64_t d = 0; d <= floor_int(3 * tau); ++d) {
        if (!is_generic(tau, 3, d)) continue;
        CAPTURE(g);
        CAPTURE(d);
        CAPTURE(to_string(tau));
        CHECK(rank3_motive(c, d, tau) == pairs_moduli_motive(c, {3, d, tau}));
      }
  }
}

TEST_CASE("elliptic point counts") {
  // P(t) = 1 + a t + q t^2 at q = 2 with |a| <= 2 sqrt 2
  for (int a = -2; a <= 2; ++a) {
    auto c = Curve::numeric(1, {ScalarValue(a)});
    for (std::int64_t r : {2, 3})
      for (const auto& tau : {R(3, 4), R(5, 4), R(7, 4), R(7, 3)})
        for (auto d : support_range(r, tau)) {
          if (!is_generic(tau, r, d)) continue;
          ScalarValue m = pairs_moduli_motive(c, {r, d, tau});
          BigRational n = scalar_eval(m, {{"q", BigRational(2)}});
          CAPTURE(a);
          CAPTURE(d);
          CHECK(is_integer(n));
          CHECK(n >= 0);
        }
  }
}

TEST_CASE("grid evaluation is deterministic across schedules") {
  auto c = Curve::symbolic(1);
  std::vector<PairQuery> qs;
  for (const auto& tau : {R(3, 4), R(7, 4), R(2)})
    for (std::int64_t d = 0; d <= 4; ++d) qs.push_back({2, d, tau});
  for (auto m : {PairMethod::lemma, PairMethod::product}) {
    CHECK(f_tau_grid(c, qs, m, Exec::serial) == f_tau_grid(c, qs, m, Exec::parallel));
  }
  CHECK(f_tau_product(c, {3, 3, R(5, 4)}, Exec::parallel) == f_tau_product(c, {3, 3, R(5, 4)}, Exec::serial));
}

TEST_CASE("method names and domains") {
  for (auto m : {PairMethod::product, PairMethod::convolution, PairMethod::lemma, PairMethod::explicit_form})
    CHECK(parse_pair_method(to_string(m)) == m);
  CHECK_FALSE(parse_pair_method("fourier").has_value());
  auto c = Curve::symbolic(0);
  CHECK_THROWS_AS(f_tau_lemma(c, {1, 0, R(1)}), DomainError);
  CHECK_THROWS_AS(f_tau_convolution(c, {1, 0, R(1)}), DomainError);
  CHECK(applicable_methods({2, 3, R(7, 4)}).size() == 4);
  CHECK(applicable_methods({2, 3, R(2)}).size() == 3);
  CHECK(applicable_methods({1, 0, R(2)}).size() == 1);
}
