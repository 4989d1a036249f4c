#include "doctest.h"

#include "pairzeta/errors.hpp"
#include "pairzeta/motivic.hpp"

using namespace pairzeta;

namespace {

ScalarValue S(const char* text) { return parse_scalar(text); }

std::vector<Curve> curves() { return {Curve::symbolic(0), Curve::symbolic(1), Curve::numeric(2, {S("q-2"), S("3")})}; }

std::vector<BigRational> taus() {
  return {make_rational(-1, 2), make_rational(0, 1), make_rational(1, 3), make_rational(3, 4), make_rational(1, 1),
          make_rational(5, 3), make_rational(2, 1)};
}

std::vector<SliceBounds> all_bounds() {
  std::vector<SliceBounds> out;
  for (const auto& tau : taus())
    for (auto m : {SliceMode::le, SliceMode::ge, SliceMode::lt, SliceMode::gt}) out.push_back({m, tau});
  out.push_back({SliceMode::interval, make_rational(3, 2), make_rational(1, 2)});
  out.push_back({SliceMode::interval, make_rational(1, 1), make_rational(1, 1)});
  out.push_back({SliceMode::interval, make_rational(2, 1), make_rational(-1, 3)});
  out.push_back({SliceMode::interval, make_rational(1, 2), ExtendedRational::minus_infinity()});
  return out;
}

std::string describe(const SliceBounds& b) {
  return slices::to_string(b.mode) + " " + b.tau.to_string() + " " + b.lower.to_string();
}

}  // namespace

TEST_CASE("pairings on Chern classes") {
  CHECK(chi(1, {4, 7}) == 7);
  CHECK(chi(3, {2, 1}) == 1 - 4);
  CHECK(chi2(2, {1, 0}, {2, 3}) == 3 - 0 - 2);
  CHECK(bracket({1, 0}, {1, 1}) == 2);
  CHECK(bracket({3, 2}, {3, 2}) == 0);
  CHECK(chi2(2, {1, 2}, {2, 1}) - chi2(2, {2, 1}, {1, 2}) == bracket({1, 2}, {2, 1}));
}

TEST_CASE("Zagier beta") {
  for (const auto& c : curves()) {
    CAPTURE(c.description());
    for (int d = -3; d <= 3; ++d) CHECK(beta(c, {1, d}) == b_r(c, 1));
    ScalarValue b1 = b_r(c, 1);
    CHECK(beta(c, {2, 1}) == b_r(c, 2) + ScalarValue::q() * b1 * b1 / (ScalarValue(1) - ScalarValue::q_power(2)));
    CHECK(beta(c, {2, 0}) == b_r(c, 2) + b1 * b1 / (ScalarValue(1) - ScalarValue::q_power(2)));
    for (int r = 1; r <= 3; ++r)
      for (int d : {-4, -1, 0, 2, 5}) {
        CHECK(beta(c, {r, d}) == beta(c, {r, d + r}));
        CHECK(is_q_integral(beta(c, {r, d})));
      }
  }
  CHECK_THROWS_AS(beta(Curve::symbolic(0), {0, 1}), DomainError);
}

TEST_CASE("chain sums at the class slope reduce to beta") {
  // a decreasing chain with every slope on one side of mu(alpha) has a single part
  for (const auto& c : curves()) {
    for (std::int64_t r = 1; r <= 3; ++r) {
      ChernClass a{r, 1};
      CHECK(slice_bruteforce(c, a, {SliceMode::le, a.slope()}).value == beta(c, a));
      CHECK(slice_bruteforce(c, a, {SliceMode::ge, a.slope()}).value == beta(c, a));
    }
  }
}

TEST_CASE("slice at the class slope is beta") {
  for (const auto& c : curves())
    for (std::int64_t r = 1; r <= 4; ++r)
      for (std::int64_t d : {-3, 0, 1, 2, 7}) {
        ChernClass a{r, d};
        CHECK(slice_closed(c, a, {SliceMode::ge, a.slope()}).value == beta(c, a));
        CHECK(slice_closed(c, a, {SliceMode::le, a.slope()}).value == beta(c, a));
        CHECK(slice_closed(c, a, {SliceMode::interval, a.slope(), a.slope()}).value == beta(c, a));
      }
}

TEST_CASE("closed forms, partial sums and chain sums agree") {
  for (const auto& c : curves()) {
    CAPTURE(c.description());
    for (const auto& bounds : all_bounds()) {
      CAPTURE(describe(bounds));
      for (std::int64_t r = 1; r <= 3; ++r)
        for (std::int64_t d = -2; d <= 6; ++d) {
          ChernClass a{r, d};
          CAPTURE(a.to_string());
          auto closed = slice_closed(c, a, bounds);
          auto partial = slice_by_partial_sums(c, a, bounds);
          CHECK(closed.in_support() == slices::in_slice(bounds, a.slope()));
          CHECK(closed.value == partial.value);
          CHECK(closed.value == slice_bruteforce(c, a, bounds).value);
          CHECK(is_q_integral(closed.value));
          if (bounds.mode != SliceMode::interval) {
            auto inv = inverse_closed(c, a, bounds);
            CHECK(inv.value == inverse_by_partial_sums(c, a, bounds).value);
            CHECK(is_q_integral(inv.value));
          }
        }
    }
  }
}

TEST_CASE("hand examples") {
  Curve c = Curve::symbolic(1);
  BigRational tau = make_rational(3, 4);
  ChernClass a{2, 2};
  CHECK(slice_closed(c, a, {SliceMode::ge, tau}).value == slice_bruteforce(c, a, {SliceMode::ge, tau}).value);
  // rank 1 above tau: only k = 1, so c = -b_1
  CHECK(inverse_closed(c, {1, 3}, {SliceMode::gt, make_rational(1, 2)}).value == -b_r(c, 1));
  auto empty = slice_bruteforce(c, {2, 1}, {SliceMode::ge, make_rational(1, 1)});
  CHECK_FALSE(empty.in_support());
  CHECK(empty.value == ScalarValue(0));
  CHECK_THROWS_AS(slice_closed(c, {1, 0}, {SliceMode::ge, ExtendedRational::minus_infinity()}), DomainError);
}

TEST_CASE("tail presentation equals the prefix presentation") {
  for (const auto& c : curves())
    for (const auto& tau : taus())
      for (std::int64_t r = 1; r <= 4; ++r)
        for (std::int64_t d = -2; d <= 8; ++d) {
          ChernClass a{r, d};
          CHECK(slice_ge_tail_form(c, a, tau).value == slice_closed(c, a, {SliceMode::ge, tau}).value);
        }
}

TEST_CASE("memo hits equal recomputation") {
  Curve c = Curve::symbolic(1);
  SliceBounds b{SliceMode::gt, make_rational(1, 3)};
  ScalarValue first = slice_closed(c, {3, 2}, b).value;
  std::size_t cached = c.memo().size();
  CHECK(slice_closed(c, {3, 2}, b).value == first);
  CHECK(c.memo().size() == cached);
  CHECK(slice_closed(Curve::symbolic(1), {3, 2}, b).value == first);
}

TEST_CASE("u-series shapes") {
  Curve c = Curve::symbolic(2);
  BigRational tau = make_rational(1, 2);
  auto u = u_series(c, {SliceMode::ge, tau}, DegreeWindow{1, 4});
  for (const auto& [k, v] : u.terms()) {
    if (k.is_unit()) continue;
    CHECK(k.r == 1);
    CHECK(k.d >= 1);
    CHECK(v == ScalarValue::neg_s_power(k.d + 1 - 2) * b_r(c, 1));
  }
  CHECK(u.knows({1, 4, 0}));
  CHECK_FALSE(u.knows({1, 5, 0}));
  CHECK(ray_series(c, make_rational(1, 3), 2) == SkewSeries::unit(Window{2, 0}));
  CHECK_THROWS_AS(u_series(c, {SliceMode::le, tau}, DegreeWindow{2, 2}), DomainError);
}

TEST_CASE("inverse series are two-sided inverses") {
  for (const auto& c : curves()) {
    QuantumPlane plane(c.genus());
    for (const auto& tau : {make_rational(-1, 2), make_rational(1, 3), make_rational(1, 1)}) {
      for (auto mode : {SliceMode::ge, SliceMode::gt}) {
        DegreeWindow w{3, tau + 3};
        SliceBounds b{mode, tau};
        auto u = u_series(c, b, w), inv = u_inverse_closed(c, b, w);
        auto one = SkewSeries::unit(Window{3, 0});
        CHECK(plane.multiply(u, inv).agrees_with(one));
        CHECK(plane.multiply(inv, u).agrees_with(one));
        CHECK(plane.inverse(u).agrees_with(inv));
        CHECK(plane.multiply(u, inv).knows({3, floor_int(tau * 3) + 2, 0}));
      }
    }
  }
}

TEST_CASE("inverses of upper and interval slices, by direct convolution") {
  // series bounded above in degree: convolve coefficientwise over the finite range
  for (const auto& c : curves()) {
    QuantumPlane plane(c.genus());
    for (const auto& bounds : all_bounds()) {
      if (bounds.mode == SliceMode::ge || bounds.mode == SliceMode::gt) continue;
      CAPTURE(describe(bounds));
      auto slice = [&](ChernClass a) { return slice_closed(c, a, bounds).value; };
      auto inverse = [&](ChernClass a) { return inverse_closed(c, a, bounds).value; };
      for (std::int64_t r = 2; r <= 3; ++r)
        for (std::int64_t d = -2; d <= 4; ++d) {
          if (!slices::in_slice(bounds, make_rational(d, r))) continue;
          for (int order = 0; order < 2; ++order) {
            ScalarValue total = slice({r, d}) + inverse({r, d});
            for (std::int64_t r1 = 1; r1 < r; ++r1) {
              // both factors need slopes in the slice, which bounds d1 on both sides
              for (std::int64_t d1 = d - 3 * r - 10; d1 <= d + 3 * r + 10; ++d1) {
                ChernClass x{r1, d1}, y{r - r1, d - d1};
                if (!slices::in_slice(bounds, x.slope()) || !slices::in_slice(bounds, y.slope())) continue;
                ScalarValue fx = order == 0 ? slice(x) : inverse(x), fy = order == 0 ? inverse(y) : slice(y);
                total = total + fx * fy * ScalarValue::q_power(x.r * y.d - y.r * x.d);
              }
            }
            CHECK(total == ScalarValue(0));
          }
        }
    }
  }
}

TEST_CASE("ray products reproduce the closed u-series") {
  for (const auto& c : curves()) {
    for (const auto& tau : {make_rational(0, 1), make_rational(1, 2), make_rational(2, 3)}) {
      for (auto mode : {SliceMode::ge, SliceMode::gt}) {
        DegreeWindow w{3, tau + 2};
        auto closed = u_series(c, {mode, tau}, w);
        auto rays = u_series_from_rays(c, mode, tau, w);
        CHECK(rays.agrees_with(closed));
        CHECK(rays.knows({3, u_min_degree({mode, tau}, 3) + 1, 0}));
        CHECK(rays == u_series_from_rays(c, mode, tau, w, Exec::parallel));
      }
    }
  }
}

TEST_CASE("ray inverse and sliced factorization") {
  for (const auto& c : curves()) {
    QuantumPlane plane(c.genus());
    for (const auto& tau : {make_rational(0, 1), make_rational(1, 2), make_rational(2, 3)}) {
      auto ray = ray_series(c, tau, 3);
      auto inv = plane.inverse(ray);
      for (std::int64_t r = 1; r <= 3; ++r) {
        BigRational d = tau * BigRational(r);
        if (!is_integer(d)) continue;
        ChernClass a{r, floor_int(d)};
        ScalarValue twisted = ScalarValue::neg_s_power(chi(c.genus(), a));
        CHECK(inv.coefficient({a.r, a.d, 0}) == twisted * inverse_closed(c, a, {SliceMode::le, tau}).value);
        CHECK(inv.coefficient({a.r, a.d, 0}) == twisted * inverse_closed(c, a, {SliceMode::ge, tau}).value);
      }
      // u_{>=tau'} = u_{>tau} o u_{[tau', tau]}
      BigRational low = tau - make_rational(1, 1);
      DegreeWindow w{3, tau + 2};
      auto lhs = u_series(c, {SliceMode::ge, low}, w);
      auto rhs = plane.multiply(u_series(c, {SliceMode::gt, tau}, w), u_series(c, {SliceMode::interval, tau, low}, w));
      CHECK(lhs.agrees_with(rhs));
      CHECK(rhs.knows({3, u_min_degree({SliceMode::ge, low}, 3) + 2, 0}));
      // u_{>=tau} = u_{>tau} o u_tau
      CHECK(u_series(c, {SliceMode::ge, tau}, w).agrees_with(plane.multiply(u_series(c, {SliceMode::gt, tau}, w), ray)));
    }
  }
}
