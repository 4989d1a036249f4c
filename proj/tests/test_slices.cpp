#include "doctest.h"

#include <random>

#include "pairzeta/rings.hpp"
#include "pairzeta/slices.hpp"

using namespace pairzeta;
using namespace pairzeta::slices;
using pairzeta::rings::Matrix;
using pairzeta::rings::MatrixRing;
using pairzeta::rings::WordAlgebra;

namespace {

constexpr std::int64_t kWindow = 5;

std::vector<BigRational> sample_taus() {
  return {make_rational(0, 1), make_rational(1, 4), make_rational(1, 3), make_rational(1, 2), make_rational(2, 3),
          make_rational(1, 1)};
}

std::vector<SliceBounds> sample_bounds() {
  std::vector<SliceBounds> out;
  for (const auto& tau : sample_taus()) {
    for (auto m : {SliceMode::le, SliceMode::ge, SliceMode::lt, SliceMode::gt}) out.push_back({m, tau});
  }
  out.push_back({SliceMode::interval, make_rational(2, 3), make_rational(1, 3)});
  out.push_back({SliceMode::interval, make_rational(1, 2), make_rational(1, 2)});
  out.push_back({SliceMode::interval, make_rational(1, 2), make_rational(0, 1)});
  out.push_back({SliceMode::interval, make_rational(1, 1), make_rational(1, 4)});
  return out;
}

std::string describe(const SliceBounds& b) {
  return to_string(b.mode) + " tau=" + b.tau.to_string() + " lower=" + b.lower.to_string();
}

// 2^{a_1 b_2 - a_2 b_1} as a central scalar matrix.
SliceEngine<MatrixRing>::Twist matrix_twist(const MatrixRing& ring) {
  return [ring](const LatticeClass& a, const LatticeClass& b) {
    std::int64_t e = a[0] * b[1] - a[1] * b[0];
    BigRational x = 1;
    for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) x *= 2;
    if (e < 0) x = 1 / x;
    return ring.scalar(x);
  };
}

template <class Ring>
using Fam = typename SliceEngine<Ring>::Family;

template <class Ring>
Fam<Ring> slice_family(const SliceEngine<Ring>& eng, const Fam<Ring>& a, const SliceBounds& bounds) {
  Fam<Ring> out;
  for (const auto& alpha : classes_up_to(eng.context(), kWindow)) {
    auto v = eng.slice(a, alpha, bounds);
    if (v.in_support()) out.emplace(alpha, v.value);
  }
  return out;
}

template <class Ring>
Fam<Ring> inverse_family(const SliceEngine<Ring>& eng, const Fam<Ring>& b, const SliceBounds& bounds) {
  Fam<Ring> out;
  for (const auto& alpha : classes_up_to(eng.context(), kWindow)) {
    auto v = eng.inverse_coefficient(b, alpha, bounds);
    if (v.in_support()) out.emplace(alpha, v.value);
  }
  return out;
}

template <class Ring>
Fam<Ring> b_family(const SliceEngine<Ring>& eng, const Fam<Ring>& a) {
  Fam<Ring> out;
  for (const auto& alpha : classes_up_to(eng.context(), kWindow)) out.emplace(alpha, eng.b_from_a(a, alpha));
  return out;
}

template <class Ring>
void check_all_identities(const SliceEngine<Ring>& eng, const Fam<Ring>& a) {
  const auto& ctx = eng.context();
  const Fam<Ring> b = b_family(eng, a);
  const Fam<Ring> empty;
  for (const auto& alpha : classes_up_to(ctx, kWindow)) {
    CAPTURE(alpha[0]);
    CAPTURE(alpha[1]);
    CHECK(eng.ring().equal(eng.a_from_b(b, alpha), a.at(alpha)));
  }
  for (const auto& bounds : sample_bounds()) {
    CAPTURE(describe(bounds));
    for (const auto& alpha : classes_up_to(ctx, kWindow)) {
      auto lhs = eng.slice(a, alpha, bounds);
      auto rhs = eng.slice_via_b(b, alpha, bounds);
      CHECK(lhs.in_support() == rhs.in_support());
      CHECK(eng.ring().equal(lhs.value, rhs.value));
    }
    Fam<Ring> s = slice_family(eng, a, bounds);
    Fam<Ring> c = inverse_family(eng, b, bounds);
    CHECK(eng.families_equal(eng.multiply(s, c, kWindow), empty, kWindow));
    CHECK(eng.families_equal(eng.multiply(c, s, kWindow), empty, kWindow));
  }
  for (const auto& tau : sample_taus()) {
    Fam<Ring> ge = slice_family(eng, a, {SliceMode::ge, tau});
    Fam<Ring> lt = slice_family(eng, a, {SliceMode::lt, tau});
    CHECK(eng.families_equal(eng.multiply(ge, lt, kWindow), b, kWindow));
  }
}

}  // namespace

TEST_CASE("ordered partitions") {
  StabilityContext line({0}, {1});
  auto parts = ordered_partitions(line, {3});
  CHECK(parts == std::vector<Chain>{{{1}, {1}, {1}}, {{1}, {2}}, {{2}, {1}}, {{3}}});
  CHECK(compositions(3) == std::vector<std::vector<int>>{{1, 1, 1}, {1, 2}, {2, 1}, {3}});

  auto ctx = StabilityContext::plane_default();
  auto two = ordered_partitions(ctx, {1, 1});
  CHECK(two.size() == 3);
  CHECK(std::find(two.begin(), two.end(), Chain{{1, 0}, {0, 1}}) != two.end());
  CHECK(std::find(two.begin(), two.end(), Chain{{0, 1}, {1, 0}}) != two.end());
  CHECK(std::find(two.begin(), two.end(), Chain{{1, 1}}) != two.end());

  // decreasing-slope chains counted against a direct filter of the full list
  auto all = ordered_partitions(ctx, {3, 2});
  std::size_t manual = 0;
  for (const auto& c : all) {
    bool ok = true;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) ok = ok && ctx.slope(c[i]) > ctx.slope(c[i + 1]);
    manual += ok;
  }
  auto filtered = ordered_partitions(ctx, {3, 2}, [&](const Chain& c) {
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
      if (!(ctx.slope(c[i]) > ctx.slope(c[i + 1]))) return false;
    return true;
  });
  CHECK(filtered.size() == manual);
  CHECK(manual < all.size());
  CHECK_THROWS(ordered_partitions(ctx, {0, 0}));
}

TEST_CASE("slice mode names") {
  for (auto m : {SliceMode::le, SliceMode::ge, SliceMode::lt, SliceMode::gt, SliceMode::interval})
    CHECK(parse_slice_mode(to_string(m)) == m);
  CHECK_FALSE(parse_slice_mode("leq").has_value());
}

TEST_CASE("small hand cases") {
  MatrixRing ring{2};
  SliceEngine eng(StabilityContext::plane_default(), ring);
  std::mt19937_64 rng(3);
  auto a = rings::random_family(ring, eng.context(), 2, rng);
  // (1,0) is minimal: nothing to decompose
  CHECK(eng.b_from_a(a, {1, 0}) == a.at({1, 0}));
  CHECK(eng.a_from_b(a, {1, 0}) == a.at({1, 0}));
  CHECK(eng.inverse_coefficient(a, {1, 0}, {SliceMode::le, make_rational(1, 1)}).value == ring.neg(a.at({1, 0})));
  // (1,1) = (0,1) + (1,0) is the only decreasing split
  Matrix expected = ring.add(a.at({1, 1}), ring.mul(a.at({0, 1}), a.at({1, 0})));
  CHECK(eng.b_from_a(a, {1, 1}) == expected);
  // and a_from_b subtracts the single correction term with the prefix slope above 1/2
  Matrix back = ring.add(a.at({1, 1}), ring.neg(ring.mul(a.at({0, 1}), a.at({1, 0}))));
  CHECK(eng.a_from_b(a, {1, 1}) == back);

  // only one class nonzero: b = a there
  Fam<MatrixRing> sparse;
  for (const auto& alpha : classes_up_to(eng.context(), 3)) sparse.emplace(alpha, ring.zero());
  sparse[{1, 2}] = a.at({1, 1});
  CHECK(eng.b_from_a(sparse, {1, 2}) == a.at({1, 1}));
}

TEST_CASE("unconstrained and empty slices") {
  MatrixRing ring{2};
  SliceEngine eng(StabilityContext::plane_default(), ring);
  std::mt19937_64 rng(8);
  auto a = rings::random_family(ring, eng.context(), kWindow, rng);
  auto inf = ExtendedRational::infinity(), minf = ExtendedRational::minus_infinity();
  for (const auto& alpha : classes_up_to(eng.context(), 4)) {
    Matrix b = eng.b_from_a(a, alpha);
    CHECK(eng.slice(a, alpha, {SliceMode::le, inf}).value == b);
    CHECK(eng.slice(a, alpha, {SliceMode::ge, minf}).value == b);
    // every slope is at most 1, so <= 1 is unconstrained as well
    CHECK(eng.slice(a, alpha, {SliceMode::le, BigRational(1)}).value == b);
    CHECK(eng.slice(a, alpha, {SliceMode::interval, inf, minf}).value == eng.slice(a, alpha, {SliceMode::le, inf}).value);
    CHECK(eng.slice_via_b(a, alpha, {SliceMode::interval, make_rational(1, 2), minf}).value ==
          eng.slice_via_b(a, alpha, {SliceMode::le, make_rational(1, 2)}).value);
    auto empty = eng.slice(a, alpha, {SliceMode::interval, make_rational(1, 3), make_rational(2, 3)});
    CHECK(empty.value == ring.zero());
    CHECK_FALSE(empty.in_support());
  }
  auto off = eng.slice(a, {0, 2}, {SliceMode::le, make_rational(1, 2)});
  CHECK_FALSE(off.in_support());
  CHECK(off.value == ring.zero());
}

TEST_CASE("matrix families are genuinely noncommutative") {
  MatrixRing ring{2};
  auto ctx = StabilityContext::plane_default();
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    std::mt19937_64 rng(seed);
    auto a = rings::random_family(ring, ctx, kWindow, rng);
    bool found = false;
    for (const auto& [x, vx] : a)
      for (const auto& [y, vy] : a) found = found || ring.mul(vx, vy) != ring.mul(vy, vx);
    CHECK(found);
  }
}

TEST_CASE("slice identities on random matrix families") {
  MatrixRing ring{2};
  SliceEngine eng(StabilityContext::plane_default(), ring);
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    CAPTURE(seed);
    std::mt19937_64 rng(seed);
    check_all_identities(eng, rings::random_family(ring, eng.context(), kWindow, rng));
  }
}

TEST_CASE("slice identities with a twisted product") {
  MatrixRing ring{2};
  SliceEngine eng(StabilityContext::plane_default(), ring, matrix_twist(ring));
  std::mt19937_64 rng(17);
  check_all_identities(eng, rings::random_family(ring, eng.context(), kWindow, rng));
}

TEST_CASE("slice identities in the free algebra") {
  WordAlgebra ring{3, 6};
  SliceEngine eng(StabilityContext::plane_default(), ring);
  std::mt19937_64 rng(23);
  check_all_identities(eng, rings::random_family(ring, eng.context(), kWindow, rng));
}

TEST_CASE("ray inverse") {
  MatrixRing ring{2};
  SliceEngine eng(StabilityContext::plane_default(), ring);
  std::mt19937_64 rng(5);
  auto a = rings::random_family(ring, eng.context(), kWindow, rng);
  auto b = b_family(eng, a);
  for (const auto& tau : sample_taus()) {
    CAPTURE(tau.get_str());
    Fam<MatrixRing> ray, inv;
    for (const auto& alpha : classes_up_to(eng.context(), kWindow)) {
      if (eng.context().slope(alpha) != tau) continue;
      ray.emplace(alpha, a.at(alpha));
      auto c = eng.ray_inverse(b, alpha).value;
      CHECK(c == eng.inverse_coefficient(b, alpha, {SliceMode::le, tau}).value);
      CHECK(c == eng.inverse_coefficient(b, alpha, {SliceMode::ge, tau}).value);
      inv.emplace(alpha, c);
    }
    Fam<MatrixRing> empty;
    CHECK(eng.families_equal(eng.multiply(ray, inv, kWindow), empty, kWindow));
    CHECK(eng.families_equal(eng.multiply(inv, ray, kWindow), empty, kWindow));
  }
}

TEST_CASE("parallel chain sums match serial ones") {
  MatrixRing ring{3};
  SliceEngine eng(StabilityContext::plane_default(), ring);
  std::mt19937_64 rng(31);
  auto a = rings::random_family(ring, eng.context(), kWindow, rng);
  for (const auto& alpha : classes_up_to(eng.context(), kWindow)) {
    CHECK(eng.b_from_a(a, alpha, Exec::serial) == eng.b_from_a(a, alpha, Exec::parallel));
    SliceBounds bounds{SliceMode::ge, make_rational(1, 3)};
    CHECK(eng.slice_via_b(a, alpha, bounds, Exec::serial).value ==
          eng.slice_via_b(a, alpha, bounds, Exec::parallel).value);
  }
}
