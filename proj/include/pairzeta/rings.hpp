#pragma once

// Concrete coefficient rings for the slice engine: square matrices over Q,
// a truncated free algebra over Q, and the scalar field K.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "pairzeta/rational.hpp"
#include "pairzeta/scalar.hpp"
#include "pairzeta/slices.hpp"

namespace pairzeta::rings {

using Matrix = std::vector<BigRational>;  // row-major, dim x dim

struct MatrixRing {
  using value_type = Matrix;
  std::size_t dim = 2;

  Matrix zero() const { return Matrix(dim * dim, BigRational(0)); }
  Matrix one() const {
    Matrix m = zero();
    for (std::size_t i = 0; i < dim; ++i) m[i * dim + i] = 1;
    return m;
  }
  Matrix scalar(const BigRational& x) const {
    Matrix m = zero();
    for (std::size_t i = 0; i < dim; ++i) m[i * dim + i] = x;
    return m;
  }
  Matrix add(const Matrix& x, const Matrix& y) const {
    Matrix m(x);
    for (std::size_t i = 0; i < m.size(); ++i) m[i] += y[i];
    return m;
  }
  Matrix mul(const Matrix& x, const Matrix& y) const {
    Matrix m = zero();
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t k = 0; k < dim; ++k) {
        if (sgn(x[i * dim + k]) == 0) continue;
        for (std::size_t j = 0; j < dim; ++j) m[i * dim + j] += x[i * dim + k] * y[k * dim + j];
      }
    return m;
  }
  Matrix neg(const Matrix& x) const {
    Matrix m(x);
    for (auto& e : m) e = -e;
    return m;
  }
  bool equal(const Matrix& x, const Matrix& y) const { return x == y; }

  Matrix random(std::mt19937_64& rng, int bound = 3) const {
    std::uniform_int_distribution<int> entry(-bound, bound);
    Matrix m = zero();
    for (auto& e : m) e = entry(rng);
    return m;
  }
};

// Linear combinations of words in the letters a, b, c, ...; words longer than
// max_length are dropped, which is a two-sided ideal.
using Word = std::map<std::string, BigRational>;

struct WordAlgebra {
  using value_type = Word;
  int letters = 3;
  std::size_t max_length = 6;

  Word zero() const { return {}; }
  Word one() const { return {{"", BigRational(1)}}; }
  Word add(const Word& x, const Word& y) const {
    Word out(x);
    for (const auto& [w, c] : y) {
      auto& slot = out[w];
      slot += c;
      if (sgn(slot) == 0) out.erase(w);
    }
    return out;
  }
  Word mul(const Word& x, const Word& y) const {
    Word out;
    for (const auto& [u, a] : x)
      for (const auto& [v, b] : y) {
        if (u.size() + v.size() > max_length) continue;
        auto& slot = out[u + v];
        slot += a * b;
      }
    std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
    return out;
  }
  Word neg(const Word& x) const {
    Word out(x);
    for (auto& [w, c] : out) c = -c;
    return out;
  }
  bool equal(const Word& x, const Word& y) const { return x == y; }

  Word random(std::mt19937_64& rng) const {
    std::uniform_int_distribution<int> coeff(-2, 2), letter(0, letters - 1), length(0, 2), terms(1, 3);
    Word out;
    for (int n = terms(rng); n > 0; --n) {
      std::string w;
      for (int k = length(rng); k > 0; --k) w.push_back(static_cast<char>('a' + letter(rng)));
      out = add(out, Word{{w, BigRational(coeff(rng))}});
    }
    return out;
  }
};

struct ScalarRing {
  using value_type = ScalarValue;
  ScalarValue zero() const { return ScalarValue(0); }
  ScalarValue one() const { return ScalarValue(1); }
  ScalarValue add(const ScalarValue& x, const ScalarValue& y) const { return x + y; }
  ScalarValue mul(const ScalarValue& x, const ScalarValue& y) const { return x * y; }
  ScalarValue neg(const ScalarValue& x) const { return -x; }
  bool equal(const ScalarValue& x, const ScalarValue& y) const { return x == y; }
};

// A family with independent random values on every class of size <= max_size.
template <class Ring>
std::map<slices::LatticeClass, typename Ring::value_type> random_family(const Ring& ring,
                                                                        const slices::StabilityContext& ctx,
                                                                        std::int64_t max_size, std::mt19937_64& rng) {
  std::map<slices::LatticeClass, typename Ring::value_type> out;
  for (const auto& alpha : slices::classes_up_to(ctx, max_size)) out.emplace(alpha, ring.random(rng));
  return out;
}

}  // namespace pairzeta::rings
