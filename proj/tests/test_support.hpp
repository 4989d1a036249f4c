#pragma once

#include <random>

#include "pairzeta/scalar.hpp"

namespace pairzeta::testing {

// Small random polynomial in the given variables; never the zero polynomial.
inline MultiPoly random_poly(std::mt19937_64& rng, std::initializer_list<std::size_t> vars, int max_terms = 4,
                             int max_degree = 3) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> coeff(-5, 5);
  while (true) {
    std::vector<MultiPoly::Term> terms;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
      Monomial m;
      for (auto v : vars) m.set(v, static_cast<unsigned>(deg(rng)));
      terms.push_back({m, BigRational(coeff(rng))});
    }
    MultiPoly p = MultiPoly::from_terms(std::move(terms));
    if (!p.is_zero()) return p;
  }
}

inline ScalarValue random_scalar(std::mt19937_64& rng) {
  auto vars = {kVarS, kFirstCurveVar};
  return ScalarValue::fraction(random_poly(rng, vars), random_poly(rng, vars, 3, 2));
}

}  // namespace pairzeta::testing
