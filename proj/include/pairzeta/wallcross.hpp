#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pairzeta/curve.hpp"
#include "pairzeta/parallel.hpp"
#include "pairzeta/rational.hpp"

namespace pairzeta {

enum class PairMethod { product, convolution, lemma, explicit_form };
std::string to_string(PairMethod m);
// Accepts product, convolution, lemma, explicit.
std::optional<PairMethod> parse_pair_method(std::string_view name);

struct PairQuery {
  std::int64_t r = 1;
  std::int64_t d = 0;
  BigRational tau;
};

bool is_generic(const BigRational& tau, std::int64_t r, std::int64_t d);

// [S^d X], the count of framed infinity-stable objects of class (1, d).
ScalarValue f_infinity_coeff(const Curve& c, std::int64_t d);

// f_tau(r, d) as the (r, d, 1) coefficient of u_{>tau}^{-1} o f_inf o u_{>=tau},
// with both u-series built from ray products.
ScalarValue f_tau_product(const Curve& c, const PairQuery& q, Exec exec = Exec::serial);
// Three convolution sums over [S^e X], a^{>=tau} and c^{>tau}. Needs r >= 2.
ScalarValue f_tau_convolution(const Curve& c, const PairQuery& q);
// Sum over compositions of r - 1 with the exponents A_0, A, B, C_p, D_p, E_p.
ScalarValue f_tau_lemma(const Curve& c, const PairQuery& q);

// [M_tau(r, d)] for r >= 2 and (r, d)-generic tau as a t-coefficient of Z_X(t)
// times simple fractions. Throws NonGenericTauError on walls.
ScalarValue pairs_moduli_motive(const Curve& c, const PairQuery& q);
// f_tau = q^{(1-g) C(r,2)} [M_tau] at generic tau.
ScalarValue motive_to_f(const Curve& c, std::int64_t r, const ScalarValue& motive);

// Low-rank closed forms for [M_tau(2, d)] and [M_tau(3, d)], generic tau.
ScalarValue rank2_motive(const Curve& c, std::int64_t d, const BigRational& tau);
ScalarValue rank3_motive(const Curve& c, std::int64_t d, const BigRational& tau);

// f_tau(r, d) by any route; the explicit route is rescaled by motive_to_f.
ScalarValue f_tau(const Curve& c, const PairQuery& q, PairMethod method, Exec exec = Exec::serial);
// Routes that apply to the query: product always, the others for r >= 2,
// explicit only at generic tau.
std::vector<PairMethod> applicable_methods(const PairQuery& q);

// Degrees d with 0 <= d/r <= tau < d/(r-1); for r = 1, 0 <= d <= tau.
std::vector<std::int64_t> support_range(std::int64_t r, const BigRational& tau);

// f_tau over a list of queries; cells run concurrently under Exec::parallel.
std::vector<ScalarValue> f_tau_grid(const Curve& c, const std::vector<PairQuery>& queries, PairMethod method,
                                    Exec exec = Exec::serial);

}  // namespace pairzeta
