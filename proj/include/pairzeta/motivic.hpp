#pragma once

#include <cstdint>
#include <vector>

#include "pairzeta/chern.hpp"
#include "pairzeta/curve.hpp"
#include "pairzeta/parallel.hpp"
#include "pairzeta/qplane.hpp"
#include "pairzeta/slices.hpp"

namespace pairzeta {

using slices::Evaluated;
using slices::SliceBounds;
using slices::SliceMode;

// beta_alpha = q^{(1-g) C(r,2)} [M(alpha)] from b_1, b_2, ... (Zagier).
ScalarValue beta(const Curve& c, ChernClass alpha);

// Slice invariants a^{mode}_alpha as sums over compositions of r. Bounds must
// be finite, except lower = -infinity for mode interval.
Evaluated<ScalarValue> slice_closed(const Curve& c, ChernClass alpha, const SliceBounds& bounds);
// c^{mode}_alpha: coefficients of the inverse of the slice series. Interval
// bounds are accepted as well.
Evaluated<ScalarValue> inverse_closed(const Curve& c, ChernClass alpha, const SliceBounds& bounds);

// The same invariants summed from the partial-sum chain conditions: each
// prefix degree d'_i runs over d'_i >= m_i, a geometric series per prefix.
Evaluated<ScalarValue> slice_by_partial_sums(const Curve& c, ChernClass alpha, const SliceBounds& bounds);
Evaluated<ScalarValue> inverse_by_partial_sums(const Curve& c, ChernClass alpha, const SliceBounds& bounds);

// a^{>=tau} written with tail sums r_{>=i+1} and the factor q^{-(r - r_1) d}.
Evaluated<ScalarValue> slice_ge_tail_form(const Curve& c, ChernClass alpha, const BigRational& tau);

// Definitional chain sum over slope-decreasing chains of beta values with
// twist q^{sum_{i<j} (r_i d_j - r_j d_i)}. Every mode has finitely many chains.
Evaluated<ScalarValue> slice_bruteforce(const Curve& c, ChernClass alpha, const SliceBounds& bounds,
                                        Exec exec = Exec::serial);

// Ranks 1..max_rank and, at rank r, degrees up to floor(r * max_slope).
struct DegreeWindow {
  int max_rank = 2;
  BigRational max_slope = 3;
  std::int64_t max_degree(std::int64_t r) const { return floor_int(max_slope * BigRational(r)); }
};

// 1 + sum (-s)^{chi(alpha)} a^{mode}_alpha x^{(alpha, 0)} for modes ge, gt and
// interval, from the closed forms.
SkewSeries u_series(const Curve& c, const SliceBounds& bounds, const DegreeWindow& window, Exec exec = Exec::serial);
// 1 + sum (-s)^{chi(alpha)} c^{mode}_alpha x^{(alpha, 0)}, modes ge and gt.
SkewSeries u_inverse_closed(const Curve& c, const SliceBounds& bounds, const DegreeWindow& window,
                            Exec exec = Exec::serial);
// u_tau = 1 + sum_{mu(alpha) = tau} (-s)^{chi(alpha)} beta_alpha x^{(alpha, 0)}.
SkewSeries ray_series(const Curve& c, const BigRational& tau, int max_rank);
// u_{>=tau} or u_{>tau} as the slope-ordered product of ray series. Coefficients
// that rays above max_slope could reach are marked unknown.
SkewSeries u_series_from_rays(const Curve& c, SliceMode mode, const BigRational& tau, const DegreeWindow& window,
                              Exec exec = Exec::serial);

// Lowest degree at rank r of a series supported on the slice (modes ge, gt, interval).
std::int64_t u_min_degree(const SliceBounds& bounds, std::int64_t r);

}  // namespace pairzeta
