#pragma once

#include "pairzeta/multipoly.hpp"

namespace pairzeta {

// Greatest common divisor over Q, returned primitive with integer coefficients
// and positive leading coefficient. gcd(0, 0) = 0.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

// Same contract, computed by primitive remainder sequences only. Reference
// implementation for testing the heuristic path.
MultiPoly poly_gcd_prs(const MultiPoly& a, const MultiPoly& b);

}  // namespace pairzeta
