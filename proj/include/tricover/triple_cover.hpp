#pragma once

#include <vector>

#include "tricover/arith.hpp"
#include "tricover/theorem_a.hpp"

namespace tricover {

// Degree data of a triple cover X -> C embedded in the ruled surface P(E),
// where pi_* O_X = O_C + E. The surface itself is represented only by the
// recorded intersection numbers.
struct TripleCoverGeometry {
  long g = 0;
  long h = 0;
  long delta = 0;           // -(Cbar^2) for a minimal section Cbar
  long det_E_degree = 0;    // deg wedge^2 E = 3h - g - 2
  long n = 0;               // deg M, with E = Ebar (x) M
  long deg_M = 0;
  long deg_L = 0;           // quotient in 0 -> M -> E -> L -> 0
  long fX_fiber_coeff = 0;  // f(X) == 3 Cbar + fX_fiber_coeff F
};

// ParityError when delta and g - 3h differ in parity; WindowError outside
// -h <= delta <= (g - 3h + 2)/3; DomainError unless h >= 1 and g >= 3h.
TripleCoverGeometry derive_geometry(long g, long h, long delta);

// Every delta accepted by derive_geometry, ascending.
std::vector<long> admissible_deltas(long g, long h);

// deg M + 2 deg D and deg L + 2 deg D for one admissible delta.
struct TwistedDegrees {
  long delta = 0;
  long deg_M_twisted = 0;
  long deg_L_twisted = 0;
};

struct Lemma21Margins {
  Parity parity = Parity::kEven;
  long twist_degree_2D = 0;  // 2 deg D with deg D = e+1 (even) or e+2 (odd)
  Rat bound_M;               // upper bound for deg(M (x) O(2D))
  Rat bound_L;               // upper bound for deg(L (x) O(2D))
  bool vanishing_guaranteed = false;
  std::vector<TwistedDegrees> per_delta;  // empty when g < 3h
};

// Bounds come from the degree bounds on M and L plus the twist. For even h
// they are (-g+6h+4)/3 and (-g+6h+2)/2; for odd h, where the twist is h+3
// rather than h+2, (-g+6h+7)/3 and (-g+6h+4)/2. ContractError for h < 1.
Lemma21Margins lemma21_margins(long g, long h);

// Smallest genus for which the reducedness argument goes through: via the
// triple-cover homomorphism degree bounds (12e+5 / 12e+14) versus via
// Castelnuovo-Severi on 2 pi^* L (18e+6 / 18e+21).
struct ReducednessBounds {
  long miranda = 0;
  long alternative = 0;
};

ReducednessBounds reducedness_bounds(long h);

}  // namespace tricover
