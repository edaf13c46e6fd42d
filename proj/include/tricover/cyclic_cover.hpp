#pragma once

#include <optional>

#include "tricover/arith.hpp"

namespace tricover {

/// Numerical data of a cyclic triple cover X -> C of genera (g, h) whose
/// g - 3h + 2 totally ramified points split as t (local eigenvalue zeta) and
/// g - 3h + 2 - t (eigenvalue zeta^2).
///
/// k1, k2 are the degrees of the divisors D1, D2 on C cut out by sigma-
/// eigenforms; the eigenspace dimensions of H^1(X, O) follow from Riemann-
/// Roch on C only when k_j > 2h - 2, and are left empty otherwise.
struct CyclicCoverProfile {
  long g = 0;
  long h = 0;
  long t = 0;
  long branch_count = 0;
  long k1 = 0;
  long k2 = 0;
  long dim_H0 = 0;
  std::optional<long> dim_H1;
  std::optional<long> dim_H2;
  long N1_lower = 0;  // degree of a zeta-eigenfunction
  long N2_lower = 0;  // degree of a zeta^2-eigenfunction
};

/// DomainError unless h >= 1 and g >= 3h - 1; RangeError for t outside
/// [0, g - 3h + 2]; CongruenceError unless t == 2g - 2 (mod 3). Range is
/// checked first.
CyclicCoverProfile derive_profile(long g, long h, long t);

/// Swaps t for g - 3h + 2 - t when needed so that 2t >= g - 3h + 2
/// (exchanging zeta and zeta^2).
long normalize_t(long g, long h, long t);

struct PencilGapReport {
  long cs_bound = 0;       // floor((g - 3h)/2)
  Rat composed_below;      // every g^1_n with n < this is composed with the cover
  long exists_at_most = 0; // max{t, g + 2 - t}
  long theorem_a_degree = 0;

  /// Largest integer n that the strict threshold covers.
  BigInt largest_excluded() const;
};

/// ContractError when t is valid but not normalized.
PencilGapReport pencil_gap_report(long g, long h, long t);

struct Feasibility {
  bool feasible = false;
  std::optional<long> ell;
};

/// g >= 7h - 4, (g - 3h + 2)/2 <= t <= g - 3h + 2 and t == 2g - 2 (mod 3);
/// ell = (2t - g + 3h - 2)/3 when feasible. Never throws for h >= 1.
Feasibility construction_feasible(long g, long h, long t);

}  // namespace tricover
