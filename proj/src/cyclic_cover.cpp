#include "tricover/cyclic_cover.hpp"

#include <algorithm>
#include <string>

#include "tricover/errors.hpp"
#include "tricover/theorem_a.hpp"

namespace tricover {

namespace {

long mod3(long v) { return ((v % 3) + 3) % 3; }

bool congruent(long g, long t) { return mod3(t) == mod3(2 * g - 2); }

}  // namespace

CyclicCoverProfile derive_profile(long g, long h, long t) {
  if (h < 1 || g < 3 * h - 1) {
    throw DomainError("cyclic cover ledger needs h >= 1 and g >= 3h-1, got g=" + std::to_string(g) +
                      ", h=" + std::to_string(h));
  }
  CyclicCoverProfile p;
  p.g = g;
  p.h = h;
  p.t = t;
  p.branch_count = g - 3 * h + 2;
  if (t < 0 || t > p.branch_count) {
    throw RangeError("t=" + std::to_string(t) + " outside [0, " + std::to_string(p.branch_count) +
                     "]");
  }
  if (!congruent(g, t)) {
    throw CongruenceError("t=" + std::to_string(t) + " not congruent to 2g-2=" +
                          std::to_string(2 * g - 2) + " mod 3");
  }
  p.k1 = (2 * g - 2 - t) / 3;
  p.k2 = (2 * g - 2 - (p.branch_count - t)) / 3;
  p.dim_H0 = h;
  if (p.k1 > 2 * h - 2) {
    p.dim_H1 = p.k1 - h + 1;
  }
  if (p.k2 > 2 * h - 2) {
    p.dim_H2 = p.k2 - h + 1;
  }
  p.N1_lower = p.branch_count + t;
  p.N2_lower = 2 * p.branch_count - t;
  return p;
}

long normalize_t(long g, long h, long t) {
  const auto p = derive_profile(g, h, t);
  return 2 * t >= p.branch_count ? t : p.branch_count - t;
}

BigInt PencilGapReport::largest_excluded() const {
  // Largest integer strictly below composed_below.
  const BigInt f = composed_below.floor();
  return composed_below.is_integer() ? BigInt(f - 1) : f;
}

PencilGapReport pencil_gap_report(long g, long h, long t) {
  const auto p = derive_profile(g, h, t);
  if (2 * t < p.branch_count) {
    throw ContractError("t=" + std::to_string(t) + " is not normalized (need 2t >= " +
                        std::to_string(p.branch_count) + ")");
  }
  PencilGapReport r;
  // g = 3h - 1 is allowed here, where the bound is floor(-1/2) = -1.
  r.cs_bound = floor_div(g - 3 * h, 2);
  r.composed_below = Rat(BigInt(p.branch_count + t), BigInt(3));
  r.exists_at_most = std::max(t, g + 2 - t);
  r.theorem_a_degree = critical_degree(h, g);
  return r;
}

Feasibility construction_feasible(long g, long h, long t) {
  if (h < 1) {
    throw ContractError("construction_feasible needs h >= 1");
  }
  const long branch = g - 3 * h + 2;
  Feasibility f;
  f.feasible = g >= 7 * h - 4 && 2 * t >= branch && t <= branch && congruent(g, t);
  if (f.feasible) {
    f.ell = (2 * t - branch) / 3;
  }
  return f;
}

}  // namespace tricover
