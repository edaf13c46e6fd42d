#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tricover/arith.hpp"

namespace tricover {

enum class Parity { kEven, kOdd };

std::string_view to_string(Parity p);

// h = 2e or h = 2e + 1.
long half_genus(long h);
Parity parity_of(long h);

// Final comparison (x^1_d . x^dim) > (sigma . x^dim) for one (h, g), where
// d is the critical degree and dim = g - 6e - 3 (even) or g - 6e - 7 (odd).
struct TheoremAReport {
  long h = 0;
  long g = 0;
  long e = 0;
  Parity parity = Parity::kEven;
  long critical_degree = 0;
  Rat lhs;                  // closed factorial form
  Rat rhs;                  // count route (even) or binomial * (c^1 . x^2) (odd)
  Rat lhs_via_expansion;    // evaluate_top(bn1_class(g, d) * x^dim)
  Rat rhs_via_pushforward;  // (c^1 . B_k(x^dim)) on the base curve
  bool strict = false;
};

enum class Relation { kLe, kLt, kGe, kGt, kEq };

std::string_view to_string(Relation r);
bool compare(const Rat& lhs, Relation rel, const Rat& rhs);

struct AuditStep {
  std::string name;
  std::string inequality_text;
  Rat lhs;
  Rat rhs;
  Relation relation = Relation::kLe;
  bool holds = false;
};

struct ProofAudit {
  long h = 0;
  long g = 0;
  long e = 0;
  Parity parity = Parity::kEven;
  std::vector<AuditStep> steps;

  bool all_hold() const;
  const AuditStep* find(std::string_view name) const;
};

// (2N + 1)(N + 1) with N = floor((3h + 1)/2). ContractError for h < 1.
long genus_bound(long h);

// g - floor((3h + 1)/2) - 1. ContractError for h < 1.
long critical_degree(long h, long g);

// Smallest g for which verify_inequality is defined: 6e + 4 (even), 6e + 9 (odd).
long min_verifiable_genus(long h);

// ContractError below min_verifiable_genus; ConsistencyError if the two
// routes for either side disagree.
TheoremAReport verify_inequality(long h, long g);

// Replays every numbered inequality of the existence proof for (h, g).
// Failing steps are reported, never thrown.
ProofAudit audit_proof_chain(long h, long g);

// One report per h in [h_lo, h_hi] and g in [genus_bound(h), genus_bound(h) + g_margin],
// ordered by h then g. Work is sharded by h over `workers` threads
// (0 = hardware concurrency); the output does not depend on the count.
std::vector<TheoremAReport> sweep(long h_lo, long h_hi, long g_margin, unsigned workers = 0);

}  // namespace tricover
