#pragma once

#include <optional>

#include "tricover/arith.hpp"
#include "tricover/cohom.hpp"

namespace tricover {

// A (g, r, d) triple with its Brill-Noether number and, when that number is
// zero, the number of g^r_d's on a general curve of genus g. The loci
// W^r_d and X^r_d themselves are represented only through these numbers and
// the class returned by bn1_class.
struct BNQuery {
  long genus = 0;
  long rank = 1;
  long degree = 0;
  long rho = 0;
  std::optional<BigInt> count;
};

// g - (r+1)(g - d + r). ContractError unless g >= 0, r >= 1, d >= 0.
long rho(long g, long r, long d);

// g! * prod_{i=0..r} i!/(g-d+r+i)!. ContractError unless rho(g, r, d) == 0.
BigInt castelnuovo_count(long g, long r, long d);

BNQuery make_query(long g, long r, long d);

// Class of X^1_d in X_d: theta^{g-d+1}/(g-d+1)! - x theta^{g-d}/(g-d)!.
// Terms whose theta exponent would be negative carry the coefficient
// 1/(negative)! = 0 and are omitted. ContractError for d < 1 or g < 0.
CohomClass bn1_class(long g, long d);

// floor((g - 3h)/2): pencils up to this degree on a triple cover of a genus-h
// curve factor through the cover. DomainError when g < 3h.
long cs_max_degree(long g, long h);

// g >= (2n-3)(n-1), together with g >= 2n-1 when n <= 2.
bool lemma11_hypothesis(long g, long n);

}  // namespace tricover
