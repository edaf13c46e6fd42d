#include "tricover/brill_noether.hpp"

#include <string>

#include "tricover/errors.hpp"

namespace tricover {

long rho(long g, long r, long d) {
  if (g < 0 || r < 1 || d < 0) {
    throw ContractError("rho needs g >= 0, r >= 1, d >= 0");
  }
  return g - (r + 1) * (g - d + r);
}

BigInt castelnuovo_count(long g, long r, long d) {
  const long rh = rho(g, r, d);
  if (rh != 0) {
    throw ContractError("Castelnuovo count needs rho = 0, got rho(" + std::to_string(g) + ", " +
                        std::to_string(r) + ", " + std::to_string(d) + ") = " + std::to_string(rh));
  }
  Rat value(factorial(g));
  for (long i = 0; i <= r; ++i) {
    value *= Rat(factorial(i)) * recip_factorial(g - d + r + i);
  }
  if (!value.is_integer()) {
    throw ConsistencyError("Castelnuovo count is not an integer: " + value.to_string());
  }
  return value.num();
}

BNQuery make_query(long g, long r, long d) {
  BNQuery q{g, r, d, rho(g, r, d), std::nullopt};
  if (q.rho == 0) {
    q.count = castelnuovo_count(g, r, d);
  }
  return q;
}

CohomClass bn1_class(long g, long d) {
  if (d < 1) {
    throw ContractError("bn1_class needs d >= 1");
  }
  CohomClass c(g, d);
  const long top = g - d + 1;
  if (top >= 0) {
    c.add_term(Monomial{0, top}, recip_factorial(top));
  }
  if (top - 1 >= 0) {
    c.add_term(Monomial{1, top - 1}, -recip_factorial(top - 1));
  }
  return c;
}

long cs_max_degree(long g, long h) {
  if (g < 3 * h) {
    throw DomainError("Castelnuovo-Severi bound needs g >= 3h, got g=" + std::to_string(g) +
                      ", h=" + std::to_string(h));
  }
  return floor_div(g - 3 * h, 2);
}

bool lemma11_hypothesis(long g, long n) {
  if (n < 1) {
    throw ContractError("lemma11 needs n >= 1");
  }
  if (g < (2 * n - 3) * (n - 1)) {
    return false;
  }
  return n > 2 || g >= 2 * n - 1;
}

}  // namespace tricover
