#include "tricover/triple_cover.hpp"

#include <string>

#include "tricover/errors.hpp"

namespace tricover {

namespace {

void require_cover_domain(long g, long h) {
  if (h < 1 || g < 3 * h) {
    throw DomainError("triple cover ledger needs h >= 1 and g >= 3h, got g=" + std::to_string(g) +
                      ", h=" + std::to_string(h));
  }
}

bool parity_ok(long g, long h, long delta) { return (delta - (g - 3 * h)) % 2 == 0; }

// -h <= delta and 3 delta <= g - 3h + 2, the upper end left unfloored.
bool window_ok(long g, long h, long delta) { return delta >= -h && 3 * delta <= g - 3 * h + 2; }

}  // namespace

TripleCoverGeometry derive_geometry(long g, long h, long delta) {
  require_cover_domain(g, h);
  if (!parity_ok(g, h, delta)) {
    throw ParityError("delta=" + std::to_string(delta) + " must be congruent to g-3h=" +
                      std::to_string(g - 3 * h) + " mod 2");
  }
  if (!window_ok(g, h, delta)) {
    throw WindowError("delta=" + std::to_string(delta) + " outside [-" + std::to_string(h) + ", (" +
                      std::to_string(g - 3 * h + 2) + ")/3]");
  }
  TripleCoverGeometry geo;
  geo.g = g;
  geo.h = h;
  geo.delta = delta;
  geo.det_E_degree = 3 * h - g - 2;
  geo.n = (delta - g + 3 * h - 2) / 2;
  geo.deg_M = geo.n;
  geo.deg_L = (-g + 3 * h - 2 - delta) / 2;
  geo.fX_fiber_coeff = (3 * delta + g - 3 * h + 2) / 2;
  return geo;
}

std::vector<long> admissible_deltas(long g, long h) {
  require_cover_domain(g, h);
  std::vector<long> out;
  for (long delta = -h; 3 * delta <= g - 3 * h + 2; ++delta) {
    if (parity_ok(g, h, delta)) {
      out.push_back(delta);
    }
  }
  return out;
}

Lemma21Margins lemma21_margins(long g, long h) {
  if (h < 1) {
    throw ContractError("lemma21_margins needs h >= 1");
  }
  Lemma21Margins m;
  m.parity = parity_of(h);
  const long e = half_genus(h);
  const bool even = m.parity == Parity::kEven;
  const long deg_D = even ? e + 1 : e + 2;
  m.twist_degree_2D = 2 * deg_D;
  // deg M <= (-g+3h-2)/3 and deg L <= (-g+4h-2)/2, each shifted by 2 deg D.
  m.bound_M = Rat(BigInt(-g + 3 * h - 2), BigInt(3)) + Rat(m.twist_degree_2D);
  m.bound_L = Rat(BigInt(-g + 4 * h - 2), BigInt(2)) + Rat(m.twist_degree_2D);
  m.vanishing_guaranteed = even ? g > 6 * h + 4 : g > 6 * h + 7;
  if (m.vanishing_guaranteed && (m.bound_M.sign() >= 0 || m.bound_L.sign() >= 0)) {
    throw ConsistencyError("twisted degree bounds not negative at g=" + std::to_string(g) +
                           ", h=" + std::to_string(h));
  }
  if (g >= 3 * h) {
    for (long delta : admissible_deltas(g, h)) {
      const auto geo = derive_geometry(g, h, delta);
      m.per_delta.push_back(
          {delta, geo.deg_M + m.twist_degree_2D, geo.deg_L + m.twist_degree_2D});
    }
  }
  return m;
}

ReducednessBounds reducedness_bounds(long h) {
  if (h < 1) {
    throw ContractError("reducedness_bounds needs h >= 1");
  }
  const long e = half_genus(h);
  if (parity_of(h) == Parity::kEven) {
    return {12 * e + 5, 18 * e + 6};
  }
  return {12 * e + 14, 18 * e + 21};
}

}  // namespace tricover
