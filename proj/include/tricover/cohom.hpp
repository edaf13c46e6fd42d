#pragma once

#include <map>

#include "tricover/arith.hpp"

namespace tricover {

// x^x_pow * theta^theta_pow.
struct Monomial {
  long x_pow = 0;
  long theta_pow = 0;

  long codim() const { return x_pow + theta_pow; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Descending theta power, then descending x power.
struct CanonicalOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.theta_pow != b.theta_pow) {
      return a.theta_pow > b.theta_pow;
    }
    return a.x_pow > b.x_pow;
  }
};

/// A class in the subring of H*(X_d, Q) generated by x and theta, where X_d
/// is the d-th symmetric product of a genus-g curve.
///
/// Terms are kept normalized at all times: zero coefficients are dropped, as
/// are monomials with x_pow + theta_pow > d (beyond the top degree) or
/// theta_pow > g (theta^{g+1} = 0 on the Jacobian). Equality is structural.
class CohomClass {
 public:
  using TermMap = std::map<Monomial, Rat, CanonicalOrder>;

  /// The zero class. Throws ContractError for negative genus or index.
  CohomClass(long genus, long sym_index);

  static CohomClass unit(long genus, long sym_index);
  static CohomClass monomial(long genus, long sym_index, Monomial m, const Rat& coeff = Rat(1));
  static CohomClass x_power(long genus, long sym_index, long a);
  static CohomClass theta_power(long genus, long sym_index, long b);

  long genus() const { return genus_; }
  long sym_index() const { return sym_index_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_pure_x() const;
  Rat coefficient(Monomial m) const;

  // Adds coeff * m, vanishing silently when m is annihilated. Returns
  // false in that case so callers can report it.
  bool add_term(Monomial m, const Rat& coeff);

  CohomClass& operator+=(const CohomClass& o);
  CohomClass& operator-=(const CohomClass& o);
  CohomClass& operator*=(const Rat& s);
  CohomClass operator-() const;

  friend CohomClass operator+(CohomClass a, const CohomClass& b) { return a += b; }
  friend CohomClass operator-(CohomClass a, const CohomClass& b) { return a -= b; }
  friend CohomClass operator*(CohomClass a, const Rat& s) { return a *= s; }
  friend CohomClass operator*(const Rat& s, CohomClass a) { return a *= s; }
  friend CohomClass operator*(const CohomClass& a, const CohomClass& b);

  friend bool operator==(const CohomClass&, const CohomClass&) = default;

  bool survives(Monomial m) const {
    return m.x_pow >= 0 && m.theta_pow >= 0 && m.codim() <= sym_index_ && m.theta_pow <= genus_;
  }

 private:
  void require_same_ambient(const CohomClass& o) const;

  long genus_;
  long sym_index_;
  TermMap terms_;
};

// Product in the ring; throws AmbientMismatch across ambients.
CohomClass mul_classes(const CohomClass& lhs, const CohomClass& rhs);

// c^n, truncating as it goes.
CohomClass power(const CohomClass& c, long n);

// Degree of the top-codimension part via (x^{d-a} theta^a) = g!/(g-a)!.
Rat evaluate_top(const CohomClass& c);

// B_k(x^a) = C(a, k) x^{a-k}, landing in X_{d-k}. Only polynomials in x are
// accepted (UnsupportedInput otherwise); k > d or k < 0 is a ContractError.
CohomClass pushforward_B(long k, const CohomClass& c);

// (A_k(small) . x^xpower) computed as (small . B_k(x^xpower)) in the ambient
// of small, with x^xpower taken in X_{d+k} of the same genus.
Rat pair_via_pushforward(const CohomClass& small, long k, long xpower);

}  // namespace tricover
