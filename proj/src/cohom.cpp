#include "tricover/cohom.hpp"

#include <string>

#include "tricover/errors.hpp"

namespace tricover {

CohomClass::CohomClass(long genus, long sym_index) : genus_(genus), sym_index_(sym_index) {
  if (genus < 0 || sym_index < 0) {
    throw ContractError("ambient (g=" + std::to_string(genus) + ", d=" + std::to_string(sym_index) +
                        ") must be nonnegative");
  }
}

CohomClass CohomClass::unit(long genus, long sym_index) {
  return monomial(genus, sym_index, Monomial{0, 0});
}

CohomClass CohomClass::monomial(long genus, long sym_index, Monomial m, const Rat& coeff) {
  if (m.x_pow < 0 || m.theta_pow < 0) {
    throw ContractError("negative exponent in monomial");
  }
  CohomClass c(genus, sym_index);
  c.add_term(m, coeff);
  return c;
}

CohomClass CohomClass::x_power(long genus, long sym_index, long a) {
  return monomial(genus, sym_index, Monomial{a, 0});
}

CohomClass CohomClass::theta_power(long genus, long sym_index, long b) {
  return monomial(genus, sym_index, Monomial{0, b});
}

bool CohomClass::is_pure_x() const {
  for (const auto& [m, coeff] : terms_) {
    if (m.theta_pow != 0) {
      return false;
    }
  }
  return true;
}

Rat CohomClass::coefficient(Monomial m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

bool CohomClass::add_term(Monomial m, const Rat& coeff) {
  if (coeff.is_zero()) {
    return true;
  }
  if (!survives(m)) {
    return false;
  }
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }
  return true;
}

void CohomClass::require_same_ambient(const CohomClass& o) const {
  if (genus_ != o.genus_ || sym_index_ != o.sym_index_) {
    throw AmbientMismatch("classes live in (g=" + std::to_string(genus_) + ", d=" +
                          std::to_string(sym_index_) + ") and (g=" + std::to_string(o.genus_) +
                          ", d=" + std::to_string(o.sym_index_) + ")");
  }
}

CohomClass& CohomClass::operator+=(const CohomClass& o) {
  require_same_ambient(o);
  for (const auto& [m, coeff] : o.terms_) {
    add_term(m, coeff);
  }
  return *this;
}

CohomClass& CohomClass::operator-=(const CohomClass& o) {
  require_same_ambient(o);
  for (const auto& [m, coeff] : o.terms_) {
    add_term(m, -coeff);
  }
  return *this;
}

CohomClass& CohomClass::operator*=(const Rat& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) {
    coeff *= s;
  }
  return *this;
}

CohomClass CohomClass::operator-() const {
  CohomClass out = *this;
  out *= Rat(-1);
  return out;
}

CohomClass operator*(const CohomClass& a, const CohomClass& b) {
  a.require_same_ambient(b);
  CohomClass out(a.genus_, a.sym_index_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out.add_term(Monomial{ma.x_pow + mb.x_pow, ma.theta_pow + mb.theta_pow}, ca * cb);
    }
  }
  return out;
}

CohomClass mul_classes(const CohomClass& lhs, const CohomClass& rhs) { return lhs * rhs; }

CohomClass power(const CohomClass& c, long n) {
  if (n < 0) {
    throw ContractError("negative power of a class");
  }
  CohomClass result = CohomClass::unit(c.genus(), c.sym_index());
  CohomClass base = c;
  while (n > 0) {
    if (n & 1) {
      result = result * base;
    }
    n >>= 1;
    if (n > 0) {
      base = base * base;
    }
  }
  return result;
}

Rat evaluate_top(const CohomClass& c) {
  Rat total;
  const long g = c.genus();
  for (const auto& [m, coeff] : c.terms()) {
    if (m.codim() != c.sym_index()) {
      continue;
    }
    total += coeff * Rat(factorial(g), factorial(g - m.theta_pow));
  }
  return total;
}

CohomClass pushforward_B(long k, const CohomClass& c) {
  if (k < 0 || k > c.sym_index()) {
    throw ContractError("B_" + std::to_string(k) + " undefined on X_" + std::to_string(c.sym_index()));
  }
  if (!c.is_pure_x()) {
    throw UnsupportedInput("push-pull B_k is only available on polynomials in x");
  }
  CohomClass out(c.genus(), c.sym_index() - k);
  for (const auto& [m, coeff] : c.terms()) {
    if (m.x_pow < k) {
      continue;
    }
    out.add_term(Monomial{m.x_pow - k, 0}, coeff * Rat(binomial(m.x_pow, k)));
  }
  return out;
}

Rat pair_via_pushforward(const CohomClass& small, long k, long xpower) {
  if (k < 0 || xpower < 0) {
    throw ContractError("pair_via_pushforward needs k >= 0 and xpower >= 0");
  }
  const auto big = CohomClass::x_power(small.genus(), small.sym_index() + k, xpower);
  return evaluate_top(small * pushforward_B(k, big));
}

}  // namespace tricover
