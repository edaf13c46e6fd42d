#pragma once

#include <compare>
#include <gmpxx.h>
#include <ostream>
#include <string>

namespace tricover {

using BigInt = mpz_class;

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Equality is value equality.
class Rat {
 public:
  Rat() = default;
  Rat(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rat(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  /// Throws ContractError when den == 0.
  Rat(const BigInt& num, const BigInt& den);

  /// Parses "p" or "p/q"; throws ContractError on malformed text.
  static Rat parse(const std::string& text);

  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  BigInt floor() const;

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const { return value_.get_str(); }

  Rat& operator+=(const Rat& o) { value_ += o.value_; return *this; }
  Rat& operator-=(const Rat& o) { value_ -= o.value_; return *this; }
  Rat& operator*=(const Rat& o) { value_ *= o.value_; return *this; }
  /// Throws ContractError on division by zero.
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  Rat operator-() const { Rat r; r.value_ = -value_; return r; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

// n! from a process-wide cache that only ever grows. Safe to call from any
// number of threads. Throws ContractError for n < 0.
const BigInt& factorial(long n);

// 1/n! for n >= 0, and 0 for n < 0 (so 1/(-1)! = 0).
Rat recip_factorial(long n);

// C(n, k) for 0 <= k <= n, otherwise 0.
BigInt binomial(long n, long k);

// floor(a / b) for b > 0.
long floor_div(long a, long b);

}  // namespace tricover
