#include "tricover/arith.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>

#include "tricover/errors.hpp"

namespace tricover {

Rat::Rat(const BigInt& num, const BigInt& den) {
  if (den == 0) {
    throw ContractError("rational with zero denominator");
  }
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rat Rat::parse(const std::string& text) {
  const auto slash = text.find('/');
  BigInt num;
  BigInt den = 1;
  try {
    if (slash == std::string::npos) {
      num = BigInt(text, 10);
    } else {
      num = BigInt(text.substr(0, slash), 10);
      den = BigInt(text.substr(slash + 1), 10);
    }
  } catch (const std::invalid_argument&) {
    throw ContractError("malformed rational '" + text + "'");
  }
  return Rat(num, den);
}

BigInt Rat::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) {
    throw ContractError("rational division by zero");
  }
  value_ /= o.value_;
  return *this;
}

namespace {

class FactorialTable {
 public:
  FactorialTable() { table_.emplace_back(1); }

  const BigInt& get(std::size_t n) {
    {
      std::shared_lock lock(mutex_);
      if (n < table_.size()) {
        return table_[n];
      }
    }
    std::unique_lock lock(mutex_);
    // std::deque keeps references to existing elements valid on push_back.
    while (table_.size() <= n) {
      table_.push_back(table_.back() * static_cast<unsigned long>(table_.size()));
    }
    return table_[n];
  }

 private:
  std::shared_mutex mutex_;
  std::deque<BigInt> table_;
};

FactorialTable& table() {
  static FactorialTable instance;
  return instance;
}

}  // namespace

const BigInt& factorial(long n) {
  if (n < 0) {
    throw ContractError("factorial of negative integer " + std::to_string(n));
  }
  return table().get(static_cast<std::size_t>(n));
}

Rat recip_factorial(long n) {
  if (n < 0) {
    return Rat(0);
  }
  return Rat(BigInt(1), factorial(n));
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) {
    return 0;
  }
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) {
    --q;
  }
  return q;
}

}  // namespace tricover
