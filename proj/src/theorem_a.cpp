#include "tricover/theorem_a.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "tricover/brill_noether.hpp"
#include "tricover/cohom.hpp"
#include "tricover/errors.hpp"

namespace tricover {

std::string_view to_string(Parity p) { return p == Parity::kEven ? "even" : "odd"; }

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::kLe:
      return "<=";
    case Relation::kLt:
      return "<";
    case Relation::kGe:
      return ">=";
    case Relation::kGt:
      return ">";
    case Relation::kEq:
      return "=";
  }
  return "?";
}

bool compare(const Rat& lhs, Relation rel, const Rat& rhs) {
  switch (rel) {
    case Relation::kLe:
      return lhs <= rhs;
    case Relation::kLt:
      return lhs < rhs;
    case Relation::kGe:
      return lhs >= rhs;
    case Relation::kGt:
      return lhs > rhs;
    case Relation::kEq:
      return lhs == rhs;
  }
  return false;
}

long half_genus(long h) { return h / 2; }

Parity parity_of(long h) { return h % 2 == 0 ? Parity::kEven : Parity::kOdd; }

bool ProofAudit::all_hold() const {
  return std::all_of(steps.begin(), steps.end(), [](const AuditStep& s) { return s.holds; });
}

const AuditStep* ProofAudit::find(std::string_view name) const {
  for (const auto& s : steps) {
    if (s.name == name) {
      return &s;
    }
  }
  return nullptr;
}

namespace {

void require_base_genus(long h) {
  if (h < 1) {
    throw ContractError("base genus h must be >= 1, got " + std::to_string(h));
  }
}

long bracket(long h) { return floor_div(3 * h + 1, 2); }

}  // namespace

long genus_bound(long h) {
  require_base_genus(h);
  const long n = bracket(h);
  return (2 * n + 1) * (n + 1);
}

long critical_degree(long h, long g) {
  require_base_genus(h);
  return g - bracket(h) - 1;
}

long min_verifiable_genus(long h) {
  require_base_genus(h);
  const long e = half_genus(h);
  return parity_of(h) == Parity::kEven ? 6 * e + 4 : 6 * e + 9;
}

TheoremAReport verify_inequality(long h, long g) {
  require_base_genus(h);
  if (g < min_verifiable_genus(h)) {
    throw ContractError("verify_inequality(h=" + std::to_string(h) + ") needs g >= " +
                        std::to_string(min_verifiable_genus(h)) + ", got " + std::to_string(g));
  }
  TheoremAReport r;
  r.h = h;
  r.g = g;
  r.e = half_genus(h);
  r.parity = parity_of(h);
  r.critical_degree = critical_degree(h, g);
  const long e = r.e;
  const long d = r.critical_degree;
  const Rat gfact(factorial(g));

  long dim = 0;
  if (r.parity == Parity::kEven) {
    dim = g - 6 * e - 3;
    r.lhs = gfact * recip_factorial(3 * e + 2) * recip_factorial(g - 3 * e - 2) -
            gfact * recip_factorial(3 * e + 1) * recip_factorial(g - 3 * e - 1);
    const BigInt s = castelnuovo_count(h, 1, e + 1);
    r.rhs = Rat(dim) * Rat(s);
    r.rhs_via_pushforward = pair_via_pushforward(bn1_class(h, e + 1), g - 6 * e - 4, dim);
  } else {
    dim = g - 6 * e - 7;
    r.lhs = gfact * Rat(dim) * recip_factorial(3 * e + 4) * recip_factorial(g - 3 * e - 3);
    const auto base = bn1_class(h, e + 2) * CohomClass::x_power(h, e + 2, 2);
    r.rhs = Rat(binomial(dim, 2)) * evaluate_top(base);
    r.rhs_via_pushforward = pair_via_pushforward(bn1_class(h, e + 2), g - 6 * e - 9, dim);
  }
  r.lhs_via_expansion = evaluate_top(bn1_class(g, d) * CohomClass::x_power(g, d, dim));

  if (r.lhs != r.lhs_via_expansion) {
    throw ConsistencyError("left side routes disagree at (h=" + std::to_string(h) + ", g=" +
                           std::to_string(g) + "): " + r.lhs.to_string() + " vs " +
                           r.lhs_via_expansion.to_string());
  }
  if (r.rhs != r.rhs_via_pushforward) {
    throw ConsistencyError("right side routes disagree at (h=" + std::to_string(h) + ", g=" +
                           std::to_string(g) + "): " + r.rhs.to_string() + " vs " +
                           r.rhs_via_pushforward.to_string());
  }
  r.strict = r.lhs > r.rhs;
  return r;
}

namespace {

class AuditBuilder {
 public:
  explicit AuditBuilder(ProofAudit& audit, Parity parity)
      : audit_(audit), suffix_(parity == Parity::kOdd ? "_odd" : "") {}

  void shared(std::string name, std::string text, const Rat& lhs, Relation rel, const Rat& rhs) {
    push(std::move(name), std::move(text), lhs, rel, rhs);
  }

  void parity(const std::string& name, std::string text, const Rat& lhs, Relation rel,
              const Rat& rhs) {
    push(name + suffix_, std::move(text), lhs, rel, rhs);
  }

 private:
  void push(std::string name, std::string text, const Rat& lhs, Relation rel, const Rat& rhs) {
    audit_.steps.push_back(AuditStep{std::move(name), std::move(text), lhs, rhs, rel,
                                     compare(lhs, rel, rhs)});
  }

  ProofAudit& audit_;
  std::string suffix_;
};

// Dimension of W^1_{n+1}(X) = pi^* W^1_m(C) + W_{n+1-3m}(X), maximized over
// admissible m; -1 when no m with rho(m, h, 1) >= 0 and 3m <= n + 1 exists.
long w1_pullback_dimension(long h, long n) {
  long best = -1;
  for (long m = 1; 3 * m <= n + 1; ++m) {
    const long bn = 2 * m - 2 - h;
    if (bn < 0) {
      continue;
    }
    best = std::max(best, bn + (n + 1 - 3 * m));
  }
  return best;
}

}  // namespace

ProofAudit audit_proof_chain(long h, long g) {
  require_base_genus(h);
  ProofAudit audit;
  audit.h = h;
  audit.g = g;
  audit.e = half_genus(h);
  audit.parity = parity_of(h);
  const long e = audit.e;
  const bool even = audit.parity == Parity::kEven;
  const long d = critical_degree(h, g);
  const long n = bracket(h) + 2;
  AuditBuilder b(audit, audit.parity);

  b.shared("genus_hypothesis", "g >= (2[(3h+1)/2]+1)([(3h+1)/2]+1)", Rat(g), Relation::kGe,
           Rat(genus_bound(h)));
  b.shared("cs_degree_n_plus_1", "n+1 = [(3h+1)/2]+3 <= (g-3h)/2", Rat(n + 1), Relation::kLe,
           Rat(BigInt(g - 3 * h), BigInt(2)));
  b.shared("lemma11_genus", "g >= (2n-3)(n-1)", Rat(g), Relation::kGe,
           Rat((2 * n - 3) * (n - 1)));
  b.shared("w1_n_plus_1_dim", "dim W^1_{n+1}(X) = max_m (2m-2-h) + (n+1-3m) < 1",
           Rat(w1_pullback_dimension(h, n)), Relation::kLt, Rat(1));
  b.shared("lemma11_degree_window", "g-n < d", Rat(g - n), Relation::kLt, Rat(d));

  // e-dependent offsets of the two parity cases.
  const long sigma_dim = even ? g - 6 * e - 4 : g - 6 * e - 8;
  const long beta_min = std::max(4L, even ? 3 * e + 3 : 3 * e + 5);
  const long beta_max = even ? g - 3 * e - 2 : g - 3 * e - 4;
  const long mm = even ? 9 * e + 4 : 9 * e + 10;
  const long beta_pull = even ? 3 * e + 3 : 3 * e + 6;
  const long rho_d = 2 * d - 2 - g;

  b.parity("sigma_dim", even ? "rho(g-3e-1, g, 1) = g-6e-4" : "rho(g-3e-3, g, 1) = g-6e-8",
           Rat(rho_d), Relation::kEq, Rat(sigma_dim));
  b.parity("beta_window", even ? "max(4, 3e+3) <= beta <= g-3e-2" : "max(4, 3e+5) <= beta <= g-3e-4",
           Rat(beta_min), Relation::kLe, Rat(beta_max));
  if (even) {
    b.parity("bpf_pencil_trick", "h^0(L^2) >= beta-3e >= 3", Rat(beta_min - 3 * e), Relation::kGe,
             Rat(3));
    b.parity("residual_contradiction", "12e < g-7", Rat(12 * e), Relation::kLt, Rat(g - 7));
    b.parity("martens_mumford", "2(beta-3e)-5 <= (beta+3e+2)-3 at beta = 9e+4",
             Rat(2 * (mm - 3 * e) - 5), Relation::kLe, Rat(mm + 3 * e + 2 - 3));
  } else {
    b.parity("bpf_pencil_trick", "h^0(L^2) >= beta-3e-2 >= 3", Rat(beta_min - 3 * e - 2),
             Relation::kGe, Rat(3));
    b.parity("residual_contradiction", "12e < g-15", Rat(12 * e), Relation::kLt, Rat(g - 15));
    b.parity("martens_mumford", "2(beta-3e)-9 <= (beta+3e+4)-3 at beta = 9e+10",
             Rat(2 * (mm - 3 * e) - 9), Relation::kLe, Rat(mm + 3 * e + 4 - 3));
  }
  const long cs = g >= 3 * h ? cs_max_degree(g, h) : floor_div(g - 3 * h, 2);
  b.parity("mm_vs_cs", even ? "9e+4 <= (g-3h)/2" : "9e+10 <= (g-3h)/2", Rat(mm), Relation::kLe,
           Rat(cs));
  b.parity("beta_pullback", even ? "beta = 3(e+1) <= 9e+4" : "beta = 3(e+2) <= 9e+10",
           Rat(beta_pull), Relation::kLe, Rat(mm));
  {
    const long base_dim = 2 * (beta_pull / 3) - 2 - h;
    const long residual = d - beta_pull;
    b.parity("dimension_squeeze",
             even ? "(2beta/3-2-2e) + (g-3e-1-beta) = g-6e-4"
                  : "(2beta/3-2-2e-1) + (g-3e-3-beta) = g-6e-8",
             Rat(base_dim + residual), Relation::kEq, Rat(sigma_dim));
  }
  if (even) {
    b.parity("bn_number_base", "rho(e+1, h, 1) = 0", Rat(rho(h, 1, e + 1)), Relation::kEq, Rat(0));
    b.parity("lemma21_hypothesis", "g > 6h+4", Rat(g), Relation::kGt, Rat(6 * h + 4));
  } else {
    b.parity("bn_number_base", "rho(e+2, h, 1) = 1", Rat(rho(h, 1, e + 2)), Relation::kEq, Rat(1));
    b.parity("lemma21_hypothesis", "g > 6h+7", Rat(g), Relation::kGt, Rat(6 * h + 7));
  }
  b.parity("x1_dimension", even ? "rho(d, g, 1)+1 = g-6e-3" : "rho(d, g, 1)+1 = g-6e-7",
           Rat(rho_d + 1), Relation::kEq, Rat(even ? g - 6 * e - 3 : g - 6 * e - 7));

  if (g >= min_verifiable_genus(h)) {
    const auto report = verify_inequality(h, g);
    b.parity("final_inequality", "(x^1_d . x^dim) > (sigma . x^dim)", report.lhs, Relation::kGt,
             report.rhs);
  } else {
    b.parity("final_inequality", "(x^1_d . x^dim) > (sigma . x^dim) [factorial range not met]",
             Rat(0), Relation::kGt, Rat(0));
  }
  return audit;
}

std::vector<TheoremAReport> sweep(long h_lo, long h_hi, long g_margin, unsigned workers) {
  if (h_lo > h_hi) {
    return {};
  }
  if (g_margin < 0) {
    throw ContractError("g_margin must be nonnegative");
  }
  require_base_genus(h_lo);
  const auto shards = static_cast<std::size_t>(h_hi - h_lo + 1);
  std::vector<std::vector<TheoremAReport>> results(shards);
  std::vector<std::exception_ptr> errors(shards);
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    for (std::size_t i = next.fetch_add(1); i < shards; i = next.fetch_add(1)) {
      try {
        const long h = h_lo + static_cast<long>(i);
        const long g0 = genus_bound(h);
        results[i].reserve(static_cast<std::size_t>(g_margin + 1));
        for (long g = g0; g <= g0 + g_margin; ++g) {
          results[i].push_back(verify_inequality(h, g));
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  if (workers == 0) {
    workers = std::max(1U, std::thread::hardware_concurrency());
  }
  const auto count = std::min<std::size_t>(workers, shards);
  if (count <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(count);
    for (std::size_t t = 0; t < count; ++t) {
      pool.emplace_back(work);
    }
  }

  std::vector<TheoremAReport> out;
  for (std::size_t i = 0; i < shards; ++i) {
    if (errors[i]) {
      std::rethrow_exception(errors[i]);
    }
    out.insert(out.end(), std::make_move_iterator(results[i].begin()),
               std::make_move_iterator(results[i].end()));
  }
  return out;
}

}  // namespace tricover
