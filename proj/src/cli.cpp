#include "tricover/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "tricover/brill_noether.hpp"
#include "tricover/cohom.hpp"
#include "tricover/cyclic_cover.hpp"
#include "tricover/errors.hpp"
#include "tricover/expr.hpp"
#include "tricover/output.hpp"
#include "tricover/theorem_a.hpp"
#include "tricover/triple_cover.hpp"

namespace tricover::cli {

namespace {

struct UsageError : Error {
  using Error::Error;
};

OutputRecord report_record(const TheoremAReport& r) {
  OutputRecord rec;
  rec.add("h", r.h)
      .add("g", r.g)
      .add("e", r.e)
      .add("parity", std::string(to_string(r.parity)))
      .add("critical_degree", r.critical_degree)
      .add("lhs", r.lhs)
      .add("rhs", r.rhs)
      .add("lhs_via_expansion", r.lhs_via_expansion)
      .add("rhs_via_pushforward", r.rhs_via_pushforward)
      .add("strict", r.strict);
  return rec;
}

OutputRecord step_record(const ProofAudit& a, std::size_t index, const AuditStep& s) {
  OutputRecord rec;
  rec.add("h", a.h)
      .add("g", a.g)
      .add("e", a.e)
      .add("parity", std::string(to_string(a.parity)))
      .add("index", static_cast<long>(index))
      .add("name", s.name)
      .add("inequality", s.inequality_text)
      .add("lhs", s.lhs)
      .add("relation", std::string(to_string(s.relation)))
      .add("rhs", s.rhs)
      .add("holds", s.holds);
  return rec;
}

OutputRecord geometry_record(const TripleCoverGeometry& t) {
  OutputRecord rec;
  rec.add("g", t.g)
      .add("h", t.h)
      .add("delta", t.delta)
      .add("det_e_degree", t.det_E_degree)
      .add("n", t.n)
      .add("deg_m", t.deg_M)
      .add("deg_l", t.deg_L)
      .add("fx_fiber_coeff", t.fX_fiber_coeff);
  return rec;
}

template <typename T>
OutputRecord& add_optional(OutputRecord& rec, std::string key, const std::optional<T>& v) {
  if (v) {
    return rec.add(std::move(key), *v);
  }
  return rec.add_null(std::move(key));
}

OutputRecord profile_record(const CyclicCoverProfile& p) {
  OutputRecord rec;
  rec.add("g", p.g).add("h", p.h).add("t", p.t).add("branch_count", p.branch_count);
  rec.add("k1", p.k1).add("k2", p.k2).add("dim_h0", p.dim_H0);
  add_optional(rec, "dim_h1", p.dim_H1);
  add_optional(rec, "dim_h2", p.dim_H2);
  rec.add("n1_lower", p.N1_lower).add("n2_lower", p.N2_lower);
  return rec;
}

Emission single(OutputRecord rec, std::string scalar_key = "") {
  Emission e;
  e.columns = rec.keys();
  e.records.push_back(std::move(rec));
  e.scalar_key = std::move(scalar_key);
  return e;
}

std::pair<long, long> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    std::size_t used = 0;
    if (colon == std::string::npos) {
      const long v = std::stol(text, &used);
      if (used != text.size()) {
        throw UsageError("");
      }
      return {v, v};
    }
    const std::string lo_text = text.substr(0, colon);
    const std::string hi_text = text.substr(colon + 1);
    const long lo = std::stol(lo_text, &used);
    if (used != lo_text.size()) {
      throw UsageError("");
    }
    const long hi = std::stol(hi_text, &used);
    if (used != hi_text.size()) {
      throw UsageError("");
    }
    return {lo, hi};
  } catch (const std::exception&) {
    throw UsageError("--h-range must look like LO:HI, got '" + text + "'");
  }
}

unsigned workers_from_env() {
  const char* raw = std::getenv(kWorkersEnv);
  if (raw == nullptr || *raw == '\0') {
    return 0;
  }
  try {
    std::size_t used = 0;
    const long v = std::stol(raw, &used);
    if (used != std::string(raw).size() || v < 1) {
      throw UsageError("");
    }
    return static_cast<unsigned>(v);
  } catch (const std::exception&) {
    throw UsageError(std::string(kWorkersEnv) + " must be a positive integer, got '" + raw + "'");
  }
}

struct Options {
  std::string format = "table";
  std::string out_path;
  long g = 0, h = 0, r = 1, d = 0, n = 0, k = 0, t = 0, delta = 0, g_margin = 0;
  std::string expr, h_range;
  bool all = false, verbose = false, per_delta = false, normalize = false;
};

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact enumerative checks for triple coverings of curves", "tricover"};
  app.set_help_flag("--help", "print this help and exit");
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", o.format, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--out", o.out_path, "write output to FILE instead of stdout");

  auto* rho_cmd = app.add_subcommand("rho", "Brill-Noether number g - (r+1)(g-d+r)");
  rho_cmd->add_option("--g", o.g)->required();
  rho_cmd->add_option("--r", o.r)->required();
  rho_cmd->add_option("--d", o.d)->required();

  auto* count_cmd = app.add_subcommand("count", "Castelnuovo count of g^r_d when rho = 0");
  count_cmd->add_option("--g", o.g)->required();
  count_cmd->add_option("--r", o.r)->required();
  count_cmd->add_option("--d", o.d)->required();

  auto* eval_cmd = app.add_subcommand("eval", "top-degree evaluation of a class in X_d");
  eval_cmd->add_option("--g", o.g)->required();
  eval_cmd->add_option("--d", o.d)->required();
  eval_cmd->add_option("--expr", o.expr)->required();
  eval_cmd->add_flag("--verbose", o.verbose, "report monomials removed by truncation");

  auto* pushpull_cmd = app.add_subcommand("pushpull", "apply B_k to a polynomial in x");
  pushpull_cmd->add_option("--g", o.g)->required();
  pushpull_cmd->add_option("--d", o.d)->required();
  pushpull_cmd->add_option("--k", o.k)->required();
  pushpull_cmd->add_option("--expr", o.expr)->required();
  pushpull_cmd->add_flag("--verbose", o.verbose, "report monomials removed by truncation");

  auto* cs_cmd = app.add_subcommand("cs-bound", "Castelnuovo-Severi degree floor((g-3h)/2)");
  cs_cmd->add_option("--g", o.g)->required();
  cs_cmd->add_option("--h", o.h)->required();

  auto* lemma11_cmd = app.add_subcommand("lemma11", "genus hypothesis for equidimensional W^1_d");
  lemma11_cmd->add_option("--g", o.g)->required();
  lemma11_cmd->add_option("--n", o.n)->required();

  auto* thm_cmd = app.add_subcommand("theorem-a", "final inequality for one (h, g) or a sweep");
  auto* thm_h = thm_cmd->add_option("--h", o.h);
  auto* thm_g = thm_cmd->add_option("--g", o.g);
  auto* thm_range = thm_cmd->add_option("--h-range", o.h_range, "LO:HI");
  thm_cmd->add_option("--g-margin", o.g_margin, "sweep g over [bound, bound + margin]");
  thm_range->excludes(thm_h)->excludes(thm_g);
  thm_h->needs(thm_g);
  thm_g->needs(thm_h);

  auto* audit_cmd = app.add_subcommand("audit", "replay every inequality of the existence proof");
  audit_cmd->add_option("--h", o.h)->required();
  audit_cmd->add_option("--g", o.g)->required();

  auto* miranda_cmd = app.add_subcommand("miranda", "degree ledger of P(E) for one delta or all");
  miranda_cmd->add_option("--g", o.g)->required();
  miranda_cmd->add_option("--h", o.h)->required();
  auto* miranda_delta = miranda_cmd->add_option("--delta", o.delta);
  auto* miranda_all = miranda_cmd->add_flag("--all", o.all, "every admissible delta");
  miranda_delta->excludes(miranda_all);

  auto* lemma21_cmd = app.add_subcommand("lemma21", "twisted degree margins for reducedness");
  lemma21_cmd->add_option("--g", o.g)->required();
  lemma21_cmd->add_option("--h", o.h)->required();
  lemma21_cmd->add_flag("--per-delta", o.per_delta, "one row per admissible delta");

  auto* reduced_cmd = app.add_subcommand("reducedness", "genus bounds of the two reducedness arguments");
  reduced_cmd->add_option("--h", o.h)->required();

  auto* cyclic_cmd = app.add_subcommand("cyclic", "eigenspace ledger of a cyclic triple cover");
  cyclic_cmd->add_option("--g", o.g)->required();
  cyclic_cmd->add_option("--h", o.h)->required();
  cyclic_cmd->add_option("--t", o.t)->required();
  cyclic_cmd->add_flag("--normalize", o.normalize, "replace t by its normalized value first");

  auto* gap_cmd = app.add_subcommand("gap", "pencil degree thresholds for a cyclic cover");
  gap_cmd->add_option("--g", o.g)->required();
  gap_cmd->add_option("--h", o.h)->required();
  gap_cmd->add_option("--t", o.t)->required();
  gap_cmd->add_flag("--normalize", o.normalize, "replace t by its normalized value first");

  auto* feasible_cmd = app.add_subcommand("feasible", "existence conditions for the cyclic construction");
  feasible_cmd->add_option("--g", o.g)->required();
  feasible_cmd->add_option("--h", o.h)->required();
  feasible_cmd->add_option("--t", o.t)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  const OutputFormat out_format = o.format == "json"  ? OutputFormat::kJson
                              : o.format == "csv" ? OutputFormat::kCsv
                                                  : OutputFormat::kTable;
  int code = kOk;
  Emission emission;
  std::vector<std::string> notes;

  try {
    if (rho_cmd->parsed()) {
      OutputRecord rec;
      rec.add("g", o.g).add("r", o.r).add("d", o.d).add("rho", rho(o.g, o.r, o.d));
      emission = single(std::move(rec), "rho");
    } else if (count_cmd->parsed()) {
      OutputRecord rec;
      rec.add("g", o.g).add("r", o.r).add("d", o.d).add("count", castelnuovo_count(o.g, o.r, o.d));
      emission = single(std::move(rec), "count");
    } else if (eval_cmd->parsed()) {
      const auto c = parse(o.expr, o.g, o.d, o.verbose ? &notes : nullptr);
      OutputRecord rec;
      rec.add("g", o.g).add("d", o.d).add("expr", o.expr).add("class", format(c));
      rec.add("value", evaluate_top(c));
      emission = single(std::move(rec), "value");
    } else if (pushpull_cmd->parsed()) {
      const auto c = parse(o.expr, o.g, o.d, o.verbose ? &notes : nullptr);
      const auto b = pushforward_B(o.k, c);
      OutputRecord rec;
      rec.add("g", o.g).add("d", o.d).add("k", o.k).add("expr", o.expr);
      rec.add("result_index", b.sym_index()).add("class", format(b));
      emission = single(std::move(rec), "class");
    } else if (cs_cmd->parsed()) {
      OutputRecord rec;
      rec.add("g", o.g).add("h", o.h).add("cs_max_degree", cs_max_degree(o.g, o.h));
      emission = single(std::move(rec), "cs_max_degree");
    } else if (lemma11_cmd->parsed()) {
      OutputRecord rec;
      rec.add("g", o.g).add("n", o.n).add("holds", lemma11_hypothesis(o.g, o.n));
      emission = single(std::move(rec), "holds");
    } else if (thm_cmd->parsed()) {
      std::vector<TheoremAReport> reports;
      if (!o.h_range.empty()) {
        const auto [lo, hi] = parse_range(o.h_range);
        reports = sweep(lo, hi, o.g_margin, workers_from_env());
      } else if (thm_h->count() > 0) {
        reports.push_back(verify_inequality(o.h, o.g));
      } else {
        throw UsageError("theorem-a needs --h and --g, or --h-range");
      }
      emission.columns = report_record(TheoremAReport{}).keys();
      for (const auto& r : reports) {
        emission.records.push_back(report_record(r));
        if (!r.strict) {
          code = kViolation;
        }
      }
    } else if (audit_cmd->parsed()) {
      const auto audit = audit_proof_chain(o.h, o.g);
      emission.columns = step_record(audit, 0, AuditStep{}).keys();
      for (std::size_t i = 0; i < audit.steps.size(); ++i) {
        emission.records.push_back(step_record(audit, i, audit.steps[i]));
      }
      if (!audit.all_hold()) {
        code = kViolation;
      }
    } else if (miranda_cmd->parsed()) {
      emission.columns = geometry_record(TripleCoverGeometry{}).keys();
      if (o.all) {
        for (long delta : admissible_deltas(o.g, o.h)) {
          emission.records.push_back(geometry_record(derive_geometry(o.g, o.h, delta)));
        }
      } else if (miranda_delta->count() > 0) {
        emission.records.push_back(geometry_record(derive_geometry(o.g, o.h, o.delta)));
      } else {
        throw UsageError("miranda needs --delta or --all");
      }
    } else if (lemma21_cmd->parsed()) {
      const auto m = lemma21_margins(o.g, o.h);
      if (o.per_delta) {
        OutputRecord header;
        header.add("g", 0L).add("h", 0L).add("delta", 0L).add("deg_m_twisted", 0L);
        header.add("deg_l_twisted", 0L).add("bound_m", "").add("bound_l", "");
        emission.columns = header.keys();
        for (const auto& row : m.per_delta) {
          OutputRecord rec;
          rec.add("g", o.g).add("h", o.h).add("delta", row.delta);
          rec.add("deg_m_twisted", row.deg_M_twisted).add("deg_l_twisted", row.deg_L_twisted);
          rec.add("bound_m", m.bound_M).add("bound_l", m.bound_L);
          emission.records.push_back(std::move(rec));
        }
      } else {
        OutputRecord rec;
        rec.add("g", o.g).add("h", o.h).add("parity", std::string(to_string(m.parity)));
        rec.add("twist_degree_2d", m.twist_degree_2D).add("bound_m", m.bound_M);
        rec.add("bound_l", m.bound_L).add("vanishing_guaranteed", m.vanishing_guaranteed);
        std::optional<long> max_m;
        std::optional<long> max_l;
        for (const auto& row : m.per_delta) {
          max_m = std::max(max_m.value_or(row.deg_M_twisted), row.deg_M_twisted);
          max_l = std::max(max_l.value_or(row.deg_L_twisted), row.deg_L_twisted);
        }
        add_optional(rec, "max_deg_m_twisted", max_m);
        add_optional(rec, "max_deg_l_twisted", max_l);
        emission = single(std::move(rec));
      }
    } else if (reduced_cmd->parsed()) {
      const auto b = reducedness_bounds(o.h);
      OutputRecord rec;
      rec.add("h", o.h).add("parity", std::string(to_string(parity_of(o.h))));
      rec.add("e", half_genus(o.h)).add("miranda", b.miranda).add("alternative", b.alternative);
      emission = single(std::move(rec));
    } else if (cyclic_cmd->parsed()) {
      const long t = o.normalize ? normalize_t(o.g, o.h, o.t) : o.t;
      emission = single(profile_record(derive_profile(o.g, o.h, t)));
    } else if (gap_cmd->parsed()) {
      const long t = o.normalize ? normalize_t(o.g, o.h, o.t) : o.t;
      const auto r = pencil_gap_report(o.g, o.h, t);
      OutputRecord rec;
      rec.add("g", o.g).add("h", o.h).add("t", t).add("cs_bound", r.cs_bound);
      rec.add("composed_below", r.composed_below).add("largest_excluded", r.largest_excluded());
      rec.add("exists_at_most", r.exists_at_most).add("theorem_a_degree", r.theorem_a_degree);
      emission = single(std::move(rec));
    } else if (feasible_cmd->parsed()) {
      const auto f = construction_feasible(o.g, o.h, o.t);
      OutputRecord rec;
      rec.add("g", o.g).add("h", o.h).add("t", o.t).add("feasible", f.feasible);
      add_optional(rec, "ell", f.ell);
      emission = single(std::move(rec), "feasible");
    }
  } catch (const ConsistencyError& e) {
    err << "error: internal consistency check failed: " << e.what() << "\n";
    return kViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  for (const auto& note : notes) {
    err << "note: " << note << "\n";
  }

  std::ostringstream buffer;
  write(emission, out_format, buffer);
  if (o.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file || !(file << buffer.str())) {
      err << "error: cannot write " << o.out_path << "\n";
      return kUsage;
    }
  }
  return code;
}

}  // namespace tricover::cli
