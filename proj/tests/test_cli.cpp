#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "tricover/cli.hpp"
#include "tricover/output.hpp"

using tricover::cli::dispatch;
using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expected_code = 0) {
  args.insert(args.begin(), {"--format", "json"});
  const Run r = run(args);
  REQUIRE_MESSAGE(r.code == expected_code, r.err);
  return json::parse(r.out);
}

void check_uniform_keys(const json& rows) {
  REQUIRE(rows.is_array());
  REQUIRE_FALSE(rows.empty());
  std::vector<std::string> first;
  for (const auto& [k, v] : rows[0].items()) {
    first.push_back(k);
  }
  for (const auto& row : rows) {
    REQUIRE(row.is_object());
    std::vector<std::string> keys;
    for (const auto& [k, v] : row.items()) {
      keys.push_back(k);
      REQUIRE_FALSE(v.is_number_float());
      REQUIRE_FALSE(v.is_object());
      REQUIRE_FALSE(v.is_array());
    }
    REQUIRE(keys == first);
  }
}

class WorkersEnv {
 public:
  explicit WorkersEnv(const char* value) { ::setenv(tricover::cli::kWorkersEnv, value, 1); }
  ~WorkersEnv() { ::unsetenv(tricover::cli::kWorkersEnv); }
};

}  // namespace

TEST_CASE("documented examples") {
  const Run rho = run({"rho", "--g", "4", "--r", "1", "--d", "3"});
  CHECK(rho.code == 0);
  CHECK(rho.out == "0\n");

  const Run eval = run({"eval", "--g", "4", "--d", "3", "--expr", "bn1(3)*x"});
  CHECK(eval.code == 0);
  CHECK(eval.out == "2\n");

  const json thm = run_json({"theorem-a", "--h", "2", "--g", "28"});
  REQUIRE(thm.size() == 1);
  CHECK(thm[0]["lhs"] == "77805");
  CHECK(thm[0]["rhs"] == "19");
  CHECK(thm[0]["strict"] == true);
  CHECK(thm[0]["critical_degree"] == 24);
}

TEST_CASE("count and cs-bound and lemma11") {
  CHECK(run({"count", "--g", "6", "--r", "1", "--d", "4"}).out == "5\n");
  CHECK(run({"count", "--g", "3", "--r", "1", "--d", "3"}).code == 2);
  CHECK(run({"cs-bound", "--g", "28", "--h", "2"}).out == "11\n");
  CHECK(run({"cs-bound", "--g", "5", "--h", "2"}).code == 2);
  const Run yes = run({"lemma11", "--g", "28", "--n", "5"});
  CHECK(yes.code == 0);
  CHECK(yes.out == "true\n");
  const Run no = run({"lemma11", "--g", "27", "--n", "5"});
  CHECK(no.code == 0);
  CHECK(no.out == "false\n");
}

TEST_CASE("pushpull") {
  const Run r = run({"pushpull", "--g", "28", "--d", "19", "--k", "18", "--expr", "x^19"});
  CHECK(r.code == 0);
  CHECK(r.out == "19*x\n");
  CHECK(run({"pushpull", "--g", "4", "--d", "3", "--k", "1", "--expr", "theta"}).code == 2);
  CHECK(run({"pushpull", "--g", "4", "--d", "3", "--k", "5", "--expr", "x"}).code == 2);
}

TEST_CASE("eval verbose reports truncation") {
  const Run r = run({"eval", "--g", "4", "--d", "3", "--expr", "x^4 + x^3", "--verbose"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
  CHECK(r.err.find("note:") != std::string::npos);
  CHECK(run({"eval", "--g", "4", "--d", "3", "--expr", "x^4 + x^3"}).err.empty());
}

TEST_CASE("parser errors exit 2 with a position") {
  for (const char* expr : {"x +* 2", "1/0", "bn1(2)", "x^theta"}) {
    const Run r = run({"eval", "--g", "4", "--d", "3", "--expr", expr});
    CHECK_MESSAGE(r.code == 2, expr);
    CHECK(r.out.empty());
    CHECK(r.err.find("position") != std::string::npos);
  }
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"rho", "--g", "4"}).code == 2);
  CHECK(run({"rho", "--g", "four", "--r", "1", "--d", "3"}).code == 2);
  CHECK(run({"rho", "--g", "4", "--r", "1", "--d", "3", "--bogus"}).code == 2);
  CHECK(run({"--format", "yaml", "rho", "--g", "4", "--r", "1", "--d", "3"}).code == 2);
  CHECK(run({"theorem-a"}).code == 2);
  CHECK(run({"theorem-a", "--h-range", "1-4"}).code == 2);
  CHECK(run({"theorem-a", "--h", "2", "--g", "5"}).code == 2);
  CHECK(run({"miranda", "--g", "28", "--h", "2"}).code == 2);
  const Run unknown = run({"frobnicate"});
  CHECK_FALSE(unknown.err.empty());
}

TEST_CASE("help exits 0") {
  const Run r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("theorem-a") != std::string::npos);
}

TEST_CASE("audit exit codes follow the verdicts") {
  const Run bad = run({"--format", "json", "audit", "--h", "2", "--g", "28"});
  CHECK(bad.code == 1);
  const json rows = json::parse(bad.out);
  check_uniform_keys(rows);
  CHECK(rows.size() == 17);
  long failing = 0;
  for (const auto& row : rows) {
    if (row["holds"] == false) {
      ++failing;
      CHECK(row["name"] == "mm_vs_cs");
      CHECK(row["lhs"] == "13");
      CHECK(row["rhs"] == "11");
    }
  }
  CHECK(failing == 1);
  CHECK(run({"audit", "--h", "4", "--g", "91"}).code == 0);
  CHECK(run({"audit", "--h", "0", "--g", "91"}).code == 2);
}

TEST_CASE("theorem-a sweep JSON and CSV shape") {
  const json rows = run_json({"theorem-a", "--h-range", "1:3", "--g-margin", "4"});
  check_uniform_keys(rows);
  CHECK(rows.size() == 15);
  CHECK(rows[0]["h"] == 1);
  CHECK(rows[0]["g"] == 15);
  CHECK(rows[0]["lhs"] == "910");
  CHECK(rows[14]["h"] == 3);
  CHECK(rows[14]["g"] == 70);
  const json empty = run_json({"theorem-a", "--h-range", "5:4"});
  CHECK(empty.is_array());
  CHECK(empty.empty());

  const Run csv = run({"--format", "csv", "theorem-a", "--h-range", "1:2"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("h,g,e,parity,critical_degree,lhs,rhs,lhs_via_expansion,rhs_via_pushforward,strict\r\n", 0) == 0);
  CHECK(csv.out.find("\r\n2,28,1,even,24,77805,19,77805,19,true\r\n") != std::string::npos);
}

TEST_CASE("sweep output is independent of the worker count") {
  std::string serial;
  {
    WorkersEnv env("1");
    const Run r = run({"--format", "json", "theorem-a", "--h-range", "1:4", "--g-margin", "20"});
    REQUIRE(r.code == 0);
    serial = r.out;
  }
  for (const char* w : {"2", "8"}) {
    WorkersEnv env(w);
    const Run r = run({"--format", "json", "theorem-a", "--h-range", "1:4", "--g-margin", "20"});
    REQUIRE(r.code == 0);
    CHECK(r.out == serial);
  }
  {
    WorkersEnv env("zero");
    CHECK(run({"theorem-a", "--h-range", "1:2"}).code == 2);
  }
}

TEST_CASE("miranda") {
  const json one = run_json({"miranda", "--g", "28", "--h", "2", "--delta", "0"});
  REQUIRE(one.size() == 1);
  CHECK(one[0]["det_e_degree"] == -24);
  CHECK(one[0]["deg_m"] == -12);
  CHECK(one[0]["fx_fiber_coeff"] == 12);
  const json all = run_json({"miranda", "--g", "28", "--h", "2", "--all"});
  check_uniform_keys(all);
  std::vector<long> deltas;
  for (const auto& row : all) {
    deltas.push_back(row["delta"]);
  }
  CHECK(deltas == std::vector<long>{-2, 0, 2, 4, 6, 8});
  CHECK(run({"miranda", "--g", "28", "--h", "2", "--delta", "1"}).code == 2);
  CHECK(run({"miranda", "--g", "28", "--h", "2", "--delta", "10"}).code == 2);
}

TEST_CASE("lemma21 and reducedness") {
  const json m = run_json({"lemma21", "--g", "28", "--h", "2"});
  CHECK(m[0]["bound_m"] == "-4");
  CHECK(m[0]["bound_l"] == "-7");
  CHECK(m[0]["vanishing_guaranteed"] == true);
  CHECK(m[0]["twist_degree_2d"] == 4);

  const json odd = run_json({"lemma21", "--g", "26", "--h", "3"});
  CHECK(odd[0]["bound_m"] == "-1/3");
  CHECK(odd[0]["bound_l"] == "-2");

  const json empty = run_json({"lemma21", "--g", "4", "--h", "2"});
  CHECK(empty[0]["max_deg_m_twisted"].is_null());

  const json per = run_json({"lemma21", "--g", "28", "--h", "2", "--per-delta"});
  check_uniform_keys(per);
  CHECK(per.size() == 6);

  const json r = run_json({"reducedness", "--h", "3"});
  CHECK(r[0]["miranda"] == 26);
  CHECK(r[0]["alternative"] == 39);
}

TEST_CASE("cyclic, gap and feasible") {
  const json p = run_json({"cyclic", "--g", "15", "--h", "1", "--t", "10"});
  CHECK(p[0]["k1"] == 6);
  CHECK(p[0]["k2"] == 8);
  CHECK(p[0]["dim_h1"] == 6);
  CHECK(p[0]["n1_lower"] == 24);
  CHECK(run({"cyclic", "--g", "15", "--h", "1", "--t", "9"}).code == 2);
  CHECK(run({"cyclic", "--g", "15", "--h", "1", "--t", "20"}).code == 2);
  const json swapped = run_json({"cyclic", "--g", "15", "--h", "1", "--t", "4", "--normalize"});
  CHECK(swapped[0]["t"] == 10);

  const json gap = run_json({"gap", "--g", "15", "--h", "1", "--t", "10"});
  CHECK(gap[0]["cs_bound"] == 6);
  CHECK(gap[0]["composed_below"] == "8");
  CHECK(gap[0]["largest_excluded"] == "7");
  CHECK(gap[0]["exists_at_most"] == 10);
  CHECK(gap[0]["theorem_a_degree"] == 12);
  CHECK(run({"gap", "--g", "15", "--h", "1", "--t", "4"}).code == 2);
  CHECK(run_json({"gap", "--g", "15", "--h", "1", "--t", "4", "--normalize"})[0]["t"] == 10);

  const json f = run_json({"feasible", "--g", "15", "--h", "1", "--t", "10"});
  CHECK(f[0]["feasible"] == true);
  CHECK(f[0]["ell"] == 2);
  const json nf = run_json({"feasible", "--g", "15", "--h", "1", "--t", "5"});
  CHECK(nf[0]["feasible"] == false);
  CHECK(nf[0]["ell"].is_null());
  CHECK(run({"feasible", "--g", "15", "--h", "1", "--t", "5"}).out == "false\n");
}

TEST_CASE("csv quoting and nulls") {
  const Run r = run({"--format", "csv", "eval", "--g", "4", "--d", "3", "--expr", "theta^2/2 - x*theta"});
  CHECK(r.code == 0);
  CHECK(r.out == "g,d,expr,class,value\r\n4,3,theta^2/2 - x*theta,1/2*theta^2 - x*theta,0\r\n");
  const Run q = run({"--format", "csv", "eval", "--g", "4", "--d", "3", "--expr", "(x, 1)"});
  CHECK(q.code == 2);
  const Run nulls = run({"--format", "csv", "feasible", "--g", "15", "--h", "1", "--t", "5"});
  CHECK(nulls.out == "g,h,t,feasible,ell\r\n15,1,5,false,\r\n");
}

TEST_CASE("out writes a file instead of stdout") {
  const auto path = std::filesystem::temp_directory_path() / "tricover_cli_out.json";
  std::filesystem::remove(path);
  const Run r = run({"--format", "json", "--out", path.string(), "rho", "--g", "4", "--r", "1", "--d", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  const json rows = json::parse(content.str());
  CHECK(rows[0]["rho"] == 0);
  std::filesystem::remove(path);

  const Run bad = run({"--out", "/nonexistent-dir/x.json", "rho", "--g", "4", "--r", "1", "--d", "3"});
  CHECK(bad.code == 2);
}

TEST_CASE("csv writer quotes separators and quotes") {
  tricover::Emission e;
  e.columns = {"a", "b"};
  tricover::OutputRecord rec;
  rec.add("a", "x, y").add("b", "say \"hi\"");
  e.records.push_back(rec);
  std::ostringstream os;
  tricover::write_csv(e, os);
  CHECK(os.str() == "a,b\r\n\"x, y\",\"say \"\"hi\"\"\"\r\n");

  tricover::OutputRecord wrong;
  wrong.add("a", 1L);
  e.records.push_back(wrong);
  std::ostringstream sink;
  CHECK_THROWS(tricover::write_json(e, sink));
}
