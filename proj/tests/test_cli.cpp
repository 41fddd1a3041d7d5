#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "reference_expressions.hpp"
#include "zeta_rpa/serialize.hpp"

using namespace zeta_rpa;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::string& args, const std::string& env = "") {
  std::string err_file = "cli_stderr.txt";
  std::string cmd = env + " " + std::string(ZETA_RPA_CLI) + " " + args + " 2>" + err_file;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  int status = pclose(p);
  std::ifstream f(err_file);
  std::stringstream ss;
  ss << f.rdbuf();
  return {WEXITSTATUS(status), out, ss.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("bernoulli") {
  Run r = run("bernoulli --k 12");
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out) == "-691/2730");
}

TEST_CASE("rpa-symbolic matches the published form") {
  Run r = run("rpa-symbolic --n 0 --a 1 --m1 2 --m2 1");
  REQUIRE(r.code == 0);
  RpaSymbolic sym = rpa_symbolic_from_json(Json::parse(r.out));
  CHECK(sym.ratfunc == ref::expressions()[0].ratfunc);
  Run two = run("rpa symbolic --n 2 --a 1 --m1 3 --m2 2");
  REQUIRE(two.code == 0);
  CHECK(rpa_symbolic_from_json(Json::parse(two.out)).ratfunc == ref::expressions()[9].ratfunc);
}

TEST_CASE("rates-scan") {
  Run r = run("rates-scan --case s2 --lo 0.5 --hi 2.0 --step 0.01");
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(std::stod(j["lo"].get<std::string>()) == doctest::Approx(0.74).epsilon(0.014));
  CHECK(std::stod(j["hi"].get<std::string>()) == doctest::Approx(1.53).epsilon(0.007));
}

TEST_CASE("pade output parses back") {
  Run q = run("pade --s 5/2 --m1 3 --m2 2");
  REQUIRE(q.code == 0);
  CHECK(pade_q_from_json(Json::parse(q.out)).m1 == 3);
  Run qs = run("pade --m1 3 --m2 2 --route shifted --p 1");
  REQUIRE(qs.code == 0);
  CHECK(pade_qs_from_json(Json::parse(qs.out)).m2 == 2);
}

TEST_CASE("report schemas") {
  Json s2 = Json::parse(run("s2 apery --n 3 --m 3").out);
  for (const char* k : {"u", "v", "scaled_u", "scaled_v", "bound", "error"}) CHECK(s2.contains(k));
  Json s3 = Json::parse(run("s3-apery --n 3 --m 3").out);
  for (const char* k : {"g", "f", "scaled_g", "scaled_f", "bound", "error"}) CHECK(s3.contains(k));
  Json wv = Json::parse(run("weights verify --s 5/2 --a 1.3").out);
  for (const char* k : {"rhs", "oracle", "abs_err"}) CHECK(wv.contains(k));
  CHECK(std::stod(wv["abs_err"].get<std::string>()) < 1e-30);
  Json wm = Json::parse(run("weights-moments --s 3 --kmax 4").out);
  CHECK(wm["rows"].size() == 3);
  Json cc = Json::parse(run("s3-apery-crosscheck --mmax 3").out);
  CHECK(cc["rows"].size() == 3);
  CHECK(cc["rows"][2]["apery_b"] == "1445");
  Json t = Json::parse(run("rpa-table --s 2 --mmax 3").out);
  CHECK(t["rows"].size() == 3);
  Json ev = Json::parse(run("rpa-eval --s 2.5 --a 13/10 --n 2 --m1 5 --m2 4").out);
  CHECK(ev["s"] == "5/2");
}

TEST_CASE("csv and text formats") {
  Run csv = run("bernoulli --k 0 --kmax 4 --format csv");
  CHECK(csv.out == "k,value\n0,1\n1,-1/2\n2,1/6\n3,0\n4,-1/30\n");
  Run txt = run("oracle-zeta --s 2 --format text --precision 64");
  CHECK(txt.out.rfind("s = 2\n", 0) == 0);
}

TEST_CASE("precision flag and environment") {
  std::string a = run("oracle-zeta --s 3 --precision 64").out;
  std::string b = run("oracle-zeta --s 3", "ZETA_RPA_PRECISION=64").out;
  std::string c = run("oracle-zeta --s 3").out;
  CHECK(a == b);
  CHECK(a != c);
}

TEST_CASE("output file") {
  Run r = run("bernoulli --k 2 --out cli_out.json");
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(Json::parse(slurp("cli_out.json")) == "1/6");
}

TEST_CASE("determinism") {
  for (const char* args : {"rpa-symbolic --n 1 --a 1 --m1 4 --m2 3", "s3-apery-crosscheck --mmax 4",
                           "weights-verify --s 3"}) {
    CHECK(run(args).out == run(args).out);
  }
}

TEST_CASE("exit codes") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("bernoulli --k 2 --bogus 1").code == 2);
  CHECK(run("oracle-zeta --s 1e3").code == 2);
  CHECK(run("bernoulli --k 2 --format xml").code == 2);
  Run pole = run("oracle-zeta --s 1");
  CHECK(pole.code == 3);
  Json err = Json::parse(pole.err);
  CHECK(err["error"] == "PoleAtOne");
  Run degenerate = run("pade --s 2 --m1 3 --m2 1");
  CHECK(degenerate.code == 3);
  CHECK(Json::parse(degenerate.err)["error"] == "DegenerateTable");
}

TEST_CASE("golden files") {
  struct G {
    const char* args;
    const char* file;
  };
  for (G g : {G{"rpa-symbolic --n 0 --a 1 --m1 3 --m2 2", "rpa_symbolic_0_3_2.json"},
              G{"s3-apery-crosscheck --mmax 4 --format csv", "s3_crosscheck_4.csv"},
              G{"s2-apery --n 2 --m 2", "s2_apery_2_2.json"}}) {
    CAPTURE(g.args);
    CHECK(run(g.args).out == slurp(std::string(ZETA_RPA_GOLDEN_DIR) + "/" + g.file));
  }
}
