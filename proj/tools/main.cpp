#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "zeta_rpa/exact_core.hpp"
#include "zeta_rpa/oracle.hpp"
#include "zeta_rpa/psi_rpa.hpp"
#include "zeta_rpa/serialize.hpp"
#include "zeta_rpa/special_s3.hpp"
#include "zeta_rpa/weights.hpp"

using namespace zeta_rpa;

namespace {

struct Globals {
  long precision = 128;
  std::string format = "json";
  std::string out;
};

int digits_for(long bits) { return static_cast<int>(std::ceil(static_cast<double>(bits) * 0.30103)) + 2; }

std::string num(const BigFloat& x, long bits) { return x.to_string(digits_for(bits)); }

// Two-word verbs ("s2 apery") become their hyphenated form.
std::vector<std::string> normalize_args(int argc, char** argv) {
  static const std::map<std::string, std::string> pairs = {
      {"rpa eval", "rpa-eval"},          {"rpa symbolic", "rpa-symbolic"}, {"rpa table", "rpa-table"},
      {"s2 apery", "s2-apery"},          {"s3 apery", "s3-apery"},         {"s3 apery-crosscheck", "s3-apery-crosscheck"},
      {"weights verify", "weights-verify"}, {"weights moments", "weights-moments"}, {"rates scan", "rates-scan"},
      {"oracle zeta", "oracle-zeta"},
  };
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.size() >= 2) {
    auto it = pairs.find(args[0] + " " + args[1]);
    if (it != pairs.end()) {
      args[0] = it->second;
      args.erase(args.begin() + 1);
    }
  }
  std::reverse(args.begin(), args.end());  // CLI11 expects reversed vectors
  return args;
}

std::string csv_cell(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

// Objects with a "rows" array become one CSV line per row; anything else is a
// single row.
std::string render(const Json& j, const std::string& format) {
  if (format == "json") return j.dump(2) + "\n";
  if (format == "text") {
    if (j.is_string()) return j.get<std::string>() + "\n";
    std::ostringstream os;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.key() == "rows") {
        for (const Json& row : *it) os << row.dump() << "\n";
      } else {
        os << it.key() << " = " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
      }
    }
    return os.str();
  }
  Json rows = j.is_object() && j.contains("rows") ? j.at("rows") : Json::array({j});
  std::ostringstream os;
  if (rows.empty()) return "";
  if (!rows[0].is_object()) {
    for (const Json& r : rows) os << csv_cell(r) << "\n";
    return os.str();
  }
  bool first = true;
  for (auto it = rows[0].begin(); it != rows[0].end(); ++it) {
    os << (first ? "" : ",") << it.key();
    first = false;
  }
  os << "\n";
  for (const Json& r : rows) {
    first = true;
    for (auto it = r.begin(); it != r.end(); ++it) {
      os << (first ? "" : ",") << csv_cell(*it);
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

BigRational rational_flag(const std::string& name, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const ParseError& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
}

double double_flag(const std::string& name, const std::string& text) { return rational_flag(name, text).get_d(); }

Json pade_json(const std::optional<std::string>& s_text, int m1, int m2, const std::string& route, int p) {
  if (s_text) {
    BigRational s = rational_flag("s", *s_text);
    std::vector<BigRational> series = psi_series(s, m1 + m2 + 1);
    if (route == "shifted") return to_json(pade_shifted(series, m2, p));
    return to_json(pade(series, m1, m2));
  }
  std::vector<RatFunc> series = psi_series_symbolic(m1 + m2 + 1);
  if (route == "shifted") return to_json(pade_shifted(series, m2, p));
  return to_json(pade(series, m1, m2));
}

}  // namespace

int main(int argc, char** argv) {
  Globals g;
  if (const char* env = std::getenv("ZETA_RPA_PRECISION")) {
    try {
      g.precision = std::stol(env);
    } catch (const std::exception&) {
      std::cerr << "ZETA_RPA_PRECISION must be an integer\n";
      return 2;
    }
  }

  CLI::App app{"Remainder Pade approximants for the Hurwitz zeta function"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--precision", g.precision, "working precision in bits")->check(CLI::Range(16L, 1L << 20));
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", g.out, "write output to FILE");

  std::function<Json()> action;
  std::map<std::string, std::string> text;  // rational-valued flags, parsed exactly later
  auto rat = [&](CLI::App* sub, const std::string& name, const std::string& def, const std::string& help) {
    text[name] = def;
    auto* opt = sub->add_option("--" + name, text[name], help);
    if (def.empty()) opt->required();
  };
  auto R = [&](const std::string& name) { return rational_flag(name, text.at(name)); };

  int k = 0, kmax = -1, n = 0, m = 0, m1 = 0, m2 = 0, p = 1, mmax = 6;
  std::string route = "hankel", which = "s2", method = "auto";
  std::optional<std::string> s_opt;

  auto* c_bern = app.add_subcommand("bernoulli", "Bernoulli numbers B_k (B_1 = -1/2)");
  c_bern->add_option("--k", k, "index")->required()->check(CLI::NonNegativeNumber);
  c_bern->add_option("--kmax", kmax, "emit B_k .. B_kmax");
  c_bern->callback([&] {
    action = [&] {
      if (kmax < 0) return Json(to_string(bernoulli(k)));
      Json rows = Json::array();
      for (int i = k; i <= kmax; ++i) rows.push_back(Json{{"k", i}, {"value", to_string(bernoulli(i))}});
      return Json{{"rows", rows}};
    };
  });

  auto* c_pade = app.add_subcommand("pade", "[m1/m2] Pade approximant of the remainder kernel; symbolic when --s is absent");
  c_pade->add_option("--s", s_opt, "exponent s (rational)");
  c_pade->add_option("--m1", m1, "numerator degree")->required();
  c_pade->add_option("--m2", m2, "denominator degree")->required();
  c_pade->add_option("--route", route, "hankel or shifted")->check(CLI::IsMember({"hankel", "shifted"}));
  c_pade->add_option("--p", p, "head length for the shifted route (m1 = m2 + p)");
  c_pade->callback([&] {
    action = [&] {
      if (route == "shifted" && m1 != m2 + p) throw UsageError("--route shifted needs m1 = m2 + p");
      return pade_json(s_opt, m1, m2, route, p);
    };
  });

  auto* c_eval = app.add_subcommand("rpa-eval", "numeric RPA(n, m1, m2) for zeta(s, a)");
  rat(c_eval, "s", "", "exponent s");
  rat(c_eval, "a", "1", "shift a > 0");
  c_eval->add_option("--n", n, "partial-sum length")->required();
  c_eval->add_option("--m1", m1)->required();
  c_eval->add_option("--m2", m2)->required();
  c_eval->callback([&] {
    action = [&] {
      BigRational s = R("s"), a = R("a");
      RpaNumeric r = rpa_numeric(s, a, n, m1, m2, g.precision);
      BigFloat ref = zeta_ref(s, a, g.precision + 16);
      return Json{{"s", to_string(s)},
                  {"a", to_string(a)},
                  {"n", n},
                  {"m1", m1},
                  {"m2", m2},
                  {"pade_value", to_string(r.pade_value)},
                  {"value", num(r.total, g.precision)},
                  {"oracle", num(ref, g.precision)},
                  {"abs_err", abs(r.total - ref).to_string(6)}};
    };
  });

  auto* c_sym = app.add_subcommand("rpa-symbolic", "RPA(n, m1, m2) as a function of s for integer a");
  c_sym->add_option("--n", n)->required();
  std::string a_int = "1";
  c_sym->add_option("--a", a_int, "positive integer shift");
  c_sym->add_option("--m1", m1)->required();
  c_sym->add_option("--m2", m2)->required();
  c_sym->callback([&] {
    action = [&] {
      BigRational a = rational_flag("a", a_int);
      if (!is_integer(a) || sgn(a) <= 0) throw UsageError("--a must be a positive integer");
      Json j = to_json(rpa_symbolic(n, a.get_num(), m1, m2));
      j["display"] = to_string(rpa_symbolic(n, a.get_num(), m1, m2).ratfunc);
      return j;
    };
  });

  auto* c_tab = app.add_subcommand("rpa-table", "RPA(n, m+p, m) errors for m = 1..mmax");
  rat(c_tab, "s", "", "exponent s");
  rat(c_tab, "a", "1", "shift a > 0");
  c_tab->add_option("--n", n);
  c_tab->add_option("--p", p);
  c_tab->add_option("--mmax", mmax)->required();
  c_tab->callback([&] {
    action = [&] {
      Json rows = Json::array();
      for (const ConvergenceRow& r : convergence_table(R("s"), R("a"), n, p, mmax, g.precision)) {
        rows.push_back(Json{{"m", r.m}, {"value", num(r.value, g.precision)}, {"abs_err", r.abs_error.to_string(6)}});
      }
      return Json{{"s", text.at("s")}, {"a", text.at("a")}, {"n", n}, {"p", p}, {"rows", rows}};
    };
  });

  auto* c_s2 = app.add_subcommand("s2-apery", "rational approximation v/u of zeta(2)");
  c_s2->add_option("--n", n)->required();
  c_s2->add_option("--m", m)->required();
  c_s2->callback([&] {
    action = [&] {
      ApproxPairS2 r = zeta2_approx(n, m, 1);
      auto [su, sv] = integrality_s2(n, m);
      BigFloat z2 = zeta_constant("zeta2", g.precision + 16);
      BigFloat err = abs(z2 - BigFloat(r.value, g.precision + 16));
      return Json{{"n", n},
                  {"m", m},
                  {"u", to_string(r.u)},
                  {"v", to_string(r.v)},
                  {"scaled_u", to_string(su)},
                  {"scaled_v", to_string(sv)},
                  {"bound", error_bound_s2(n, m, g.precision).to_string(6)},
                  {"error", err.to_string(6)}};
    };
  });

  auto* c_s3 = app.add_subcommand("s3-apery", "rational approximation f/g of zeta(3)");
  c_s3->add_option("--n", n)->required();
  c_s3->add_option("--m", m)->required();
  c_s3->callback([&] {
    action = [&] {
      ApproxPairS3 r = zeta3_approx(n, m, 1);
      auto [sg, sf] = integrality_s3(n, m);
      BigFloat z3 = zeta_constant("zeta3", g.precision + 16);
      BigFloat err = abs(z3 - BigFloat(r.value, g.precision + 16));
      return Json{{"n", n},
                  {"m", m},
                  {"g", to_string(r.g)},
                  {"f", to_string(r.f)},
                  {"scaled_g", to_string(sg)},
                  {"scaled_f", to_string(sf)},
                  {"bound", error_bound_s3(n, m, g.precision).to_string(6)},
                  {"error", err.to_string(6)}};
    };
  });

  auto* c_cross = app.add_subcommand("s3-apery-crosscheck", "RPA(m, 2m-1, 2m) for zeta(3) against Apery's sequences");
  c_cross->add_option("--mmax", mmax)->required();
  c_cross->callback([&] {
    action = [&] {
      Json rows = Json::array();
      for (const AperyRow& r : apery_crosscheck(mmax, g.precision)) {
        rows.push_back(Json{{"m", r.m},
                            {"value", to_string(r.value)},
                            {"q", to_string(r.q)},
                            {"p", to_string(r.p)},
                            {"apery_b", to_string(r.apery_b)},
                            {"value_matches", r.value_matches},
                            {"q_over_b", to_string(r.q_over_b)},
                            {"linear_form", r.linear_form.to_string(6)},
                            {"apery_linear_form", r.apery_linear_form.to_string(6)},
                            {"rate", r.rate.to_string(6)}});
      }
      return Json{{"normalization", "q = primitive integer reversed Pade denominator at N = m+1"}, {"rows", rows}};
    };
  });

  auto* c_wv = app.add_subcommand("weights-verify", "integral representation of zeta(s, a) against the oracle");
  rat(c_wv, "s", "", "exponent s > 0, s != 1");
  rat(c_wv, "a", "1", "shift a > 0");
  c_wv->callback([&] {
    action = [&] {
      QuadratureConfig cfg;
      cfg.precision_bits = g.precision;
      CheckResult r = theorem1_check(R("s"), R("a"), cfg);
      return Json{{"s", text.at("s")},
                  {"a", text.at("a")},
                  {"rhs", num(r.value, g.precision)},
                  {"oracle", num(r.reference, g.precision)},
                  {"abs_err", r.abs_error.to_string(6)}};
    };
  });

  auto* c_wm = app.add_subcommand("weights-moments", "even moments of w_s against Bernoulli targets");
  rat(c_wm, "s", "", "exponent s > 0");
  c_wm->add_option("--kmax", kmax)->required();
  c_wm->callback([&] {
    action = [&] {
      QuadratureConfig cfg;
      cfg.precision_bits = g.precision;
      Json rows = Json::array();
      for (int kk = 0; kk <= kmax; kk += 2) {
        CheckResult r = bernoulli_moment_check(R("s"), kk, cfg);
        rows.push_back(Json{{"k", kk},
                            {"integral", num(r.value, g.precision)},
                            {"target", num(r.reference, g.precision)},
                            {"abs_err", r.abs_error.to_string(6)}});
      }
      return Json{{"s", text.at("s")}, {"rows", rows}};
    };
  });

  auto* c_rates = app.add_subcommand("rates-scan", "admissible r-window of the contraction test");
  c_rates->add_option("--case", which, "s2 or s3")->check(CLI::IsMember({"s2", "s3"}));
  rat(c_rates, "lo", "0.5", "scan start");
  rat(c_rates, "hi", "2", "scan end");
  rat(c_rates, "step", "0.01", "scan step");
  c_rates->callback([&] {
    action = [&] {
      double lo = double_flag("lo", text.at("lo")), hi = double_flag("hi", text.at("hi"));
      double step = double_flag("step", text.at("step"));
      if (!(step > 0) || !(hi > lo)) throw UsageError("need lo < hi and step > 0");
      RateInterval iv = which == "s2" ? rate_interval_s2(lo, hi, step, g.precision)
                                      : rate_interval_s3(lo, hi, step, g.precision);
      BigFloat one(1L, g.precision);
      RateReport at1 = which == "s2" ? rate_s2(one) : rate_s3(one);
      Json j{{"case", which}, {"found", iv.found}};
      std::ostringstream lo_s, hi_s;
      lo_s.precision(6);
      hi_s.precision(6);
      lo_s << iv.lo;
      hi_s << iv.hi;
      j["lo"] = iv.found ? lo_s.str() : "";
      j["hi"] = iv.found ? hi_s.str() : "";
      j["rate_at_1"] = at1.rate.to_string(10);
      j["contraction_at_1"] = at1.contraction.to_string(10);
      return j;
    };
  });

  auto* c_oracle = app.add_subcommand("oracle-zeta", "reference value of zeta(s, a)");
  rat(c_oracle, "s", "", "exponent s != 1");
  rat(c_oracle, "a", "1", "shift a > 0");
  c_oracle->add_option("--method", method, "auto, euler-maclaurin or hermite")
      ->check(CLI::IsMember({"auto", "euler-maclaurin", "hermite"}));
  c_oracle->callback([&] {
    action = [&] {
      OracleMethod om = method == "hermite"           ? OracleMethod::Hermite
                        : method == "euler-maclaurin" ? OracleMethod::EulerMaclaurin
                                                      : OracleMethod::Auto;
      BigFloat v = zeta_ref(R("s"), R("a"), g.precision, om);
      return Json{{"s", text.at("s")}, {"a", text.at("a")}, {"value", num(v, g.precision)}};
    };
  });

  std::vector<std::string> args = normalize_args(argc, argv);
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  std::string output;
  try {
    output = render(action(), g.format);
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << Json{{"error", e.code()}, {"message", e.what()}}.dump() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", "InternalError"}, {"message", e.what()}}.dump() << "\n";
    return 3;
  }

  if (g.out.empty()) {
    std::cout << output;
  } else {
    std::ofstream f(g.out);
    if (!f) {
      std::cerr << Json{{"error", "IOError"}, {"message", "cannot open " + g.out}}.dump() << "\n";
      return 3;
    }
    f << output;
  }
  return 0;
}
