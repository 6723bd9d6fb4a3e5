// Command-line front end: solve / oracle / simulate / optimize / asymptotic /
// table, with text, JSON, and CSV output. Exit codes: 0 ok, 1 usage or
// validation, 2 over a resource budget, 3 cross-check disagreement.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "slidewin/best1.hpp"
#include "slidewin/best2.hpp"
#include "slidewin/oracle.hpp"
#include "slidewin/optimize.hpp"
#include "slidewin/tables.hpp"
#include "slidewin/twochoice.hpp"
#include "slidewin/types.hpp"

namespace {

using nlohmann::json;
using namespace slidewin;

struct Disagreement : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Text, Json, Csv };

struct CommonOpts {
  std::string case_name = "best1";
  std::string format = "text";
  std::string output_path;
};

void add_common(CLI::App* cmd, CommonOpts& c, bool with_case = true) {
  if (with_case)
    cmd->add_option("--case,-c", c.case_name, "problem case: best1 | best2 | twochoice")
        ->required();
  cmd->add_option("--format,-f", c.format, "output format: text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--output,-o", c.output_path, "write output to this file instead of stdout");
}

Format parse_format(const CommonOpts& c) {
  if (c.format == "json") return Format::Json;
  if (c.format == "csv") return Format::Csv;
  return Format::Text;
}

void emit(const CommonOpts& c, const std::string& body) {
  if (c.output_path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(c.output_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + c.output_path);
  out << body;
}

struct ThresholdOpts {
  std::optional<int> d, d1, d2;
};

void add_thresholds(CLI::App* cmd, ThresholdOpts& t) {
  cmd->add_option("--d,-d", t.d, "threshold for best1");
  cmd->add_option("--d1", t.d1, "first threshold (best2) or delta1 (twochoice)");
  cmd->add_option("--d2", t.d2, "second threshold (best2) or delta2 (twochoice)");
}

Policy make_policy(ProblemCase pc, const ThresholdOpts& t, int n, int k) {
  switch (pc) {
    case ProblemCase::Best1:
      if (!t.d) throw std::invalid_argument("best1 needs --d");
      return Policy::best1(*t.d);
    case ProblemCase::Best2:
      if (!t.d1 || !t.d2) throw std::invalid_argument("best2 needs --d1 and --d2");
      return Policy::best2(*t.d1, *t.d2);
    case ProblemCase::TwoChoice:
      if (!t.d1 || !t.d2) throw std::invalid_argument("twochoice needs --d1 and --d2");
      return Policy::two_choice(*t.d1, *t.d2, n, k);
  }
  throw std::invalid_argument("unknown case");
}

double analytic_p(ProblemCase pc, int n, int k, const Policy& pol) {
  switch (pc) {
    case ProblemCase::Best1: return best1::win_probability(n, k, pol.d);
    case ProblemCase::Best2: return best2::win_probability(n, k, pol.d1, pol.d2);
    case ProblemCase::TwoChoice: return twochoice::win_probability(n, k, pol.d1, pol.d2);
  }
  return 0.0;
}

std::string csv_num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

json policy_json(const Policy& p) { return json(p.thresholds()); }

std::string thresholds_text(const Policy& p) {
  return tables::thresholds_field({p});
}

// ---- solve ---------------------------------------------------------------

int cmd_solve(const CommonOpts& c, ProblemCase pc, int n, int k, const Policy& pol,
              bool check_oracle) {
  ProblemSpec spec{n, k, pc};
  pol.validate(spec);
  const double p = analytic_p(pc, n, k, pol);

  if (check_oracle) {
    if (n > 8) throw std::invalid_argument("--check-oracle is limited to n <= 8");
    const double exact = oracle::exact_win_probability(spec, pol).value();
    if (std::fabs(exact - p) > 1e-9)
      throw Disagreement("analytic " + std::to_string(p) + " vs enumerated " +
                         std::to_string(exact));
  }

  switch (parse_format(c)) {
    case Format::Json: {
      json j{{"command", "solve"}, {"case", to_string(pc)}, {"n", n}, {"k", k},
             {"thresholds", policy_json(pol)}, {"p_win", p}};
      emit(c, j.dump() + "\n");
      break;
    }
    case Format::Csv:
      emit(c, "case,n,k,thresholds,p_win\n" + std::string(to_string(pc)) + "," +
                  std::to_string(n) + "," + std::to_string(k) + "," + thresholds_text(pol) +
                  "," + csv_num(p) + "\n");
      break;
    case Format::Text:
      emit(c, "p_win = " + tables::format_probability(p) + "\n");
      break;
  }
  return 0;
}

// ---- oracle --------------------------------------------------------------

int cmd_oracle(const CommonOpts& c, ProblemCase pc, int n, int k, const Policy& pol) {
  ProblemSpec spec{n, k, pc};
  const auto ex = oracle::exact_win_probability(spec, pol);
  switch (parse_format(c)) {
    case Format::Json: {
      json j{{"command", "oracle"}, {"case", to_string(pc)}, {"n", n}, {"k", k},
             {"thresholds", policy_json(pol)}, {"numerator", ex.numerator},
             {"denominator", ex.denominator}, {"p_win", ex.value()}};
      emit(c, j.dump() + "\n");
      break;
    }
    case Format::Csv:
      emit(c, "case,n,k,thresholds,numerator,denominator,p_win\n" +
                  std::string(to_string(pc)) + "," + std::to_string(n) + "," +
                  std::to_string(k) + "," + thresholds_text(pol) + "," +
                  std::to_string(ex.numerator) + "," + std::to_string(ex.denominator) + "," +
                  csv_num(ex.value()) + "\n");
      break;
    case Format::Text: {
      char buf[128];
      std::snprintf(buf, sizeof(buf), "%llu/%llu = %.6f\n",
                    static_cast<unsigned long long>(ex.numerator),
                    static_cast<unsigned long long>(ex.denominator), ex.value());
      emit(c, buf);
      break;
    }
  }
  return 0;
}

// ---- simulate ------------------------------------------------------------

int cmd_simulate(const CommonOpts& c, ProblemCase pc, int n, int k, const Policy& pol,
                 std::uint64_t trials, std::uint64_t seed) {
  ProblemSpec spec{n, k, pc};
  const auto est = oracle::monte_carlo(spec, pol, trials, seed);
  switch (parse_format(c)) {
    case Format::Json: {
      json j{{"command", "simulate"}, {"case", to_string(pc)}, {"n", n}, {"k", k},
             {"thresholds", policy_json(pol)}, {"trials", est.trials}, {"seed", est.seed},
             {"p_hat", est.p_hat}, {"std_err", est.std_err}};
      emit(c, j.dump() + "\n");
      break;
    }
    case Format::Csv:
      emit(c, "case,n,k,thresholds,trials,seed,p_hat,std_err\n" +
                  std::string(to_string(pc)) + "," + std::to_string(n) + "," +
                  std::to_string(k) + "," + thresholds_text(pol) + "," +
                  std::to_string(est.trials) + "," + std::to_string(est.seed) + "," +
                  csv_num(est.p_hat) + "," + csv_num(est.std_err) + "\n");
      break;
    case Format::Text: {
      char buf[160];
      std::snprintf(buf, sizeof(buf), "p_hat = %.6f (std_err %.6f, trials %llu, seed %llu)\n",
                    est.p_hat, est.std_err, static_cast<unsigned long long>(est.trials),
                    static_cast<unsigned long long>(est.seed));
      emit(c, buf);
      break;
    }
  }
  return 0;
}

// ---- optimize ------------------------------------------------------------

int cmd_optimize(const CommonOpts& c, ProblemCase pc, int n, int k) {
  optimize::OptimalResult r;
  switch (pc) {
    case ProblemCase::Best1: r = optimize::optimal_best1(n, k); break;
    case ProblemCase::Best2: r = optimize::optimal_best2(n, k); break;
    case ProblemCase::TwoChoice: r = optimize::optimal_twochoice(n, k); break;
  }
  switch (parse_format(c)) {
    case Format::Json: {
      json pols = json::array();
      for (const auto& p : r.best_policies) pols.push_back(policy_json(p));
      json j{{"command", "optimize"}, {"case", to_string(pc)}, {"n", n}, {"k", k},
             {"best_policies", pols}, {"p_win", r.p_win}};
      emit(c, j.dump() + "\n");
      break;
    }
    case Format::Csv:
      emit(c, "case,n,k,thresholds,p_win\n" + std::string(to_string(pc)) + "," +
                  std::to_string(n) + "," + std::to_string(k) + "," +
                  tables::thresholds_field(r.best_policies) + "," + csv_num(r.p_win) + "\n");
      break;
    case Format::Text:
      emit(c, "optimal thresholds: " + tables::thresholds_field(r.best_policies) +
                  "  p_win = " + tables::format_probability(r.p_win) + "\n");
      break;
  }
  return 0;
}

// ---- asymptotic ----------------------------------------------------------

int cmd_asymptotic(const CommonOpts& c, ProblemCase pc, const std::vector<double>& ws) {
  const auto points = optimize::asymptotic_curve(pc, ws);
  switch (parse_format(c)) {
    case Format::Json: {
      json arr = json::array();
      for (const auto& pt : points)
        arr.push_back(json{{"w", pt.w}, {"rho_star", pt.rho_star}, {"p_win", pt.p_win}});
      json j{{"command", "asymptotic"}, {"case", to_string(pc)}, {"points", arr}};
      emit(c, j.dump() + "\n");
      break;
    }
    case Format::Csv: {
      std::string out = "w,rho_star,p_win\n";
      for (const auto& pt : points) {
        out += csv_num(pt.w);
        out += ',';
        for (size_t i = 0; i < pt.rho_star.size(); ++i) {
          if (i > 0) out += '/';
          out += csv_num(pt.rho_star[i]);
        }
        out += ',';
        out += csv_num(pt.p_win);
        out += '\n';
      }
      emit(c, out);
      break;
    }
    case Format::Text: {
      std::string out;
      for (const auto& pt : points) {
        char buf[160];
        std::string rho;
        for (size_t i = 0; i < pt.rho_star.size(); ++i) {
          if (i > 0) rho += ", ";
          char b2[32];
          std::snprintf(b2, sizeof(b2), "%.4f", pt.rho_star[i]);
          rho += b2;
        }
        std::snprintf(buf, sizeof(buf), "w = %.4f  rho* = (%s)  p_win = %.4f\n", pt.w,
                      rho.c_str(), pt.p_win);
        out += buf;
      }
      emit(c, out);
      break;
    }
  }
  return 0;
}

// ---- table ---------------------------------------------------------------

int cmd_table(const CommonOpts& c, ProblemCase pc, int n_min, int n_max) {
  switch (parse_format(c)) {
    case Format::Json: {
      const auto rows = tables::optimal_table(pc, n_min, n_max);
      json arr = json::array();
      for (const auto& r : rows) {
        json pols = json::array();
        for (const auto& p : r.best) pols.push_back(policy_json(p));
        arr.push_back(json{{"n", r.n}, {"k", r.k}, {"thresholds", pols}, {"p_win", r.p_win}});
      }
      json j{{"command", "table"}, {"case", to_string(pc)}, {"rows", arr}};
      emit(c, j.dump() + "\n");
      break;
    }
    case Format::Csv:
    case Format::Text:
      emit(c, tables::table_csv(pc, n_min, n_max));
      break;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sliding-window secretary problem solver"};
  app.require_subcommand(1);
  // key=value file with one [section] per subcommand; command-line flags win
  app.set_config("--config", "", "read options from a config file");

  CommonOpts c_solve, c_oracle, c_sim, c_opt, c_asym, c_table;
  ThresholdOpts t_solve, t_oracle, t_sim;
  int n = 0, k = 0;
  bool check_oracle = false;
  std::uint64_t trials = 100000, seed = 0;
  std::vector<double> ws;
  int n_min = 0, n_max = 0;

  auto* solve = app.add_subcommand("solve", "exact win probability of a threshold policy");
  add_common(solve, c_solve);
  solve->add_option("--n,-n", n, "number of applicants")->required();
  solve->add_option("--k,-k", k, "window size")->required();
  add_thresholds(solve, t_solve);
  solve->add_flag("--check-oracle", check_oracle,
                  "cross-validate against exhaustive enumeration (n <= 8)");

  auto* orac = app.add_subcommand("oracle", "exhaustive-enumeration win probability");
  add_common(orac, c_oracle);
  orac->add_option("--n,-n", n, "number of applicants")->required();
  orac->add_option("--k,-k", k, "window size")->required();
  add_thresholds(orac, t_oracle);

  auto* sim = app.add_subcommand("simulate", "seeded Monte Carlo estimate");
  add_common(sim, c_sim);
  sim->add_option("--n,-n", n, "number of applicants")->required();
  sim->add_option("--k,-k", k, "window size")->required();
  add_thresholds(sim, t_sim);
  sim->add_option("--trials,-t", trials, "number of trials")->capture_default_str();
  sim->add_option("--seed,-s", seed, "random seed")->capture_default_str();

  auto* opt = app.add_subcommand("optimize", "optimal thresholds by exact scan");
  add_common(opt, c_opt);
  opt->add_option("--n,-n", n, "number of applicants")->required();
  opt->add_option("--k,-k", k, "window size")->required();

  auto* asym = app.add_subcommand("asymptotic", "optimal normalized thresholds for large n");
  add_common(asym, c_asym);
  asym->add_option("--w,-w", ws, "normalized window size(s) in [0, 1]; 0 means the k = 1 limit")
      ->required();

  auto* tab = app.add_subcommand("table", "optimal-threshold table over a range of n");
  add_common(tab, c_table);
  tab->add_option("--n-min", n_min, "smallest n")->required();
  tab->add_option("--n-max", n_max, "largest n (<= 30)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (solve->parsed()) {
      const auto pc = problem_case_from_string(c_solve.case_name);
      return cmd_solve(c_solve, pc, n, k, make_policy(pc, t_solve, n, k), check_oracle);
    }
    if (orac->parsed()) {
      const auto pc = problem_case_from_string(c_oracle.case_name);
      return cmd_oracle(c_oracle, pc, n, k, make_policy(pc, t_oracle, n, k));
    }
    if (sim->parsed()) {
      const auto pc = problem_case_from_string(c_sim.case_name);
      return cmd_simulate(c_sim, pc, n, k, make_policy(pc, t_sim, n, k), trials, seed);
    }
    if (opt->parsed()) return cmd_optimize(c_opt, problem_case_from_string(c_opt.case_name), n, k);
    if (asym->parsed())
      return cmd_asymptotic(c_asym, problem_case_from_string(c_asym.case_name), ws);
    if (tab->parsed())
      return cmd_table(c_table, problem_case_from_string(c_table.case_name), n_min, n_max);
    std::cerr << "no command given\n";
    return 1;
  } catch (const Disagreement& e) {
    std::cerr << "cross-check disagreement: " << e.what() << "\n";
    return 3;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
