#include "slidewin/tables.hpp"

#include <cstdio>

namespace slidewin::tables {

std::vector<TableRow> optimal_table(ProblemCase problem, int n_min, int n_max) {
  if (n_min < 1 || n_min > n_max) throw std::invalid_argument("need 1 <= n_min <= n_max");
  if (n_max > 30) throw ResourceError("exact table generation is capped at n = 30");
  std::vector<TableRow> rows;
  for (int n = n_min; n <= n_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      optimize::OptimalResult r;
      switch (problem) {
        case ProblemCase::Best1: r = optimize::optimal_best1(n, k); break;
        case ProblemCase::Best2: r = optimize::optimal_best2(n, k); break;
        case ProblemCase::TwoChoice: r = optimize::optimal_twochoice(n, k); break;
      }
      rows.push_back({n, k, std::move(r.best_policies), r.p_win});
    }
  }
  return rows;
}

std::string thresholds_field(const std::vector<Policy>& policies) {
  std::string out;
  for (size_t i = 0; i < policies.size(); ++i) {
    if (i > 0) out += ';';
    const auto t = policies[i].thresholds();
    for (size_t j = 0; j < t.size(); ++j) {
      if (j > 0) out += '/';
      out += std::to_string(t[j]);
    }
  }
  return out;
}

std::string format_probability(double p, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, p);
  return buf;
}

std::string table_csv(ProblemCase problem, int n_min, int n_max) {
  const auto rows = optimal_table(problem, n_min, n_max);
  std::string out = "n,k,thresholds,p_win\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n);
    out += ',';
    out += std::to_string(r.k);
    out += ',';
    out += thresholds_field(r.best);
    out += ',';
    out += format_probability(r.p_win);
    out += '\n';
  }
  return out;
}

}  // namespace slidewin::tables
