#pragma once
#include <string>
#include <vector>

#include "slidewin/optimize.hpp"

namespace slidewin::tables {

struct TableRow {
  int n = 0;
  int k = 0;
  std::vector<Policy> best;  // all maximizers, smallest first
  double p_win = 0.0;
};

// Optimal-threshold table over n = n_min..n_max, k = 1..n per n. Exact scans
// only; n_max above 30 is rejected as over budget.
std::vector<TableRow> optimal_table(ProblemCase problem, int n_min, int n_max);

// Thresholds column text: maximizers joined by ';', threshold components of
// one maximizer joined by '/'. Best1 ties read "0;1", a Best2 tie reads
// "1/3;1/4".
std::string thresholds_field(const std::vector<Policy>& policies);

// CSV with header "n,k,thresholds,p_win"; p_win printed to 4 decimals.
std::string table_csv(ProblemCase problem, int n_min, int n_max);

// Fixed-point formatting helper shared with the CLI (half-even at the
// binary-to-decimal boundary, as printf rounds).
std::string format_probability(double p, int decimals = 4);

}  // namespace slidewin::tables
