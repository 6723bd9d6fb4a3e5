#pragma once
#include <vector>

#include "slidewin/types.hpp"

namespace slidewin::optimize {

struct OptimalResult {
  ProblemSpec spec;
  std::vector<Policy> best_policies;  // every maximizer, lexicographically smallest first
  double p_win = 0.0;
};

// Exhaustive threshold scans over the exact recursions. Above
// kExhaustiveScanN the scan switches to coarse-grid plus nested box
// refinement, which assumes the win probability is unimodal in the
// thresholds (the threshold form of the optimal strategies implies it); the
// refined path reports ties found in the final neighborhood only.
inline constexpr int kExhaustiveScanN = 400;

OptimalResult optimal_best1(int n, int k);
OptimalResult optimal_best2(int n, int k);
OptimalResult optimal_twochoice(int n, int k);

struct CurvePoint {
  double w = 0.0;
  std::vector<double> rho_star;  // 1 entry (Best1) or 2 (Best2, TwoChoice)
  double p_win = 0.0;
};

// Optimal normalized thresholds and win probability per normalized window
// size, via the synthetic-population recursions. w = 0 is accepted and means
// the classical k = 1 limit.
std::vector<CurvePoint> asymptotic_curve(ProblemCase problem, const std::vector<double>& w_grid);

struct MonotonicityRow {
  int k = 0;
  double p_win = 0.0;
  std::vector<int> thresholds;  // smallest maximizer
};

struct MonotonicityReport {
  std::vector<MonotonicityRow> rows;  // k = 1..n
  bool p_increasing = true;           // strict until p saturates at exactly 1
  bool thresholds_nonincreasing = true;
  int offending_k = 0;                // first k at fault, 0 when clean
  bool pass() const { return p_increasing && thresholds_nonincreasing; }
};

// Exact scan over k = 1..n (n <= 30). For 2-choice only the first threshold
// is required to be nonincreasing; the second is tied to delta1 + k from
// below and may grow with k.
MonotonicityReport monotonicity_report(ProblemCase problem, int n);

}  // namespace slidewin::optimize
