#pragma once
#include <vector>

namespace slidewin::twochoice {

// Stopping probability of the single-choice scan anchored at x (no stop at
// or before x), restricted to the block of k positions ending at a.
double f2(int n, int k, int x, int a);

// Probability that the anchored scan stops exactly at head m.
double c_stop(int n, int k, int m, int x);

// Probability of a first stop exactly at m (anchor x) together with no
// further stop at any head up to b - k, so that a choice at b is still open.
// Zero when b - m < k: two stops cannot share a block.
double g_gap(int n, int k, int m, int x, int b);

// Exact win probability of the (delta1, delta2) policy: first choice at the
// first best-seen head past delta1, second at the first best-seen head past
// both the first choice and delta2; win when either choice is the overall
// best.
double win_probability(int n, int k, int delta1, int delta2);

// Repeated evaluations at fixed (n, k). Construction precomputes the
// policy-independent no-stop tail sums that dominate the second-choice route
// (O(n^2), harmonic closed form when k = 1); each evaluation is then O(n)
// with the last delta1's stop prefix kept warm. One instance per thread;
// independent instances are safe concurrently.
class Evaluator {
 public:
  Evaluator(int n, int k);
  double win_probability(int delta1, int delta2);
  int n() const { return n_; }
  int k() const { return k_; }

 private:
  void prepare_delta1(int delta1);

  int n_;
  int k_;
  std::vector<double> tail_;  // tail_[m] = sum_{y=m}^{n-k} nu_{m+k-1}(y)

  int cached_delta1_ = -1;
  std::vector<double> phi1_;  // first-choice stop prefix for cached delta1
  double sigma1_ = 0.0;
};

// Normalized-regime win probability via the exact recursion at a large
// synthetic population (smaller default than the one-threshold cases; the
// tail precomputation is quadratic). w = 0 maps to k = 1.
inline constexpr int kAsymptoticN = 20000;
double asymptotic_win_probability(double w, double rho1, double rho2, int n_eff = kAsymptoticN);

}  // namespace slidewin::twochoice
