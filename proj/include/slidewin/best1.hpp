#pragma once

namespace slidewin::best1 {

// Probability that the single-threshold scan stops inside the block of k
// positions ending at a, i.e. somewhere in (d + (q-1)k, a] with
// q = ceil((a-d)/k). Zero for a <= d.
double f_rec(int n, int k, int d, int a);

// Exact win probability of the threshold-d policy: scan positions d+1..n,
// accept the first head holding the best rank seen so far.
double win_probability(int n, int k, int d);

// Closed form for k = 2 built from runs of strictly improving ranks.
// Requires d >= 1 and n >= d + 3; factorial ratios are carried as running
// products so any n is safe.
double win_probability_k2(int n, int d);

// Exact win probability for k >= n/2, where the optimal threshold is 0.
double large_window_exact(int n, int k);

// Continuum limit of large_window_exact: 2 - w + ln w for w in [0.5, 1].
double large_window_asymptotic(double w);

// Win probability in the normalized regime (w = k/n, rho = d/n), evaluated
// by running the exact recursion at a large synthetic population. w = 0 is
// accepted and maps to k = 1 (the classical limit).
inline constexpr int kAsymptoticN = 100000;
double asymptotic_win_probability(double w, double rho, int n_eff = kAsymptoticN);

// Classical no-recall win probability (k = 1 in closed form).
double classical_win_probability(int n, int d);

}  // namespace slidewin::best1
