#pragma once
#include <map>
#include <utility>

namespace slidewin::best2 {

enum class StopKind { H, G, F };

// Block-partial stopping probabilities of the two-threshold scan:
//   H — stop at a second-best head in (d2 + (s-1)k, a], conditioned on the
//       best seen applicant sitting in [1, d1];
//   G — the same stop jointly with that location event (extra d1/(i+k-1));
//   F — stop at a best-seen head in (d1 + (q-1)k, a].
// Zero whenever a is at or below the relevant threshold.
double hgf_rec(int n, int k, int d1, int d2, StopKind which, int a);

// Exact win probability of the (d1, d2) policy under the sliding rule that
// always chases the best candidate currently in the window. Three disjoint
// win routes are summed: best overall already passed inside [1, d1] and the
// second best is caught past d2; second best inside [1, d1] and the best is
// caught past d1; both top applicants past d1.
double win_probability(int n, int k, int d1, int d2);

// Exact loss probabilities for k = n - 2 by direct casework, keyed by
// (d1, d2). d1 = 0 is keyed as (0, 0); its loss is the same for every d2.
std::map<std::pair<int, int>, double> near_full_window_losses(int n);

// Largest window size for which the optimal d2 still exceeds 1, about
// (n-1)/sqrt(2) for large n.
double d2_unit_boundary(int n);

// Normalized-regime win probability via the exact recursion at a large
// synthetic population. w = 0 maps to k = 1.
inline constexpr int kAsymptoticN = 100000;
double asymptotic_win_probability(double w, double rho1, double rho2, int n_eff = kAsymptoticN);

}  // namespace slidewin::best2
