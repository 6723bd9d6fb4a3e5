#include "slidewin/best2.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace slidewin::best2 {

namespace {

void validate(int n, int k, int d1, int d2) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (k < 1 || k > n) throw std::invalid_argument("k must satisfy 1 <= k <= n");
  if (d1 < 0 || d1 > d2 || d2 > n - 1)
    throw std::invalid_argument("thresholds must satisfy 0 <= d1 <= d2 <= n-1");
}

// Prefix sums of the three stop masses, all indexed by head position.
//  psiH: second-best head at i given the best seen sits in [1, d1]; mass
//        (1 - c(i))/(i+k-2) with c(i) the same prefix at i-k. Only defined
//        (and only needed) when d1 >= 1; i > d2 >= 1 keeps i+k-2 positive.
//  psiG: joint version, d1/(i+k-1) times the H mass.
//  psiF: best-seen head at i; mass (1 - t(i))/(i+k-1) where t(i) combines the
//        F prefix past d1 and the G prefix past d2 at i-k.
struct Prefixes {
  std::vector<double> H, G, F;
};

Prefixes build_prefixes(int n, int k, int d1, int d2) {
  Prefixes p;
  p.H.assign(static_cast<size_t>(n) + 1, 0.0);
  p.G.assign(static_cast<size_t>(n) + 1, 0.0);
  p.F.assign(static_cast<size_t>(n) + 1, 0.0);

  if (d1 >= 1) {
    for (int i = d2 + 1; i <= n; ++i) {
      const double c = (i - k > d2) ? p.H[static_cast<size_t>(i - k)] : 0.0;
      p.H[static_cast<size_t>(i)] =
          p.H[static_cast<size_t>(i - 1)] + (1.0 - c) / static_cast<double>(i + k - 2);
      p.G[static_cast<size_t>(i)] =
          p.G[static_cast<size_t>(i - 1)] +
          (static_cast<double>(d1) / (i + k - 1)) * ((1.0 - c) / static_cast<double>(i + k - 2));
    }
  }
  for (int i = d1 + 1; i <= n; ++i) {
    double t = 0.0;
    if (i - k > d1) t += p.F[static_cast<size_t>(i - k)];
    if (i - k > d2) t += p.G[static_cast<size_t>(i - k)];
    p.F[static_cast<size_t>(i)] =
        p.F[static_cast<size_t>(i - 1)] + (1.0 - t) / static_cast<double>(i + k - 1);
  }
  return p;
}

}  // namespace

double hgf_rec(int n, int k, int d1, int d2, StopKind which, int a) {
  validate(n, k, d1, d2);
  if (a > n || a < 0) throw std::invalid_argument("a must satisfy 0 <= a <= n");
  const int anchor = (which == StopKind::F) ? d1 : d2;
  if (a <= anchor) return 0.0;
  const auto p = build_prefixes(n, k, d1, d2);
  const auto& pref = (which == StopKind::H) ? p.H : (which == StopKind::G) ? p.G : p.F;
  const int q = (a - anchor + k - 1) / k;
  const int block_start = anchor + (q - 1) * k;
  return pref[static_cast<size_t>(a)] - pref[static_cast<size_t>(block_start)];
}

double win_probability(int n, int k, int d1, int d2) {
  validate(n, k, d1, d2);
  if (n == 1) return 1.0;  // the only applicant is the best and d1 = 0

  const auto p = build_prefixes(n, k, d1, d2);
  const double pair_weight = static_cast<double>(d1) / (static_cast<double>(n) * (n - 1));

  double sigma1 = 0.0;  // best in [1, d1], stop on the second best past d2
  double sigma2 = 0.0;  // second best in [1, d1], stop on the best past d1
  if (d1 >= 1) {
    double tail = 0.0;  // sum of (1 - c(i)) over i = d2+1..n
    for (int i = d2 + 1; i <= n; ++i) {
      const double c = (i - k > d2) ? p.H[static_cast<size_t>(i - k)] : 0.0;
      tail += 1.0 - c;
    }
    sigma1 = pair_weight * tail;
    // A best-seen stop in (d1, d2] faces no competing stops at all: second
    // class stops only exist past d2. Those positions contribute full weight.
    sigma2 = pair_weight * (static_cast<double>(d2 - d1) + tail);
  }

  double sigma3 = 0.0;  // both top applicants past d1
  const double row = 2.0 / (static_cast<double>(n) * (n - 1));
  for (int i = d1 + 1; i <= n; ++i) {
    double t = 0.0;
    if (i - k > d1) t += p.F[static_cast<size_t>(i - k)];
    if (i - k > d2) t += p.G[static_cast<size_t>(i - k)];
    sigma3 += row * static_cast<double>(n - i) * (1.0 - t);
  }
  return sigma1 + sigma2 + sigma3;
}

std::map<std::pair<int, int>, double> near_full_window_losses(int n) {
  if (n < 5) throw std::domain_error("casework needs n >= 5");
  const double nn = static_cast<double>(n);
  std::map<std::pair<int, int>, double> losses;
  losses[{0, 0}] = 2.0 / (nn * (nn - 1) * (nn - 2));
  losses[{1, 1}] = 2.0 / (nn * (nn - 1) * (nn - 2));
  losses[{1, 2}] = 1.0 / (nn * (nn - 1));
  losses[{2, 2}] = 2.0 / (nn * (nn - 1));
  return losses;
}

double d2_unit_boundary(int n) {
  if (n < 3) throw std::invalid_argument("n must be >= 3");
  const double m = static_cast<double>(n) - 1.0;
  return (std::sqrt(8.0 * m * m + 1.0) + 1.0) / 4.0;
}

double asymptotic_win_probability(double w, double rho1, double rho2, int n_eff) {
  if (!(w >= 0.0 && w <= 1.0)) throw std::invalid_argument("w must lie in [0, 1]");
  if (!(rho1 >= 0.0 && rho1 <= rho2 && rho2 < 1.0))
    throw std::invalid_argument("need 0 <= rho1 <= rho2 < 1");
  if (n_eff < 2) throw std::invalid_argument("n_eff must be >= 2");
  const int k = std::clamp(static_cast<int>(std::lround(w * n_eff)), 1, n_eff);
  const int d1 = std::clamp(static_cast<int>(std::lround(rho1 * n_eff)), 0, n_eff - 1);
  const int d2 = std::clamp(static_cast<int>(std::lround(rho2 * n_eff)), d1, n_eff - 1);
  return win_probability(n_eff, k, d1, d2);
}

}  // namespace slidewin::best2
