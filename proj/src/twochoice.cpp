#include "slidewin/twochoice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "slidewin/types.hpp"

namespace slidewin::twochoice {

namespace {

void validate_nk(int n, int k) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (k < 1 || k > n) throw std::invalid_argument("k must satisfy 1 <= k <= n");
}

// Stop prefix of the single-choice scan anchored at x: phi[m] is the
// probability of a stop at some head in (x, m].
std::vector<double> stop_prefix(int k, int x, int upto) {
  std::vector<double> phi(static_cast<size_t>(upto) + 1, 0.0);
  for (int m = x + 1; m <= upto; ++m) {
    const double before = (m - k > x) ? phi[static_cast<size_t>(m - k)] : 0.0;
    phi[static_cast<size_t>(m)] =
        phi[static_cast<size_t>(m - 1)] + (1.0 - before) / static_cast<double>(m + k - 1);
  }
  return phi;
}

}  // namespace

double f2(int n, int k, int x, int a) {
  validate_nk(n, k);
  if (x < 0 || x > n) throw std::invalid_argument("x must satisfy 0 <= x <= n");
  if (a < 0 || a > n) throw std::invalid_argument("a must satisfy 0 <= a <= n");
  if (a <= x) return 0.0;
  const auto phi = stop_prefix(k, x, a);
  const int q = (a - x + k - 1) / k;
  const int block_start = x + (q - 1) * k;
  return phi[static_cast<size_t>(a)] - phi[static_cast<size_t>(block_start)];
}

double c_stop(int n, int k, int m, int x) {
  validate_nk(n, k);
  if (x < 0 || x > n) throw std::invalid_argument("x must satisfy 0 <= x <= n");
  if (m < 0 || m > n) throw std::invalid_argument("m must satisfy 0 <= m <= n");
  if (m <= x) return 0.0;
  const auto phi = stop_prefix(k, x, m);
  return phi[static_cast<size_t>(m)] - phi[static_cast<size_t>(m - 1)];
}

double g_gap(int n, int k, int m, int x, int b) {
  validate_nk(n, k);
  if (b < 0 || b > n) throw std::invalid_argument("b must satisfy 0 <= b <= n");
  if (m <= x) return 0.0;
  if (b - m < k) return 0.0;
  const double first = c_stop(n, k, m, x);
  const int anchor = m + k - 1;
  if (b - k <= anchor) return first;
  const auto phi = stop_prefix(k, anchor, b - k);
  return first * (1.0 - phi[static_cast<size_t>(b - k)]);
}

Evaluator::Evaluator(int n, int k) : n_(n), k_(k) {
  validate_nk(n, k);
  const int last = n - k;  // heads past n-k never matter: a stop there leaves no room at all
  tail_.assign(static_cast<size_t>(std::max(last, 0)) + 1, 0.0);
  if (last < 1) return;

  if (k == 1) {
    // nu_m(y) = m / y, so the tail collapses to harmonic sums.
    std::vector<double> harm(static_cast<size_t>(n), 0.0);
    for (int i = 1; i <= n - 1; ++i)
      harm[static_cast<size_t>(i)] = harm[static_cast<size_t>(i - 1)] + 1.0 / i;
    for (int m = 1; m <= last; ++m)
      tail_[static_cast<size_t>(m)] =
          m * (harm[static_cast<size_t>(n - 1)] - harm[static_cast<size_t>(m - 1)]);
    return;
  }

  // nu_x(y) = P(no stop in (x, y]) with anchor x = m+k-1 follows
  // nu(y) = nu(y-1) - nu(y-k)/(y+k-1); a ring buffer keeps the k-lag values.
  std::vector<double> ring(static_cast<size_t>(k), 1.0);
  for (int m = 1; m <= last; ++m) {
    const int x = m + k - 1;
    double sum = static_cast<double>(std::min(x, last) - m + 1);  // nu = 1 up to the anchor
    double prev = 1.0;
    std::fill(ring.begin(), ring.end(), 1.0);
    for (int y = x + 1; y <= last; ++y) {
      const double lag = (y - k <= x) ? 1.0 : ring[static_cast<size_t>(y % k)];
      const double nu = prev - lag / static_cast<double>(y + k - 1);
      ring[static_cast<size_t>(y % k)] = nu;
      prev = nu;
      sum += nu;
    }
    tail_[static_cast<size_t>(m)] = sum;
  }
}

void Evaluator::prepare_delta1(int delta1) {
  if (cached_delta1_ == delta1) return;
  phi1_ = stop_prefix(k_, delta1, n_);
  double total = 0.0;
  for (int j = delta1 + 1; j <= n_; ++j) {
    const double before = (j - k_ > delta1) ? phi1_[static_cast<size_t>(j - k_)] : 0.0;
    total += 1.0 - before;
  }
  sigma1_ = total / static_cast<double>(n_);
  cached_delta1_ = delta1;
}

double Evaluator::win_probability(int delta1, int delta2) {
  if (delta1 < 0 || delta1 > n_ - 1 || delta2 < delta1 || delta2 > n_ - 1)
    throw std::invalid_argument("need 0 <= delta1 <= delta2 <= n-1");
  prepare_delta1(delta1);

  // First choice wins.
  double total = sigma1_;

  // Second choice wins, first choice made at or before delta2 - k + 1 so the
  // second scan is gated by delta2 alone.
  const double p_early =
      (delta2 - k_ + 1 > delta1) ? phi1_[static_cast<size_t>(delta2 - k_ + 1)] : 0.0;
  if (p_early > 0.0) {
    const auto phi2 = stop_prefix(k_, delta2, n_);
    double tail2 = 0.0;
    for (int j = delta2 + 1; j <= n_; ++j) {
      const double before = (j - k_ > delta2) ? phi2[static_cast<size_t>(j - k_)] : 0.0;
      tail2 += 1.0 - before;
    }
    total += p_early * tail2 / static_cast<double>(n_);
  }

  // Second choice wins, first choice made later than delta2 - k + 1. The
  // first stop at m gates the second scan itself, from m + k on.
  const int lo = std::max(delta1, delta2 - k_ + 1) + 1;
  double late = 0.0;
  for (int m = lo; m <= n_ - k_; ++m) {
    const double stop_at_m =
        phi1_[static_cast<size_t>(m)] - phi1_[static_cast<size_t>(m - 1)];
    late += stop_at_m * tail_[static_cast<size_t>(m)];
  }
  total += late / static_cast<double>(n_);
  return total;
}

double win_probability(int n, int k, int delta1, int delta2) {
  return Evaluator(n, k).win_probability(delta1, delta2);
}

double asymptotic_win_probability(double w, double rho1, double rho2, int n_eff) {
  if (!(w >= 0.0 && w <= 1.0)) throw std::invalid_argument("w must lie in [0, 1]");
  if (!(rho1 >= 0.0 && rho1 < 1.0) || !(rho2 >= 0.0 && rho2 <= 1.0))
    throw std::invalid_argument("need 0 <= rho1 < 1 and 0 <= rho2 <= 1");
  if (n_eff < 2) throw std::invalid_argument("n_eff must be >= 2");
  const int k = std::clamp(static_cast<int>(std::lround(w * n_eff)), 1, n_eff);
  const int d1 = std::clamp(static_cast<int>(std::lround(rho1 * n_eff)), 0, n_eff - 1);
  const int d2 = clamp_two_choice_delta2(n_eff, k, d1, static_cast<int>(std::lround(rho2 * n_eff)));
  return win_probability(n_eff, k, d1, d2);
}

}  // namespace slidewin::twochoice
