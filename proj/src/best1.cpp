#include "slidewin/best1.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "slidewin/types.hpp"

namespace slidewin::best1 {

namespace {

void validate_nkd(int n, int k, int d) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (k < 1 || k > n) throw std::invalid_argument("k must satisfy 1 <= k <= n");
  if (d < 0 || d > n - 1) throw std::invalid_argument("d must satisfy 0 <= d <= n-1");
}

// Prefix sums of the per-head stop mass. Phi[m] is the probability that the
// scan with threshold d stops at some head in (d, m]. The head-m candidate
// mass is (1 - Phi[m-k]) / (m+k-1): a candidate cannot repeat within a block,
// so only stops up to m-k are excluded, and the block/partial decomposition
// of that history collapses to a single prefix value.
std::vector<double> stop_prefix(int k, int d, int upto) {
  std::vector<double> phi(static_cast<size_t>(upto) + 1, 0.0);
  for (int m = d + 1; m <= upto; ++m) {
    const double before = (m - k > d) ? phi[static_cast<size_t>(m - k)] : 0.0;
    phi[static_cast<size_t>(m)] =
        phi[static_cast<size_t>(m - 1)] + (1.0 - before) / static_cast<double>(m + k - 1);
  }
  return phi;
}

}  // namespace

double f_rec(int n, int k, int d, int a) {
  validate_nkd(n, k, d);
  if (a > n) throw std::invalid_argument("a must satisfy a <= n");
  if (a <= d) return 0.0;
  const auto phi = stop_prefix(k, d, a);
  const int q = (a - d + k - 1) / k;
  const int block_start = d + (q - 1) * k;
  return phi[static_cast<size_t>(a)] - phi[static_cast<size_t>(block_start)];
}

double win_probability(int n, int k, int d) {
  validate_nkd(n, k, d);
  std::vector<double> phi(static_cast<size_t>(n) + 1, 0.0);
  double total = 0.0;
  for (int j = d + 1; j <= n; ++j) {
    const double before = (j - k > d) ? phi[static_cast<size_t>(j - k)] : 0.0;
    phi[static_cast<size_t>(j)] =
        phi[static_cast<size_t>(j - 1)] + (1.0 - before) / static_cast<double>(j + k - 1);
    total += 1.0 - before;  // best applicant at j, nothing accepted before it
  }
  return total / static_cast<double>(n);
}

double win_probability_k2(int n, int d) {
  if (d < 1) throw std::invalid_argument("closed form needs d >= 1; use win_probability for d = 0");
  if (n < d + 3) throw std::invalid_argument("closed form needs n >= d + 3");
  // Inner ratio T(j) = sum_{i=d+1..j} (i-2)! / (j-1)! obeys T(j+1) = (T(j)+1)/j
  // with T(d+3) = (d+1) / (d (d+2)).
  double t = static_cast<double>(d + 1) / (static_cast<double>(d) * (d + 2));
  double sum = t;
  for (int j = d + 3; j < n; ++j) {
    t = (t + 1.0) / static_cast<double>(j);
    sum += t;
  }
  return 2.0 / n + (static_cast<double>(d) / n) * sum;
}

double large_window_exact(int n, int k) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
  if (2 * k < n) throw std::domain_error("large-window form needs k >= n/2");
  double inner = 0.0;  // sum_{m=1..j-k} 1/(m+k-1)
  double total = 0.0;
  for (int j = k + 1; j <= n; ++j) {
    inner += 1.0 / static_cast<double>(j - 1);  // m = j-k term: 1/(m+k-1) = 1/(j-1)
    total += 1.0 - inner;
  }
  return static_cast<double>(k) / n + total / static_cast<double>(n);
}

double large_window_asymptotic(double w) {
  if (!(w >= 0.5 && w <= 1.0)) throw std::domain_error("w must lie in [0.5, 1]");
  return 2.0 - w + std::log(w);
}

double asymptotic_win_probability(double w, double rho, int n_eff) {
  if (!(w >= 0.0 && w <= 1.0)) throw std::invalid_argument("w must lie in [0, 1]");
  if (!(rho >= 0.0 && rho < 1.0)) throw std::invalid_argument("rho must lie in [0, 1)");
  if (n_eff < 2) throw std::invalid_argument("n_eff must be >= 2");
  const int k = std::clamp(static_cast<int>(std::lround(w * n_eff)), 1, n_eff);
  const int d = std::clamp(static_cast<int>(std::lround(rho * n_eff)), 0, n_eff - 1);
  return win_probability(n_eff, k, d);
}

double classical_win_probability(int n, int d) {
  validate_nkd(n, 1, d);
  if (d == 0) return 1.0 / n;
  double sum = 0.0;
  for (int j = d + 1; j <= n; ++j) sum += 1.0 / static_cast<double>(j - 1);
  return static_cast<double>(d) / n * sum;
}

}  // namespace slidewin::best1
