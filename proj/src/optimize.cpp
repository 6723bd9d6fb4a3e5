#include "slidewin/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "slidewin/best1.hpp"
#include "slidewin/best2.hpp"
#include "slidewin/twochoice.hpp"

namespace slidewin::optimize {

namespace {

constexpr double kTieTol = 1e-12;

// Coarse scan plus shrinking-window refinement for a unimodal objective on
// integers. Scanning ascending keeps the smallest argmax on exact ties.
template <class F>
std::pair<int, double> adaptive_argmax(int lo, int hi, F&& f) {
  int step = std::max(1, (hi - lo) / 100);
  int arg = lo;
  double best = f(lo);
  for (int d = lo + step; d <= hi; d += step) {
    const double v = f(d);
    if (v > best) {
      best = v;
      arg = d;
    }
  }
  while (step > 1) {
    const int next = std::max(1, step / 4);
    const int l = std::max(lo, arg - step);
    const int h = std::min(hi, arg + step);
    for (int d = l; d <= h; d += next) {
      const double v = f(d);
      if (v > best) {
        best = v;
        arg = d;
      }
    }
    step = next;
  }
  return {arg, best};
}

template <class F>
OptimalResult scan_best1_like(const ProblemSpec& spec, F&& eval) {
  OptimalResult res;
  res.spec = spec;
  const int n = spec.n;
  if (n <= kExhaustiveScanN) {
    std::vector<double> p(static_cast<size_t>(n));
    double best = -1.0;
    for (int d = 0; d <= n - 1; ++d) {
      p[static_cast<size_t>(d)] = eval(d);
      best = std::max(best, p[static_cast<size_t>(d)]);
    }
    for (int d = 0; d <= n - 1; ++d)
      if (p[static_cast<size_t>(d)] >= best - kTieTol)
        res.best_policies.push_back(Policy::best1(d));
    res.p_win = best;
  } else {
    auto [arg, best] = adaptive_argmax(0, n - 1, eval);
    for (int d = std::max(0, arg - 4); d <= std::min(n - 1, arg + 4); ++d)
      if (eval(d) >= best - kTieTol) res.best_policies.push_back(Policy::best1(d));
    res.p_win = best;
  }
  return res;
}

}  // namespace

OptimalResult optimal_best1(int n, int k) {
  ProblemSpec spec{n, k, ProblemCase::Best1};
  spec.validate();
  return scan_best1_like(spec, [&](int d) { return best1::win_probability(n, k, d); });
}

OptimalResult optimal_best2(int n, int k) {
  ProblemSpec spec{n, k, ProblemCase::Best2};
  spec.validate();
  OptimalResult res;
  res.spec = spec;

  if (n <= kExhaustiveScanN) {
    double best = -1.0;
    std::vector<std::pair<std::pair<int, int>, double>> all;
    for (int d1 = 0; d1 <= n - 1; ++d1)
      for (int d2 = d1; d2 <= n - 1; ++d2) {
        const double p = best2::win_probability(n, k, d1, d2);
        all.push_back({{d1, d2}, p});
        best = std::max(best, p);
      }
    for (const auto& [dd, p] : all)
      if (p >= best - kTieTol) res.best_policies.push_back(Policy::best2(dd.first, dd.second));
    res.p_win = best;
    return res;
  }

  // Nested 2-D refinement, assuming unimodality over (d1, d2).
  int step = std::max(1, n / 50);
  int a = 0, b = 0;
  double best = -1.0;
  auto consider = [&](int d1, int d2) {
    if (d1 < 0 || d2 < d1 || d2 > n - 1) return;
    const double p = best2::win_probability(n, k, d1, d2);
    if (p > best) {
      best = p;
      a = d1;
      b = d2;
    }
  };
  for (int d1 = 0; d1 <= n - 1; d1 += step)
    for (int d2 = d1; d2 <= n - 1; d2 += step) consider(d1, d2);
  while (step > 1) {
    const int next = std::max(1, step / 4);
    const int a0 = a, b0 = b;
    for (int d1 = std::max(0, a0 - step); d1 <= std::min(n - 1, a0 + step); d1 += next)
      for (int d2 = std::max(d1, b0 - step); d2 <= std::min(n - 1, b0 + step); d2 += next)
        consider(d1, d2);
    step = next;
  }
  res.best_policies.push_back(Policy::best2(a, b));
  res.p_win = best;
  return res;
}

OptimalResult optimal_twochoice(int n, int k) {
  ProblemSpec spec{n, k, ProblemCase::TwoChoice};
  spec.validate();
  OptimalResult res;
  res.spec = spec;

  twochoice::Evaluator ev(n, k);
  auto d2_range = [&](int d1) -> std::pair<int, int> {
    // canonical second thresholds for this d1
    if (d1 + k > n - 1) return {n - 1, n - 1};
    return {d1 + k, n - 1};
  };

  if (n <= kExhaustiveScanN) {
    double best = -1.0;
    std::vector<std::pair<std::pair<int, int>, double>> all;
    for (int d1 = 0; d1 <= n - 1; ++d1) {
      const auto [lo, hi] = d2_range(d1);
      for (int d2 = lo; d2 <= hi; ++d2) {
        const double p = ev.win_probability(d1, d2);
        all.push_back({{d1, d2}, p});
        best = std::max(best, p);
      }
    }
    for (const auto& [dd, p] : all)
      if (p >= best - kTieTol)
        res.best_policies.push_back(Policy::two_choice(dd.first, dd.second, n, k));
    res.p_win = best;
    return res;
  }

  int step = std::max(1, n / 50);
  int a = 0, b = d2_range(0).first;
  double best = -1.0;
  auto consider = [&](int d1, int d2) {
    if (d1 < 0 || d1 > n - 1) return;
    const auto [lo, hi] = d2_range(d1);
    d2 = std::clamp(d2, lo, hi);
    const double p = ev.win_probability(d1, d2);
    if (p > best) {
      best = p;
      a = d1;
      b = d2;
    }
  };
  for (int d1 = 0; d1 <= n - 1; d1 += step) {
    const auto [lo, hi] = d2_range(d1);
    for (int d2 = lo; d2 <= hi; d2 += step) consider(d1, d2);
  }
  while (step > 1) {
    const int next = std::max(1, step / 4);
    const int a0 = a, b0 = b;
    for (int d1 = std::max(0, a0 - step); d1 <= std::min(n - 1, a0 + step); d1 += next)
      for (int d2 = b0 - step; d2 <= b0 + step; d2 += next) consider(d1, d2);
    step = next;
  }
  res.best_policies.push_back(Policy::two_choice(a, b, n, k));
  res.p_win = best;
  return res;
}

namespace {

CurvePoint curve_point_best1(double w) {
  const int n = best1::kAsymptoticN;
  const int k = std::clamp(static_cast<int>(std::lround(w * n)), 1, n);
  auto [arg, best] =
      adaptive_argmax(0, n - 1, [&](int d) { return best1::win_probability(n, k, d); });
  return {w, {static_cast<double>(arg) / n}, best};
}

template <class Eval>
CurvePoint curve_point_pair(double w, int n, int lo2_gap, Eval&& eval) {
  // lo2_gap = minimal d2 - d1 (0 for best2, k for 2-choice canonical pairs)
  int step = std::max(1, n / 50);
  int a = 0, b = std::min(lo2_gap, n - 1);
  double best = -1.0;
  auto consider = [&](int d1, int d2) {
    if (d1 < 0 || d1 > n - 1) return;
    d2 = std::clamp(d2, std::min(d1 + lo2_gap, n - 1), n - 1);
    const double p = eval(d1, d2);
    if (p > best) {
      best = p;
      a = d1;
      b = d2;
    }
  };
  for (int d1 = 0; d1 <= n - 1; d1 += step)
    for (int d2 = std::min(d1 + lo2_gap, n - 1); d2 <= n - 1; d2 += step) consider(d1, d2);
  while (step > 1) {
    const int next = std::max(1, step / 4);
    const int a0 = a, b0 = b;
    for (int d1 = std::max(0, a0 - step); d1 <= std::min(n - 1, a0 + step); d1 += next)
      for (int d2 = b0 - step; d2 <= b0 + step; d2 += next) consider(d1, d2);
    step = next;
  }
  return {w, {static_cast<double>(a) / n, static_cast<double>(b) / n}, best};
}

}  // namespace

std::vector<CurvePoint> asymptotic_curve(ProblemCase problem, const std::vector<double>& w_grid) {
  if (w_grid.empty()) throw std::invalid_argument("w grid must not be empty");
  for (double w : w_grid)
    if (!(w >= 0.0 && w <= 1.0)) throw std::invalid_argument("each w must lie in [0, 1]");

  std::vector<CurvePoint> points;
  points.reserve(w_grid.size());
  for (double w : w_grid) {
    switch (problem) {
      case ProblemCase::Best1:
        points.push_back(curve_point_best1(w));
        break;
      case ProblemCase::Best2: {
        const int n = best2::kAsymptoticN;
        const int k = std::clamp(static_cast<int>(std::lround(w * n)), 1, n);
        points.push_back(curve_point_pair(
            w, n, 0, [&](int d1, int d2) { return best2::win_probability(n, k, d1, d2); }));
        break;
      }
      case ProblemCase::TwoChoice: {
        const int n = twochoice::kAsymptoticN;
        const int k = std::clamp(static_cast<int>(std::lround(w * n)), 1, n);
        twochoice::Evaluator ev(n, k);
        points.push_back(curve_point_pair(
            w, n, k, [&](int d1, int d2) { return ev.win_probability(d1, d2); }));
        break;
      }
    }
  }
  return points;
}

MonotonicityReport monotonicity_report(ProblemCase problem, int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n > 30) throw ResourceError("exact monotonicity scan is capped at n = 30");

  MonotonicityReport rep;
  for (int k = 1; k <= n; ++k) {
    OptimalResult r;
    switch (problem) {
      case ProblemCase::Best1: r = optimal_best1(n, k); break;
      case ProblemCase::Best2: r = optimal_best2(n, k); break;
      case ProblemCase::TwoChoice: r = optimal_twochoice(n, k); break;
    }
    rep.rows.push_back({k, r.p_win, r.best_policies.front().thresholds()});
  }

  for (size_t i = 1; i < rep.rows.size(); ++i) {
    const auto& prev = rep.rows[i - 1];
    const auto& cur = rep.rows[i];
    // Strict gain is only claimable below certainty; 2-choice saturates at
    // k >= n/2 and best2 at k >= n-1, after which p stays exactly 1.
    const bool saturated = prev.p_win >= 1.0 - kTieTol;
    const bool p_ok = saturated ? cur.p_win >= 1.0 - kTieTol : cur.p_win > prev.p_win + kTieTol;
    bool thr_ok = true;
    const size_t checked =
        problem == ProblemCase::TwoChoice ? 1 : cur.thresholds.size();  // delta2 may grow with k
    for (size_t t = 0; t < checked; ++t)
      thr_ok = thr_ok && cur.thresholds[t] <= prev.thresholds[t];
    if (!p_ok && rep.p_increasing) {
      rep.p_increasing = false;
      if (rep.offending_k == 0) rep.offending_k = cur.k;
    }
    if (!thr_ok && rep.thresholds_nonincreasing) {
      rep.thresholds_nonincreasing = false;
      if (rep.offending_k == 0) rep.offending_k = cur.k;
    }
  }
  return rep;
}

}  // namespace slidewin::optimize
