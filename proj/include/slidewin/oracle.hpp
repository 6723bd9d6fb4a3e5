#pragma once
#include <cstdint>

#include "slidewin/types.hpp"

namespace slidewin::oracle {

inline constexpr int kMaxExactN = 11;  // 11! ~ 4.0e7 sequences

// Exact win probability as wins / n!. Both fit comfortably in 64 bits for
// every admissible n (11! < 2^26).
struct ExactProbability {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;
  double value() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
};

// Runs the policy on every one of the n! rank sequences, in lexicographic
// order, and counts wins. Enumeration is split over first-position strata
// when several threads are available; the count is a plain sum, so parallel
// and serial runs agree exactly. Throws ResourceError for n > kMaxExactN.
ExactProbability exact_win_probability(const ProblemSpec& spec, const Policy& pol);

struct MonteCarloEstimate {
  double p_hat = 0.0;
  std::uint64_t trials = 0;
  double std_err = 0.0;  // sqrt(p_hat (1 - p_hat) / trials)
  std::uint64_t seed = 0;
};

// Seeded sampling of uniform permutations (Fisher-Yates driven by
// xoshiro256**). Trials are consumed in fixed blocks with per-block derived
// seeds, so the estimate is bit-identical for any thread count.
MonteCarloEstimate monte_carlo(const ProblemSpec& spec, const Policy& pol,
                               std::uint64_t trials, std::uint64_t seed);

}  // namespace slidewin::oracle
