#include "slidewin/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>
#include <vector>

#include "slidewin/policy_engine.hpp"
#include "slidewin/rng.hpp"
#include "slidewin/threads.hpp"

namespace slidewin::oracle {

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// Wins over all permutations of `values` placed after the fixed prefix.
std::uint64_t count_wins_with_prefix(int first, const ProblemSpec& spec, const Policy& pol) {
  const int n = spec.n;
  std::vector<int> perm(static_cast<size_t>(n));
  perm[0] = first;
  int t = 1;
  for (int v = 1; v <= n; ++v)
    if (v != first) perm[static_cast<size_t>(t++)] = v;
  std::uint64_t wins = 0;
  do {
    wins += detail::run_policy_unchecked(perm.data(), spec, pol).win ? 1 : 0;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return wins;
}

}  // namespace

ExactProbability exact_win_probability(const ProblemSpec& spec, const Policy& pol) {
  spec.validate();
  pol.validate(spec);
  if (spec.n > kMaxExactN)
    throw ResourceError("exact enumeration is capped at n = " + std::to_string(kMaxExactN));

  const int n = spec.n;
  ExactProbability result;
  result.denominator = factorial(n);

  const int workers = std::min(thread_budget(), n);
  if (n >= 9 && workers > 1) {
    std::vector<std::future<std::uint64_t>> parts;
    parts.reserve(static_cast<size_t>(n));
    for (int first = 1; first <= n; ++first)
      parts.push_back(std::async(std::launch::async, count_wins_with_prefix, first, spec, pol));
    for (auto& p : parts) result.numerator += p.get();
  } else {
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
      result.numerator += detail::run_policy_unchecked(perm.data(), spec, pol).win ? 1 : 0;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return result;
}

namespace {

constexpr std::uint64_t kBlockTrials = 1 << 16;

std::uint64_t run_block(const ProblemSpec& spec, const Policy& pol,
                        std::uint64_t seed, std::uint64_t block, std::uint64_t trials) {
  const int n = spec.n;
  rng::Xoshiro256StarStar gen(rng::block_seed(seed, block));
  std::vector<int> perm(static_cast<size_t>(n));
  std::uint64_t wins = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::iota(perm.begin(), perm.end(), 1);
    for (int i = n - 1; i > 0; --i) {
      const int j = static_cast<int>(gen.bounded(static_cast<std::uint32_t>(i + 1)));
      std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
    }
    wins += detail::run_policy_unchecked(perm.data(), spec, pol).win ? 1 : 0;
  }
  return wins;
}

}  // namespace

MonteCarloEstimate monte_carlo(const ProblemSpec& spec, const Policy& pol,
                               std::uint64_t trials, std::uint64_t seed) {
  spec.validate();
  pol.validate(spec);
  if (trials == 0) throw std::invalid_argument("trials must be >= 1");

  const std::uint64_t blocks = (trials + kBlockTrials - 1) / kBlockTrials;
  std::uint64_t wins = 0;

  const int workers = static_cast<int>(std::min<std::uint64_t>(
      static_cast<std::uint64_t>(thread_budget()), blocks));
  if (workers > 1) {
    std::vector<std::future<std::uint64_t>> parts;
    for (std::uint64_t b = 0; b < blocks; ++b) {
      const std::uint64_t in_block = std::min(kBlockTrials, trials - b * kBlockTrials);
      parts.push_back(std::async(std::launch::async, run_block, spec, pol, seed, b, in_block));
      if (parts.size() == static_cast<size_t>(workers) || b + 1 == blocks) {
        for (auto& p : parts) wins += p.get();
        parts.clear();
      }
    }
  } else {
    for (std::uint64_t b = 0; b < blocks; ++b) {
      const std::uint64_t in_block = std::min(kBlockTrials, trials - b * kBlockTrials);
      wins += run_block(spec, pol, seed, b, in_block);
    }
  }

  MonteCarloEstimate est;
  est.trials = trials;
  est.seed = seed;
  est.p_hat = static_cast<double>(wins) / static_cast<double>(trials);
  est.std_err = std::sqrt(est.p_hat * (1.0 - est.p_hat) / static_cast<double>(trials));
  return est;
}

}  // namespace slidewin::oracle
