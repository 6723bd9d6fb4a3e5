#include "slidewin/types.hpp"

#include <algorithm>

namespace slidewin {

const char* to_string(ProblemCase c) {
  switch (c) {
    case ProblemCase::Best1: return "best1";
    case ProblemCase::Best2: return "best2";
    case ProblemCase::TwoChoice: return "twochoice";
  }
  return "?";
}

ProblemCase problem_case_from_string(const std::string& s) {
  if (s == "best1") return ProblemCase::Best1;
  if (s == "best2") return ProblemCase::Best2;
  if (s == "twochoice" || s == "2choice") return ProblemCase::TwoChoice;
  throw std::invalid_argument("unknown problem case: " + s);
}

void ProblemSpec::validate() const {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (k < 1 || k > n) throw std::invalid_argument("window size k must satisfy 1 <= k <= n");
}

bool is_permutation_1_to_n(const RankSequence& ranks) {
  const int n = static_cast<int>(ranks.size());
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int r : ranks) {
    if (r < 1 || r > n || seen[static_cast<size_t>(r)]) return false;
    seen[static_cast<size_t>(r)] = 1;
  }
  return true;
}

Policy Policy::best1(int d) {
  Policy p;
  p.problem = ProblemCase::Best1;
  p.d = d;
  return p;
}

Policy Policy::best2(int d1, int d2) {
  Policy p;
  p.problem = ProblemCase::Best2;
  p.d1 = d1;
  p.d2 = d2;
  return p;
}

int clamp_two_choice_delta2(int n, int k, int delta1, int delta2) {
  if (delta1 + k > n - 1) return n - 1;        // second stop unreachable; single representative
  return std::clamp(delta2, delta1 + k, n - 1);
}

Policy Policy::two_choice(int delta1, int delta2, int n, int k) {
  Policy p;
  p.problem = ProblemCase::TwoChoice;
  p.d1 = delta1;
  p.d2 = clamp_two_choice_delta2(n, k, delta1, delta2);
  return p;
}

void Policy::validate(const ProblemSpec& spec) const {
  spec.validate();
  if (problem != spec.problem)
    throw std::invalid_argument("policy case does not match problem spec");
  switch (problem) {
    case ProblemCase::Best1:
      if (d < 0 || d > spec.n - 1)
        throw std::invalid_argument("best1 threshold d must lie in [0, n-1]");
      break;
    case ProblemCase::Best2:
      if (d1 < 0 || d1 > d2 || d2 > spec.n - 1)
        throw std::invalid_argument("best2 thresholds must satisfy 0 <= d1 <= d2 <= n-1");
      break;
    case ProblemCase::TwoChoice:
      if (d1 < 0 || d1 > spec.n - 1)
        throw std::invalid_argument("twochoice delta1 must lie in [0, n-1]");
      if (d2 != clamp_two_choice_delta2(spec.n, spec.k, d1, d2))
        throw std::invalid_argument(
            "twochoice delta2 must equal min(max(delta2, delta1+k), n-1); "
            "smaller values duplicate the delta1+k policy");
      break;
  }
}

std::vector<int> Policy::thresholds() const {
  if (problem == ProblemCase::Best1) return {d};
  return {d1, d2};
}

bool policy_less(const Policy& a, const Policy& b) {
  return a.thresholds() < b.thresholds();
}

}  // namespace slidewin
