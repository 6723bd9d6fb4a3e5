#include "slidewin/policy_engine.hpp"

#include <algorithm>

namespace slidewin {

CandidateClass classify_candidate(const RankSequence& seq, int i, int k, ProblemCase problem) {
  const int n = static_cast<int>(seq.size());
  if (!is_permutation_1_to_n(seq)) throw std::invalid_argument("seq is not a permutation of 1..n");
  if (i < 1 || i > n) throw std::invalid_argument("position i out of range");
  if (k < 1 || k > n) throw std::invalid_argument("window size k out of range");
  const int seen_end = std::min(i + k - 1, n);
  int min1 = n + 1, min2 = n + 2;
  for (int p = 0; p < seen_end; ++p) {
    const int r = seq[static_cast<size_t>(p)];
    if (r < min1) {
      min2 = min1;
      min1 = r;
    } else if (r < min2) {
      min2 = r;
    }
  }
  const int r = seq[static_cast<size_t>(i - 1)];
  if (r == min1) return CandidateClass::Candidate1;
  if (problem == ProblemCase::Best2 && r == min2) return CandidateClass::Candidate2;
  return CandidateClass::NotCandidate;
}

namespace detail {

Outcome run_policy_unchecked(const int* ranks, const ProblemSpec& spec, const Policy& pol) {
  const int n = spec.n;
  const int k = spec.k;
  Outcome out;

  int min1 = n + 1;      // best rank seen and its 1-based position
  int min1_pos = 0;
  int min2 = n + 2;      // second best rank seen
  int seen = 0;
  auto extend_seen = [&](int upto) {
    while (seen < upto) {
      const int r = ranks[seen++];
      if (r < min1) {
        min2 = min1;
        min1 = r;
        min1_pos = seen;
      } else if (r < min2) {
        min2 = r;
      }
    }
  };

  switch (pol.problem) {
    case ProblemCase::Best1: {
      for (int i = 1; i <= n; ++i) {
        extend_seen(std::min(i + k - 1, n));
        if (ranks[i - 1] == min1 && i > pol.d) {
          out.chosen[0] = i;
          out.num_chosen = 1;
          out.win = (ranks[i - 1] == 1);
          return out;
        }
      }
      return out;
    }
    case ProblemCase::Best2: {
      for (int i = 1; i <= n; ++i) {
        extend_seen(std::min(i + k - 1, n));
        const int r = ranks[i - 1];
        bool accept = false;
        if (r == min1) {
          accept = i > pol.d1;
        } else if (r == min2) {
          // min1_pos > i means the best seen applicant is still ahead in the
          // window; the head is not the best candidate there, so it slides.
          accept = i > pol.d2 && min1_pos < i;
        }
        if (accept) {
          out.chosen[0] = i;
          out.num_chosen = 1;
          out.win = (r <= 2);
          return out;
        }
      }
      return out;
    }
    case ProblemCase::TwoChoice: {
      int m1 = 0;
      for (int i = 1; i <= n; ++i) {
        extend_seen(std::min(i + k - 1, n));
        if (ranks[i - 1] != min1) continue;
        if (m1 == 0) {
          if (i > pol.d1) {
            m1 = i;
            out.chosen[0] = i;
            out.num_chosen = 1;
          }
        } else if (i > pol.d2) {
          if (i - m1 < k)
            throw std::logic_error("second choice landed inside the first choice's block");
          out.chosen[1] = i;
          out.num_chosen = 2;
          break;
        }
      }
      for (int c = 0; c < out.num_chosen; ++c)
        out.win = out.win || ranks[out.chosen[static_cast<size_t>(c)] - 1] == 1;
      return out;
    }
  }
  return out;
}

}  // namespace detail

Outcome run_policy(const RankSequence& seq, const ProblemSpec& spec, const Policy& pol) {
  spec.validate();
  pol.validate(spec);
  if (static_cast<int>(seq.size()) != spec.n || !is_permutation_1_to_n(seq))
    throw std::invalid_argument("seq is not a permutation of 1..n");
  return detail::run_policy_unchecked(seq.data(), spec, pol);
}

}  // namespace slidewin
