#pragma once
#include "slidewin/types.hpp"

namespace slidewin {

// Candidate class of the applicant at (1-based) position i, judged against
// everything seen once the window head sits at i: positions 1..min(i+k-1, n).
// Candidate1 = best rank seen so far, Candidate2 = second best (Best2 only).
CandidateClass classify_candidate(const RankSequence& seq, int i, int k, ProblemCase problem);

// Deterministic execution of the sliding rule on one rank sequence.
//
// The window advances until its head holds the best candidate currently in
// the window; only then is an accept/reject decision made against the
// thresholds. Consequences per case:
//   Best1     — accept the first head i > d whose rank is the best seen.
//   Best2     — accept a best-seen head at i > d1; accept a second-best head
//               at i > d2 only when the best seen applicant has already left
//               the window (otherwise the window keeps chasing it).
//   TwoChoice — first choice as Best1 with threshold delta1; second choice is
//               the first best-seen head after both the first choice and
//               delta2 (it lands at least k past the first automatically).
// If the scan ends without the required acceptances, whatever was chosen is
// scored as-is; an empty choice never wins.
Outcome run_policy(const RankSequence& seq, const ProblemSpec& spec, const Policy& pol);

namespace detail {
// Same semantics, no permutation re-validation. For callers that construct
// sequences known to be valid (enumeration, shuffling).
Outcome run_policy_unchecked(const int* ranks, const ProblemSpec& spec, const Policy& pol);
}  // namespace detail

}  // namespace slidewin
