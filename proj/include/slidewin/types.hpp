#pragma once
#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace slidewin {

enum class ProblemCase { Best1, Best2, TwoChoice };

const char* to_string(ProblemCase c);
ProblemCase problem_case_from_string(const std::string& s);

// Thrown when a request exceeds a hard enumeration or scan budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ProblemSpec {
  int n = 1;                                  // number of applicants
  int k = 1;                                  // window size, 1 <= k <= n
  ProblemCase problem = ProblemCase::Best1;
  void validate() const;                      // throws std::invalid_argument
};

// Interview-order ranks: ranks[i-1] is the absolute rank of the applicant at
// (1-based) position i, rank 1 being the best. A valid sequence is a
// permutation of 1..n with all ranks distinct.
using RankSequence = std::vector<int>;

bool is_permutation_1_to_n(const RankSequence& ranks);

// Threshold parameters of one strategy. Which fields are meaningful depends
// on `problem`: Best1 uses d, Best2 uses (d1, d2) with d1 <= d2, TwoChoice
// uses (d1, d2) as (delta1, delta2).
struct Policy {
  ProblemCase problem = ProblemCase::Best1;
  int d = 0;
  int d1 = 0;
  int d2 = 0;

  static Policy best1(int d);
  static Policy best2(int d1, int d2);
  // Canonicalizes delta2: values below delta1 + k behave identically to
  // delta1 + k (two stops cannot share a block of k), and delta2 is capped
  // at n - 1. Call sites that already hold a canonical pair keep it.
  static Policy two_choice(int delta1, int delta2, int n, int k);

  void validate(const ProblemSpec& spec) const;  // throws std::invalid_argument

  std::vector<int> thresholds() const;  // the meaningful fields, in order
  bool operator==(const Policy&) const = default;
};

int clamp_two_choice_delta2(int n, int k, int delta1, int delta2);

// Lexicographic order on the meaningful threshold fields.
bool policy_less(const Policy& a, const Policy& b);

struct Outcome {
  std::array<int, 2> chosen{0, 0};  // 1-based interview positions, ascending
  int num_chosen = 0;
  bool win = false;
};

enum class CandidateClass { NotCandidate, Candidate1, Candidate2 };

}  // namespace slidewin
