#pragma once

#include <vector>

#include "termrank/matrix.hpp"
#include "termrank/rank.hpp"

namespace termrank::realize {

// Row-sum partition and 0/1 column vector of the witness inside a joint
// realizer. counts holds (p_t, ..., p_1, p_0) where p_k rows of the witness
// carry k ones; max_profile holds the class maxima (0, rho_1, ..., rho_t).
// inner_row_sums lists t repeated p_t times down to 0 repeated p_0 times and
// inner_col_sums is 1 on the first rho_t positions.
struct RealizationPartition {
  std::vector<int> counts;
  std::vector<int> inner_row_sums;
  std::vector<int> inner_col_sums;
  std::vector<int> max_profile;
};

RealizationPartition realization_partition(const DegreePair& pair, int t);

struct NestedPairResult {
  BinaryMatrix outer;
  BinaryMatrix inner;  // entrywise <= outer
};

// A member of the outer class dominating a member of the inner class.
// Requires the positional bounds r_i - t <= r'_i <= r_i and
// s_j - 1 <= s'_j <= s_j; under them a pair exists exactly when both classes
// are nonempty. Column-by-column search pruned by residual feasibility of
// both classes; the pruning keeps every partial assignment completable, so
// the budget is a safety valve rather than an expected limit.
NestedPairResult nested_pair(const DegreePair& outer, const DegreePair& inner, int t,
                             long long node_budget = 10'000'000);

// A single class member attaining the maximum k-term rank for every k <= t,
// plus the structured witness C <= A whose row truncations certify each k.
// Any positive t is accepted: the class maxima never exceed n, so no upper
// hypothesis on t is needed. Results are reported for the nonincreasing
// rearrangement of the inputs.
struct JointRealization {
  BinaryMatrix A;
  BinaryMatrix C;
  std::vector<int> partition;  // p_t, ..., p_0
  RankProfile max_profile;     // 0, rho_1, ..., rho_t over the class
};

JointRealization joint_realizer(const DegreePair& pair, int t);

}  // namespace termrank::realize
