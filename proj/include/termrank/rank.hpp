#pragma once

#include <utility>
#include <vector>

#include "termrank/matrix.hpp"

namespace termrank {

// A set of 1-positions with at most one per column and at most t_bound per
// row: a witness for the t-term rank.
struct Selection {
  std::vector<std::pair<int, int>> cells;  // (row, column), 0-based
  int t_bound = 1;

  bool valid_for(const BinaryMatrix& a) const;
};

// Rows E and columns F covering every 1; the dual certificate of weight
// t_bound*|E| + |F|.
struct LineCover {
  std::vector<int> rows;
  std::vector<int> cols;
  int t_bound = 1;

  long long weight() const {
    return static_cast<long long>(t_bound) * static_cast<long long>(rows.size()) +
           static_cast<long long>(cols.size());
  }
  bool covers(const BinaryMatrix& a) const;
};

// values[k] = k-term rank, k = 0..T, with values[0] = 0.
struct RankProfile {
  std::vector<int> values;
};

// Pairwise-disjoint layers of (row, column) cells; each layer uses every
// column at most once and every row at most once, and the union of the first
// j layers is a j-term-rank witness.
struct NestedSelections {
  std::vector<std::vector<std::pair<int, int>>> layers;
};

// A 2x2 interchange: the submatrix on rows {row1,row2} and columns
// {col1,col2} must be one of the two permutation patterns.
struct InterchangeMove {
  int row1 = 0;
  int row2 = 0;
  int col1 = 0;
  int col2 = 0;
};

struct RankResult {
  int value = 0;
  Selection witness;
};

// Maximum number of 1s selectable with at most one per column and at most t
// per row, with a witness. Computed by augmenting paths on the bipartite
// graph with row capacity t and column capacity 1.
RankResult t_term_rank(const BinaryMatrix& a, int t);

// Minimum-weight line cover; its weight always equals the t-term rank.
// Extracted from alternating reachability after a maximum matching, which
// yields the unique inclusion-minimal optimal row set.
LineCover min_cover(const BinaryMatrix& a, int t);

// (0, rho_1, ..., rho_tmax), computed incrementally by raising row capacity.
RankProfile rank_profile(const BinaryMatrix& a, int t_max);

// Smallest t with rho_t = n. Requires every column to contain a 1.
int strength(const BinaryMatrix& a);

// Layer decomposition proving prefix optimality: the first j layers together
// form a j-term-rank witness for every j = 1..t.
NestedSelections nested_selections(const BinaryMatrix& a, int t);

// rho_t via the subset-union bound min over K of |union of rows K| + t(m-|K|).
// Exponential in the row count (m <= 20); a verification tool, not the
// production path. hall_rank splits the scan across OpenMP threads,
// hall_rank_serial is the single-threaded reference.
int hall_rank(const BinaryMatrix& a, int t);
int hall_rank_serial(const BinaryMatrix& a, int t);

// Swaps a 2x2 permutation submatrix for its mirror image; preserves all row
// and column sums.
BinaryMatrix apply_interchange(const BinaryMatrix& a, const InterchangeMove& move);

// The (m+l) x t(m+l) bordered matrix whose t-term rank is full exactly when
// rho_t(a) >= p, with l the least integer satisfying t*l >= n - p.
BinaryMatrix padded_matrix(const BinaryMatrix& a, int t, long long p);

}  // namespace termrank
