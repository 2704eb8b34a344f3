#include "termrank/realize.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "termrank/classops.hpp"
#include "termrank/errors.hpp"

namespace termrank::realize {

RealizationPartition realization_partition(const DegreePair& pair, int t) {
  if (t < 1) throw DomainError("t must be a positive integer");
  const SortedDegreePair sorted = sort_monotone(pair);
  if (!classops::feasible(sorted.pair))
    throw InfeasibleClassError("class is empty: " + pair.serialize());
  const int m = static_cast<int>(pair.row_sums.size());
  const int n = static_cast<int>(pair.col_sums.size());

  std::vector<int> rho(t + 1, 0);
  for (int k = 1; k <= t; ++k)
    rho[k] = static_cast<int>(classops::max_t_term_rank(sorted.pair, k));

  // p_t = rho_t - rho_{t-1}; p_k = 2 rho_k - rho_{k+1} - rho_{k-1} for
  // 0 < k < t; p_0 = m - rho_1. All nonnegative because the maxima are a
  // concave nondecreasing sequence (minima of linear functions of k).
  std::vector<int> p(t + 1, 0);
  p[t] = rho[t] - rho[t - 1];
  for (int k = 1; k < t; ++k) p[k] = 2 * rho[k] - rho[k + 1] - rho[k - 1];
  p[0] = m - rho[1];
  assert(std::all_of(p.begin(), p.end(), [](int x) { return x >= 0; }));

  RealizationPartition out;
  out.max_profile = rho;
  out.counts.reserve(t + 1);
  for (int k = t; k >= 0; --k) out.counts.push_back(p[k]);
  out.inner_row_sums.reserve(m);
  for (int k = t; k >= 0; --k)
    out.inner_row_sums.insert(out.inner_row_sums.end(), p[k], k);
  assert(static_cast<int>(out.inner_row_sums.size()) == m);
  out.inner_col_sums.assign(n, 0);
  std::fill_n(out.inner_col_sums.begin(), rho[t], 1);
  return out;
}

namespace {

// Column-by-column search for nested members of two classes. Each column
// receives the outer 1s (set T) and a subset of them for the inner matrix
// (set U). Candidate rows are tried largest-residual-first so that with an
// all-zero inner class the result coincides with construct_member.
class NestedSearch {
 public:
  NestedSearch(const DegreePair& outer, const DegreePair& inner, long long budget)
      : outer_(outer),
        inner_(inner),
        m_(static_cast<int>(outer.row_sums.size())),
        n_(static_cast<int>(outer.col_sums.size())),
        r_out_(outer.row_sums),
        r_in_(inner.row_sums),
        a_(m_, n_),
        b_(m_, n_),
        budget_(budget) {}

  bool run() { return column(0); }

  BinaryMatrix outer_matrix() const { return a_; }
  BinaryMatrix inner_matrix() const { return b_; }

 private:
  bool residuals_feasible(int next_col) const {
    std::vector<int> r = r_out_;
    std::sort(r.begin(), r.end(), std::greater<>());
    std::vector<int> s(outer_.col_sums.begin() + next_col, outer_.col_sums.end());
    std::sort(s.begin(), s.end(), std::greater<>());
    if (!sorted_nonneg(r, s)) return false;
    r = r_in_;
    std::sort(r.begin(), r.end(), std::greater<>());
    s.assign(inner_.col_sums.begin() + next_col, inner_.col_sums.end());
    std::sort(s.begin(), s.end(), std::greater<>());
    return sorted_nonneg(r, s);
  }

  static bool sorted_nonneg(const std::vector<int>& r, const std::vector<int>& s) {
    long long tail = std::accumulate(r.begin(), r.end(), 0ll);
    const int m = static_cast<int>(r.size());
    const int n = static_cast<int>(s.size());
    for (int k = 0; k <= m; ++k) {
      if (k > 0) tail -= r[k - 1];
      long long prefix = 0;
      for (int l = 0; l <= n; ++l) {
        if (l > 0) prefix += s[l - 1];
        if (static_cast<long long>(k) * l - prefix + tail < 0) return false;
      }
    }
    return true;
  }

  bool column(int j) {
    if (j == n_) return true;
    std::vector<int> order(m_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return r_out_[x] > r_out_[y]; });
    std::vector<int> pool;
    for (int i : order)
      if (r_out_[i] > 0) pool.push_back(i);
    std::vector<int> outer_set;
    return choose_outer(j, pool, 0, outer_.col_sums[j], outer_set);
  }

  bool choose_outer(int j, const std::vector<int>& pool, int from, int need,
                    std::vector<int>& outer_set) {
    if (need == 0) return choose_inner(j, outer_set);
    for (int idx = from; idx <= static_cast<int>(pool.size()) - need; ++idx) {
      outer_set.push_back(pool[idx]);
      if (choose_outer(j, pool, idx + 1, need - 1, outer_set)) return true;
      outer_set.pop_back();
    }
    return false;
  }

  bool choose_inner(int j, const std::vector<int>& outer_set) {
    // Rows whose inner residual equals the outer one must keep the inner 1
    // whenever they take an outer 1; the rest are optional.
    std::vector<int> forced, optional;
    for (int i : outer_set) {
      if (r_in_[i] == r_out_[i])
        forced.push_back(i);
      else if (r_in_[i] > 0)
        optional.push_back(i);
    }
    const int need = inner_.col_sums[j] - static_cast<int>(forced.size());
    if (need < 0 || need > static_cast<int>(optional.size())) return false;
    std::vector<int> extra;
    return choose_optional(j, outer_set, forced, optional, 0, need, extra);
  }

  bool choose_optional(int j, const std::vector<int>& outer_set,
                       const std::vector<int>& forced, const std::vector<int>& optional,
                       int from, int need, std::vector<int>& extra) {
    if (need == 0) return apply(j, outer_set, forced, extra);
    for (int idx = from; idx <= static_cast<int>(optional.size()) - need; ++idx) {
      extra.push_back(optional[idx]);
      if (choose_optional(j, outer_set, forced, optional, idx + 1, need - 1, extra))
        return true;
      extra.pop_back();
    }
    return false;
  }

  bool apply(int j, const std::vector<int>& outer_set, const std::vector<int>& forced,
             const std::vector<int>& extra) {
    if (--budget_ < 0) throw CapacityError("nested pair search budget exceeded");
    for (int i : outer_set) {
      a_.set(i, j, true);
      --r_out_[i];
    }
    std::vector<int> inner_set = forced;
    inner_set.insert(inner_set.end(), extra.begin(), extra.end());
    for (int i : inner_set) {
      b_.set(i, j, true);
      --r_in_[i];
    }
    if (residuals_feasible(j + 1) && column(j + 1)) return true;
    for (int i : inner_set) {
      b_.set(i, j, false);
      ++r_in_[i];
    }
    for (int i : outer_set) {
      a_.set(i, j, false);
      ++r_out_[i];
    }
    return false;
  }

  const DegreePair& outer_;
  const DegreePair& inner_;
  int m_;
  int n_;
  std::vector<int> r_out_;
  std::vector<int> r_in_;
  BinaryMatrix a_;
  BinaryMatrix b_;
  long long budget_;
};

}  // namespace

NestedPairResult nested_pair(const DegreePair& outer, const DegreePair& inner, int t,
                             long long node_budget) {
  if (t < 1) throw DomainError("t must be a positive integer");
  if (outer.row_sums.size() != inner.row_sums.size() ||
      outer.col_sums.size() != inner.col_sums.size())
    throw DomainError("outer and inner classes must have the same shape");
  for (std::size_t i = 0; i < outer.row_sums.size(); ++i) {
    const int r = outer.row_sums[i];
    const int rp = inner.row_sums[i];
    if (rp < r - t || rp > r)
      throw DomainError("inner row sums must satisfy r_i - t <= r'_i <= r_i");
  }
  for (std::size_t j = 0; j < outer.col_sums.size(); ++j) {
    const int s = outer.col_sums[j];
    const int sp = inner.col_sums[j];
    if (sp < s - 1 || sp > s)
      throw DomainError("inner column sums must satisfy s_j - 1 <= s'_j <= s_j");
  }
  if (!classops::feasible(outer))
    throw InfeasibleClassError("outer class is empty: " + outer.serialize());
  if (!classops::feasible(inner))
    throw InfeasibleClassError("inner class is empty: " + inner.serialize());

  NestedSearch search(outer, inner, node_budget);
  if (!search.run())
    throw std::logic_error("nested pair search failed on two nonempty classes");
  return NestedPairResult{search.outer_matrix(), search.inner_matrix()};
}

JointRealization joint_realizer(const DegreePair& pair, int t) {
  RealizationPartition part = realization_partition(pair, t);
  const SortedDegreePair sorted = sort_monotone(pair);
  const std::vector<int>& r = sorted.pair.row_sums;
  const std::vector<int>& s = sorted.pair.col_sums;

  // The witness C has row sums R' and column sums S'. Search instead for
  // A - C, whose prescribed sums R - R' and S - S' satisfy the nested-pair
  // bounds automatically (0 <= r'_i <= t and 0 <= s'_j <= 1).
  DegreePair complement;
  complement.row_sums.resize(r.size());
  complement.col_sums.resize(s.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    complement.row_sums[i] = r[i] - part.inner_row_sums[i];
    if (complement.row_sums[i] < 0)
      throw std::logic_error("witness row sums exceed the class row sums");
  }
  for (std::size_t j = 0; j < s.size(); ++j)
    complement.col_sums[j] = s[j] - part.inner_col_sums[j];

  NestedPairResult np = nested_pair(sorted.pair, complement, t);

  JointRealization out{np.outer, BinaryMatrix(np.outer.rows(), np.outer.cols()),
                       part.counts, RankProfile{part.max_profile}};
  for (int i = 0; i < out.A.rows(); ++i)
    for (int j = 0; j < out.A.cols(); ++j)
      if (out.A.get(i, j) && !np.inner.get(i, j)) out.C.set(i, j, true);
  assert(row_sums(out.C) == part.inner_row_sums);
  assert(col_sums(out.C) == part.inner_col_sums);
  return out;
}

}  // namespace termrank::realize
