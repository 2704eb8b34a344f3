#include "termrank/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>

#include "termrank/errors.hpp"

namespace termrank::oracle {

namespace {

struct RankSearch {
  const std::vector<std::vector<int>>& adj;
  int n;
  int t;
  int upper;  // min(t*m, n, sigma): stop once reached
  std::vector<int> load;
  int best = 0;

  void go(int j, int count) {
    if (best == upper) return;
    if (j == n) {
      best = std::max(best, count);
      return;
    }
    for (int i : adj[j]) {
      if (load[i] == t) continue;
      ++load[i];
      go(j + 1, count + 1);
      --load[i];
    }
    go(j + 1, count);  // leave column j unused
  }
};

}  // namespace

int brute_rank(const BinaryMatrix& a, int t) {
  if (t < 1) throw DomainError("t must be a positive integer");
  if (a.cols() > 12) throw CapacityError("brute_rank handles at most 12 columns");
  std::vector<std::vector<int>> adj(a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a.get(i, j)) adj[j].push_back(i);
  const long long upper =
      std::min({static_cast<long long>(t) * a.rows(), static_cast<long long>(a.cols()),
                sigma(a)});
  RankSearch search{adj, a.cols(), t, static_cast<int>(upper),
                    std::vector<int>(a.rows(), 0)};
  search.go(0, 0);
  return search.best;
}

long long brute_cover(const BinaryMatrix& a, int t) {
  if (t < 1) throw DomainError("t must be a positive integer");
  if (a.rows() > 20) throw CapacityError("brute_cover handles at most 20 rows");
  const int m = a.rows();
  std::vector<std::uint32_t> col_mask(a.cols(), 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a.get(i, j)) col_mask[j] |= 1u << i;
  long long best = std::numeric_limits<long long>::max();
  for (std::uint32_t rows = 0; rows < (1u << m); ++rows) {
    long long weight = static_cast<long long>(t) * std::popcount(rows);
    for (std::uint32_t mask : col_mask)
      if (mask & ~rows) ++weight;
    best = std::min(best, weight);
  }
  return best;
}

long long brute_max_rank(const DegreePair& pair, int t, long long limit) {
  if (t < 1) throw DomainError("t must be a positive integer");
  const long long upper =
      std::min({static_cast<long long>(t) * static_cast<long long>(pair.row_sums.size()),
                static_cast<long long>(pair.col_sums.size()),
                std::accumulate(pair.row_sums.begin(), pair.row_sums.end(), 0ll)});
  long long best = 0;
  classops::for_each_member(pair, limit, [&](const BinaryMatrix& member) {
    best = std::max(best, static_cast<long long>(brute_rank(member, t)));
    return best < upper;
  });
  return best;
}

namespace {

bool dominates(const BinaryMatrix& big, const BinaryMatrix& small) {
  for (int i = 0; i < big.rows(); ++i) {
    const auto bw = big.row_words(i);
    const auto sw = small.row_words(i);
    for (std::size_t k = 0; k < bw.size(); ++k)
      if (sw[k] & ~bw[k]) return false;
  }
  return true;
}

}  // namespace

bool brute_nested_pair(const DegreePair& outer, const DegreePair& inner, long long limit) {
  if (outer.row_sums.size() != inner.row_sums.size() ||
      outer.col_sums.size() != inner.col_sums.size())
    throw DomainError("outer and inner classes must have the same shape");
  if (!classops::feasible(outer) || !classops::feasible(inner)) return false;
  const std::vector<BinaryMatrix> inner_members = classops::enumerate_class(inner, limit);
  bool found = false;
  classops::for_each_member(outer, limit, [&](const BinaryMatrix& big) {
    for (const BinaryMatrix& small : inner_members)
      if (dominates(big, small)) {
        found = true;
        return false;
      }
    return true;
  });
  return found;
}

}  // namespace termrank::oracle
