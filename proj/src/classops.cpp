#include "termrank/classops.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <random>

#include "termrank/errors.hpp"

namespace termrank::classops {

namespace {

long long vector_sum(const std::vector<int>& v) {
  return std::accumulate(v.begin(), v.end(), 0ll);
}

bool any_negative(const std::vector<int>& v) {
  return std::any_of(v.begin(), v.end(), [](int x) { return x < 0; });
}

void check_grid_capacity(std::size_t m, std::size_t n) {
  if (static_cast<long long>(m + 1) * static_cast<long long>(n + 1) > kCellCap)
    throw CapacityError("structure matrix exceeds the cell cap");
}

// Structure-matrix nonnegativity on vectors already sorted nonincreasing.
bool sorted_structure_nonnegative(const std::vector<int>& r, const std::vector<int>& s) {
  const int m = static_cast<int>(r.size());
  const int n = static_cast<int>(s.size());
  long long tail = vector_sum(r);
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

std::vector<int> sorted_desc(std::vector<int> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

}  // namespace

StructureMatrix structure_matrix(const DegreePair& pair) {
  const int m = static_cast<int>(pair.row_sums.size());
  const int n = static_cast<int>(pair.col_sums.size());
  check_grid_capacity(m, n);
  StructureMatrix t;
  t.m = m;
  t.n = n;
  t.values.assign(static_cast<std::size_t>(m + 1) * (n + 1), 0);
  std::vector<long long> r_tail(m + 1, 0);
  for (int k = m - 1; k >= 0; --k) r_tail[k] = r_tail[k + 1] + pair.row_sums[k];
  std::vector<long long> s_prefix(n + 1, 0);
  for (int l = 1; l <= n; ++l) s_prefix[l] = s_prefix[l - 1] + pair.col_sums[l - 1];
  for (int k = 0; k <= m; ++k)
    for (int l = 0; l <= n; ++l)
      t.values[static_cast<std::size_t>(k) * (n + 1) + l] =
          static_cast<long long>(k) * l - s_prefix[l] + r_tail[k];
  return t;
}

bool feasible(const DegreePair& pair) {
  if (pair.row_sums.empty() || pair.col_sums.empty()) return false;
  if (any_negative(pair.row_sums) || any_negative(pair.col_sums)) return false;
  if (vector_sum(pair.row_sums) != vector_sum(pair.col_sums)) return false;
  return sorted_structure_nonnegative(sorted_desc(pair.row_sums),
                                      sorted_desc(pair.col_sums));
}

bool is_nonempty(const DegreePair& pair) {
  if (any_negative(pair.row_sums) || any_negative(pair.col_sums))
    throw DomainError("degree pair entries must be nonnegative");
  if (vector_sum(pair.row_sums) != vector_sum(pair.col_sums))
    throw SumMismatchError("row sums and column sums have different totals");
  return feasible(pair);
}

BinaryMatrix construct_member(const DegreePair& pair) {
  if (!feasible(pair)) throw InfeasibleClassError("class is empty: " + pair.serialize());
  const int m = static_cast<int>(pair.row_sums.size());
  const int n = static_cast<int>(pair.col_sums.size());
  BinaryMatrix a(m, n);
  std::vector<int> residual = pair.row_sums;
  std::vector<int> order(m);
  for (int j = 0; j < n; ++j) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return residual[x] > residual[y]; });
    const int need = pair.col_sums[j];
    for (int k = 0; k < need; ++k) {
      const int row = order[k];
      assert(residual[row] > 0);
      a.set(row, j, true);
      --residual[row];
    }
  }
  assert(std::all_of(residual.begin(), residual.end(), [](int x) { return x == 0; }));
  return a;
}

long long max_t_term_rank(const DegreePair& pair, int t) {
  if (t < 1) throw DomainError("t must be a positive integer");
  if (!feasible(pair)) throw InfeasibleClassError("class is empty: " + pair.serialize());
  const SortedDegreePair sorted = sort_monotone(pair);
  const StructureMatrix grid = structure_matrix(sorted.pair);
  long long best = grid.at(0, 0);  // e = f = 0 term equals sigma
  for (int e = 0; e <= grid.m; ++e)
    for (int f = 0; f <= grid.n; ++f)
      best = std::min(best, grid.at(e, f) + static_cast<long long>(t) * e + f);
  return best;
}

bool full_rank_witness_exists(const DegreePair& pair, int t) {
  if (t < 1) throw DomainError("t must be a positive integer");
  const long long m = static_cast<long long>(pair.row_sums.size());
  const long long n = static_cast<long long>(pair.col_sums.size());
  if (n != t * m) throw DomainError("full rank requires n = t*m");
  return max_t_term_rank(pair, t) == t * m;
}

namespace {

void check_semiregular(int m, int n, int k, int l) {
  if (m < 1 || n < 1 || k < 1 || l < 1)
    throw DomainError("semiregular parameters must be positive");
  if (static_cast<long long>(k) * m != static_cast<long long>(l) * n)
    throw DomainError("semiregular class needs k*m = l*n");
  if (k > n || l > m) throw DomainError("semiregular degrees exceed the dimensions");
}

}  // namespace

long long semiregular_rank(int m, int n, int k, int l, int t) {
  check_semiregular(m, n, k, l);
  if (t < 1) throw DomainError("t must be a positive integer");
  return std::min(static_cast<long long>(t) * m, static_cast<long long>(n));
}

int semiregular_strength(int m, int n, int k, int l) {
  check_semiregular(m, n, k, l);
  if (m > n) throw DomainError("strength formula needs m <= n");
  return (n + m - 1) / m;
}

namespace {

struct Enumerator {
  const DegreePair& pair;
  long long limit;
  const std::function<bool(const BinaryMatrix&)>& visit;
  int m;
  int n;
  std::vector<int> residual;
  BinaryMatrix work;
  long long count = 0;
  bool stopped = false;

  Enumerator(const DegreePair& p, long long lim,
             const std::function<bool(const BinaryMatrix&)>& fn)
      : pair(p),
        limit(lim),
        visit(fn),
        m(static_cast<int>(p.row_sums.size())),
        n(static_cast<int>(p.col_sums.size())),
        residual(p.row_sums),
        work(m, n) {}

  bool residual_feasible(int next_col) const {
    std::vector<int> r = residual;
    std::sort(r.begin(), r.end(), std::greater<>());
    std::vector<int> s(pair.col_sums.begin() + next_col, pair.col_sums.end());
    std::sort(s.begin(), s.end(), std::greater<>());
    return sorted_structure_nonnegative(r, s);
  }

  void column(int j) {
    if (stopped) return;
    if (j == n) {
      if (++count > limit) throw CapacityError("class enumeration exceeded the member limit");
      if (!visit(work)) stopped = true;
      return;
    }
    std::vector<int> chosen;
    chosen.reserve(pair.col_sums[j]);
    pick(j, 0, pair.col_sums[j], chosen);
  }

  // Chooses `need` more rows (indices >= from, ascending) for column j.
  void pick(int j, int from, int need, std::vector<int>& chosen) {
    if (stopped) return;
    if (need == 0) {
      if (residual_feasible(j + 1)) column(j + 1);
      return;
    }
    for (int i = from; i <= m - need; ++i) {
      if (residual[i] == 0) continue;
      --residual[i];
      work.set(i, j, true);
      chosen.push_back(i);
      pick(j, i + 1, need - 1, chosen);
      chosen.pop_back();
      work.set(i, j, false);
      ++residual[i];
      if (stopped) return;
    }
  }
};

}  // namespace

void for_each_member(const DegreePair& pair, long long limit,
                     const std::function<bool(const BinaryMatrix&)>& visit) {
  if (limit < 1) throw DomainError("enumeration limit must be positive");
  if (!feasible(pair)) throw InfeasibleClassError("class is empty: " + pair.serialize());
  Enumerator e(pair, limit, visit);
  e.column(0);
}

std::vector<BinaryMatrix> enumerate_class(const DegreePair& pair, long long limit) {
  std::vector<BinaryMatrix> out;
  for_each_member(pair, limit, [&](const BinaryMatrix& a) {
    out.push_back(a);
    return true;
  });
  return out;
}

namespace {

// Unbiased bounded draw; mt19937_64's output sequence is fixed by the
// standard, so results are reproducible across platforms.
std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound) {
  const std::uint64_t threshold = (~bound + 1) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t x = gen();
    if (x >= threshold) return x % bound;
  }
}

}  // namespace

BinaryMatrix sample_class(const DegreePair& pair, long long steps, std::uint64_t seed) {
  if (steps < 0) throw DomainError("steps must be nonnegative");
  BinaryMatrix a = construct_member(pair);
  const int m = a.rows();
  const int n = a.cols();
  if (m < 2 || n < 2) return a;  // no interchange fits; every step is a no-op
  std::mt19937_64 gen(seed);
  for (long long step = 0; step < steps; ++step) {
    const int i1 = static_cast<int>(uniform_below(gen, m));
    const int i2 = static_cast<int>(uniform_below(gen, m));
    const int j1 = static_cast<int>(uniform_below(gen, n));
    const int j2 = static_cast<int>(uniform_below(gen, n));
    if (i1 == i2 || j1 == j2) continue;
    const bool d1 = a.get(i1, j1);
    const bool d2 = a.get(i1, j2);
    const bool d3 = a.get(i2, j1);
    const bool d4 = a.get(i2, j2);
    if (d1 != d4 || d2 != d3 || d1 == d2) continue;
    a.set(i1, j1, !d1);
    a.set(i1, j2, !d2);
    a.set(i2, j1, !d3);
    a.set(i2, j2, !d4);
  }
  return a;
}

}  // namespace termrank::classops
