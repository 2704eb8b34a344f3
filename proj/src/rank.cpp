#include "termrank/rank.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <limits>

#include "termrank/errors.hpp"

namespace termrank {

namespace {

std::vector<std::vector<int>> column_adjacency(const BinaryMatrix& a) {
  std::vector<std::vector<int>> adj(a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a.get(i, j)) adj[j].push_back(i);
  return adj;
}

// Kuhn-style augmenting search on the bipartite graph column -> row where a
// column holds at most one selected 1 and a row at most cap. Equivalent to
// matching on the stacked matrix without materializing it. Scan orders are
// fixed (columns left to right, rows top to bottom) so results are
// deterministic.
class CapacitatedMatcher {
 public:
  explicit CapacitatedMatcher(const BinaryMatrix& a)
      : n_(a.cols()),
        adj_(column_adjacency(a)),
        col_row_(a.cols(), -1),
        row_cols_(a.rows()),
        visited_(a.rows(), 0) {}

  // Raises every row capacity to cap and augments until maximal.
  // Returns the number of matched columns.
  int augment_to(int cap) {
    cap_ = cap;
    for (int j = 0; j < n_; ++j) {
      if (col_row_[j] >= 0 || adj_[j].empty()) continue;
      ++stamp_;
      if (try_column(j)) ++matched_;
    }
    return matched_;
  }

  int matched() const { return matched_; }
  const std::vector<int>& column_assignment() const { return col_row_; }
  const std::vector<std::vector<int>>& row_assignment() const { return row_cols_; }
  const std::vector<std::vector<int>>& adjacency() const { return adj_; }

 private:
  bool try_column(int j) {
    for (int i : adj_[j]) {
      if (visited_[i] == stamp_) continue;
      visited_[i] = stamp_;
      if (static_cast<int>(row_cols_[i].size()) < cap_) {
        attach(j, i);
        return true;
      }
      // Row full: try to re-route one of its columns. The recursion can
      // touch other rows' lists, so walk a snapshot.
      const std::vector<int> held = row_cols_[i];
      for (int moved : held) {
        if (!try_column(moved)) continue;
        row_cols_[i].erase(std::find(row_cols_[i].begin(), row_cols_[i].end(), moved));
        attach(j, i);
        return true;
      }
    }
    return false;
  }

  void attach(int j, int i) {
    col_row_[j] = i;
    row_cols_[i].push_back(j);
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> col_row_;
  std::vector<std::vector<int>> row_cols_;
  std::vector<int> visited_;
  int cap_ = 0;
  int stamp_ = 0;
  int matched_ = 0;
};

void require_positive_t(int t) {
  if (t < 1) throw DomainError("t must be a positive integer");
}

Selection selection_from(const CapacitatedMatcher& matcher, int t) {
  Selection sel;
  sel.t_bound = t;
  const auto& col_row = matcher.column_assignment();
  for (int j = 0; j < static_cast<int>(col_row.size()); ++j)
    if (col_row[j] >= 0) sel.cells.emplace_back(col_row[j], j);
  std::sort(sel.cells.begin(), sel.cells.end());
  return sel;
}

}  // namespace

bool Selection::valid_for(const BinaryMatrix& a) const {
  std::vector<int> row_use(a.rows(), 0);
  std::vector<char> col_use(a.cols(), 0);
  for (const auto& [i, j] : cells) {
    if (i < 0 || i >= a.rows() || j < 0 || j >= a.cols()) return false;
    if (!a.get(i, j)) return false;
    if (col_use[j]) return false;
    col_use[j] = 1;
    if (++row_use[i] > t_bound) return false;
  }
  return true;
}

bool LineCover::covers(const BinaryMatrix& a) const {
  std::vector<char> in_rows(a.rows(), 0), in_cols(a.cols(), 0);
  for (int i : rows) {
    if (i < 0 || i >= a.rows()) return false;
    in_rows[i] = 1;
  }
  for (int j : cols) {
    if (j < 0 || j >= a.cols()) return false;
    in_cols[j] = 1;
  }
  for (int i = 0; i < a.rows(); ++i) {
    if (in_rows[i]) continue;
    for (int j = 0; j < a.cols(); ++j)
      if (a.get(i, j) && !in_cols[j]) return false;
  }
  return true;
}

RankResult t_term_rank(const BinaryMatrix& a, int t) {
  require_positive_t(t);
  CapacitatedMatcher matcher(a);
  RankResult out;
  out.value = matcher.augment_to(t);
  out.witness = selection_from(matcher, t);
  return out;
}

LineCover min_cover(const BinaryMatrix& a, int t) {
  require_positive_t(t);
  CapacitatedMatcher matcher(a);
  matcher.augment_to(t);

  // Alternating reachability from unmatched columns: forward along unused
  // 1-edges, backward along matched ones. Reached rows plus unreached
  // columns form a minimum cover.
  const auto& col_row = matcher.column_assignment();
  const auto& row_cols = matcher.row_assignment();
  const auto& adj = matcher.adjacency();
  std::vector<char> col_reached(a.cols(), 0), row_reached(a.rows(), 0);
  std::vector<int> queue;
  for (int j = 0; j < a.cols(); ++j)
    if (col_row[j] < 0) {
      col_reached[j] = 1;
      queue.push_back(j);
    }
  while (!queue.empty()) {
    const int j = queue.back();
    queue.pop_back();
    for (int i : adj[j]) {
      if (i == col_row[j] || row_reached[i]) continue;
      row_reached[i] = 1;
      for (int j2 : row_cols[i])
        if (!col_reached[j2]) {
          col_reached[j2] = 1;
          queue.push_back(j2);
        }
    }
  }

  LineCover cover;
  cover.t_bound = t;
  for (int i = 0; i < a.rows(); ++i)
    if (row_reached[i]) cover.rows.push_back(i);
  for (int j = 0; j < a.cols(); ++j)
    if (!col_reached[j]) cover.cols.push_back(j);
  assert(cover.weight() == matcher.matched());
  return cover;
}

RankProfile rank_profile(const BinaryMatrix& a, int t_max) {
  require_positive_t(t_max);
  if (t_max > 1'000'000) throw CapacityError("profile length is capped at 10^6");
  RankProfile profile;
  profile.values.assign(t_max + 1, 0);
  CapacitatedMatcher matcher(a);
  int k = 1;
  for (; k <= t_max; ++k) {
    profile.values[k] = matcher.augment_to(k);
    // Increments never grow again once they hit zero.
    if (profile.values[k] == profile.values[k - 1]) break;
  }
  for (++k; k <= t_max; ++k) profile.values[k] = profile.values[k - 1];
  return profile;
}

int strength(const BinaryMatrix& a) {
  const std::vector<int> s = col_sums(a);
  for (int j = 0; j < a.cols(); ++j)
    if (s[j] == 0)
      throw UndefinedStrengthError("strength undefined: column " +
                                   std::to_string(j + 1) + " has no 1");
  const std::vector<int> r = row_sums(a);
  const int max_row = *std::max_element(r.begin(), r.end());
  CapacitatedMatcher matcher(a);
  for (int t = 1; t <= max_row; ++t)
    if (matcher.augment_to(t) == a.cols()) return t;
  throw std::logic_error("strength exceeded the maximum row sum");
}

namespace {

// Staged matching on explicit (row, level) slots. Level occupancies are
// monotone under augmentation, so after stage j the slots on levels < j hold
// exactly rho_j matched columns; reading levels off at the end therefore
// yields prefix-optimal layers.
class LevelMatcher {
 public:
  LevelMatcher(const BinaryMatrix& a, int t)
      : m_(a.rows()),
        n_(a.cols()),
        adj_(column_adjacency(a)),
        col_row_(a.cols(), -1),
        col_level_(a.cols(), -1),
        slot_col_(static_cast<std::size_t>(t) * a.rows(), -1),
        visited_(static_cast<std::size_t>(t) * a.rows(), 0) {}

  void run_stage(int levels) {
    levels_ = levels;
    for (int j = 0; j < n_; ++j) {
      if (col_row_[j] >= 0 || adj_[j].empty()) continue;
      ++stamp_;
      try_column(j);
    }
  }

  int column_row(int j) const { return col_row_[j]; }
  int column_level(int j) const { return col_level_[j]; }

 private:
  bool try_column(int j) {
    for (int level = 0; level < levels_; ++level) {
      for (int i : adj_[j]) {
        const std::size_t slot = static_cast<std::size_t>(level) * m_ + i;
        if (visited_[slot] == stamp_) continue;
        visited_[slot] = stamp_;
        const int occupant = slot_col_[slot];
        if (occupant < 0 || try_column(occupant)) {
          slot_col_[slot] = j;
          col_row_[j] = i;
          col_level_[j] = level;
          return true;
        }
      }
    }
    return false;
  }

  int m_;
  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> col_row_;
  std::vector<int> col_level_;
  std::vector<int> slot_col_;
  std::vector<int> visited_;
  int levels_ = 0;
  int stamp_ = 0;
};

}  // namespace

NestedSelections nested_selections(const BinaryMatrix& a, int t) {
  require_positive_t(t);
  if (static_cast<long long>(t) * a.rows() > kCellCap)
    throw CapacityError("nested selection level table exceeds the cell cap");
  LevelMatcher matcher(a, t);
  for (int stage = 1; stage <= t; ++stage) matcher.run_stage(stage);

  NestedSelections out;
  out.layers.assign(t, {});
  for (int j = 0; j < a.cols(); ++j)
    if (matcher.column_row(j) >= 0)
      out.layers[matcher.column_level(j)].emplace_back(matcher.column_row(j), j);
  return out;
}

namespace {

constexpr int kHallRowCap = 20;

using Words = std::vector<std::uint64_t>;

long long popcount_words(const std::uint64_t* w, int count) {
  long long total = 0;
  for (int k = 0; k < count; ++k) total += std::popcount(w[k]);
  return total;
}

// Include/exclude scan over the remaining rows, carrying the running union
// of row supports. acc must have (m - depth + 1) * words space.
long long hall_scan(const std::vector<Words>& row_masks, int depth, int chosen,
                    std::uint64_t* acc, int words, long long t, int m) {
  if (depth == m)
    return popcount_words(acc, words) + t * (m - chosen);
  std::uint64_t* next = acc + words;
  // Exclude row `depth`.
  std::copy(acc, acc + words, next);
  long long best = hall_scan(row_masks, depth + 1, chosen, next, words, t, m);
  // Include it.
  for (int k = 0; k < words; ++k) next[k] = acc[k] | row_masks[depth][k];
  best = std::min(best, hall_scan(row_masks, depth + 1, chosen + 1, next, words, t, m));
  return best;
}

std::vector<Words> collect_row_masks(const BinaryMatrix& a) {
  std::vector<Words> masks(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    const auto span = a.row_words(i);
    masks[i].assign(span.begin(), span.end());
  }
  return masks;
}

void check_hall_input(const BinaryMatrix& a, int t) {
  require_positive_t(t);
  if (a.rows() > kHallRowCap)
    throw CapacityError("hall_rank scans 2^m row subsets; m must be <= 20");
}

}  // namespace

int hall_rank_serial(const BinaryMatrix& a, int t) {
  check_hall_input(a, t);
  const int m = a.rows();
  const int words = a.words_per_row();
  const std::vector<Words> masks = collect_row_masks(a);
  std::vector<std::uint64_t> acc(static_cast<std::size_t>(m + 1) * words, 0);
  const long long best = hall_scan(masks, 0, 0, acc.data(), words, t, m);
  return static_cast<int>(best);
}

int hall_rank(const BinaryMatrix& a, int t) {
  check_hall_input(a, t);
  const int m = a.rows();
#ifdef _OPENMP
  if (m > 12) {
    const int words = a.words_per_row();
    const std::vector<Words> masks = collect_row_masks(a);
    const int split = 10;  // parallelize over the first rows' choices
    const long long prefixes = 1ll << split;
    long long best = std::numeric_limits<long long>::max();
    const std::vector<Words> rest(masks.begin() + split, masks.end());
#pragma omp parallel for schedule(dynamic, 8) reduction(min : best)
    for (long long prefix = 0; prefix < prefixes; ++prefix) {
      std::vector<std::uint64_t> acc(static_cast<std::size_t>(m - split + 1) * words, 0);
      int chosen = 0;
      for (int row = 0; row < split; ++row)
        if ((prefix >> row) & 1) {
          ++chosen;
          for (int k = 0; k < words; ++k) acc[k] |= masks[row][k];
        }
      // hall_scan charges t per excluded row among the remaining m - split;
      // the excluded prefix rows are charged here.
      const long long value = hall_scan(rest, 0, 0, acc.data(), words, t, m - split) +
                              t * static_cast<long long>(split - chosen);
      best = std::min(best, value);
    }
    return static_cast<int>(best);
  }
#endif
  return hall_rank_serial(a, t);
}

BinaryMatrix apply_interchange(const BinaryMatrix& a, const InterchangeMove& move) {
  const auto in_range = [&](int i, int j) {
    return i >= 0 && i < a.rows() && j >= 0 && j < a.cols();
  };
  if (!in_range(move.row1, move.col1) || !in_range(move.row2, move.col2) ||
      move.row1 == move.row2 || move.col1 == move.col2)
    throw InvalidMoveError("interchange needs two distinct rows and columns in range");
  const bool d1 = a.get(move.row1, move.col1);
  const bool d2 = a.get(move.row1, move.col2);
  const bool d3 = a.get(move.row2, move.col1);
  const bool d4 = a.get(move.row2, move.col2);
  if (d1 != d4 || d2 != d3 || d1 == d2)
    throw InvalidMoveError("cells do not form an interchange pattern");
  BinaryMatrix out = a;
  out.set(move.row1, move.col1, !d1);
  out.set(move.row1, move.col2, !d2);
  out.set(move.row2, move.col1, !d3);
  out.set(move.row2, move.col2, !d4);
  return out;
}

BinaryMatrix padded_matrix(const BinaryMatrix& a, int t, long long p) {
  require_positive_t(t);
  const long long m = a.rows();
  const long long n = a.cols();
  if (p < 0 || p > t * m) throw DomainError("p must satisfy 0 <= p <= t*m");
  const long long l = n > p ? (n - p + t - 1) / t : 0;
  const long long out_rows = m + l;
  const long long out_cols = t * (m + l);
  if (out_rows * out_cols > kCellCap)
    throw CapacityError("padded matrix exceeds the cell cap");

  BinaryMatrix out(static_cast<int>(out_rows), static_cast<int>(out_cols));
  const long long left = t * m - p;  // all-ones border width
  // Top l rows: all ones across every block (left border, middle, right).
  for (long long i = 0; i < l; ++i)
    for (long long j = 0; j < out_cols; ++j) out.set(static_cast<int>(i), static_cast<int>(j), true);
  // Bottom m rows: ones on the left border, a copy of `a`, then zeros of
  // width t*l - (n - p).
  for (long long i = 0; i < m; ++i) {
    for (long long j = 0; j < left; ++j) out.set(static_cast<int>(l + i), static_cast<int>(j), true);
    for (long long j = 0; j < n; ++j)
      if (a.get(static_cast<int>(i), static_cast<int>(j)))
        out.set(static_cast<int>(l + i), static_cast<int>(left + j), true);
  }
  return out;
}

}  // namespace termrank
