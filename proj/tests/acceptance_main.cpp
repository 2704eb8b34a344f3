// Acceptance suite: one pass/fail line per criterion. Run with no argument
// for all criteria or with a single index (1..11).

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "termrank/classops.hpp"
#include "termrank/errors.hpp"
#include "termrank/matrix.hpp"
#include "termrank/oracle.hpp"
#include "termrank/rank.hpp"
#include "termrank/realize.hpp"
#include "test_support.hpp"

using namespace termrank;
using testsupport::draw_below;
using testsupport::mat;
using testsupport::random_matrix;

namespace {

struct Criterion {
  int index;
  std::string description;
  std::function<long long()> run;  // returns the number of violations
};

std::vector<std::vector<int>> monotone_vectors(int length, int max_entry) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(length);
  const std::function<void(int, int)> rec = [&](int pos, int bound) {
    if (pos == length) {
      out.push_back(v);
      return;
    }
    for (int value = bound; value >= 0; --value) {
      v[pos] = value;
      rec(pos + 1, value);
    }
  };
  rec(0, max_entry);
  return out;
}

// Every feasible class with the given size bounds and entries <= max_entry,
// both vectors monotone nonincreasing.
std::vector<DegreePair> feasible_classes(int max_m, int max_n, int max_entry) {
  std::vector<DegreePair> out;
  for (int m = 1; m <= max_m; ++m) {
    const std::vector<std::vector<int>> rows = monotone_vectors(m, max_entry);
    for (int n = 1; n <= max_n; ++n) {
      const std::vector<std::vector<int>> cols = monotone_vectors(n, max_entry);
      for (const auto& r : rows)
        for (const auto& s : cols) {
          const DegreePair pair{r, s};
          if (classops::feasible(pair)) out.push_back(pair);
        }
    }
  }
  return out;
}

long long criterion1() {
  long long bad = 0;
  const BinaryMatrix a = mat(testsupport::k7x9);
  bad += t_term_rank(a, 1).value != 6;
  bad += t_term_rank(a, 2).value != 8;
  const BinaryMatrix b = apply_interchange(a, {2, 3, 2, 3});
  bad += b != mat(testsupport::k7x9_after);
  bad += t_term_rank(b, 1).value != 7;
  bad += t_term_rank(b, 2).value != 8;
  return bad;
}

long long criterion2() {
  long long bad = 0;
  const BinaryMatrix a = mat(testsupport::k3x6);
  bad += t_term_rank(a, 1).value != 3;
  bad += t_term_rank(a, 2).value != 5;
  const BinaryMatrix b = apply_interchange(a, {1, 2, 4, 5});
  bad += b != mat(testsupport::k3x6_after);
  bad += t_term_rank(b, 1).value != 3;
  bad += t_term_rank(b, 2).value != 6;
  bad += strength(b) != 2;
  return bad;
}

long long criterion3() {
  long long bad = 0;
  const BinaryMatrix a = mat(testsupport::k4x4);
  bad += t_term_rank(a, 1).value != 2;
  bad += t_term_rank(a, 2).value != 3;
  const BinaryMatrix b = apply_interchange(a, {0, 1, 0, 1});
  bad += b != mat(testsupport::k4x4_after);
  bad += t_term_rank(b, 1).value != 3;
  bad += t_term_rank(b, 2).value != 4;
  return bad;
}

long long criterion4() {
  long long bad = 0;
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 4; ++n) {
      const long long total = 1ll << (m * n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : bad)
#endif
      for (long long bits = 0; bits < total; ++bits) {
        BinaryMatrix a(m, n);
        for (int cell = 0; cell < m * n; ++cell)
          if ((bits >> cell) & 1) a.set(cell / n, cell % n, true);
        for (int t = 1; t <= 3; ++t) {
          const RankResult res = t_term_rank(a, t);
          if (!res.witness.valid_for(a)) ++bad;
          if (res.value != oracle::brute_rank(a, t)) ++bad;
          if (oracle::brute_cover(a, t) != res.value) ++bad;
          if (hall_rank(a, t) != res.value) ++bad;
          if (t_term_rank(stack(a, t), 1).value != res.value) ++bad;
        }
      }
    }
  return bad;
}

long long criterion5() {
  long long bad = 0;
  std::mt19937_64 gen(501);
  for (int rep = 0; rep < 1000; ++rep) {
    const int m = 1 + static_cast<int>(draw_below(gen, 8));
    const int n = 1 + static_cast<int>(draw_below(gen, 10));
    const BinaryMatrix a = random_matrix(gen, m, n, 1 + static_cast<int>(draw_below(gen, 7)));
    for (int t = 1; t <= 4; ++t) {
      const LineCover cover = min_cover(a, t);
      if (!cover.covers(a)) ++bad;
      if (cover.weight() != t_term_rank(a, t).value) ++bad;
    }
  }
  return bad;
}

long long criterion6() {
  long long bad = 0;
  std::mt19937_64 gen(601);
  int collected = 0;
  while (collected < 1000) {
    const int m = 2 + static_cast<int>(draw_below(gen, 5));
    const int n = 2 + static_cast<int>(draw_below(gen, 6));
    const BinaryMatrix a = random_matrix(gen, m, n, 2 + static_cast<int>(draw_below(gen, 5)));
    std::vector<InterchangeMove> moves;
    for (int i1 = 0; i1 < m; ++i1)
      for (int i2 = i1 + 1; i2 < m; ++i2)
        for (int j1 = 0; j1 < n; ++j1)
          for (int j2 = j1 + 1; j2 < n; ++j2)
            if (a.get(i1, j1) == a.get(i2, j2) && a.get(i1, j2) == a.get(i2, j1) &&
                a.get(i1, j1) != a.get(i1, j2))
              moves.push_back({i1, i2, j1, j2});
    if (moves.empty()) continue;
    const InterchangeMove move = moves[draw_below(gen, moves.size())];
    const BinaryMatrix b = apply_interchange(a, move);
    ++collected;

    const RankProfile pa = rank_profile(a, 6);
    const RankProfile pb = rank_profile(b, 6);
    for (int k = 1; k < 6; ++k) {
      if (pa.values[k] - pa.values[k - 1] < pa.values[k + 1] - pa.values[k]) ++bad;
      if (pb.values[k] - pb.values[k - 1] < pb.values[k + 1] - pb.values[k]) ++bad;
    }
    for (int t = 1; t <= 4; ++t)
      if (std::abs(pb.values[t] - pa.values[t]) > 1) ++bad;
    for (int t = 2; t <= 4; ++t)
      if (pb.values[t - 1] == pa.values[t - 1] + 1 && pb.values[t] < pa.values[t]) ++bad;
  }
  return bad;
}

long long criterion7() {
  long long bad = 0;
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= 6; ++n)
      for (int k = 1; k <= n; ++k) {
        if ((static_cast<long long>(k) * m) % n != 0) continue;
        const int l = static_cast<int>(static_cast<long long>(k) * m / n);
        if (l < 1 || l > m) continue;
        const DegreePair pair{std::vector<int>(m, k), std::vector<int>(n, l)};
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
          const BinaryMatrix a =
              classops::sample_class(pair, 4ll * m * n + static_cast<long long>(seed % 7), seed);
          for (int t = 1; t <= 4; ++t)
            if (t_term_rank(a, t).value != classops::semiregular_rank(m, n, k, l, t)) ++bad;
          if (m <= n && strength(a) != classops::semiregular_strength(m, n, k, l)) ++bad;
        }
      }
  return bad;
}

long long criterion8() {
  const std::vector<DegreePair> classes = feasible_classes(4, 4, 3);
  long long bad = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : bad)
#endif
  for (std::size_t idx = 0; idx < classes.size(); ++idx) {
    for (int t = 1; t <= 3; ++t)
      if (classops::max_t_term_rank(classes[idx], t) !=
          oracle::brute_max_rank(classes[idx], t))
        ++bad;
  }
  return bad;
}

long long criterion9() {
  long long bad = 0;
  std::mt19937_64 gen(901);
  for (int rep = 0; rep < 200; ++rep) {
    const int m = 1 + static_cast<int>(draw_below(gen, 5));
    const int n = 1 + static_cast<int>(draw_below(gen, 8));
    const BinaryMatrix a = random_matrix(gen, m, n, 1 + static_cast<int>(draw_below(gen, 7)));
    const int t = 1 + static_cast<int>(draw_below(gen, 3));
    const long long p = static_cast<long long>(draw_below(gen, t * m + 1));
    const BinaryMatrix padded = padded_matrix(a, t, p);
    const bool attains = t_term_rank(a, t).value >= p;
    const bool full =
        t_term_rank(padded, t).value == static_cast<long long>(t) * padded.rows();
    if (attains != full) ++bad;
  }
  return bad;
}

long long criterion10() {
  long long bad = 0;
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      const std::vector<std::vector<int>> rows = monotone_vectors(m, n);
      const std::vector<std::vector<int>> cols = monotone_vectors(n, m);
      for (const auto& r : rows)
        for (const auto& s : cols) {
          long long sum_r = 0, sum_s = 0;
          for (int x : r) sum_r += x;
          for (int x : s) sum_s += x;
          if (sum_r != sum_s) continue;
          const DegreePair outer{r, s};
          const bool outer_ok = classops::feasible(outer);
          for (int t = 1; t <= 3; ++t) {
            // every inner vector within the pointwise bounds
            std::vector<int> rp(m), sp(n);
            const std::function<void(int)> walk_s = [&](int j) {
              if (j == n) {
                const DegreePair inner{rp, sp};
                const bool both = outer_ok && classops::feasible(inner);
                const bool brute = oracle::brute_nested_pair(outer, inner);
                bool search = true;
                try {
                  const realize::NestedPairResult res = realize::nested_pair(outer, inner, t);
                  if (row_sums(res.outer) != outer.row_sums ||
                      col_sums(res.outer) != outer.col_sums ||
                      row_sums(res.inner) != inner.row_sums ||
                      col_sums(res.inner) != inner.col_sums)
                    ++bad;
                } catch (const InfeasibleClassError&) {
                  search = false;
                }
                if (search != both || brute != both) ++bad;
                return;
              }
              for (sp[j] = std::max(0, s[j] - 1); sp[j] <= s[j]; ++sp[j]) walk_s(j + 1);
            };
            const std::function<void(int)> walk_r = [&](int i) {
              if (i == m) {
                walk_s(0);
                return;
              }
              for (rp[i] = std::max(0, r[i] - t); rp[i] <= r[i]; ++rp[i]) walk_r(i + 1);
            };
            walk_r(0);
          }
        }
    }
  return bad;
}

long long criterion11() {
  const std::vector<DegreePair> classes = feasible_classes(5, 5, 3);
  long long bad = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : bad)
#endif
  for (std::size_t idx = 0; idx < classes.size(); ++idx) {
    const DegreePair& pair = classes[idx];
    const int m = static_cast<int>(pair.row_sums.size());
    const int n = static_cast<int>(pair.col_sums.size());

    // Class maxima for k = 1..3 by brute force, one enumeration pass.
    long long maxima[4] = {0, 0, 0, 0};
    long long upper[4] = {0, 0, 0, 0};
    long long total = 0;
    for (int x : pair.row_sums) total += x;
    for (int k = 1; k <= 3; ++k)
      upper[k] = std::min({static_cast<long long>(k) * m, static_cast<long long>(n), total});
    classops::for_each_member(pair, 2'000'000, [&](const BinaryMatrix& member) {
      bool saturated = true;
      for (int k = 1; k <= 3; ++k) {
        if (maxima[k] < upper[k])
          maxima[k] = std::max(maxima[k],
                               static_cast<long long>(oracle::brute_rank(member, k)));
        saturated = saturated && maxima[k] == upper[k];
      }
      return !saturated;
    });

    for (int t = 1; t <= 3; ++t) {
      const realize::JointRealization joint = realize::joint_realizer(pair, t);
      const std::vector<int>& rho = joint.max_profile.values;
      for (int k = 1; k <= t; ++k) {
        if (rho[k] != maxima[k]) ++bad;
        if (t_term_rank(joint.A, k).value != maxima[k]) ++bad;
      }

      // Witness structure: C <= A with one 1 in each leading rho_t column,
      // none elsewhere, nonincreasing row counts bounded by t inside the
      // leading rho_1 rows, matching the partition counts.
      const std::vector<int> cr = row_sums(joint.C);
      const std::vector<int> cc = col_sums(joint.C);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
          if (joint.C.get(i, j) && !joint.A.get(i, j)) ++bad;
      for (int j = 0; j < n; ++j)
        if (cc[j] != (j < rho[t] ? 1 : 0)) ++bad;
      int row_cursor = 0;
      for (int k = t; k >= 0; --k) {
        const int count = joint.partition[t - k];
        if (count < 0) ++bad;
        for (int c = 0; c < count && row_cursor < m; ++c, ++row_cursor) {
          if (cr[row_cursor] != k) ++bad;
          if (k > 0 && row_cursor >= rho[1]) ++bad;  // inside leading rho_1 rows
        }
      }
      if (row_cursor != m) ++bad;
    }
  }
  return bad;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> criteria{
      {1, "7x9 sample: ranks 6/8, interchange gives 7/8", criterion1},
      {2, "3x6 sample: ranks 3/5 -> 3/6, strength 2", criterion2},
      {3, "4x4 sample: ranks 2/3 -> 3/4", criterion3},
      {4, "exhaustive m<=3 n<=4: matcher = oracles = stacked rank", criterion4},
      {5, "duality on 1000 random matrices up to 8x10", criterion5},
      {6, "concavity and interchange bounds on 1000 random moves", criterion6},
      {7, "semiregular classes m,n<=6: sampled ranks and strength", criterion7},
      {8, "max-rank formula vs brute force, m,n<=4 entries<=3", criterion8},
      {9, "padding equivalence on 200 random triples", criterion9},
      {10, "nested-pair biconditional, exhaustive m,n<=3", criterion10},
      {11, "joint realization on all classes m,n<=5 entries<=3", criterion11},
  };

  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > static_cast<int>(criteria.size())) {
      std::cerr << "usage: acceptance [1.." << criteria.size() << "]\n";
      return 2;
    }
  }

  int failures = 0;
  for (const Criterion& c : criteria) {
    if (only && c.index != only) continue;
    const auto start = std::chrono::steady_clock::now();
    long long violations = 0;
    try {
      violations = c.run();
    } catch (const std::exception& e) {
      violations = -1;
      std::printf("[FAIL] criterion %2d: %s (exception: %s)\n", c.index,
                  c.description.c_str(), e.what());
      ++failures;
      continue;
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (violations == 0) {
      std::printf("[PASS] criterion %2d: %s (%.2fs)\n", c.index, c.description.c_str(),
                  seconds);
    } else {
      std::printf("[FAIL] criterion %2d: %s (%lld violations, %.2fs)\n", c.index,
                  c.description.c_str(), violations, seconds);
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}
