#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "termrank/matrix.hpp"
#include "test_support.hpp"

using namespace termrank;
using testsupport::mat;

TEST_CASE("parse reads plain digit rows") {
  const BinaryMatrix a = mat("10\n01\n");
  CHECK(a.rows() == 2);
  CHECK(a.cols() == 2);
  CHECK(a.get(0, 0));
  CHECK_FALSE(a.get(0, 1));
  CHECK_FALSE(a.get(1, 0));
  CHECK(a.get(1, 1));
}

TEST_CASE("parse accepts spaces, comments and missing trailing newline") {
  const BinaryMatrix a = mat("# header\n1 0 1\n0 1 1");
  CHECK(a.rows() == 2);
  CHECK(a.cols() == 3);
  CHECK(a == mat("101\n011\n"));
}

TEST_CASE("parse rejects bad input") {
  CHECK_THROWS_AS(mat("1 0\n0 2\n"), ParseError);
  CHECK_THROWS_AS(mat("10\n011\n"), ParseError);
  CHECK_THROWS_AS(mat(""), ParseError);
  CHECK_THROWS_AS(mat("# only a comment\n"), ParseError);
}

TEST_CASE("7x9 sample transcribes with sigma 13") {
  const BinaryMatrix a = mat(testsupport::k7x9);
  CHECK(a.rows() == 7);
  CHECK(a.cols() == 9);
  CHECK(sigma(a) == 13);
  CHECK(row_sums(a) == std::vector<int>{2, 2, 4, 2, 1, 1, 1});
  CHECK(col_sums(a) == std::vector<int>{2, 1, 2, 2, 1, 1, 2, 1, 1});
}

TEST_CASE("sums of degenerate matrices") {
  const BinaryMatrix zero(3, 3);
  CHECK(row_sums(zero) == std::vector<int>{0, 0, 0});
  CHECK(col_sums(zero) == std::vector<int>{0, 0, 0});
  CHECK(sigma(zero) == 0);

  BinaryMatrix ones(2, 3);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) ones.set(i, j, true);
  CHECK(row_sums(ones) == std::vector<int>{3, 3});
  CHECK(col_sums(ones) == std::vector<int>{2, 2, 2});
  CHECK(sigma(ones) == 6);
}

TEST_CASE("serialize round-trips") {
  std::mt19937_64 gen(11);
  for (int rep = 0; rep < 50; ++rep) {
    const int m = 1 + static_cast<int>(testsupport::draw_below(gen, 7));
    const int n = 1 + static_cast<int>(testsupport::draw_below(gen, 70));
    const BinaryMatrix a = testsupport::random_matrix(gen, m, n, 3);
    CHECK(BinaryMatrix::parse(a.serialize()) == a);
    const std::vector<int> r = row_sums(a);
    const std::vector<int> s = col_sums(a);
    CHECK(std::accumulate(r.begin(), r.end(), 0ll) == sigma(a));
    CHECK(std::accumulate(s.begin(), s.end(), 0ll) == sigma(a));
  }
}

TEST_CASE("stack repeats rows with period m") {
  const BinaryMatrix a = mat(testsupport::k3x6);
  CHECK(stack(a, 1) == a);

  const BinaryMatrix eye = mat("10\n01\n");
  const BinaryMatrix s3 = stack(eye, 3);
  CHECK(s3.rows() == 6);
  CHECK(s3.cols() == 2);
  CHECK(col_sums(s3) == std::vector<int>{3, 3});

  std::mt19937_64 gen(12);
  const BinaryMatrix b = testsupport::random_matrix(gen, 3, 5, 4);
  const BinaryMatrix sb = stack(b, 4);
  for (int copy = 0; copy < 4; ++copy)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 5; ++j) CHECK(sb.get(copy * 3 + i, j) == b.get(i, j));
  const std::vector<int> scol = col_sums(sb);
  const std::vector<int> bcol = col_sums(b);
  for (int j = 0; j < 5; ++j) CHECK(scol[j] == 4 * bcol[j]);
}

TEST_CASE("stack enforces the cell cap") {
  const BinaryMatrix a = mat("11\n11\n");
  CHECK_THROWS_AS(stack(a, 100'000'000), CapacityError);
  CHECK_THROWS_AS(stack(a, 0), DomainError);
}

TEST_CASE("nearly nonincreasing predicate") {
  const std::vector<int> a{3, 4, 3, 4};
  CHECK(is_nearly_nonincreasing(a));
  const std::vector<int> b{3, 5};
  CHECK_FALSE(is_nearly_nonincreasing(b));
  const std::vector<int> c{5, 3, 2, 2, 1};
  CHECK(is_nearly_nonincreasing(c));
  const std::vector<int> single{7};
  CHECK(is_nearly_nonincreasing(single));
}

TEST_CASE("sort_monotone returns sorted values and origin permutations") {
  const DegreePair pair{{1, 3, 2}, {0, 2}};
  const SortedDegreePair sorted = sort_monotone(pair);
  CHECK(sorted.pair.row_sums == std::vector<int>{3, 2, 1});
  CHECK(sorted.row_perm == std::vector<int>{1, 2, 0});
  CHECK(sorted.pair.col_sums == std::vector<int>{2, 0});
  CHECK(sorted.col_perm == std::vector<int>{1, 0});

  const DegreePair already{{3, 2, 2}, {4, 1}};
  const SortedDegreePair same = sort_monotone(already);
  CHECK(same.pair == already);
  CHECK(same.row_perm == std::vector<int>{0, 1, 2});
  CHECK(same.col_perm == std::vector<int>{0, 1});
}

TEST_CASE("sort_monotone output is a nonincreasing permutation of the input") {
  std::mt19937_64 gen(13);
  for (int rep = 0; rep < 40; ++rep) {
    std::vector<int> r(1 + testsupport::draw_below(gen, 8));
    for (int& x : r) x = static_cast<int>(testsupport::draw_below(gen, 5));
    const DegreePair pair{r, {0}};
    const SortedDegreePair sorted = sort_monotone(pair);
    CHECK(std::is_sorted(sorted.pair.row_sums.begin(), sorted.pair.row_sums.end(),
                         std::greater<>()));
    std::vector<int> back(r.size());
    for (std::size_t k = 0; k < r.size(); ++k)
      back[sorted.row_perm[k]] = sorted.pair.row_sums[k];
    CHECK(back == r);
  }
}

TEST_CASE("degree pair text round-trips") {
  const DegreePair pair = DegreePair::parse("R=2,2,1;S=2,2,1");
  CHECK(pair.row_sums == std::vector<int>{2, 2, 1});
  CHECK(pair.col_sums == std::vector<int>{2, 2, 1});
  CHECK(DegreePair::parse(pair.serialize()) == pair);
  CHECK(DegreePair::parse(" R = 3 , -1 ; S = 2 ").row_sums == std::vector<int>{3, -1});
  CHECK_THROWS_AS(DegreePair::parse("R=1,2"), ParseError);
  CHECK_THROWS_AS(DegreePair::parse("R=1;S=x"), ParseError);
  CHECK_THROWS_AS(DegreePair::parse("S=1;R=1"), ParseError);
}
