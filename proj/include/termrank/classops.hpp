#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "termrank/matrix.hpp"

namespace termrank::classops {

// The (m+1) x (n+1) grid of values k*l - sum(s_1..s_l) + sum(r_{k+1}..r_m),
// indexed from 0 on both axes. Entries may be negative for infeasible pairs.
struct StructureMatrix {
  int m = 0;
  int n = 0;
  std::vector<long long> values;  // row-major, (m+1) rows of (n+1)

  long long at(int k, int l) const {
    return values[static_cast<std::size_t>(k) * (n + 1) + l];
  }
};

StructureMatrix structure_matrix(const DegreePair& pair);

// True when the class A(R,S) has a member. Returns false (never throws) on
// sum mismatch or negative entries; sorts both vectors internally before
// testing structure-matrix nonnegativity.
bool feasible(const DegreePair& pair);

// Same test with the strict error contract: negative entries raise
// DomainError and unequal totals raise SumMismatchError.
bool is_nonempty(const DegreePair& pair);

// Deterministic canonical member: column-by-column greedy placement into the
// rows with the largest remaining row sums, ties to the lowest row index.
BinaryMatrix construct_member(const DegreePair& pair);

// Maximum of the t-term rank over the class:
// min over (e,f) of structure(e,f) + t*e + f.
long long max_t_term_rank(const DegreePair& pair, int t);

// For n = t*m: whether some member attains the full rank t*m.
bool full_rank_witness_exists(const DegreePair& pair, int t);

// Every member of the semiregular class A(m,n;k,l) has t-term rank
// min(t*m, n); with m <= n its strength is ceil(n/m).
long long semiregular_rank(int m, int n, int k, int l, int t);
int semiregular_strength(int m, int n, int k, int l);

inline constexpr long long kDefaultEnumLimit = 1'000'000;

// Visits every member exactly once in lexicographic order of column fill
// patterns. The visitor returns false to stop early; exceeding `limit`
// members raises CapacityError.
void for_each_member(const DegreePair& pair, long long limit,
                     const std::function<bool(const BinaryMatrix&)>& visit);

std::vector<BinaryMatrix> enumerate_class(const DegreePair& pair,
                                          long long limit = kDefaultEnumLimit);

// Random walk by 2x2 interchanges from the canonical member. Each step draws
// two rows and two columns; non-patterns count as lazy no-op steps. The
// generator is mt19937_64 with rejection-sampled bounded draws, so a seed
// produces the same matrix on every platform.
BinaryMatrix sample_class(const DegreePair& pair, long long steps, std::uint64_t seed);

}  // namespace termrank::classops
