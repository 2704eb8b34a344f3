#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "termrank/errors.hpp"

namespace termrank {

// Hard cap on the number of cells of any matrix this library materializes,
// including stacked and padded constructions.
inline constexpr long long kCellCap = 100'000'000;

// Dense (0,1)-matrix stored as packed 64-bit row words (low bit = column 0).
// Immutable in spirit: operations return new matrices instead of mutating
// shared ones, so values can be freely copied between threads.
class BinaryMatrix {
 public:
  BinaryMatrix(int rows, int cols);

  // Text format: one row per line of '0'/'1' characters, optional spaces
  // between characters, '#' lines and blank lines ignored.
  static BinaryMatrix parse(std::string_view text);

  int rows() const { return m_; }
  int cols() const { return n_; }

  bool get(int i, int j) const {
    return (bits_[static_cast<std::size_t>(i) * wpr_ + (j >> 6)] >> (j & 63)) & 1u;
  }

  void set(int i, int j, bool value) {
    std::uint64_t& w = bits_[static_cast<std::size_t>(i) * wpr_ + (j >> 6)];
    const std::uint64_t mask = std::uint64_t{1} << (j & 63);
    if (value)
      w |= mask;
    else
      w &= ~mask;
  }

  // Packed words of row i; trailing bits beyond column n-1 are always zero.
  std::span<const std::uint64_t> row_words(int i) const {
    return {bits_.data() + static_cast<std::size_t>(i) * wpr_,
            static_cast<std::size_t>(wpr_)};
  }
  int words_per_row() const { return wpr_; }

  std::string serialize() const;

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  int m_;
  int n_;
  int wpr_;
  std::vector<std::uint64_t> bits_;
};

std::vector<int> row_sums(const BinaryMatrix& a);
std::vector<int> col_sums(const BinaryMatrix& a);
long long sigma(const BinaryMatrix& a);

// The t*m x n matrix made of t copies of `a` stacked vertically.
BinaryMatrix stack(const BinaryMatrix& a, int t);

// u_i >= u_j - 1 for every i < j.
bool is_nearly_nonincreasing(std::span<const int> u);

// Prescribed row sum vector R and column sum vector S of a matrix class.
struct DegreePair {
  std::vector<int> row_sums;
  std::vector<int> col_sums;

  // Text format: "R=2,2,1;S=2,2,1" (entries may be negative).
  static DegreePair parse(std::string_view text);
  std::string serialize() const;

  friend bool operator==(const DegreePair&, const DegreePair&) = default;
};

struct SortedDegreePair {
  DegreePair pair;            // both vectors nonincreasing
  std::vector<int> row_perm;  // row_perm[k] = original index of sorted row k
  std::vector<int> col_perm;
};

// Nonincreasing rearrangement plus the permutations mapping sorted positions
// back to the caller's ordering. Ties keep the lower original index first.
SortedDegreePair sort_monotone(const DegreePair& pair);

}  // namespace termrank
