#include "termrank/matrix.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <limits>
#include <numeric>

namespace termrank {

namespace {

int words_for(int cols) { return (cols + 63) / 64; }

void check_shape(int rows, int cols) {
  if (rows < 1 || cols < 1) throw DomainError("matrix dimensions must be positive");
  if (static_cast<long long>(rows) * cols > kCellCap)
    throw CapacityError("matrix exceeds the cell cap");
}

}  // namespace

BinaryMatrix::BinaryMatrix(int rows, int cols) : m_(rows), n_(cols) {
  check_shape(rows, cols);
  wpr_ = words_for(cols);
  bits_.assign(static_cast<std::size_t>(m_) * wpr_, 0);
}

BinaryMatrix BinaryMatrix::parse(std::string_view text) {
  std::vector<std::vector<bool>> rows;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::vector<bool> row;
    bool comment = false;
    for (char c : line) {
      if (c == ' ' || c == '\t') {
        if (row.empty()) continue;  // leading whitespace
        continue;
      }
      if (c == '#' && row.empty()) {
        comment = true;
        break;
      }
      if (c == '0')
        row.push_back(false);
      else if (c == '1')
        row.push_back(true);
      else
        throw ParseError(std::string("invalid matrix character '") + c + "'");
    }
    if (comment || row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError("ragged rows in matrix text");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty matrix text");

  BinaryMatrix a(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (rows[i][j]) a.set(i, j, true);
  return a;
}

std::string BinaryMatrix::serialize() const {
  std::string out;
  out.reserve(static_cast<std::size_t>(m_) * (n_ + 1));
  for (int i = 0; i < m_; ++i) {
    for (int j = 0; j < n_; ++j) out.push_back(get(i, j) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

std::vector<int> row_sums(const BinaryMatrix& a) {
  std::vector<int> r(a.rows(), 0);
  for (int i = 0; i < a.rows(); ++i) {
    int count = 0;
    for (std::uint64_t w : a.row_words(i)) count += std::popcount(w);
    r[i] = count;
  }
  return r;
}

std::vector<int> col_sums(const BinaryMatrix& a) {
  std::vector<int> s(a.cols(), 0);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a.get(i, j)) ++s[j];
  return s;
}

long long sigma(const BinaryMatrix& a) {
  long long total = 0;
  for (int i = 0; i < a.rows(); ++i)
    for (std::uint64_t w : a.row_words(i)) total += std::popcount(w);
  return total;
}

BinaryMatrix stack(const BinaryMatrix& a, int t) {
  if (t < 1) throw DomainError("stack needs t >= 1");
  if (static_cast<long long>(t) * a.rows() * a.cols() > kCellCap)
    throw CapacityError("stacked matrix exceeds the cell cap");
  BinaryMatrix out(t * a.rows(), a.cols());
  for (int copy = 0; copy < t; ++copy)
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j)
        if (a.get(i, j)) out.set(copy * a.rows() + i, j, true);
  return out;
}

bool is_nearly_nonincreasing(std::span<const int> u) {
  // u_i >= u_j - 1 for i < j is equivalent to: every prefix minimum stays
  // within 1 of the entries that follow it.
  int min_so_far = std::numeric_limits<int>::max();
  for (int v : u) {
    if (min_so_far < v - 1) return false;
    min_so_far = std::min(min_so_far, v);
  }
  return true;
}

namespace {

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view token = text.substr(pos, comma - pos);
    pos = comma + 1;
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw ParseError("invalid integer in degree pair: '" + std::string(token) + "'");
    out.push_back(value);
    if (comma == text.size()) break;
  }
  if (out.empty()) throw ParseError("empty degree list");
  return out;
}

}  // namespace

DegreePair DegreePair::parse(std::string_view text) {
  std::string compact;
  compact.reserve(text.size());
  for (char c : text)
    if (c != ' ' && c != '\t') compact.push_back(c);

  std::string_view v(compact);
  if (v.substr(0, 2) != "R=") throw ParseError("degree pair must start with 'R='");
  const std::size_t semi = v.find(';');
  if (semi == std::string_view::npos) throw ParseError("degree pair needs ';' between R and S");
  std::string_view rpart = v.substr(2, semi - 2);
  std::string_view spart = v.substr(semi + 1);
  if (spart.substr(0, 2) != "S=") throw ParseError("degree pair must contain 'S='");
  spart.remove_prefix(2);
  DegreePair out;
  out.row_sums = parse_int_list(rpart);
  out.col_sums = parse_int_list(spart);
  return out;
}

std::string DegreePair::serialize() const {
  std::string out = "R=";
  for (std::size_t i = 0; i < row_sums.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(row_sums[i]);
  }
  out += ";S=";
  for (std::size_t i = 0; i < col_sums.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(col_sums[i]);
  }
  return out;
}

namespace {

std::vector<int> sorted_perm(const std::vector<int>& values) {
  std::vector<int> perm(values.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](int a, int b) { return values[a] > values[b]; });
  return perm;
}

}  // namespace

SortedDegreePair sort_monotone(const DegreePair& pair) {
  SortedDegreePair out;
  out.row_perm = sorted_perm(pair.row_sums);
  out.col_perm = sorted_perm(pair.col_sums);
  out.pair.row_sums.reserve(pair.row_sums.size());
  out.pair.col_sums.reserve(pair.col_sums.size());
  for (int idx : out.row_perm) out.pair.row_sums.push_back(pair.row_sums[idx]);
  for (int idx : out.col_perm) out.pair.col_sums.push_back(pair.col_sums[idx]);
  return out;
}

}  // namespace termrank
