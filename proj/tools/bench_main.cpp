// Timing comparison of the OpenMP kernels against their serial references,
// plus the capacitated matcher against matching on the stacked matrix.

#include <chrono>
#include <iostream>
#include <random>

#include "termrank/matrix.hpp"
#include "termrank/rank.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using termrank::BinaryMatrix;

std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound) {
  const std::uint64_t threshold = (~bound + 1) % bound;
  for (;;) {
    const std::uint64_t x = gen();
    if (x >= threshold) return x % bound;
  }
}

BinaryMatrix random_matrix(std::mt19937_64& gen, int m, int n, int ones_in_eight) {
  BinaryMatrix a(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if (static_cast<int>(uniform_below(gen, 8)) < ones_in_eight) a.set(i, j, true);
  return a;
}

template <typename Fn>
double time_ms(Fn&& fn, int reps) {
  const auto start = std::chrono::high_resolution_clock::now();
  for (int r = 0; r < reps; ++r) fn();
  const auto stop = std::chrono::high_resolution_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count() / reps;
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "OpenMP not enabled; parallel kernels run serially\n";
#endif

  std::mt19937_64 gen(20240901);

  {
    const BinaryMatrix a = random_matrix(gen, 20, 48, 2);
    const int t = 2;
    int serial = 0, parallel = 0;
    const double ms_serial = time_ms([&] { serial = termrank::hall_rank_serial(a, t); }, 3);
    const double ms_parallel = time_ms([&] { parallel = termrank::hall_rank(a, t); }, 3);
    std::cout << "hall_rank 20x48 t=2: serial " << ms_serial << " ms, parallel "
              << ms_parallel << " ms, values " << serial << "/" << parallel
              << (serial == parallel ? " (match)" : " (MISMATCH)") << "\n";
  }

  {
    const BinaryMatrix a = random_matrix(gen, 300, 700, 1);
    const int t = 4;
    int direct = 0, stacked = 0;
    const double ms_direct = time_ms([&] { direct = termrank::t_term_rank(a, t).value; }, 5);
    const double ms_stacked = time_ms(
        [&] { stacked = termrank::t_term_rank(termrank::stack(a, t), 1).value; }, 5);
    std::cout << "t_term_rank 300x700 t=4: capacitated " << ms_direct
              << " ms, stacked " << ms_stacked << " ms, values " << direct << "/"
              << stacked << (direct == stacked ? " (match)" : " (MISMATCH)") << "\n";
  }

  return 0;
}
