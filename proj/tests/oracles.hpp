#pragma once

// Brute-force oracles for the test suite. Deliberately share no code with
// the library: plain int64 arithmetic, exhaustive enumeration.

#include <cstdint>
#include <optional>
#include <vector>

namespace oracle {

// Shortest nonzero ||sum_j x_j col_j||^2 over x in [-bound, bound]^d.
// cols[j][i]; entries must be small enough that int64 never overflows
// (|entry| * d * bound^2 well under 2^63).
inline std::int64_t lambda1_sq(
    const std::vector<std::vector<std::int64_t>>& cols, int bound) {
  const std::size_t d = cols.size();
  const std::size_t rows = cols[0].size();
  std::vector<int> x(d, -bound);
  std::int64_t best = -1;
  while (true) {
    bool zero = true;
    for (std::size_t j = 0; j < d; ++j)
      if (x[j] != 0) zero = false;
    if (!zero) {
      std::int64_t nrm = 0;
      for (std::size_t i = 0; i < rows; ++i) {
        std::int64_t acc = 0;
        for (std::size_t j = 0; j < d; ++j) acc += x[j] * cols[j][i];
        nrm += acc * acc;
      }
      if (best < 0 || nrm < best) best = nrm;
    }
    // odometer
    std::size_t j = 0;
    while (j < d && x[j] == bound) x[j++] = -bound;
    if (j == d) break;
    ++x[j];
  }
  return best;
}

// Exhaustive subset-sum: x in {0,1}^n with sum x_i w_i == s.
inline std::optional<std::vector<int>> subset_sum(
    const std::vector<std::int64_t>& w, std::int64_t s) {
  const std::size_t n = w.size();
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ULL << i)) acc += w[i];
    if (acc == s) {
      std::vector<int> x(n, 0);
      for (std::size_t i = 0; i < n; ++i) x[i] = (mask >> i) & 1;
      return x;
    }
  }
  return std::nullopt;
}

}  // namespace oracle
