#pragma once

// Helpers shared by the unit and acceptance suites: seeded generators of
// valid first differences and an independent rational rank routine.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "fatpoints/hf_core.hpp"
#include "fatpoints/oracle.hpp"

namespace fatpoints::testing {

/// Random valid first difference: staircase 1..alpha, then a nonincreasing
/// tail. sigma stays <= max_sigma and the sum <= max_total.
inline DeltaH random_delta(std::mt19937_64& rng, int max_sigma, int max_total) {
  for (;;) {
    auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
    const int alpha = pick(1, std::min(max_sigma + 1, 9));
    std::vector<long long> v;
    for (int i = 1; i <= alpha; ++i) v.push_back(i);
    const int tail = pick(0, max_sigma + 1 - alpha);
    long long top = alpha;
    for (int k = 0; k < tail; ++k) {
      top = pick(1, static_cast<int>(top));
      v.push_back(top);
    }
    long long total = 0;
    for (auto x : v) total += x;
    if (total <= max_total) return DeltaH::validate(v);
  }
}

/// Rank by Gauss-Jordan elimination over Q; deliberately a different route
/// from the fraction-free integer elimination under test.
inline std::size_t rational_rank(const IntMatrix& m) {
  std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = mpq_class(m(r, c));
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const mpq_class f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < m.cols(); ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline std::vector<long long> as_ll(const std::vector<int>& v) { return {v.begin(), v.end()}; }

}  // namespace fatpoints::testing
