#pragma once

// Ground-truth Hilbert functions of fat point schemes: the rank of the
// matrix of vanishing conditions a scheme imposes on forms of degree t.

#include <cstddef>
#include <vector>

#include "fatpoints/geometry.hpp"
#include "fatpoints/hf_core.hpp"
#include "fatpoints/scheme.hpp"

namespace fatpoints {

/// Dense row-major matrix of big integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Rank by fraction-free (Bareiss) elimination. Takes its argument by value
/// and eliminates in place.
std::size_t bareiss_rank(IntMatrix m);

/// Exponent vectors (a, b, c) with a + b + c = t, in lexicographically
/// decreasing order; column order of the conditions matrix.
std::vector<std::array<int, 3>> monomials(int t);

/// One row per derivative of order < m_i at P_i, one column per monomial of
/// degree t. Each point contributes C(m_i + 1, 2) rows.
IntMatrix conditions_matrix(const FatPointScheme& z, int t);

/// dim_k (I_Z)_t = C(t+2, 2) - rank.
long long ideal_dimension(const FatPointScheme& z, int t);

/// H_Z(0), ..., H_Z(max_degree).
std::vector<long long> hilbert_values(const FatPointScheme& z, int max_degree);

/// Degree bound by which every scheme here has stabilized.
int stabilization_cap(const FatPointScheme& z);

/// H_Z evaluated until it reaches deg Z. Throws CapExceeded if that does not
/// happen by stabilization_cap(z).
HilbertFunction hilbert_function(const FatPointScheme& z);

/// First difference of hilbert_function(z). Throws Error for an empty scheme.
DeltaH delta_hf(const FatPointScheme& z);

}  // namespace fatpoints
