#pragma once

// Fat point schemes, colon by a line, reduction vectors and the closed-form
// Hilbert function of a strictly decreasing full reduction vector.

#include <span>
#include <vector>

#include "fatpoints/geometry.hpp"
#include "fatpoints/hf_core.hpp"

namespace fatpoints {

struct FatPoint {
  ProjPoint point;
  int multiplicity = 1;

  friend bool operator==(const FatPoint&, const FatPoint&) = default;
};

/// m_1 P_1 + ... + m_s P_s with distinct supports, kept in insertion order.
/// Equality ignores order.
class FatPointScheme {
 public:
  FatPointScheme() = default;
  /// Throws InvalidScheme on a repeated support or multiplicity < 1.
  explicit FatPointScheme(std::vector<FatPoint> points);

  /// Throws InvalidScheme like the constructor.
  void add(ProjPoint p, int multiplicity);

  const std::vector<FatPoint>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  int max_multiplicity() const noexcept;
  /// Sum of the multiplicities.
  int multiplicity_sum() const noexcept;
  /// Points of the given multiplicity.
  std::size_t count_with_multiplicity(int m) const noexcept;

  friend bool operator==(const FatPointScheme& a, const FatPointScheme& b);

 private:
  std::vector<FatPoint> points_;
};

struct ReductionVector {
  std::vector<int> entries;
  bool full = false;

  friend bool operator==(const ReductionVector&, const ReductionVector&) = default;
};

/// Sum of C(m_i + 1, 2).
long long scheme_degree(const FatPointScheme& z);

/// Lowers the multiplicity of every point on l by one, dropping those that
/// reach zero.
FatPointScheme colon_by_line(const FatPointScheme& z, const ProjLine& l);

/// deg(l ∩ Z): sum of the multiplicities of the points of Z on l.
int line_intersection_degree(const ProjLine& l, const FatPointScheme& z);

ReductionVector reduction_vector(const FatPointScheme& z, std::span<const ProjLine> lines);

/// Z : l_1 : ... : l_n is empty.
bool totally_reduces(const FatPointScheme& z, std::span<const ProjLine> lines);
/// Counting form: every m_i P_i has at least m_i incident lines.
bool totally_reduces_by_count(const FatPointScheme& z, std::span<const ProjLine> lines);

/// H(t) = sum_i max(0, min{t - i + 1, d_{i+1}}).
/// Throws NotFullReduction or NotStrictlyDecreasing.
HilbertFunction gms_hilbert(const ReductionVector& d);

}  // namespace fatpoints
