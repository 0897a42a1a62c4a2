#pragma once

// Building schemes of double and reduced points with a prescribed Hilbert
// function: k-configurations, the Hilbert-function-preserving merge, the
// step-by-step construction, and the star-configuration families.
//
// Line indices are 1-based everywhere in this header (l_1, ..., l_alpha),
// matching the conjugate h_1^*, ..., h_alpha^* and the labels P_{i,j}.

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "fatpoints/geometry.hpp"
#include "fatpoints/hf_core.hpp"
#include "fatpoints/scheme.hpp"

namespace fatpoints {

struct ReducedPoint {
  ProjPoint point;
  std::size_t line = 1;

  friend bool operator==(const ReducedPoint&, const ReducedPoint&) = default;
};

/// 2 P_{i,j} with P_{i,j} = l_i ∩ l_j and i < j.
struct DoublePoint {
  ProjPoint point;
  std::size_t i = 1;
  std::size_t j = 2;

  friend bool operator==(const DoublePoint&, const DoublePoint&) = default;
};

/// Double and reduced points placed on an arrangement, each labelled with
/// the line(s) that carry it.
class LabeledScheme {
 public:
  /// Checks the labels: every reduced point lies on its line and on no
  /// other, every double point is the intersection it names. Throws
  /// HypothesisViolation ('a', 'b' or 'c').
  LabeledScheme(Arrangement arrangement, std::vector<ReducedPoint> reduced, std::vector<DoublePoint> doubles);

  const Arrangement& arrangement() const noexcept { return arrangement_; }
  /// In placement order.
  const std::vector<ReducedPoint>& reduced() const noexcept { return reduced_; }
  /// In creation order.
  const std::vector<DoublePoint>& doubles() const noexcept { return doubles_; }

  /// Doubles first, then reduced points.
  FatPointScheme scheme() const;

  std::size_t reduced_count_on(std::size_t line) const noexcept;
  /// Reduced points of l_line, oldest first.
  std::vector<ProjPoint> reduced_on(std::size_t line) const;
  bool has_double_at(std::size_t i, std::size_t j) const noexcept;

  /// Along l_1, ..., l_n of the arrangement.
  ReductionVector reduction_vector() const;
  bool reduction_strictly_decreasing() const;

 private:
  Arrangement arrangement_;
  std::vector<ReducedPoint> reduced_;
  std::vector<DoublePoint> doubles_;
};

/// Reduced points: h_i^* of them on l_i, avoiding every other line.
/// Throws ArityMismatch if the arrangement does not have alpha lines,
/// Error if it is not in general position, GenerationExhausted.
LabeledScheme k_configuration(const DeltaH& d, const Arrangement& arr, std::uint64_t seed);

/// Replaces reduced q1, q2 on l_i and r on l_j (i < j) with the double
/// point 2P_{i,j}. Every hypothesis of the operation is checked first and a
/// failure throws HypothesisViolation naming it.
LabeledScheme merge(const LabeledScheme& z, std::size_t i, std::size_t j, const ProjPoint& q1, const ProjPoint& q2,
                    const ProjPoint& r);

struct MergeRecord {
  std::size_t i = 0;
  std::size_t j = 0;
  /// q1, q2 (from l_i) and r (from l_j).
  std::vector<ProjPoint> removed;
};

struct TraceStep {
  int n = 0;
  /// ((h_n^* - (n-1))_+, ..., (h_alpha^* - (n-1))_+)
  std::vector<int> h_n;
  int s_n = 0;
  int t_n = 0;
  std::vector<MergeRecord> merges;
  /// The double-point budget ran out before all t_n merges.
  bool partial = false;
};

struct ConstructionTrace {
  std::vector<TraceStep> steps;
  int terminal_step = 0;
};

struct Construction {
  LabeledScheme scheme;
  ConstructionTrace trace;
};

/// Called with the scheme after every merge.
using MergeObserver = std::function<void(const LabeledScheme&)>;

/// Step 0 places a k-configuration on a random arrangement of alpha lines;
/// step n merges pairs of reduced points on l_n with one reduced point on
/// each of l_{n+1}, ..., l_{n+t_n}. With stop_at = e the run ends as soon
/// as e double points exist. Merged points are taken newest first.
Construction construct(const DeltaH& d, std::uint64_t seed, std::optional<int> stop_at = std::nullopt,
                       const MergeObserver& observer = {});

/// Number of double points the construction produces, from d alone.
int predicted_double_count(const DeltaH& d);

struct DoubleBounds {
  int lower = 0;
  int upper = 0;

  friend bool operator==(const DoubleBounds&, const DoubleBounds&) = default;
};

/// min{floor((sigma+1)/2), alpha-1} <= count <= C(alpha, 2).
DoubleBounds double_bounds(const DeltaH& d);

/// (h_i^* - (i-1))_+ / 2 equals #{k : i < k <= alpha, h_k^* >= i} exactly for
/// every i < alpha, so the construction ends with double points only. False
/// for alpha = 1, where no double point is ever made.
bool all_doubles_criterion(const DeltaH& d);

/// The conjugate is the run (2 alpha - 2, 2 alpha - 3, ..., alpha - 1).
bool cor313_criterion(const DeltaH& d);

/// Double points at all C(t+1, 2) pairwise intersections of t+1 random
/// lines in general position.
LabeledScheme star_scheme(int t, std::uint64_t seed);

/// star_scheme(t) plus one reduced point: on l_line when given (away from
/// the intersections), otherwise off every line.
FatPointScheme star_plus_point(int t, std::uint64_t seed, std::optional<std::size_t> line);

/// star_scheme(t) with the double point at position `which` of its doubles
/// moved to a random point off all lines.
FatPointScheme perturbed_star(int t, std::uint64_t seed, std::size_t which);

struct NearStar {
  FatPointScheme scheme;
  Arrangement arrangement;
  /// General point of l_2 carrying the displaced double point 2Q.
  ProjPoint q;
  /// Reduced general point of l_1.
  ProjPoint p;
};

/// Double points at l_i ∩ l_j for all pairs except (1, 2), a double point 2Q
/// at a general point of l_2 and a reduced general point P on l_1. t >= 3.
NearStar near_star_scheme(int t, std::uint64_t seed);

/// Double points the construction yields for t generic double points.
/// Throws ExceptionalT for t = 2, 5.
int s_of_t(int t);

struct AsymptoticRow {
  int t = 0;
  int s = 0;
  Rational ratio;  // s / t
};

/// Throws ExceptionalT if any t is 2 or 5.
std::vector<AsymptoticRow> asymptotic_table(std::span<const int> t_values);

}  // namespace fatpoints
