#pragma once

// Combinatorics of Hilbert functions of zero-dimensional schemes in P^2:
// first differences, their validity, conjugates and the named families.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fatpoints {

/// First difference of a Hilbert function, (h_0, ..., h_sigma), validated.
///
/// A valid sequence starts with the staircase 1, 2, ..., alpha and is
/// nonincreasing from index alpha-1 on. alpha is the staircase length and
/// may equal sigma+1 (e.g. (1,2) or the single point (1)).
class DeltaH {
 public:
  /// Strips trailing zeros and validates. Throws InvalidDelta.
  static DeltaH validate(std::span<const long long> seq);
  static DeltaH validate(std::initializer_list<long long> seq) {
    return validate(std::span<const long long>(seq.begin(), seq.size()));
  }

  const std::vector<int>& values() const noexcept { return values_; }
  int operator[](std::size_t i) const { return values_.at(i); }
  std::size_t size() const noexcept { return values_.size(); }

  int sigma() const noexcept { return static_cast<int>(values_.size()) - 1; }
  int alpha() const noexcept { return alpha_; }
  /// Sum of all entries, i.e. the degree of any scheme realizing it.
  int total() const noexcept;

  friend bool operator==(const DeltaH&, const DeltaH&) = default;

 private:
  DeltaH(std::vector<int> values, int alpha)
      : values_(std::move(values)), alpha_(alpha) {}

  std::vector<int> values_;
  int alpha_ = 1;
};

/// H(0), ..., H(T) up to (and including) the first index reaching the stable
/// value; H(t) for t > T equals stable_value().
class HilbertFunction {
 public:
  /// Takes any nondecreasing prefix whose last entry is the stable value.
  /// Repeated trailing values are trimmed. Throws NotNondecreasing.
  static HilbertFunction from_values(std::span<const long long> values);
  static HilbertFunction from_values(std::initializer_list<long long> values) {
    return from_values(std::span<const long long>(values.begin(), values.size()));
  }

  const std::vector<long long>& values() const noexcept { return values_; }
  long long stable_value() const noexcept { return values_.back(); }
  /// Degree from which H is constant.
  int stable_index() const noexcept { return static_cast<int>(values_.size()) - 1; }
  long long at(int t) const;

  friend bool operator==(const HilbertFunction&, const HilbertFunction&) = default;

 private:
  explicit HilbertFunction(std::vector<long long> values) : values_(std::move(values)) {}
  std::vector<long long> values_;
};

/// (h_1^*, ..., h_alpha^*), stored 0-based; part(i) is the 1-based accessor.
class ConjugatePartition {
 public:
  explicit ConjugatePartition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int part(int i) const { return parts_.at(static_cast<std::size_t>(i - 1)); }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int sum() const noexcept;

  friend bool operator==(const ConjugatePartition&, const ConjugatePartition&) = default;

 private:
  std::vector<int> parts_;
};

struct DegreeSplit {
  int total = 0;
  int doubles = 0;    // floor(total / 3)
  int remainder = 0;  // total - 3 * doubles

  friend bool operator==(const DegreeSplit&, const DegreeSplit&) = default;
};

DeltaH validate_delta(std::span<const long long> seq);

ConjugatePartition conjugate(const DeltaH& d);

HilbertFunction accumulate(const DeltaH& d);

/// Differences H(i) - H(i-1) with H(-1) = 0, trailing zeros stripped.
DeltaH first_difference(const HilbertFunction& h);
/// Same for a raw sequence; throws NotNondecreasing if it ever decreases.
DeltaH first_difference(std::span<const long long> h);

DegreeSplit degree_split(const DeltaH& d);

/// (1, 2, ..., t, t+1 repeated t times): double points on a star of t+1 lines.
DeltaH star_delta(int t);
/// star_delta(t) followed by a single 1.
DeltaH star_plus_point_delta(int t);

/// star_delta(t) with one extra bullet on column t+1: a star of double
/// points plus a reduced point off all of its lines. t >= 2.
DeltaH star_bullet_atop_delta(int t);

/// First difference of i -> min{C(i+2,2), 3t}, the Hilbert function of t
/// generic double points. Throws ExceptionalT for t = 2 and t = 5, where the
/// formula is known to fail.
DeltaH generic_double_delta(int t);

/// Columns of bullets, column i holding h_i of them, bottom aligned and
/// separated by single spaces. Rows are newline terminated, top row first.
std::string render_dot_diagram(const DeltaH& d);

/// "1,2,3" -> {1,2,3}. Throws ParseError.
std::vector<long long> parse_integer_list(std::string_view text);
std::string format_integer_list(std::span<const int> values);
std::string format_integer_list(std::span<const long long> values);

long long binomial(long long n, long long k);

}  // namespace fatpoints
