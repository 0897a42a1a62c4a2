#pragma once

// Exact projective-plane primitives over Q and seeded generation of line
// arrangements in general position.

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace fatpoints {

using Rational = mpq_class;
using BigInt = mpz_class;

/// "num/den" or "num" (den = 1); always canonical. Throws ParseError.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& q);

/// Coordinate triple up to nonzero scaling, stored with its first nonzero
/// entry equal to 1. Points and lines share the representation but are
/// distinct types.
template <class Tag>
class Projective {
 public:
  /// Throws Error if all three entries are zero.
  Projective(Rational a, Rational b, Rational c);
  Projective(long a, long b, long c) : Projective(Rational(a), Rational(b), Rational(c)) {}
  explicit Projective(const std::array<Rational, 3>& v) : Projective(v[0], v[1], v[2]) {}

  const std::array<Rational, 3>& coords() const noexcept { return v_; }
  const Rational& operator[](std::size_t i) const { return v_.at(i); }

  /// Smallest integer multiple with gcd 1 and first nonzero entry positive.
  std::array<BigInt, 3> primitive_integers() const;

  std::string to_string() const;

  friend bool operator==(const Projective& a, const Projective& b) { return a.v_ == b.v_; }
  friend bool operator<(const Projective& a, const Projective& b) { return a.v_ < b.v_; }

 private:
  std::array<Rational, 3> v_;
};

struct PointTag {};
struct LineTag {};

using ProjPoint = Projective<PointTag>;
/// The line a*x + b*y + c*z = 0, coefficients (a, b, c).
using ProjLine = Projective<LineTag>;

/// Ordered lines with the seed they were drawn from.
struct Arrangement {
  std::vector<ProjLine> lines;
  std::uint64_t seed = 0;

  std::size_t size() const noexcept { return lines.size(); }
  /// 1-based, matching the l_1, ..., l_n labelling.
  const ProjLine& line(std::size_t i) const { return lines.at(i - 1); }

  friend bool operator==(const Arrangement&, const Arrangement&) = default;
};

/// Coordinates for generated lines and points are integers in
/// [-kCoordinateBound, kCoordinateBound].
inline constexpr long kCoordinateBound = 1000;
/// Rejected samples allowed per generation call.
inline constexpr int kRetryBudget = 200;

/// Throws IdenticalLines when a == b.
ProjPoint intersect(const ProjLine& a, const ProjLine& b);
/// Line through two distinct points. Throws Error when p == q.
ProjLine line_through(const ProjPoint& p, const ProjPoint& q);

bool incident(const ProjPoint& p, const ProjLine& l);

/// det of the 3x3 matrix with rows a, b, c.
Rational det3(const std::array<Rational, 3>& a, const std::array<Rational, 3>& b, const std::array<Rational, 3>& c);

/// Pairwise distinct and no three concurrent.
bool is_general_position(std::span<const ProjLine> lines);

Arrangement random_arrangement(std::size_t n, std::uint64_t seed);

/// `count` distinct points of l, none in `forbidden`; deterministic in seed.
std::vector<ProjPoint> points_on_line_avoiding(const ProjLine& l, std::size_t count,
                                               std::span<const ProjPoint> forbidden, std::uint64_t seed);

/// A point lying on none of `avoid_lines` and equal to none of `forbidden`.
ProjPoint point_off_lines(std::span<const ProjLine> avoid_lines, std::span<const ProjPoint> forbidden,
                          std::uint64_t seed);

/// Invertible 3x3 map applied to coordinates (row-major).
using ProjectiveMap = std::array<std::array<Rational, 3>, 3>;
ProjectiveMap random_projective_map(std::uint64_t seed);
ProjPoint apply(const ProjectiveMap& m, const ProjPoint& p);

/// Mixes a seed with a stream tag (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag);

/// Seeded integer source shared by all generators: mt19937_64 with a
/// modulo reduction so the stream does not depend on the standard
/// library's distribution implementation.
class CoordinateRng {
 public:
  explicit CoordinateRng(std::uint64_t seed) : engine_(seed) {}
  long next_in(long lo, long hi);
  long next_coordinate() { return next_in(-kCoordinateBound, kCoordinateBound); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace fatpoints
