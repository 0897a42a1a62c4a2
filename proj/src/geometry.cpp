#include "fatpoints/geometry.hpp"

#include <algorithm>
#include <sstream>

#include "fatpoints/errors.hpp"

namespace fatpoints {

namespace {

using Triple = std::array<Rational, 3>;

Triple cross(const Triple& a, const Triple& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool is_zero(const Triple& v) { return sgn(v[0]) == 0 && sgn(v[1]) == 0 && sgn(v[2]) == 0; }

template <class T>
bool contains(std::span<const T> items, const T& x) {
  return std::find(items.begin(), items.end(), x) != items.end();
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational");
  Rational q;
  if (q.set_str(s, 10) != 0) throw ParseError("not a rational: '" + s + "'");
  if (sgn(q.get_den()) == 0) throw ParseError("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

template <class Tag>
Projective<Tag>::Projective(Rational a, Rational b, Rational c) : v_{std::move(a), std::move(b), std::move(c)} {
  for (auto& x : v_) x.canonicalize();
  auto first = std::find_if(v_.begin(), v_.end(), [](const Rational& x) { return sgn(x) != 0; });
  if (first == v_.end()) throw Error("homogeneous coordinates must not all be zero");
  const Rational scale = *first;
  for (auto& x : v_) x /= scale;
}

template <class Tag>
std::array<BigInt, 3> Projective<Tag>::primitive_integers() const {
  BigInt den = 1;
  for (const auto& x : v_) den = lcm(den, BigInt(x.get_den()));
  std::array<BigInt, 3> out;
  BigInt g = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    out[i] = v_[i].get_num() * (den / v_[i].get_den());
    g = gcd(g, out[i]);
  }
  for (auto& x : out) x /= g;
  return out;
}

template <class Tag>
std::string Projective<Tag>::to_string() const {
  return "(" + format_rational(v_[0]) + ":" + format_rational(v_[1]) + ":" + format_rational(v_[2]) + ")";
}

template class Projective<PointTag>;
template class Projective<LineTag>;

ProjPoint intersect(const ProjLine& a, const ProjLine& b) {
  Triple p = cross(a.coords(), b.coords());
  if (is_zero(p)) throw IdenticalLines("cannot intersect a line with itself: " + a.to_string());
  return ProjPoint(p);
}

ProjLine line_through(const ProjPoint& p, const ProjPoint& q) {
  Triple l = cross(p.coords(), q.coords());
  if (is_zero(l)) throw Error("line_through needs two distinct points: " + p.to_string());
  return ProjLine(l);
}

bool incident(const ProjPoint& p, const ProjLine& l) {
  const auto& x = p.coords();
  const auto& c = l.coords();
  return sgn(x[0] * c[0] + x[1] * c[1] + x[2] * c[2]) == 0;
}

Rational det3(const Triple& a, const Triple& b, const Triple& c) {
  const Triple bc = cross(b, c);
  return a[0] * bc[0] + a[1] * bc[1] + a[2] * bc[2];
}

bool is_general_position(std::span<const ProjLine> lines) {
  const std::size_t n = lines.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (lines[i] == lines[j]) return false;
      for (std::size_t k = j + 1; k < n; ++k) {
        if (sgn(det3(lines[i].coords(), lines[j].coords(), lines[k].coords())) == 0) return false;
      }
    }
  }
  return true;
}

Arrangement random_arrangement(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw Error("random_arrangement needs at least one line");
  CoordinateRng rng(seed);
  Arrangement arr;
  arr.seed = seed;
  int rejected = 0;
  while (arr.lines.size() < n) {
    const long a = rng.next_coordinate();
    const long b = rng.next_coordinate();
    const long c = rng.next_coordinate();
    bool ok = a != 0 || b != 0 || c != 0;
    if (ok) {
      ProjLine cand(a, b, c);
      const auto& ls = arr.lines;
      for (std::size_t i = 0; ok && i < ls.size(); ++i) {
        if (ls[i] == cand) ok = false;
        for (std::size_t j = i + 1; ok && j < ls.size(); ++j) {
          if (sgn(det3(ls[i].coords(), ls[j].coords(), cand.coords())) == 0) ok = false;
        }
      }
      if (ok) arr.lines.push_back(std::move(cand));
    }
    if (!ok && ++rejected > kRetryBudget) {
      throw GenerationExhausted("no general-position arrangement of " + std::to_string(n) +
                                " lines within the retry budget");
    }
  }
  return arr;
}

std::vector<ProjPoint> points_on_line_avoiding(const ProjLine& l, std::size_t count,
                                               std::span<const ProjPoint> forbidden, std::uint64_t seed) {
  // Two independent points spanning l.
  const auto& c = l.coords();
  Triple u, v;
  if (sgn(c[0]) != 0) {
    u = {-c[1], c[0], 0};
    v = {-c[2], 0, c[0]};
  } else if (sgn(c[1]) != 0) {
    u = {1, 0, 0};
    v = {0, -c[2], c[1]};
  } else {
    u = {1, 0, 0};
    v = {0, 1, 0};
  }

  CoordinateRng rng(seed);
  std::vector<ProjPoint> out;
  int rejected = 0;
  while (out.size() < count) {
    const Rational s = rng.next_coordinate();
    const Rational t = rng.next_coordinate();
    bool ok = sgn(s) != 0 || sgn(t) != 0;
    if (ok) {
      ProjPoint p(s * u[0] + t * v[0], s * u[1] + t * v[1], s * u[2] + t * v[2]);
      ok = !contains(forbidden, p) && !contains(std::span<const ProjPoint>(out), p);
      if (ok) out.push_back(std::move(p));
    }
    if (!ok && ++rejected > kRetryBudget) {
      throw GenerationExhausted("could not place " + std::to_string(count) + " points on " + l.to_string());
    }
  }
  return out;
}

ProjPoint point_off_lines(std::span<const ProjLine> avoid_lines, std::span<const ProjPoint> forbidden,
                          std::uint64_t seed) {
  CoordinateRng rng(seed);
  for (int attempt = 0; attempt <= kRetryBudget; ++attempt) {
    const long a = rng.next_coordinate();
    const long b = rng.next_coordinate();
    const long c = rng.next_coordinate();
    if (a == 0 && b == 0 && c == 0) continue;
    ProjPoint p(a, b, c);
    if (contains(forbidden, p)) continue;
    if (std::any_of(avoid_lines.begin(), avoid_lines.end(), [&](const ProjLine& l) { return incident(p, l); })) {
      continue;
    }
    return p;
  }
  throw GenerationExhausted("could not find a point off the given lines");
}

ProjectiveMap random_projective_map(std::uint64_t seed) {
  CoordinateRng rng(seed);
  for (int attempt = 0; attempt <= kRetryBudget; ++attempt) {
    ProjectiveMap m;
    for (auto& row : m) {
      for (auto& x : row) x = rng.next_in(-9, 9);
    }
    if (sgn(det3(m[0], m[1], m[2])) != 0) return m;
  }
  throw GenerationExhausted("could not draw an invertible map");
}

ProjPoint apply(const ProjectiveMap& m, const ProjPoint& p) {
  const auto& x = p.coords();
  Triple y;
  for (std::size_t i = 0; i < 3; ++i) y[i] = m[i][0] * x[0] + m[i][1] * x[1] + m[i][2] * x[2];
  return ProjPoint(y);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (tag + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

long CoordinateRng::next_in(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(engine_() % span);
}

}  // namespace fatpoints
