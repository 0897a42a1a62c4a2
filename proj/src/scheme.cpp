#include "fatpoints/scheme.hpp"

#include <algorithm>

#include "fatpoints/errors.hpp"

namespace fatpoints {

FatPointScheme::FatPointScheme(std::vector<FatPoint> points) {
  points_.reserve(points.size());
  for (auto& fp : points) add(std::move(fp.point), fp.multiplicity);
}

void FatPointScheme::add(ProjPoint p, int multiplicity) {
  if (multiplicity < 1) {
    throw InvalidScheme("multiplicity must be positive at " + p.to_string());
  }
  for (const auto& fp : points_) {
    if (fp.point == p) throw InvalidScheme("repeated support point " + p.to_string());
  }
  points_.push_back({std::move(p), multiplicity});
}

int FatPointScheme::max_multiplicity() const noexcept {
  int m = 0;
  for (const auto& fp : points_) m = std::max(m, fp.multiplicity);
  return m;
}

int FatPointScheme::multiplicity_sum() const noexcept {
  int s = 0;
  for (const auto& fp : points_) s += fp.multiplicity;
  return s;
}

std::size_t FatPointScheme::count_with_multiplicity(int m) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(points_.begin(), points_.end(), [m](const FatPoint& fp) { return fp.multiplicity == m; }));
}

bool operator==(const FatPointScheme& a, const FatPointScheme& b) {
  if (a.points_.size() != b.points_.size()) return false;
  auto by_point = [](const FatPoint& x, const FatPoint& y) { return x.point < y.point; };
  auto pa = a.points_;
  auto pb = b.points_;
  std::sort(pa.begin(), pa.end(), by_point);
  std::sort(pb.begin(), pb.end(), by_point);
  return pa == pb;
}

long long scheme_degree(const FatPointScheme& z) {
  long long deg = 0;
  for (const auto& fp : z.points()) deg += binomial(fp.multiplicity + 1, 2);
  return deg;
}

FatPointScheme colon_by_line(const FatPointScheme& z, const ProjLine& l) {
  FatPointScheme out;
  for (const auto& fp : z.points()) {
    const int m = incident(fp.point, l) ? fp.multiplicity - 1 : fp.multiplicity;
    if (m > 0) out.add(fp.point, m);
  }
  return out;
}

int line_intersection_degree(const ProjLine& l, const FatPointScheme& z) {
  int deg = 0;
  for (const auto& fp : z.points()) {
    if (incident(fp.point, l)) deg += fp.multiplicity;
  }
  return deg;
}

ReductionVector reduction_vector(const FatPointScheme& z, std::span<const ProjLine> lines) {
  ReductionVector rv;
  rv.entries.reserve(lines.size());
  FatPointScheme current = z;
  for (const auto& l : lines) {
    rv.entries.push_back(line_intersection_degree(l, current));
    current = colon_by_line(current, l);
  }
  rv.full = current.empty();
  return rv;
}

bool totally_reduces(const FatPointScheme& z, std::span<const ProjLine> lines) {
  return reduction_vector(z, lines).full;
}

bool totally_reduces_by_count(const FatPointScheme& z, std::span<const ProjLine> lines) {
  return std::all_of(z.points().begin(), z.points().end(), [&](const FatPoint& fp) {
    const auto through = std::count_if(lines.begin(), lines.end(),
                                       [&](const ProjLine& l) { return incident(fp.point, l); });
    return through >= fp.multiplicity;
  });
}

HilbertFunction gms_hilbert(const ReductionVector& d) {
  if (!d.full) throw NotFullReduction("reduction vector does not totally reduce the scheme");
  const auto& e = d.entries;
  for (std::size_t i = 1; i < e.size(); ++i) {
    if (e[i] >= e[i - 1]) {
      throw NotStrictlyDecreasing("reduction vector is not strictly decreasing at position " +
                                  std::to_string(i + 1));
    }
  }
  // The empty scheme: an empty vector, or only zero entries (which the
  // strict decrease allows just as a single trailing 0).
  long long total = 0;
  for (int x : e) total += x;
  if (total == 0) return HilbertFunction::from_values({0});

  const int last_degree = e.front() - 1;
  std::vector<long long> h;
  h.reserve(static_cast<std::size_t>(last_degree) + 1);
  for (int t = 0; t <= last_degree; ++t) {
    long long value = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      const long long term = std::min<long long>(t - static_cast<long long>(i) + 1, e[i]);
      value += std::max<long long>(term, 0);
    }
    h.push_back(value);
  }
  return HilbertFunction::from_values(h);
}

}  // namespace fatpoints
