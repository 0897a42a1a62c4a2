#include "fatpoints/builder.hpp"

#include <algorithm>
#include <cassert>

#include "fatpoints/errors.hpp"

namespace fatpoints {

namespace {

int positive_part(int x) { return std::max(x, 0); }

// #{k : n+1 <= k <= alpha, h_k^* >= n}
int s_count(const ConjugatePartition& c, int n) {
  int s = 0;
  for (int k = n + 1; k <= c.length(); ++k) {
    if (c.part(k) >= n) ++s;
  }
  return s;
}

std::vector<ProjPoint> intersections_on(const Arrangement& arr, std::size_t line) {
  std::vector<ProjPoint> out;
  for (std::size_t k = 1; k <= arr.size(); ++k) {
    if (k != line) out.push_back(intersect(arr.line(line), arr.line(k)));
  }
  return out;
}

void check_line_index(const Arrangement& arr, std::size_t line, char hypothesis) {
  if (line < 1 || line > arr.size()) {
    throw HypothesisViolation(hypothesis, "line index " + std::to_string(line) + " outside 1.." +
                                              std::to_string(arr.size()));
  }
}

}  // namespace

LabeledScheme::LabeledScheme(Arrangement arrangement, std::vector<ReducedPoint> reduced,
                             std::vector<DoublePoint> doubles)
    : arrangement_(std::move(arrangement)), reduced_(std::move(reduced)), doubles_(std::move(doubles)) {
  const auto& lines = arrangement_.lines;
  for (const auto& r : reduced_) {
    check_line_index(arrangement_, r.line, 'a');
    if (!incident(r.point, arrangement_.line(r.line))) {
      throw HypothesisViolation('a', "reduced point " + r.point.to_string() + " is not on l_" +
                                         std::to_string(r.line));
    }
    for (std::size_t k = 1; k <= lines.size(); ++k) {
      if (k != r.line && incident(r.point, arrangement_.line(k))) {
        throw HypothesisViolation('c', "reduced point " + r.point.to_string() + " sits at the intersection of l_" +
                                           std::to_string(r.line) + " and l_" + std::to_string(k));
      }
    }
  }
  for (const auto& d : doubles_) {
    check_line_index(arrangement_, d.i, 'b');
    check_line_index(arrangement_, d.j, 'b');
    if (d.i >= d.j || !(d.point == intersect(arrangement_.line(d.i), arrangement_.line(d.j)))) {
      throw HypothesisViolation('b', "double point " + d.point.to_string() + " is not P_{" + std::to_string(d.i) +
                                         "," + std::to_string(d.j) + "}");
    }
  }
  try {
    (void)scheme();
  } catch (const InvalidScheme& e) {
    throw HypothesisViolation('a', e.what());
  }
}

FatPointScheme LabeledScheme::scheme() const {
  FatPointScheme z;
  for (const auto& d : doubles_) z.add(d.point, 2);
  for (const auto& r : reduced_) z.add(r.point, 1);
  return z;
}

std::size_t LabeledScheme::reduced_count_on(std::size_t line) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(reduced_.begin(), reduced_.end(), [line](const ReducedPoint& r) { return r.line == line; }));
}

std::vector<ProjPoint> LabeledScheme::reduced_on(std::size_t line) const {
  std::vector<ProjPoint> out;
  for (const auto& r : reduced_) {
    if (r.line == line) out.push_back(r.point);
  }
  return out;
}

bool LabeledScheme::has_double_at(std::size_t i, std::size_t j) const noexcept {
  if (i > j) std::swap(i, j);
  return std::any_of(doubles_.begin(), doubles_.end(),
                     [&](const DoublePoint& d) { return d.i == i && d.j == j; });
}

ReductionVector LabeledScheme::reduction_vector() const {
  return fatpoints::reduction_vector(scheme(), arrangement_.lines);
}

bool LabeledScheme::reduction_strictly_decreasing() const {
  const auto rv = reduction_vector();
  for (std::size_t k = 1; k < rv.entries.size(); ++k) {
    if (rv.entries[k] >= rv.entries[k - 1]) return false;
  }
  return true;
}

LabeledScheme k_configuration(const DeltaH& d, const Arrangement& arr, std::uint64_t seed) {
  const auto conj = conjugate(d);
  if (arr.size() != static_cast<std::size_t>(d.alpha())) {
    throw ArityMismatch("k-configuration needs " + std::to_string(d.alpha()) + " lines, got " +
                        std::to_string(arr.size()));
  }
  if (!is_general_position(arr.lines)) throw Error("arrangement is not in general position");

  std::vector<ReducedPoint> reduced;
  for (std::size_t i = 1; i <= arr.size(); ++i) {
    const auto forbidden = intersections_on(arr, i);
    const auto pts = points_on_line_avoiding(arr.line(i), static_cast<std::size_t>(conj.part(static_cast<int>(i))),
                                             forbidden, derive_seed(seed, i));
    for (const auto& p : pts) reduced.push_back({p, i});
  }
  return LabeledScheme(arr, std::move(reduced), {});
}

LabeledScheme merge(const LabeledScheme& z, std::size_t i, std::size_t j, const ProjPoint& q1, const ProjPoint& q2,
                    const ProjPoint& r) {
  const auto& arr = z.arrangement();
  if (i < 1 || j > arr.size() || i >= j) {
    throw HypothesisViolation('i', "merge needs 1 <= i < j <= " + std::to_string(arr.size()) + ", got i = " +
                                       std::to_string(i) + ", j = " + std::to_string(j));
  }

  // (a)-(c): re-established by rebuilding the labelled scheme.
  LabeledScheme checked(arr, z.reduced(), z.doubles());

  if (!checked.reduction_strictly_decreasing()) {
    throw HypothesisViolation('d', "reduction vector along l_1, ..., l_n is not strictly decreasing");
  }

  auto find_reduced = [&](const ProjPoint& p, std::size_t line) {
    return std::find_if(z.reduced().begin(), z.reduced().end(),
                        [&](const ReducedPoint& x) { return x.line == line && x.point == p; });
  };
  if (q1 == q2) throw HypothesisViolation('e', "q1 and q2 must be distinct");
  for (const ProjPoint* q : {&q1, &q2}) {
    if (find_reduced(*q, i) == z.reduced().end()) {
      throw HypothesisViolation('e', q->to_string() + " is not a reduced point of l_" + std::to_string(i));
    }
  }
  if (find_reduced(r, j) == z.reduced().end()) {
    throw HypothesisViolation('e', r.to_string() + " is not a reduced point of l_" + std::to_string(j));
  }
  if (z.has_double_at(i, j)) {
    throw HypothesisViolation('e', "2P_{" + std::to_string(i) + "," + std::to_string(j) + "} is already present");
  }

  std::vector<ReducedPoint> reduced;
  reduced.reserve(z.reduced().size() - 3);
  for (const auto& x : z.reduced()) {
    const bool consumed = (x.line == i && (x.point == q1 || x.point == q2)) || (x.line == j && x.point == r);
    if (!consumed) reduced.push_back(x);
  }
  auto doubles = z.doubles();
  doubles.push_back({intersect(arr.line(i), arr.line(j)), i, j});
  return LabeledScheme(arr, std::move(reduced), std::move(doubles));
}

Construction construct(const DeltaH& d, std::uint64_t seed, std::optional<int> stop_at,
                       const MergeObserver& observer) {
  if (stop_at && *stop_at < 1) throw Error("stop_at must be at least 1");
  const auto conj = conjugate(d);
  const int alpha = conj.length();

  const auto arr = random_arrangement(static_cast<std::size_t>(alpha), derive_seed(seed, 0));
  LabeledScheme z = k_configuration(d, arr, derive_seed(seed, 1));
  ConstructionTrace trace;

  auto budget_spent = [&] { return stop_at && static_cast<int>(z.doubles().size()) >= *stop_at; };

  for (int n = 1;; ++n) {
    TraceStep step;
    step.n = n;
    for (int k = n; k <= alpha; ++k) step.h_n.push_back(positive_part(conj.part(k) - (n - 1)));
    step.s_n = s_count(conj, n);
    if (step.s_n == 0) {
      trace.steps.push_back(std::move(step));
      trace.terminal_step = n;
      break;
    }
    step.t_n = std::min(positive_part(conj.part(n) - (n - 1)) / 2, step.s_n);

    for (int j = n + 1; j <= n + step.t_n; ++j) {
      if (budget_spent()) {
        step.partial = true;
        break;
      }
      const auto on_n = z.reduced_on(static_cast<std::size_t>(n));
      const auto on_j = z.reduced_on(static_cast<std::size_t>(j));
      if (on_n.size() < 2 || on_j.empty()) {
        throw HypothesisViolation('e', "step " + std::to_string(n) + " ran out of reduced points");
      }
      MergeRecord rec{static_cast<std::size_t>(n), static_cast<std::size_t>(j),
                      {on_n[on_n.size() - 1], on_n[on_n.size() - 2], on_j.back()}};
      z = merge(z, rec.i, rec.j, rec.removed[0], rec.removed[1], rec.removed[2]);
      assert(z.reduction_strictly_decreasing());
      step.merges.push_back(std::move(rec));
      if (observer) observer(z);
    }
    trace.steps.push_back(std::move(step));
    if (budget_spent()) {
      trace.terminal_step = n;
      break;
    }
  }
  return {std::move(z), std::move(trace)};
}

int predicted_double_count(const DeltaH& d) {
  const auto conj = conjugate(d);
  int total = 0;
  for (int i = 1; i < conj.length(); ++i) {
    total += std::min(positive_part(conj.part(i) - (i - 1)) / 2, s_count(conj, i));
  }
  return total;
}

DoubleBounds double_bounds(const DeltaH& d) {
  const int alpha = d.alpha();
  return {std::min((d.sigma() + 1) / 2, alpha - 1), static_cast<int>(binomial(alpha, 2))};
}

bool all_doubles_criterion(const DeltaH& d) {
  const auto conj = conjugate(d);
  if (conj.length() < 2) return false;
  for (int i = 1; i < conj.length(); ++i) {
    const int numerator = positive_part(conj.part(i) - (i - 1));
    if (numerator % 2 != 0 || numerator / 2 != s_count(conj, i)) return false;
  }
  return true;
}

bool cor313_criterion(const DeltaH& d) {
  const auto conj = conjugate(d);
  const int alpha = conj.length();
  if (alpha < 2) return false;
  for (int i = 1; i <= alpha; ++i) {
    if (conj.part(i) != 2 * alpha - 1 - i) return false;
  }
  return true;
}

LabeledScheme star_scheme(int t, std::uint64_t seed) {
  if (t < 1) throw Error("star_scheme needs t >= 1");
  const auto arr = random_arrangement(static_cast<std::size_t>(t) + 1, seed);
  std::vector<DoublePoint> doubles;
  for (std::size_t i = 1; i <= arr.size(); ++i) {
    for (std::size_t j = i + 1; j <= arr.size(); ++j) doubles.push_back({intersect(arr.line(i), arr.line(j)), i, j});
  }
  return LabeledScheme(arr, {}, std::move(doubles));
}

FatPointScheme star_plus_point(int t, std::uint64_t seed, std::optional<std::size_t> line) {
  const auto star = star_scheme(t, seed);
  const auto& arr = star.arrangement();
  auto z = star.scheme();
  if (line) {
    if (*line < 1 || *line > arr.size()) throw Error("line index outside the star arrangement");
    const auto forbidden = intersections_on(arr, *line);
    z.add(points_on_line_avoiding(arr.line(*line), 1, forbidden, derive_seed(seed, 100 + *line)).front(), 1);
  } else {
    z.add(point_off_lines(arr.lines, {}, derive_seed(seed, 99)), 1);
  }
  return z;
}

FatPointScheme perturbed_star(int t, std::uint64_t seed, std::size_t which) {
  const auto star = star_scheme(t, seed);
  if (which >= star.doubles().size()) throw Error("perturbation index outside the star");
  std::vector<ProjPoint> supports;
  for (const auto& d : star.doubles()) supports.push_back(d.point);
  const auto moved = point_off_lines(star.arrangement().lines, supports, derive_seed(seed, 200 + which));
  FatPointScheme z;
  for (std::size_t k = 0; k < supports.size(); ++k) z.add(k == which ? moved : supports[k], 2);
  return z;
}

NearStar near_star_scheme(int t, std::uint64_t seed) {
  if (t < 3) throw Error("near_star_scheme needs t >= 3");
  const auto arr = random_arrangement(static_cast<std::size_t>(t) + 1, seed);
  FatPointScheme z;
  for (std::size_t i = 1; i <= arr.size(); ++i) {
    for (std::size_t j = i + 1; j <= arr.size(); ++j) {
      if (i == 1 && j == 2) continue;
      z.add(intersect(arr.line(i), arr.line(j)), 2);
    }
  }
  const auto q = points_on_line_avoiding(arr.line(2), 1, intersections_on(arr, 2), derive_seed(seed, 2)).front();
  const auto p = points_on_line_avoiding(arr.line(1), 1, intersections_on(arr, 1), derive_seed(seed, 1)).front();
  z.add(q, 2);
  z.add(p, 1);
  return {std::move(z), arr, q, p};
}

int s_of_t(int t) { return predicted_double_count(generic_double_delta(t)); }

std::vector<AsymptoticRow> asymptotic_table(std::span<const int> t_values) {
  std::vector<AsymptoticRow> rows;
  rows.reserve(t_values.size());
  for (int t : t_values) {
    const int s = s_of_t(t);
    Rational ratio(s, t);
    ratio.canonicalize();
    rows.push_back({t, s, ratio});
  }
  return rows;
}

}  // namespace fatpoints
