// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "fatpoints/builder.hpp"
#include "fatpoints/errors.hpp"
#include "fatpoints/oracle.hpp"
#include "fatpoints/scheme.hpp"
#include "support.hpp"

using namespace fatpoints;

namespace {

// Pinned parameters.
constexpr int kMergeSuiteSize = 50;
constexpr int kMergeSuiteMaxTotal = 40;
constexpr int kMergeSuiteMaxSigma = 12;
constexpr int kEarlyStopSuiteSize = 10;
constexpr int kPerturbationsPerT = 5;
constexpr int kCrossEngineSize = 100;
constexpr int kAsymptoticMinT = 200;
constexpr double kAsymptoticTolerance = 0.05;
constexpr std::uint64_t kSuiteSeed = 0xfa7;

struct Failure {
  std::string reason;
};

void require(bool ok, const std::string& reason) {
  if (!ok) throw Failure{reason};
}

std::string show(const std::vector<int>& v) { return "(" + format_integer_list(v) + ")"; }

std::vector<DeltaH> random_suite(std::uint64_t seed, int count, int max_sigma, int max_total) {
  std::mt19937_64 rng(seed);
  std::vector<DeltaH> out;
  while (static_cast<int>(out.size()) < count) {
    auto d = fatpoints::testing::random_delta(rng, max_sigma, max_total);
    // Inputs with at least one merge are the interesting ones; keep a few
    // without merges as well.
    if (predicted_double_count(d) > 0 || out.size() % 8 == 0) out.push_back(std::move(d));
  }
  return out;
}

void criterion_conjugate() {
  const auto c = conjugate(DeltaH::validate({1, 2, 3, 4, 4, 3, 1}));
  require(c.parts() == std::vector<int>{7, 5, 4, 2}, "got " + show(c.parts()));
}

void criterion_reduction_vector() {
  const ProjPoint p1(1, 0, 0);
  const ProjPoint p2(0, 1, 0);
  const ProjPoint p3(0, 0, 1);
  const FatPointScheme z{{{p1, 3}, {p2, 3}, {p3, 2}}};
  const std::vector<ProjLine> lines{line_through(p1, p2), line_through(p1, p2), line_through(p1, p3),
                                    line_through(p2, p3)};
  const auto rv = reduction_vector(z, lines);
  require(rv.entries == std::vector<int>{6, 4, 3, 2} && rv.full, "reduction vector " + show(rv.entries));
  const auto gms = gms_hilbert(rv);
  const auto oracle = hilbert_function(z);
  require(gms == oracle, "closed form and oracle differ");
  require(oracle.stable_value() == 15, "stable value " + std::to_string(oracle.stable_value()));
}

void criterion_golden_constructions() {
  struct Case {
    std::vector<long long> delta;
    std::size_t doubles;
    std::size_t reduced;
  };
  for (const Case& c : {Case{{1, 2, 3, 4, 2}, 3, 3}, Case{{1, 2, 2, 1}, 1, 3}, Case{{1, 2, 3, 4, 5, 6, 2, 2, 1, 1}, 9, 0}}) {
    const auto d = DeltaH::validate(c.delta);
    for (std::uint64_t seed : {0, 1, 2}) {
      const auto built = construct(d, seed);
      require(built.scheme.doubles().size() == c.doubles && built.scheme.reduced().size() == c.reduced,
              show(d.values()) + ": wrong point counts");
      require(delta_hf(built.scheme.scheme()) == d, show(d.values()) + ": oracle disagrees");
      if (c.doubles == 9) {
        std::vector<std::pair<std::size_t, std::size_t>> labels;
        for (const auto& p : built.scheme.doubles()) labels.emplace_back(p.i, p.j);
        std::sort(labels.begin(), labels.end());
        const std::vector<std::pair<std::size_t, std::size_t>> want{
            {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3}, {2, 4}, {2, 5}, {3, 4}};
        require(labels == want, "wrong intersection pairs");
      }
    }
  }
}

void criterion_merge_invariance() {
  const auto suite = random_suite(kSuiteSeed, kMergeSuiteSize, kMergeSuiteMaxSigma, kMergeSuiteMaxTotal);
  int merges = 0;
  for (std::size_t k = 0; k < suite.size(); ++k) {
    const auto& d = suite[k];
    (void)construct(d, k, std::nullopt, [&](const LabeledScheme& z) {
      ++merges;
      require(delta_hf(z.scheme()) == d, show(d.values()) + ": oracle changed after a merge");
    });
  }
  require(merges > 0, "no merges exercised");
}

void criterion_count_agreement() {
  const auto suite = random_suite(kSuiteSeed, kMergeSuiteSize, kMergeSuiteMaxSigma, kMergeSuiteMaxTotal);
  for (std::size_t k = 0; k < suite.size(); ++k) {
    const auto& d = suite[k];
    const auto built = construct(d, k);
    const int count = static_cast<int>(built.scheme.doubles().size());
    require(count == predicted_double_count(d), show(d.values()) + ": count differs from prediction");
    const auto b = double_bounds(d);
    if (d.alpha() >= 2) require(b.lower <= count && count <= b.upper, show(d.values()) + ": outside bounds");
  }
}

void criterion_early_stop() {
  const auto suite = random_suite(kSuiteSeed + 1, kEarlyStopSuiteSize, 10, 30);
  for (std::size_t k = 0; k < suite.size(); ++k) {
    const auto& d = suite[k];
    const int predicted = predicted_double_count(d);
    for (int e = 1; e <= predicted; ++e) {
      const auto built = construct(d, k, e);
      require(static_cast<int>(built.scheme.doubles().size()) == e, show(d.values()) + ": wrong double count");
      require(static_cast<int>(built.scheme.reduced().size()) == d.total() - 3 * e,
              show(d.values()) + ": wrong reduced count");
      require(delta_hf(built.scheme.scheme()) == d, show(d.values()) + ": oracle disagrees at e = " + std::to_string(e));
    }
  }
}

void criterion_all_doubles() {
  std::vector<DeltaH> cases{DeltaH::validate({1, 2, 3, 4, 5, 6, 2, 2, 1, 1})};
  for (int t = 3; t <= 6; ++t) cases.push_back(star_delta(t));
  for (std::size_t k = 0; k < cases.size(); ++k) {
    const auto& d = cases[k];
    require(all_doubles_criterion(d), show(d.values()) + ": criterion false");
    require(construct(d, k).scheme.reduced().empty(), show(d.values()) + ": reduced points remain");
  }

  std::vector<DeltaH> sweep = random_suite(kSuiteSeed + 2, 200, 12, 80);
  // Conjugate (2t, 2t-1, ..., t+1).
  for (int t = 1; t <= 8; ++t) sweep.push_back(star_delta(t));
  int hits = 0;
  for (const auto& d : sweep) {
    if (!cor313_criterion(d)) continue;
    ++hits;
    require(all_doubles_criterion(d), show(d.values()) + ": staircase conjugate without all-doubles");
  }
  require(hits >= 8, "sweep exercised too few staircase conjugates");
}

void criterion_star() {
  for (int t = 1; t <= 6; ++t) {
    const auto z = star_scheme(t, static_cast<std::uint64_t>(t));
    require(static_cast<long long>(z.doubles().size()) == binomial(t + 1, 2), "wrong double count");
    const auto oracle = delta_hf(z.scheme());
    require(oracle == star_delta(t), "t = " + std::to_string(t) + ": oracle " + show(oracle.values()));
  }
}

void criterion_star_plus_point() {
  for (int t = 3; t <= 4; ++t) {
    const auto on = delta_hf(star_plus_point(t, 40 + t, std::size_t{1}));
    require(on == star_plus_point_delta(t), "on a line, t = " + std::to_string(t) + ": " + show(on.values()));
    const auto off = delta_hf(star_plus_point(t, 50 + t, std::nullopt));
    require(off.size() > static_cast<std::size_t>(t + 1) && off[static_cast<std::size_t>(t + 1)] == t + 2,
            "off the lines, t = " + std::to_string(t) + ": " + show(off.values()));
    require(off == star_bullet_atop_delta(t), "off the lines, t = " + std::to_string(t) + ": " + show(off.values()));
  }
}

void criterion_near_star() {
  const auto three = near_star_scheme(3, 7);
  require(ideal_dimension(three.scheme, 5) == 2, "t = 3, degree 5");
  require(ideal_dimension(three.scheme, 5) == binomial(3, 2) - 1, "t = 3, degree 2t-1");
  const auto four = near_star_scheme(4, 7);
  require(ideal_dimension(four.scheme, 6) == 2, "t = 4, degree 6");
  require(ideal_dimension(four.scheme, 7) == binomial(4, 2) - 1, "t = 4, degree 7");
}

void criterion_perturbation() {
  for (int t = 3; t <= 4; ++t) {
    const auto doubles = static_cast<std::size_t>(binomial(t + 1, 2));
    for (int k = 0; k < kPerturbationsPerT; ++k) {
      const auto seed = static_cast<std::uint64_t>(100 * t + k);
      const auto z = perturbed_star(t, seed, static_cast<std::size_t>(k) % doubles);
      const auto oracle = delta_hf(z);
      require(oracle != star_delta(t), "t = " + std::to_string(t) + ": perturbation kept the star shape");
    }
  }
}

void criterion_asymptotics() {
  int max_t = 0;
  for (int b = 3; b <= 99; b += 2) {
    const int base = static_cast<int>(binomial(b + 2, 2));
    int checked = 0;
    for (int t = (base + 2) / 3; 3 * t <= base + b + 1; ++t) {
      if (t == 2 || t == 5) continue;
      require(s_of_t(t) == (b + 1) * (b + 3) / 8, "b = " + std::to_string(b) + ", t = " + std::to_string(t));
      ++checked;
      max_t = std::max(max_t, t);
    }
    require(checked > 0, "no t for b = " + std::to_string(b));
  }
  std::vector<int> ts;
  for (int t = kAsymptoticMinT; t <= max_t; ++t) ts.push_back(t);
  const Rational target(3, 4);
  const Rational tolerance(5, 100);
  for (const auto& row : asymptotic_table(ts)) {
    Rational gap = row.ratio - target;
    if (gap < 0) gap = -gap;
    require(gap <= tolerance, "t = " + std::to_string(row.t) + ": ratio " + format_rational(row.ratio));
  }
  static_assert(kAsymptoticTolerance == 0.05);
}

void criterion_cross_engine() {
  const auto suite = random_suite(kSuiteSeed + 3, kCrossEngineSize, 10, 30);
  for (std::size_t k = 0; k < suite.size(); ++k) {
    const auto built = construct(suite[k], 1000 + k);
    const auto rv = built.scheme.reduction_vector();
    require(rv.full && built.scheme.reduction_strictly_decreasing(), "reduction vector not usable");
    require(gms_hilbert(rv) == hilbert_function(built.scheme.scheme()),
            show(suite[k].values()) + ": closed form and oracle differ");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void()>>> criteria{
      {"conjugate golden value", criterion_conjugate},
      {"reduction vector golden value", criterion_reduction_vector},
      {"construction golden values", criterion_golden_constructions},
      {"merge invariance (50 random inputs)", criterion_merge_invariance},
      {"double count and bounds", criterion_count_agreement},
      {"early stop sweep", criterion_early_stop},
      {"all-doubles criteria", criterion_all_doubles},
      {"star configurations t = 1..6", criterion_star},
      {"star plus a point", criterion_star_plus_point},
      {"near-star ideal dimensions", criterion_near_star},
      {"star perturbations", criterion_perturbation},
      {"s(t) closed form and ratio", criterion_asymptotics},
      {"closed form vs oracle (100 schemes)", criterion_cross_engine},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      criteria[i].second();
    } catch (const Failure& f) {
      ok = false;
      detail = f.reason;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const std::chrono::duration<double> secs = std::chrono::steady_clock::now() - start;
    std::printf("[%s] %2zu. %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs.count(),
                ok ? "" : ": ", detail.c_str());
    std::fflush(stdout);
    failed += ok ? 0 : 1;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
