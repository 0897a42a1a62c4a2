#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "fatpoints/builder.hpp"
#include "fatpoints/errors.hpp"
#include "fatpoints/hf_core.hpp"
#include "fatpoints/json_io.hpp"
#include "fatpoints/oracle.hpp"
#include "fatpoints/scheme.hpp"

namespace fatpoints::cli {

namespace {

using nlohmann::json;
namespace jio = fatpoints::json_io;

// Everything a command produced: JSON for --output json, text otherwise.
struct Report {
  json data = json::object();
  std::ostringstream text;
  int exit_code = kExitOk;
};

DeltaH parse_delta(const std::string& text) {
  if (text.empty()) throw ParseError("--delta is required");
  return DeltaH::validate(parse_integer_list(text));
}

json read_json_file(const std::string& path) {
  if (path.empty()) throw ParseError("an input file is required");
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("malformed JSON in " + path + ": " + e.what());
  }
}

std::string join(const std::vector<int>& v) { return format_integer_list(std::span<const int>(v)); }
std::string join(const std::vector<long long>& v) { return format_integer_list(std::span<const long long>(v)); }

void describe_delta(const DeltaH& d, Report& r) {
  const auto conj = conjugate(d);
  r.data["delta"] = jio::to_json(d);
  r.data["sigma"] = d.sigma();
  r.data["alpha"] = d.alpha();
  r.data["conjugate"] = conj.parts();
  r.data["diagram"] = render_dot_diagram(d);
  r.text << "delta:     " << join(d.values()) << "\n"
         << "sigma:     " << d.sigma() << "\n"
         << "alpha:     " << d.alpha() << "\n"
         << "conjugate: " << join(conj.parts()) << "\n"
         << "degree:    " << d.total() << "\n\n"
         << render_dot_diagram(d);
}

Report cmd_validate(const CliConfig& cfg) {
  Report r;
  try {
    const auto d = parse_delta(cfg.delta);
    r.data["valid"] = true;
    r.text << "valid\n";
    describe_delta(d, r);
  } catch (const InvalidDelta& e) {
    r.data["valid"] = false;
    r.data["condition"] = std::string(1, e.condition());
    r.data["index"] = e.index();
    r.data["message"] = e.what();
    r.text << "invalid: " << e.what() << "\n";
    r.exit_code = kExitInputError;
  }
  return r;
}

Report cmd_conjugate(const CliConfig& cfg) {
  Report r;
  const auto d = parse_delta(cfg.delta);
  const auto conj = conjugate(d);
  r.data["delta"] = jio::to_json(d);
  r.data["conjugate"] = conj.parts();
  r.text << join(conj.parts()) << "\n";
  return r;
}

Report cmd_construct(const CliConfig& cfg) {
  Report r;
  const auto d = parse_delta(cfg.delta);
  const auto started = std::chrono::steady_clock::now();
  const auto result = construct(d, cfg.seed, cfg.stop_at);
  const auto& z = result.scheme;
  const auto oracle = delta_hf(z.scheme());
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started);
  const bool pass = oracle == d;

  r.data["delta"] = jio::to_json(d);
  r.data["seed"] = cfg.seed;
  if (cfg.stop_at) r.data["stop_at"] = *cfg.stop_at;
  r.data["predicted_doubles"] = predicted_double_count(d);
  r.data["labeled"] = jio::to_json(z);
  r.data["scheme"] = jio::to_json(z.scheme());
  r.data["trace"] = jio::to_json(result.trace, z);
  r.data["oracle_delta"] = jio::to_json(oracle);
  r.data["verdict"] = pass ? "PASS" : "FAIL";

  r.text << "input delta:  " << join(d.values()) << "\n"
         << "doubles:      " << z.doubles().size() << " (predicted " << predicted_double_count(d) << ")\n"
         << "reduced:      " << z.reduced().size() << "\n\n";
  r.text << "trace:\n";
  for (const auto& s : result.trace.steps) {
    r.text << "  step " << s.n << ": h_n = (" << join(s.h_n) << "), s_n = " << s.s_n << ", t_n = " << s.t_n;
    for (const auto& m : s.merges) r.text << "  2P_{" << m.i << "," << m.j << "}";
    if (s.partial) r.text << "  [stopped: double-point budget reached]";
    r.text << "\n";
  }
  r.text << "\ndouble points:\n";
  for (const auto& dp : z.doubles()) {
    r.text << "  2P_{" << dp.i << "," << dp.j << "} = " << dp.point.to_string() << "\n";
  }
  r.text << "reduced points:\n";
  for (const auto& rp : z.reduced()) r.text << "  l_" << rp.line << ": " << rp.point.to_string() << "\n";
  r.text << "\noracle delta: " << join(oracle.values()) << "\n"
         << "verdict:      " << (pass ? "PASS" : "FAIL") << "\n"
         << "elapsed:      " << std::fixed << std::setprecision(1) << elapsed.count() << " ms\n";
  if (!pass) r.exit_code = kExitVerificationFailed;
  return r;
}

Report cmd_hilbert(const CliConfig& cfg) {
  Report r;
  const auto z = jio::scheme_from_json(read_json_file(cfg.scheme_path));
  if (z.empty()) throw ParseError("the scheme has no points");
  const auto h = hilbert_function(z);
  std::vector<long long> shown = h.values();
  if (cfg.max_degree) {
    if (*cfg.max_degree < 0) throw ParseError("--max-degree must be nonnegative");
    shown.clear();
    for (int t = 0; t <= *cfg.max_degree; ++t) shown.push_back(h.at(t));
  }
  const auto delta = first_difference(h);
  r.data["degree"] = scheme_degree(z);
  r.data["hilbert"] = shown;
  r.data["stable_index"] = h.stable_index();
  r.data["delta"] = jio::to_json(delta);
  r.text << "degree:  " << scheme_degree(z) << "\n"
         << "H:       " << join(shown) << (cfg.max_degree ? "" : ",...") << "\n"
         << "delta H: " << join(delta.values()) << "\n\n"
         << render_dot_diagram(delta);
  return r;
}

Report cmd_reduce(const CliConfig& cfg) {
  Report r;
  const auto z = jio::scheme_from_json(read_json_file(cfg.scheme_path));
  const auto arr = jio::arrangement_from_json(read_json_file(cfg.lines_path));
  const auto rv = reduction_vector(z, arr.lines);
  r.data["reduction"] = jio::to_json(rv);
  r.text << "reduction vector: (" << join(rv.entries) << ")" << (rv.full ? " full" : " not full") << "\n";
  if (!rv.full) {
    r.data["gms"] = nullptr;
    r.data["note"] = "the lines do not totally reduce the scheme; GMS formula skipped";
    r.text << "GMS formula skipped: the lines do not totally reduce the scheme\n";
    return r;
  }
  try {
    const auto h = gms_hilbert(rv);
    r.data["gms"] = jio::to_json(h);
    r.text << "GMS Hilbert function: " << join(h.values()) << ",...\n";
  } catch (const NotStrictlyDecreasing& e) {
    r.data["gms"] = nullptr;
    r.data["note"] = std::string("NotStrictlyDecreasing: ") + e.what();
    r.text << "GMS formula refused (NotStrictlyDecreasing): " << e.what() << "\n";
  }
  return r;
}

Report cmd_star(const CliConfig& cfg) {
  Report r;
  const int t = cfg.t;
  FatPointScheme z;
  DeltaH expected = star_delta(std::max(t, 1));
  json extra = json::object();
  if (t < 1) throw ParseError("--t must be at least 1");
  if (cfg.variant == "plain") {
    z = star_scheme(t, cfg.seed).scheme();
  } else if (cfg.variant == "plus-point-on") {
    z = star_plus_point(t, cfg.seed, 1);
    expected = star_plus_point_delta(t);
  } else if (cfg.variant == "plus-point-off") {
    if (t < 2) throw ParseError("plus-point-off needs --t >= 2");
    z = star_plus_point(t, cfg.seed, std::nullopt);
    expected = star_bullet_atop_delta(t);
  } else if (cfg.variant == "near-star") {
    if (t < 3) throw ParseError("near-star needs --t >= 3");
    auto ns = near_star_scheme(t, cfg.seed);
    z = ns.scheme;
    expected = star_bullet_atop_delta(t);
    extra["q"] = jio::to_json(ns.q);
    extra["p"] = jio::to_json(ns.p);
    extra["arrangement"] = jio::to_json(ns.arrangement);
  } else {
    throw ParseError("unknown variant '" + cfg.variant + "' (plain, plus-point-on, plus-point-off, near-star)");
  }

  const auto oracle = delta_hf(z);
  bool match = oracle == expected;
  r.data["t"] = t;
  r.data["variant"] = cfg.variant;
  r.data["seed"] = cfg.seed;
  r.data["scheme"] = jio::to_json(z);
  r.data["oracle_delta"] = jio::to_json(oracle);
  r.data["expected_delta"] = jio::to_json(expected);
  r.text << "variant:        " << cfg.variant << " (t = " << t << ", " << z.count_with_multiplicity(2)
         << " double points, " << z.count_with_multiplicity(1) << " reduced)\n"
         << "oracle delta:   " << join(oracle.values()) << "\n"
         << "expected delta: " << join(expected.values()) << "\n";

  if (cfg.variant == "near-star") {
    const long long low = ideal_dimension(z, t + 2);
    const long long high = ideal_dimension(z, 2 * t - 1);
    const long long high_expected = binomial(t, 2) - 1;
    extra["dim_ideal"] = json{{std::to_string(t + 2), low}, {std::to_string(2 * t - 1), high}};
    extra["dim_ideal_expected"] = json{{std::to_string(t + 2), 2}, {std::to_string(2 * t - 1), high_expected}};
    r.text << "dim (I)_" << t + 2 << " = " << low << " (expected 2)\n"
           << "dim (I)_" << 2 * t - 1 << " = " << high << " (expected " << high_expected << ")\n";
    match = match && low == 2 && high == high_expected;
    r.data["near_star"] = extra;
  }
  r.data["match"] = match;
  r.text << (match ? "MATCH" : "MISMATCH") << "\n";
  if (!match) r.exit_code = kExitVerificationFailed;
  return r;
}

Report cmd_asymptotic(const CliConfig& cfg) {
  Report r;
  if (cfg.step < 1) throw ParseError("--step must be at least 1");
  if (cfg.t_min < 1 && cfg.t_min <= cfg.t_max) throw ParseError("--t-min must be at least 1");
  std::vector<int> ts;
  for (int t = cfg.t_min; t <= cfg.t_max; t += cfg.step) {
    if (t != 2 && t != 5) ts.push_back(t);
  }
  json rows = json::array();
  r.text << "t,s,ratio,ratio_decimal\n";
  for (const auto& row : asymptotic_table(ts)) {
    const double decimal = row.ratio.get_d();
    rows.push_back(json{{"t", row.t}, {"s", row.s}, {"ratio", format_rational(row.ratio)}, {"ratio_decimal", decimal}});
    r.text << row.t << "," << row.s << "," << format_rational(row.ratio) << "," << std::setprecision(6) << std::fixed
           << decimal << "\n";
  }
  r.data["rows"] = std::move(rows);
  return r;
}

Report cmd_bounds(const CliConfig& cfg) {
  Report r;
  const auto d = parse_delta(cfg.delta);
  const auto split = degree_split(d);
  const auto bounds = double_bounds(d);
  const int predicted = predicted_double_count(d);
  const bool all_doubles = all_doubles_criterion(d);
  const bool staircase = cor313_criterion(d);
  r.data["delta"] = jio::to_json(d);
  r.data["conjugate"] = conjugate(d).parts();
  r.data["degree"] = split.total;
  r.data["predicted_doubles"] = predicted;
  r.data["predicted_reduced"] = split.total - 3 * predicted;
  r.data["lower_bound"] = bounds.lower;
  r.data["upper_bound"] = bounds.upper;
  r.data["all_doubles_criterion"] = all_doubles;
  r.data["staircase_criterion"] = staircase;
  r.text << "degree:               " << split.total << " = 3*" << split.doubles << " + " << split.remainder << "\n"
         << "predicted doubles:    " << predicted << " (+ " << split.total - 3 * predicted << " reduced)\n"
         << "bounds:               " << bounds.lower << " <= d <= " << bounds.upper << "\n"
         << "all-doubles criterion: " << (all_doubles ? "yes" : "no") << "\n"
         << "staircase conjugate:  " << (staircase ? "yes" : "no") << "\n";
  return r;
}

void add_common(CLI::App* sub, CliConfig& cfg) {
  sub->add_option("--output", cfg.output, "human or json")
      ->transform(CLI::CheckedTransformer(std::map<std::string, OutputFormat>{{"human", OutputFormat::Human},
                                                                              {"json", OutputFormat::Json}}));
  sub->add_option("--out", cfg.out_path, "write the output to this file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Double-point schemes with a prescribed Hilbert function in P^2"};
  app.require_subcommand(1);

  auto* validate = app.add_subcommand("validate", "check a first difference and draw its dot diagram");
  auto* conj = app.add_subcommand("conjugate", "print the conjugate of a first difference");
  auto* build = app.add_subcommand("construct", "build a scheme of double and reduced points and verify it");
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of a scheme file by exact rank computation");
  auto* reduce = app.add_subcommand("reduce", "reduction vector of a scheme along a line sequence");
  auto* star = app.add_subcommand("star", "double points on a star configuration and its variants");
  auto* asym = app.add_subcommand("asymptotic", "table of s(t) and s(t)/t for generic double points");
  auto* bounds = app.add_subcommand("bounds", "predicted double count, its bounds and the all-doubles criteria");

  for (auto* sub : {validate, conj, build, bounds}) sub->add_option("--delta", cfg.delta, "e.g. 1,2,3,4,2")->required();
  for (auto* sub : {validate, conj, build, hilbert, reduce, star, asym, bounds}) add_common(sub, cfg);
  for (auto* sub : {build, star}) sub->add_option("--seed", cfg.seed, "random seed (default 0)");
  build->add_option("--stop-at", cfg.stop_at, "stop after this many double points")->check(CLI::PositiveNumber);
  hilbert->add_option("--scheme", cfg.scheme_path, "scheme JSON file, - for stdin")->required();
  hilbert->add_option("--max-degree", cfg.max_degree, "print H up to this degree");
  reduce->add_option("--scheme", cfg.scheme_path, "scheme JSON file, - for stdin")->required();
  reduce->add_option("--lines", cfg.lines_path, "arrangement / line list JSON file")->required();
  star->add_option("--t", cfg.t, "star parameter (t+1 lines)");
  star->add_option("--variant", cfg.variant, "plain, plus-point-on, plus-point-off or near-star");
  asym->add_option("--t-min", cfg.t_min, "first t");
  asym->add_option("--t-max", cfg.t_max, "last t");
  asym->add_option("--step", cfg.step, "increment");

  std::vector<std::string> rev(args.rbegin(), args.rend() - 1);
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  Report report;
  try {
    if (validate->parsed()) {
      report = cmd_validate(cfg);
    } else if (conj->parsed()) {
      report = cmd_conjugate(cfg);
    } else if (build->parsed()) {
      report = cmd_construct(cfg);
    } else if (hilbert->parsed()) {
      report = cmd_hilbert(cfg);
    } else if (reduce->parsed()) {
      report = cmd_reduce(cfg);
    } else if (star->parsed()) {
      report = cmd_star(cfg);
    } else if (asym->parsed()) {
      report = cmd_asymptotic(cfg);
    } else {
      report = cmd_bounds(cfg);
    }
  } catch (const InvalidDelta& e) {
    err << "invalid delta: " << e.what() << "\n";
    return kExitInputError;
  } catch (const HypothesisViolation& e) {
    err << "internal error: merge hypothesis (" << e.hypothesis() << ") violated: " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const CapExceeded& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (report.exit_code == kExitInputError && cfg.output == OutputFormat::Human) {
    sink = &err;
  } else if (cfg.out_path) {
    file.open(*cfg.out_path);
    if (!file) {
      err << "error: cannot write " << *cfg.out_path << "\n";
      return kExitInputError;
    }
    sink = &file;
  }
  if (cfg.output == OutputFormat::Json) {
    *sink << report.data.dump(2) << "\n";
  } else {
    *sink << report.text.str();
  }
  return report.exit_code;
}

}  // namespace fatpoints::cli
