#include "fatpoints/json_io.hpp"

#include "fatpoints/errors.hpp"

namespace fatpoints::json_io {

namespace {

std::array<Rational, 3> triple_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw ParseError("expected an array of three coordinates");
  std::array<Rational, 3> v;
  for (std::size_t i = 0; i < 3; ++i) v[i] = rational_from_json(j[i]);
  return v;
}

json triple_to_json(const std::array<Rational, 3>& v) {
  return json::array({to_json(v[0]), to_json(v[1]), to_json(v[2])});
}

}  // namespace

json to_json(const Rational& q) { return format_rational(q); }

json to_json(const ProjPoint& p) { return triple_to_json(p.coords()); }

json to_json(const ProjLine& l) { return json{{"coeffs", triple_to_json(l.coords())}}; }

json to_json(const Arrangement& arr) {
  json lines = json::array();
  for (const auto& l : arr.lines) lines.push_back(to_json(l));
  return json{{"seed", arr.seed}, {"lines", std::move(lines)}};
}

json to_json(const FatPointScheme& z) {
  json points = json::array();
  for (const auto& fp : z.points()) points.push_back(json{{"coords", to_json(fp.point)}, {"mult", fp.multiplicity}});
  return json{{"points", std::move(points)}};
}

json to_json(const ReductionVector& rv) { return json{{"entries", rv.entries}, {"full", rv.full}}; }

json to_json(const DeltaH& d) { return d.values(); }

json to_json(const HilbertFunction& h) { return h.values(); }

json to_json(const ConstructionTrace& trace, const LabeledScheme& result) {
  json steps = json::array();
  for (const auto& s : trace.steps) {
    json merges = json::array();
    for (const auto& m : s.merges) {
      json removed = json::array();
      for (const auto& p : m.removed) removed.push_back(to_json(p));
      merges.push_back(json{{"i", m.i}, {"j", m.j}, {"removed", std::move(removed)}});
    }
    json step{{"n", s.n}, {"h_n", s.h_n}, {"s_n", s.s_n}, {"t_n", s.t_n}, {"merges", std::move(merges)}};
    if (s.partial) step["partial"] = true;
    steps.push_back(std::move(step));
  }
  return json{{"steps", std::move(steps)},
              {"doubles", result.doubles().size()},
              {"reduced", result.reduced().size()},
              {"terminal_step", trace.terminal_step}};
}

json to_json(const LabeledScheme& z) {
  json doubles = json::array();
  for (const auto& d : z.doubles()) doubles.push_back(json{{"coords", to_json(d.point)}, {"i", d.i}, {"j", d.j}});
  json reduced = json::array();
  for (const auto& r : z.reduced()) reduced.push_back(json{{"coords", to_json(r.point)}, {"line", r.line}});
  return json{{"arrangement", to_json(z.arrangement())},
              {"scheme", to_json(z.scheme())},
              {"doubles", std::move(doubles)},
              {"reduced", std::move(reduced)}};
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("expected a rational as \"num/den\" or an integer, got " + j.dump());
}

ProjPoint point_from_json(const json& j) {
  try {
    return ProjPoint(triple_from_json(j));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("bad point: ") + e.what());
  }
}

ProjLine line_from_json(const json& j) {
  const json& c = (j.is_object() && j.contains("coeffs")) ? j.at("coeffs") : j;
  try {
    return ProjLine(triple_from_json(c));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("bad line: ") + e.what());
  }
}

Arrangement arrangement_from_json(const json& j) {
  Arrangement arr;
  const json* lines = &j;
  if (j.is_object()) {
    if (j.contains("arrangement")) return arrangement_from_json(j.at("arrangement"));
    if (!j.contains("lines")) throw ParseError("arrangement object needs \"lines\"");
    lines = &j.at("lines");
    if (j.contains("seed")) arr.seed = j.at("seed").get<std::uint64_t>();
  }
  if (!lines->is_array()) throw ParseError("expected an array of lines");
  for (const auto& l : *lines) arr.lines.push_back(line_from_json(l));
  return arr;
}

FatPointScheme scheme_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("expected a scheme object");
  if (!j.contains("points") && j.contains("scheme")) return scheme_from_json(j.at("scheme"));
  if (!j.contains("points") || !j.at("points").is_array()) throw ParseError("scheme object needs \"points\"");
  FatPointScheme z;
  for (const auto& entry : j.at("points")) {
    if (!entry.is_object() || !entry.contains("coords")) throw ParseError("scheme point needs \"coords\"");
    const int mult = entry.contains("mult") ? entry.at("mult").get<int>() : 1;
    try {
      z.add(point_from_json(entry.at("coords")), mult);
    } catch (const InvalidScheme& e) {
      throw ParseError(e.what());
    }
  }
  return z;
}

DeltaH delta_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an integer array");
  std::vector<long long> v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError("expected integers in the array");
    v.push_back(x.get<long long>());
  }
  return DeltaH::validate(v);
}

}  // namespace fatpoints::json_io
