#include "geobary/json_io.hpp"

#include <cmath>
#include <string>

#include "geobary/error.hpp"

namespace geobary {

using nlohmann::json;

namespace {

std::size_t positive_integer(const json& j, const char* key) {
  if (!j.contains(key)) throw ConfigError(std::string("space descriptor: missing \"") + key + "\"");
  const auto& v = j.at(key);
  if (v.is_number_unsigned()) return v.get<std::size_t>();
  if (v.is_number_integer()) {
    const auto i = v.get<long long>();
    if (i < 0) throw ConfigError(std::string("space descriptor: \"") + key + "\" is negative");
    return static_cast<std::size_t>(i);
  }
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (d >= 0.0 && std::floor(d) == d) return static_cast<std::size_t>(d);
  }
  throw ConfigError(std::string("space descriptor: \"") + key + "\" must be an integer");
}

std::vector<double> real_vector(const json& j) {
  if (!j.is_array()) throw ConfigError("point: \"v\" must be an array of numbers");
  std::vector<double> v;
  v.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number()) throw ConfigError("point: \"v\" must be an array of numbers");
    v.push_back(e.get<double>());
  }
  return v;
}

}  // namespace

SpaceDescriptor descriptor_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw ConfigError("space descriptor: expected an object with a string \"kind\"");
  }
  const auto kind = j.at("kind").get<std::string>();
  SpaceDescriptor d;
  if (kind == "euclidean") {
    d.kind = SpaceKind::euclidean;
    d.dim = positive_integer(j, "dim");
  } else if (kind == "hyperbolic") {
    d.kind = SpaceKind::hyperbolic;
  } else if (kind == "star_tree") {
    d.kind = SpaceKind::star_tree;
    d.rays = positive_integer(j, "rays");
  } else if (kind == "lp_plane") {
    d.kind = SpaceKind::lp_plane;
    if (!j.contains("p") || !j.at("p").is_number()) {
      throw ConfigError("space descriptor: lp_plane needs a numeric \"p\"");
    }
    d.p = j.at("p").get<double>();
  } else {
    throw ConfigError("space descriptor: unknown kind \"" + kind + "\"");
  }
  return d;
}

json to_json(const SpaceDescriptor& d) {
  switch (d.kind) {
    case SpaceKind::euclidean:
      return {{"kind", "euclidean"}, {"dim", d.dim}};
    case SpaceKind::hyperbolic:
      return {{"kind", "hyperbolic"}};
    case SpaceKind::star_tree:
      return {{"kind", "star_tree"}, {"rays", d.rays}};
    case SpaceKind::lp_plane:
      return {{"kind", "lp_plane"}, {"p", d.p}};
  }
  return {};
}

json to_json(const Point& p) {
  if (p.kind() == SpaceKind::star_tree) {
    return {{"ray", p.tree().ray}, {"offset", p.tree().offset}};
  }
  return {{"v", std::vector<double>(p.coords().begin(), p.coords().end())}};
}

Point point_from_json(const json& j, const Space& space) {
  if (!j.is_object()) throw ConfigError("point: expected an object");
  Point p = [&]() -> Point {
    switch (space.kind()) {
      case SpaceKind::star_tree: {
        if (!j.contains("ray") || !j.contains("offset") || !j.at("offset").is_number()) {
          throw ConfigError("tree point: expected {\"ray\": i, \"offset\": t}");
        }
        const auto& ray = j.at("ray");
        if (!ray.is_number_integer() || ray.get<long long>() < 0) {
          throw ConfigError("tree point: \"ray\" must be a nonnegative integer");
        }
        return Point::tree(ray.get<std::size_t>(), j.at("offset").get<double>());
      }
      case SpaceKind::hyperbolic: {
        if (!j.contains("v")) throw ConfigError("point: missing \"v\"");
        const auto v = real_vector(j.at("v"));
        if (v.size() != 3) throw DomainError("hyperbolic point: expected 3 coordinates");
        return Point::hyperbolic({v[0], v[1], v[2]});
      }
      case SpaceKind::lp_plane:
        if (!j.contains("v")) throw ConfigError("point: missing \"v\"");
        return Point::lp_plane(real_vector(j.at("v")));
      case SpaceKind::euclidean:
        break;
    }
    if (!j.contains("v")) throw ConfigError("point: missing \"v\"");
    return Point::euclidean(real_vector(j.at("v")));
  }();
  space.check(p);
  return p;
}

json parse_json_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // Translate the byte offset into 1-based line/column.
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string detail = e.what();
    const auto at = detail.find("column ");
    const auto colon = at == std::string::npos ? at : detail.find(": ", at);
    if (colon != std::string::npos) detail = detail.substr(colon + 2);
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + detail,
                     line, column);
  }
}

MeasureDocument measure_document_from_json(const json& j) {
  if (!j.is_object() || !j.contains("space")) {
    throw ConfigError("measure document: expected an object with \"space\"");
  }
  const SpaceDescriptor descriptor = descriptor_from_json(j.at("space"));
  Space space = make_space(descriptor);
  if (!j.contains("atoms") || !j.at("atoms").is_array() || j.at("atoms").empty()) {
    throw ConfigError("measure document: \"atoms\" must be a nonempty array");
  }
  std::vector<Point> atoms;
  std::vector<double> weights;
  std::size_t weighted = 0;
  for (const auto& entry : j.at("atoms")) {
    if (!entry.is_object() || !entry.contains("point")) {
      throw ConfigError("measure document: each atom needs a \"point\"");
    }
    atoms.push_back(point_from_json(entry.at("point"), space));
    if (entry.contains("weight")) {
      if (!entry.at("weight").is_number()) throw ConfigError("measure document: non-numeric weight");
      weights.push_back(entry.at("weight").get<double>());
      ++weighted;
    }
  }
  if (weighted != 0 && weighted != atoms.size()) {
    throw ConfigError("measure document: weights must be given for all atoms or none");
  }
  Measure measure = weighted == 0 ? make_uniform_measure(space, std::move(atoms))
                                  : make_measure(space, std::move(atoms), std::move(weights));
  return {descriptor, std::move(space), std::move(measure)};
}

json to_json(const SpaceDescriptor& d, const Measure& measure) {
  json atoms = json::array();
  for (std::size_t i = 0; i < measure.size(); ++i) {
    atoms.push_back({{"point", to_json(measure.atom(i))}, {"weight", measure.weight(i)}});
  }
  return {{"space", to_json(d)}, {"atoms", std::move(atoms)}};
}

}  // namespace geobary
