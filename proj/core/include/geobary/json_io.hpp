#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "geobary/measure.hpp"
#include "geobary/point.hpp"
#include "geobary/space.hpp"
#include "geobary/spaces.hpp"

namespace geobary {

// Space descriptor:  {"kind":"euclidean","dim":2} | {"kind":"hyperbolic"} |
//                    {"kind":"star_tree","rays":3} | {"kind":"lp_plane","p":4}
// Point:             {"v":[...]} (euclidean, lp_plane, hyperbolic ambient)
//                    {"ray":i,"offset":t} (star_tree)
// Measure document:  {"space":<descriptor>,
//                     "atoms":[{"point":<point>,"weight":w}, ...]}
//                    weights optional; omitted everywhere means uniform.

/// Throws ConfigError on unknown kinds or missing/invalid parameters.
SpaceDescriptor descriptor_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SpaceDescriptor& d);

nlohmann::json to_json(const Point& p);

/// Decodes a point of `space`; throws DomainError if it does not belong.
Point point_from_json(const nlohmann::json& j, const Space& space);

struct MeasureDocument {
  SpaceDescriptor descriptor;
  Space space;
  Measure measure;
};

/// Parses JSON text. Syntax errors raise ParseError with line/column.
nlohmann::json parse_json_text(std::string_view text);

MeasureDocument measure_document_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SpaceDescriptor& d, const Measure& measure);

}  // namespace geobary
