#pragma once

// JSON body schema shared with the CLI:
//   {"type":"polygon","vertices":[[x,y],...]}
//   {"type":"disc","center":[x,y],"radius":r}
//   {"type":"segment","a":[x,y],"b":[x,y]}
//   {"type":"point","p":[x,y]}
// Polygon vertices are re-oriented counterclockwise on load.

#include <fstream>
#include <string>

#include <json.hpp>

#include "slideturn/convex_body.hpp"
#include "slideturn/errors.hpp"

namespace slideturn {

inline Point2 parse_point(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw Error(Errc::ParseError, "expected a point as [x, y]");
  return {j[0].get<double>(), j[1].get<double>()};
}

inline ConvexBody body_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
    throw Error(Errc::ParseError, "body must be an object with a \"type\" field");
  std::string type = j["type"].get<std::string>();
  try {
    if (type == "polygon") {
      if (!j.contains("vertices") || !j["vertices"].is_array())
        throw Error(Errc::ParseError, "polygon needs a \"vertices\" array");
      std::vector<Point2> vs;
      for (const auto& e : j["vertices"]) vs.push_back(parse_point(e));
      return ConvexBody::polygon(std::move(vs));
    }
    if (type == "disc") {
      if (!j.contains("center") || !j.contains("radius") || !j["radius"].is_number())
        throw Error(Errc::ParseError, "disc needs \"center\" and numeric \"radius\"");
      return ConvexBody::disc(parse_point(j["center"]), j["radius"].get<double>());
    }
    if (type == "segment") {
      if (!j.contains("a") || !j.contains("b"))
        throw Error(Errc::ParseError, "segment needs \"a\" and \"b\"");
      return ConvexBody::segment(parse_point(j["a"]), parse_point(j["b"]));
    }
    if (type == "point") {
      if (!j.contains("p")) throw Error(Errc::ParseError, "point needs \"p\"");
      return ConvexBody::point(parse_point(j["p"]));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
  throw Error(Errc::ParseError, "unknown body type \"" + type + "\"");
}

inline ConvexBody load_body(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string(e.what()) + " while reading " + path);
  }
  return body_from_json(j);
}

}  // namespace slideturn
