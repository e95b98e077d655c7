#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

#include "bicross/geometry.hpp"
#include "bicross/version.hpp"

namespace bicross {

class BadLayoutFile : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Formats a double with up to 17 significant digits, enough to round-trip
/// the exact binary value.
inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

using MetaValue = std::variant<i64, std::uint64_t, double, std::string>;
using MetaParams = std::vector<std::pair<std::string, MetaValue>>;

namespace detail {

inline std::string meta_value_json(const MetaValue& v) {
  if (std::holds_alternative<i64>(v)) return std::to_string(std::get<i64>(v));
  if (std::holds_alternative<std::uint64_t>(v)) return std::to_string(std::get<std::uint64_t>(v));
  if (std::holds_alternative<double>(v)) return format_double(std::get<double>(v));
  return "\"" + std::get<std::string>(v) + "\"";
}

}  // namespace detail

/// Serializes a layout to the on-disk JSON schema:
/// {"part_a":[{"x":..,"y":..},...],"part_b":[...],
///  "meta":{"arrangement":..,"params":{..},"tool_version":..}}
/// The writer is hand-rolled so byte output is deterministic.
inline std::string write_layout_json(const Layout& layout, const std::string& arrangement,
                                     const MetaParams& params) {
  std::ostringstream out;
  auto emit_points = [&](const std::vector<Point2>& pts) {
    out << "[";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) out << ",";
      out << "{\"x\":" << format_double(pts[i].x) << ",\"y\":" << format_double(pts[i].y)
          << "}";
    }
    out << "]";
  };
  out << "{\"part_a\":";
  emit_points(layout.part_a);
  out << ",\"part_b\":";
  emit_points(layout.part_b);
  out << ",\"meta\":{\"arrangement\":\"" << arrangement << "\",\"params\":{";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out << ",";
    out << "\"" << params[i].first << "\":" << detail::meta_value_json(params[i].second);
  }
  out << "},\"tool_version\":\"" << kToolVersion << "\"}}\n";
  return out.str();
}

struct LayoutDocument {
  Layout layout;
  std::string arrangement;
  nlohmann::json params;
  std::string tool_version;
};

inline LayoutDocument read_layout_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw BadLayoutFile(std::string("layout file: invalid JSON: ") + e.what());
  }
  LayoutDocument result;
  auto read_points = [&](const char* key, std::vector<Point2>& dst) {
    if (!doc.contains(key) || !doc[key].is_array() || doc[key].empty())
      throw BadLayoutFile(std::string("layout file: missing or empty array '") + key + "'");
    for (const auto& item : doc[key]) {
      if (!item.contains("x") || !item.contains("y") || !item["x"].is_number() ||
          !item["y"].is_number())
        throw BadLayoutFile("layout file: point entries need numeric x and y");
      Point2 p{item["x"].get<double>(), item["y"].get<double>()};
      if (!std::isfinite(p.x) || !std::isfinite(p.y))
        throw BadLayoutFile("layout file: coordinates must be finite");
      dst.push_back(p);
    }
  };
  read_points("part_a", result.layout.part_a);
  read_points("part_b", result.layout.part_b);
  if (!doc.contains("meta") || !doc["meta"].is_object())
    throw BadLayoutFile("layout file: missing meta object");
  const auto& meta = doc["meta"];
  if (!meta.contains("arrangement") || !meta["arrangement"].is_string())
    throw BadLayoutFile("layout file: meta.arrangement must be a string");
  result.arrangement = meta["arrangement"].get<std::string>();
  result.params = meta.contains("params") ? meta["params"] : nlohmann::json::object();
  result.tool_version =
      meta.contains("tool_version") && meta["tool_version"].is_string()
          ? meta["tool_version"].get<std::string>()
          : std::string();
  return result;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw BadLayoutFile("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

inline LayoutDocument load_layout_file(const std::string& path) {
  return read_layout_json(read_text_file(path));
}

}  // namespace bicross
