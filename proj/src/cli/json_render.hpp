#pragma once

#include <string>

#include <json.hpp>

#include "weylmech/json_text.hpp"

namespace weylmech::cli {

using Json = nlohmann::ordered_json;

// Like Json::dump(2) but floats always carry 17 significant digits.
inline void render(const Json& j, std::string& out, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * depth + 2), ' '), close(static_cast<std::size_t>(2 * depth), ' ');
  switch (j.type()) {
    case Json::value_t::number_float:
      out += json_number(j.get<double>());
      return;
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad + Json(k).dump() + ": ";
        render(v, out, depth + 1);
      }
      out += "\n" + close + "}";
      return;
    }
    case Json::value_t::array: {
      // numeric arrays stay on one line
      bool flat = true;
      for (const auto& v : j) flat = flat && v.is_number();
      if (j.empty() || flat) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out += ", ";
          render(j[i], out, depth + 1);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        render(j[i], out, depth + 1);
      }
      out += "\n" + close + "]";
      return;
    }
    default:
      out += j.dump();
  }
}

inline std::string render(const Json& j) {
  std::string out;
  render(j, out, 0);
  return out + "\n";
}

}  // namespace weylmech::cli
