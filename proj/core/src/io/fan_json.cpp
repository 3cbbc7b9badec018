#include "tropmirror/io/fan_json.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "tropmirror/error.hpp"

namespace tropmirror::io {
namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedInput, what); }

LatticeVector int_vector(const json& v, const std::string& field) {
  if (!v.is_array()) malformed(field + " entries must be arrays");
  std::vector<Integer> xs;
  for (const auto& x : v) {
    if (!x.is_number_integer()) malformed(field + " entries must be integers");
    xs.emplace_back(x.get<long long>());
  }
  return LatticeVector(std::move(xs));
}

Rational rational_of(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  malformed("phi entries must be \"p/q\" strings or integers");
}

}  // namespace

FanInput parse_fan_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(std::string("JSON syntax: ") + e.what());
  }
  if (!doc.is_object()) malformed("top level must be an object");
  for (const char* key : {"rays", "max_cones", "phi"})
    if (!doc.contains(key) || !doc[key].is_array()) malformed(std::string("missing array field \"") + key + "\"");

  std::vector<LatticeVector> rays;
  for (const auto& r : doc["rays"]) rays.push_back(int_vector(r, "rays"));
  std::vector<Cone> cones;
  for (const auto& c : doc["max_cones"]) {
    if (!c.is_array()) malformed("max_cones entries must be arrays");
    Cone cone;
    for (const auto& i : c) {
      if (!i.is_number_integer() || i.get<long long>() < 0) malformed("cone indices must be non-negative integers");
      cone.push_back(i.get<std::size_t>());
    }
    cones.push_back(std::move(cone));
  }
  SupportFunction phi;
  for (const auto& v : doc["phi"]) phi.values.push_back(rational_of(v));
  if (phi.values.size() != rays.size()) malformed("phi needs one value per ray");
  return {Fan(std::move(rays), std::move(cones)), std::move(phi)};
}

FanInput load_fan_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_fan_json(buf.str());
}

std::string fan_to_json(const FanInput& input) {
  json doc;
  doc["rays"] = json::array();
  for (const auto& r : input.fan.rays()) {
    json row = json::array();
    for (std::size_t i = 0; i < r.dim(); ++i) row.push_back(r[i].convert_to<long long>());
    doc["rays"].push_back(row);
  }
  doc["max_cones"] = input.fan.max_cones();
  doc["phi"] = json::array();
  for (const auto& v : input.phi.values) doc["phi"].push_back(format_rational(v));
  return doc.dump();
}

}  // namespace tropmirror::io
