#include "rlie/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace rlie::io {

using gfp::Vec;
using rla::LieAlgebra;

namespace {

uint8_t reduce_mod(int p, long v) { return static_cast<uint8_t>(((v % p) + p) % p); }

Vec parse_value_map(const json& value, const std::map<std::string, int>& index, int p, int dim,
                    const std::string& where) {
  if (!value.is_object()) throw ParseError(where + ": value must be an object");
  Vec v(dim, 0);
  for (const auto& [name, coeff] : value.items()) {
    auto it = index.find(name);
    if (it == index.end())
      throw ParseError(where + ": undeclared basis name '" + name + "'");
    if (!coeff.is_number_integer())
      throw ParseError(where + ": coefficient of '" + name + "' must be an integer");
    v[it->second] = reduce_mod(p, coeff.get<long>());
  }
  return v;
}

}  // namespace

LieAlgebra parse(const json& doc, const Caps& caps) {
  if (!doc.is_object()) throw ParseError("document must be a JSON object");
  if (doc.contains("schema_version") && doc["schema_version"] != 1)
    throw ParseError("unsupported schema_version");
  if (!doc.contains("p") || !doc["p"].is_number_integer())
    throw ParseError("missing or non-integer field 'p'");
  const int p = doc["p"].get<int>();
  gfp::check_field(p, caps);

  if (!doc.contains("basis") || !doc["basis"].is_array())
    throw ParseError("missing or non-array field 'basis'");
  std::vector<std::string> names;
  std::map<std::string, int> index;
  for (const auto& b : doc["basis"]) {
    if (!b.is_string()) throw ParseError("basis entries must be strings");
    std::string name = b.get<std::string>();
    if (index.count(name)) throw ParseError("duplicate basis name '" + name + "'");
    index[name] = static_cast<int>(names.size());
    names.push_back(std::move(name));
  }
  const int dim = static_cast<int>(names.size());

  std::vector<std::vector<Vec>> upper(dim, std::vector<Vec>(dim, Vec(dim, 0)));
  if (doc.contains("bracket")) {
    if (!doc["bracket"].is_array()) throw ParseError("'bracket' must be an array");
    for (const auto& entry : doc["bracket"]) {
      if (!entry.is_object() || !entry.contains("left") || !entry.contains("right"))
        throw ParseError("bracket entries need 'left' and 'right'");
      std::string ln = entry["left"].get<std::string>();
      std::string rn = entry["right"].get<std::string>();
      auto li = index.find(ln), ri = index.find(rn);
      if (li == index.end()) throw ParseError("bracket: undeclared basis name '" + ln + "'");
      if (ri == index.end()) throw ParseError("bracket: undeclared basis name '" + rn + "'");
      if (li->second >= ri->second)
        throw ParseError("bracket: 'left' must precede 'right' in basis order ('" + ln + "', '" +
                         rn + "')");
      upper[li->second][ri->second] = parse_value_map(
          entry.contains("value") ? entry["value"] : json::object(), index, p, dim,
          "bracket[" + ln + "," + rn + "]");
    }
  }

  std::vector<Vec> pmap(dim, Vec(dim, 0));
  if (doc.contains("pmap")) {
    if (!doc["pmap"].is_object()) throw ParseError("'pmap' must be an object");
    for (const auto& [name, value] : doc["pmap"].items()) {
      auto it = index.find(name);
      if (it == index.end()) throw ParseError("pmap: undeclared basis name '" + name + "'");
      pmap[it->second] = parse_value_map(value, index, p, dim, "pmap[" + name + "]");
    }
  }

  LieAlgebra L = LieAlgebra::make(p, std::move(names), upper, std::move(pmap));
  rla::require_valid(L);
  return L;
}

LieAlgebra parse_text(const std::string& text, const Caps& caps) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse(doc, caps);
}

LieAlgebra parse_file(const std::string& path, const Caps& caps) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), caps);
}

json emit(const LieAlgebra& L) {
  json doc;
  doc["schema_version"] = 1;
  doc["p"] = L.p;
  doc["basis"] = L.names;
  json bracket = json::array();
  for (int i = 0; i < L.dim; ++i)
    for (int j = i + 1; j < L.dim; ++j) {
      if (gfp::is_zero(L.bracket[i][j])) continue;
      json value = json::object();
      for (int k = 0; k < L.dim; ++k)
        if (L.bracket[i][j][k] != 0) value[L.names[k]] = L.bracket[i][j][k];
      bracket.push_back({{"left", L.names[i]}, {"right", L.names[j]}, {"value", value}});
    }
  doc["bracket"] = bracket;
  json pmap = json::object();
  for (int i = 0; i < L.dim; ++i) {
    if (gfp::is_zero(L.pmap[i])) continue;
    json value = json::object();
    for (int k = 0; k < L.dim; ++k)
      if (L.pmap[i][k] != 0) value[L.names[k]] = L.pmap[i][k];
    pmap[L.names[i]] = value;
  }
  doc["pmap"] = pmap;
  return doc;
}

json subspace_json(const gfp::Subspace& s) {
  json rows = json::array();
  for (const Vec& r : s.basis) rows.push_back(vec_json(r));
  return json{{"ambient_dim", s.ambient}, {"dim", s.dim()}, {"basis", rows}};
}

json vec_json(const Vec& v) {
  json a = json::array();
  for (uint8_t x : v) a.push_back(static_cast<int>(x));
  return a;
}

}  // namespace rlie::io
