#include "mcm/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace mcm {

using nlohmann::json;

json element_to_json(const Element& e) {
  json ex = json::array();
  for (const auto& [k, v] : e.plus.explicit_map) ex.push_back({k.i, k.j, v.i, v.j});
  return json{{"window", e.plus.window},
              {"explicit", std::move(ex)},
              {"row_shifts", e.plus.row_shifts},
              {"col_shifts", e.plus.col_shifts},
              {"orientation", e.orientation}};
}

Element element_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("element literal must be an object");
  Element e;
  e.plus.window = j.at("window").get<int>();
  e.plus.row_shifts = j.at("row_shifts").get<std::vector<int>>();
  e.plus.col_shifts = j.at("col_shifts").get<std::vector<int>>();
  e.orientation = j.at("orientation").get<int>();
  if (e.orientation != 0 && e.orientation != 1)
    throw std::invalid_argument("orientation must be 0 or 1");
  for (const auto& row : j.at("explicit")) {
    if (!row.is_array() || row.size() != 4)
      throw std::invalid_argument("explicit entries must be [i,j,u,v] quadruples");
    const Point k{row[0].get<int>(), row[1].get<int>()};
    const Point v{row[2].get<int>(), row[3].get<int>()};
    if (!e.plus.explicit_map.emplace(k, v).second)
      throw std::invalid_argument("duplicate explicit key");
  }
  ValidationReport r = validate(e.plus);
  if (!r.ok()) throw std::invalid_argument("invalid element: " + to_string(r));
  return e;
}

json word_to_json(const FreeWord& w) {
  json a = json::array(), b = json::array();
  for (const auto& [k, e] : w.a) a.push_back({k, e});
  for (const auto& [l, f] : w.b) b.push_back({l, f});
  return json{{"a", std::move(a)}, {"b", std::move(b)}};
}

FreeWord word_from_json(const json& j) {
  FreeWord w;
  auto read = [](const json& arr, std::map<int, int>& into) {
    for (const auto& pair : arr) {
      if (!pair.is_array() || pair.size() != 2)
        throw std::invalid_argument("word entries must be [letter, exponent] pairs");
      const int k = pair[0].get<int>(), e = pair[1].get<int>();
      if (k < 1 || e < 1) throw std::invalid_argument("letters and exponents start at 1");
      if (!into.emplace(k, e).second) throw std::invalid_argument("duplicate letter");
    }
  };
  read(j.at("a"), w.a);
  read(j.at("b"), w.b);
  return w;
}

json profile_to_json(const ShiftProfile& p) {
  json a = json::array(), b = json::array();
  for (int k = 1; k <= static_cast<int>(p.row.size()); ++k)
    if (p.row[k - 1] > 0) a.push_back({k, p.row[k - 1]});
  for (int l = 1; l <= static_cast<int>(p.col.size()); ++l)
    if (p.col[l - 1] > 0) b.push_back({l, p.col[l - 1]});
  return json{{"a", std::move(a)}, {"b", std::move(b)}};
}

json semidirect_to_json(const SemidirectElement& s) {
  json j = word_to_json(s.word);
  j["g"] = s.g;
  return j;
}

SemidirectElement semidirect_from_json(const json& j) {
  SemidirectElement s;
  s.word = word_from_json(j);
  s.g = j.at("g").get<int>();
  if (s.g != 0 && s.g != 1) throw std::invalid_argument("g must be 0 or 1");
  return s;
}

json windowed_map_to_json(const WindowedPartialMap& m) {
  json out = json::array();
  for (const auto& [k, v] : m.entries) out.push_back({k.i, k.j, v.i, v.j});
  return out;
}

Element element_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open element literal file: " + path);
  json j;
  in >> j;
  return element_from_json(j);
}

}  // namespace mcm
