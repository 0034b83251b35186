#pragma once

#include <string>

#include <json.hpp>

#include "mcm/congruence.hpp"
#include "mcm/element.hpp"
#include "mcm/freeword.hpp"
#include "mcm/oracle.hpp"

namespace mcm {

/// Schema: {"window": B, "explicit": [[i,j,u,v],...] sorted, "row_shifts":
/// [...], "col_shifts": [...], "orientation": 0|1}. Serializing a
/// normalized element and parsing it back is bit-exact.
nlohmann::json element_to_json(const Element& e);
Element element_from_json(const nlohmann::json& j);

/// Schema: {"a": [[k,exp],...], "b": [[l,exp],...]}, keys ascending,
/// exponents >= 1.
nlohmann::json word_to_json(const FreeWord& w);
FreeWord word_from_json(const nlohmann::json& j);

/// Same shape as the word schema; entries carry the nonzero cumulative
/// row/column shifts.
nlohmann::json profile_to_json(const ShiftProfile& p);

/// Same as the word schema plus "g": 0|1.
nlohmann::json semidirect_to_json(const SemidirectElement& s);
SemidirectElement semidirect_from_json(const nlohmann::json& j);

/// Sorted [[i,j,u,v],...] entry list.
nlohmann::json windowed_map_to_json(const WindowedPartialMap& m);

Element element_from_file(const std::string& path);

}  // namespace mcm
