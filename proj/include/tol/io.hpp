#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "tol/digraph.hpp"
#include "tol/relation.hpp"

namespace tol::io {

// Relation text format: first line "n <int>", then one "a b c" line per
// member; '#' starts a comment, blank lines are skipped.
TernaryRelation parse_relation_text(std::string_view text);
std::string relation_to_text(const TernaryRelation& rel);

// JSON alternative: {"n": int, "triples": [[a,b,c], ...]}.
TernaryRelation parse_relation_json(const nlohmann::json& j);
nlohmann::json relation_to_json(const TernaryRelation& rel);

// Reads either format; JSON when the first non-space byte is '{'.
TernaryRelation parse_relation(std::string_view text);
TernaryRelation read_relation_file(const std::string& path);

// Digraph text format: first line "n <int>", then one "u v" line per arc.
Digraph parse_digraph_text(std::string_view text);
std::string digraph_to_text(const Digraph& g);

std::string read_file(const std::string& path);

}  // namespace tol::io
