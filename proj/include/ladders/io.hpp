#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ladders/cohen.hpp"
#include "ladders/diamond.hpp"
#include "ladders/extension.hpp"
#include "ladders/poset.hpp"
#include "ladders/report.hpp"
#include "ladders/rho.hpp"

namespace ladders {

using Json = nlohmann::json;

// Parse failures of any kind surface as ParseError.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

// {"elements": [...], "relation_kind": "covers" | "leq", "pairs": [[a, b], ...]}
FinitePoset poset_from_json(const Json& doc);
// Canonical form: sorted ids, cover pairs only.
Json poset_to_json(const FinitePoset& p);

// A poset document with an extra "subset" array of ids.
Json subset_to_json(const FinitePoset& p, const Bits& s);
Bits subset_from_json(const FinitePoset& p, const Json& ids);

// Cover edges only, nodes and edges in sorted id order, drawn bottom to top.
std::string export_dot(const FinitePoset& p, const std::string& name = "poset");
// The labelling tree of a diamond build, parent to child.
std::string export_tree_dot(const DiamondState& state);

Json report_to_json(const Report& r);

// {"levels": A, "window": N, "rows": {"a,b": [...]}}
Json rho_to_json(const RhoTable& t);
RhoTable rho_from_json(const Json& doc);

Json extension_to_json(const ExtensionResult& ext);

// {"base": poset, "n": n, "bounds": [...], "nodes": [{"node": [...], "ideal": [ids]}]}
Json family_to_json(const IdealFamily& fam);
IdealFamily family_from_json(const Json& doc);

// {"values": [{"node": [...], "slot": m, "value": id}]}
Json condition_to_json(const IdealFamily& fam, const Condition& p);
Condition condition_from_json(const IdealFamily& fam, const Json& doc);
// A JSON array of conditions, or {"conditions": [...]}.
std::vector<Condition> conditions_from_json(const IdealFamily& fam, const Json& doc);

}  // namespace ladders
