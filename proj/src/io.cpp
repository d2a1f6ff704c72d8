#include "ladders/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ladders/error.hpp"

namespace ladders {

namespace {

const Json& field(const Json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    return doc.at(key);
}

// nlohmann type errors become ParseError with the field named.
template <class T>
T get_as(const Json& j, const char* what) {
    try {
        return j.get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad ") + what + ": " + e.what());
    }
}

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::vector<std::string> sorted_ids(const FinitePoset& p, const Bits& s) {
    auto v = ids_of(p, s);
    std::sort(v.begin(), v.end());
    return v;
}

Json witness_list(const std::vector<Witness>& ws) {
    Json a = Json::array();
    for (const Witness& w : ws) a.push_back({{"claim", w.claim}, {"elements", w.elements}});
    return a;
}

}  // namespace

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str());
}

FinitePoset poset_from_json(const Json& doc) {
    auto ids = get_as<std::vector<std::string>>(field(doc, "elements"), "elements");
    const auto kind = get_as<std::string>(field(doc, "relation_kind"), "relation_kind");
    auto pairs = get_as<std::vector<std::pair<std::string, std::string>>>(field(doc, "pairs"), "pairs");
    if (kind == "covers") return FinitePoset::from_covers(std::move(ids), pairs);
    if (kind == "leq") return FinitePoset::from_leq(std::move(ids), pairs);
    throw ParseError("relation_kind must be \"covers\" or \"leq\", got \"" + kind + "\"");
}

Json poset_to_json(const FinitePoset& p) {
    auto ids = p.ids();
    std::sort(ids.begin(), ids.end());
    Json pairs = Json::array();
    for (const auto& [a, b] : cover_pairs(p)) pairs.push_back({a, b});
    return {{"elements", ids}, {"relation_kind", "covers"}, {"pairs", pairs}};
}

Json subset_to_json(const FinitePoset& p, const Bits& s) {
    Json doc = poset_to_json(p);
    doc["subset"] = sorted_ids(p, s);
    return doc;
}

Bits subset_from_json(const FinitePoset& p, const Json& ids) {
    return make_set(p, get_as<std::vector<std::string>>(ids, "subset"));
}

std::string export_dot(const FinitePoset& p, const std::string& name) {
    auto ids = p.ids();
    std::sort(ids.begin(), ids.end());
    std::string out = "digraph " + quoted(name) + " {\n  rankdir=BT;\n";
    for (const auto& id : ids) out += "  " + quoted(id) + ";\n";
    for (const auto& [a, b] : cover_pairs(p)) out += "  " + quoted(a) + " -> " + quoted(b) + ";\n";
    return out + "}\n";
}

std::string export_tree_dot(const DiamondState& state) {
    std::string out = "digraph \"tree\" {\n";
    for (int a = 0; a < state.levels(); ++a)
        for (int k = 0; k < state.width(); ++k) out += "  " + quoted(TreeNode{a, k}.id()) + ";\n";
    for (int a = 1; a < state.levels(); ++a)
        for (int k = 0; k < state.width(); ++k) {
            TreeNode x{a, k};
            out += "  " + quoted(state.parent(x).id()) + " -> " + quoted(x.id()) + ";\n";
        }
    return out + "}\n";
}

Json report_to_json(const Report& r) {
    Json notes = Json::object();
    for (const auto& [k, v] : r.notes()) notes[k] = v;
    return {{"title", r.title()},
            {"passed", r.passed()},
            {"failures", r.failure_count()},
            {"witnesses", witness_list(r.witnesses())},
            {"evidence", witness_list(r.evidence())},
            {"notes", notes}};
}

Json rho_to_json(const RhoTable& t) {
    Json rows = Json::object();
    for (int a = 0; a < t.levels(); ++a)
        for (int b = a + 1; b < t.levels(); ++b) rows[std::to_string(a) + "," + std::to_string(b)] = t.row(a, b);
    return {{"levels", t.levels()}, {"window", t.window()}, {"rows", rows}};
}

RhoTable rho_from_json(const Json& doc) {
    const int levels = get_as<int>(field(doc, "levels"), "levels");
    const int window = get_as<int>(field(doc, "window"), "window");
    if (levels < 1 || window < 1) throw ParseError("levels and window must be positive");
    RhoTable t(levels, window);
    const Json& rows = field(doc, "rows");
    if (!rows.is_object()) throw ParseError("rows must be an object");
    for (const auto& [key, value] : rows.items()) {
        int a = 0, b = 0;
        char comma = 0;
        std::istringstream ks(key);
        if (!(ks >> a >> comma >> b) || comma != ',' || !ks.eof())
            throw ParseError("bad row key \"" + key + "\"");
        if (a < 0 || b >= levels || a >= b) throw ParseError("row key out of range: " + key);
        auto vals = get_as<std::vector<int>>(value, "row");
        if (static_cast<int>(vals.size()) != window) throw ParseError("row " + key + " does not fill the window");
        t.set_row(a, b, std::move(vals));
    }
    return t;
}

Json extension_to_json(const ExtensionResult& ext) {
    return {{"extended", poset_to_json(ext.extended)},
            {"embedded_ideal", sorted_ids(ext.extended, ext.embedded_ideal)},
            {"new_elements", sorted_ids(ext.extended, ext.new_elements)}};
}

Json family_to_json(const IdealFamily& fam) {
    Json nodes = Json::array();
    for (const Node& a : fam.tree().nodes())
        nodes.push_back({{"node", a}, {"ideal", sorted_ids(fam.base(), fam.ideal(a))}});
    return {{"base", poset_to_json(fam.base())},
            {"n", fam.tree().n()},
            {"bounds", fam.tree().bounds()},
            {"nodes", nodes}};
}

IdealFamily family_from_json(const Json& doc) {
    FinitePoset base = poset_from_json(field(doc, "base"));
    const int n = get_as<int>(field(doc, "n"), "n");
    auto bounds = get_as<std::vector<int>>(field(doc, "bounds"), "bounds");
    IdealFamily fam(std::move(base), IndexTree(n, bounds));
    for (const Json& entry : field(doc, "nodes")) {
        auto a = get_as<Node>(field(entry, "node"), "node");
        if (!fam.tree().contains(a)) throw ParseError("node " + node_id(a) + " is outside the tree");
        fam.set_ideal(a, subset_from_json(fam.base(), field(entry, "ideal")));
    }
    for (const Node& a : fam.tree().nodes()) {
        try {
            fam.ideal(a);
        } catch (const PreconditionError&) {
            throw ParseError("no ideal given for node " + node_id(a));
        }
    }
    return fam;
}

Json condition_to_json(const IdealFamily& fam, const Condition& p) {
    Json values = Json::array();
    for (const auto& [k, v] : p.values)
        values.push_back({{"node", k.first}, {"slot", k.second}, {"value", fam.base().id(v)}});
    return {{"values", values}};
}

Condition condition_from_json(const IdealFamily& fam, const Json& doc) {
    Condition p;
    for (const Json& entry : field(doc, "values")) {
        auto a = get_as<Node>(field(entry, "node"), "node");
        const int m = get_as<int>(field(entry, "slot"), "slot");
        const Elem v = fam.base().index(get_as<std::string>(field(entry, "value"), "value"));
        if (!p.values.emplace(std::make_pair(a, m), v).second)
            throw ParseError("slot " + node_id(a) + "#" + std::to_string(m) + " given twice");
    }
    return p;
}

std::vector<Condition> conditions_from_json(const IdealFamily& fam, const Json& doc) {
    const Json& list = doc.is_array() ? doc : field(doc, "conditions");
    if (!list.is_array()) throw ParseError("conditions must be an array");
    std::vector<Condition> out;
    for (const Json& c : list) out.push_back(condition_from_json(fam, c));
    return out;
}

}  // namespace ladders
