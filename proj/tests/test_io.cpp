#include <doctest.h>

#include <algorithm>

#include "ladders/error.hpp"
#include "ladders/generators.hpp"
#include "ladders/io.hpp"

using namespace ladders;

namespace {

std::size_t count_of(const std::string& s, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
    return n;
}

// Same ids and the same relation, matched by id.
bool same_order(const FinitePoset& a, const FinitePoset& b) {
    if (a.size() != b.size()) return false;
    for (Elem x = 0; x < a.size(); ++x) {
        auto bx = b.find(a.id(x));
        if (!bx) return false;
        for (Elem y = 0; y < a.size(); ++y)
            if (a.leq(x, y) != b.leq(*bx, b.index(a.id(y)))) return false;
    }
    return true;
}

Json pairs(const std::vector<IdPair>& ps) {
    Json a = Json::array();
    for (const auto& [x, y] : ps) a.push_back(Json::array({x, y}));
    return a;
}

}  // namespace

TEST_CASE("poset documents") {
    const FinitePoset m = m3();
    Json doc = poset_to_json(m);
    CHECK(doc["relation_kind"] == "covers");
    CHECK(doc["elements"] == Json({"a0", "a1", "a2", "bottom", "top"}));
    CHECK(doc["pairs"].size() == 6);
    CHECK(same_order(poset_from_json(doc), m));

    // The full relation reads the same and exports to the same canonical form.
    Json leq = {{"elements", {"top", "bottom", "a"}},
                {"relation_kind", "leq"},
                {"pairs", pairs({{"bottom", "a"}, {"a", "top"}, {"bottom", "top"}, {"a", "a"}, {"top", "top"}, {"bottom", "bottom"}})}};
    FinitePoset c = poset_from_json(leq);
    REQUIRE(c.valid());
    Json canon = poset_to_json(c);
    CHECK(canon["elements"] == Json({"a", "bottom", "top"}));
    CHECK(canon["pairs"] == pairs({{"a", "top"}, {"bottom", "a"}}));
    CHECK(poset_to_json(poset_from_json(canon)).dump() == canon.dump());

    // A leq document missing transitivity is read but not valid.
    Json broken = leq;
    broken["pairs"] = pairs({{"bottom", "a"}, {"a", "top"}, {"a", "a"}, {"top", "top"}, {"bottom", "bottom"}});
    CHECK_FALSE(poset_from_json(broken).valid());

    CHECK_THROWS_AS(parse_json("{nope"), ParseError);
    CHECK_THROWS_AS(poset_from_json(Json{{"elements", {"a"}}}), ParseError);
    CHECK_THROWS_AS(poset_from_json(Json{{"elements", {"a"}}, {"relation_kind", "order"}, {"pairs", Json::array()}}),
                    ParseError);
    CHECK_THROWS_AS(poset_from_json(Json{{"elements", {"a", "a"}}, {"relation_kind", "covers"}, {"pairs", Json::array()}}),
                    ParseError);
    CHECK_THROWS_AS(poset_from_json(Json{{"elements", 3}, {"relation_kind", "covers"}, {"pairs", Json::array()}}),
                    ParseError);
    CHECK_THROWS_AS(poset_from_json(Json{{"elements", {"a"}}, {"relation_kind", "covers"}, {"pairs", pairs({{"a", "b"}})}}),
                    UnknownElement);
    CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), ParseError);
}

TEST_CASE("round trip keeps random lattices") {
    Rng rng(31);
    for (int t = 0; t < 20; ++t) {
        FinitePoset p = random_lattice(rng, 9);
        Json doc = poset_to_json(p);
        FinitePoset back = poset_from_json(parse_json(doc.dump()));
        CHECK(same_order(back, p));
        CHECK(poset_to_json(back).dump() == doc.dump());
    }
}

TEST_CASE("DOT export") {
    std::string one = export_dot(chain(1));
    CHECK(count_of(one, ";\n") == 2);  // rankdir and the node
    CHECK(count_of(one, "->") == 0);

    std::string m = export_dot(m3(), "m3");
    CHECK(m.rfind("digraph \"m3\" {", 0) == 0);
    CHECK(count_of(m, "->") == 6);
    CHECK(count_of(m, ";\n") == 1 + 5 + 6);
    CHECK(m.find("\"bottom\" -> \"a0\";") != std::string::npos);
    CHECK(m == export_dot(m3(), "m3"));

    CHECK(count_of(export_dot(chain(3)), "->") == 2);

    FinitePoset q = FinitePoset::from_covers({"say \"hi\""}, {});
    CHECK(export_dot(q).find("\"say \\\"hi\\\"\"") != std::string::npos);
}

TEST_CASE("subset documents") {
    const FinitePoset m = m3();
    Json doc = subset_to_json(m, make_set(m, {"top", "a1"}));
    CHECK(doc["subset"] == Json({"a1", "top"}));
    CHECK(subset_from_json(m, doc["subset"]) == make_set(m, {"a1", "top"}));
}

TEST_CASE("rho documents") {
    RhoTable t(3, 2);
    t.set_row(0, 1, {1, 2});
    t.set_row(0, 2, {0, 3});
    t.set_row(1, 2, {4, 4});
    Json doc = rho_to_json(t);
    CHECK(doc["rows"]["0,2"] == Json({0, 3}));
    CHECK(rho_from_json(parse_json(doc.dump())) == t);

    Json short_row = doc;
    short_row["rows"]["0,1"] = {1};
    CHECK_THROWS_AS(rho_from_json(short_row), ParseError);
    Json bad_key = doc;
    bad_key["rows"]["2,1"] = {0, 0};
    CHECK_THROWS_AS(rho_from_json(bad_key), ParseError);
    Json junk_key = doc;
    junk_key["rows"]["0;1"] = {0, 0};
    CHECK_THROWS_AS(rho_from_json(junk_key), ParseError);
}

TEST_CASE("report documents") {
    Report r("demo");
    r.note("k", "v");
    r.fail("broken", {"a", "b"});
    Json j = report_to_json(r);
    CHECK(j["title"] == "demo");
    CHECK(j["passed"] == false);
    CHECK(j["failures"] == 1);
    CHECK(j["witnesses"][0]["claim"] == "broken");
    CHECK(j["notes"]["k"] == "v");
}

TEST_CASE("family and condition documents") {
    Json doc = read_json_file(LADDERS_DATA_DIR "/chain_family.json");
    IdealFamily f = family_from_json(doc);
    CHECK(f.tree().leaves().size() == 3);
    CHECK(validate_family(f).passed());
    Json again = family_to_json(f);
    IdealFamily g = family_from_json(again);
    for (const Node& a : f.tree().nodes()) CHECK(ids_of(f.base(), f.ideal(a)) == ids_of(g.base(), g.ideal(a)));

    Condition p = condition_from_json(f, read_json_file(LADDERS_DATA_DIR "/condition.json"));
    CHECK(p.values.size() == 2);
    CHECK(condition_from_json(f, condition_to_json(f, p)).values == p.values);
    CHECK(conditions_from_json(f, read_json_file(LADDERS_DATA_DIR "/conditions.json")).size() == 2);
    CHECK(conditions_from_json(f, Json{{"conditions", Json::array()}}).empty());

    Json missing = doc;
    missing["nodes"].erase(missing["nodes"].size() - 1);
    CHECK_THROWS_AS(family_from_json(missing), ParseError);
    Json twice = {{"values", {{{"node", {0}}, {"slot", 0}, {"value", "c0"}}, {{"node", {0}}, {"slot", 0}, {"value", "c1"}}}}};
    CHECK_THROWS_AS(condition_from_json(f, twice), ParseError);
}
