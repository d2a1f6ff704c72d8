#include <doctest.h>

#include "ladders/error.hpp"
#include "ladders/extension.hpp"
#include "ladders/generators.hpp"
#include "oracles.hpp"

using namespace ladders;

namespace {

std::vector<std::string> cover_ids(const FinitePoset& p, const std::string& x) {
    std::vector<std::string> out;
    for (Elem c : p.covers(p.index(x))) out.push_back(p.id(c));
    std::sort(out.begin(), out.end());
    return out;
}

bool is_total(const FinitePoset& p) {
    for (Elem a = 0; a < p.size(); ++a)
        for (Elem b = 0; b < p.size(); ++b)
            if (!p.leq(a, b) && !p.leq(b, a)) return false;
    return true;
}

}  // namespace

TEST_CASE("singleton extends to a 2-chain") {
    auto l = chain(1);
    auto ext = extend_by_cofinal_copy(l, l.full_set(), 2);
    CHECK(ext.extended.size() == 2);
    CHECK(is_total(ext.extended));
    CHECK(cover_ids(ext.extended, "c0'") == std::vector<std::string>{"c0"});
}

TEST_CASE("M3 extended by a copy of its top") {
    auto l = m3();
    auto ext = extend_by_cofinal_copy(l, make_set(l, {"top"}), 3);
    const auto& k = ext.extended;
    CHECK(k.size() == 6);
    CHECK(cover_ids(k, "top'") == std::vector<std::string>{"top"});
    CHECK(is_n_ladder(k, 3).passed());
    CHECK(is_proper_ideal(k, ext.embedded_ideal).passed());
    CHECK(check_predecessor_formula(ext, l).passed());
    // Oracle cross-check of the cover relation.
    oracle::Order o(k);
    CHECK(oracle::covers(o, static_cast<int>(k.index("top'"))) ==
          std::vector<int>{static_cast<int>(k.index("top"))});

    Bits back = induced_cofinal_subsemilattice(k, ext.embedded_ideal, k.index("top'"), 3);
    CHECK(ids_of(k, back) == std::vector<std::string>{"top"});
}

TEST_CASE("4-chain with its top copied is a 5-chain") {
    auto l = chain(4);
    auto ext = extend_by_cofinal_copy(l, make_set(l, {"c3"}), 2);
    CHECK(ext.extended.size() == 5);
    CHECK(is_total(ext.extended));
    CHECK(is_n_ladder(ext.extended, 1).passed());
}

TEST_CASE("extension preconditions") {
    auto l = m3();
    CHECK_THROWS_AS(extend_by_cofinal_copy(l, make_set(l, {"top"}), 2), PreconditionError);
    CHECK_THROWS_AS(extend_by_cofinal_copy(l, make_set(l, {"a0"}), 3), PreconditionError);
    CHECK_THROWS_AS(extend_by_cofinal_copy(l, make_set(l, {"a0", "a1", "top"}), 3), PreconditionError);
    CHECK_THROWS_AS(extend_by_cofinal_copy(chain(3), make_set(chain(3), {"c2"}), 1), PreconditionError);
    try {
        extend_by_cofinal_copy(l, make_set(l, {"a0", "a1", "top"}), 3);
    } catch (const PreconditionError& e) {
        CHECK_FALSE(e.report().passed());
    }
}

TEST_CASE("induced subsemilattice examples") {
    auto k = chain(2);
    Bits l = make_set(k, {"c0"});
    CHECK(ids_of(k, induced_cofinal_subsemilattice(k, l, k.index("c1"), 1)) == std::vector<std::string>{"c0"});

    auto g = grid(3, 2);
    Bits row = make_set(g, {"g0_0", "g0_1"});
    CHECK(ids_of(g, induced_cofinal_subsemilattice(g, row, g.index("g2_1"), 2)) ==
          std::vector<std::string>{"g0_1"});
    // Base point in the left column projects onto both row elements.
    CHECK(ids_of(g, induced_cofinal_subsemilattice(g, row, g.index("g1_0"), 2)) ==
          std::vector<std::string>{"g0_0", "g0_1"});
    CHECK_THROWS_AS(induced_cofinal_subsemilattice(g, row, g.index("g0_0"), 2), PreconditionError);
}

TEST_CASE("finite non-maximality") {
    auto r = finite_nonmaximality_check(m3(), 3);
    REQUIRE(r.passed());
    CHECK(r.evidence()[0].elements == std::vector<std::string>{"top"});
    CHECK(finite_nonmaximality_check(grid(3, 3), 2).passed());
    auto c = finite_nonmaximality_check(chain(4), 1);
    CHECK_FALSE(c.passed());
    CHECK_FALSE(c.witnesses().empty());
}

TEST_CASE("copy covers are the copied covers plus the original") {
    Rng rng(21);
    for (int t = 0; t < 30; ++t) {
        const int n = 2 + t % 2;
        auto l = random_ladder(rng, n, 8);
        Bits c = make_set(l, {l.id(*greatest_element(l))});
        // Grow c by a few meets of random elements, keeping it a valid input.
        for (int tries = 0; tries < 4; ++tries) {
            Bits cand = c;
            cand.set(static_cast<Elem>(rng.uniform(0, static_cast<int>(l.size()) - 1)));
            for (bool grew = true; grew;) {
                grew = false;
                for (Elem a : members(cand))
                    for (Elem b : members(cand)) {
                        Elem m = *l.meet(a, b);
                        if (!cand[m]) cand.set(m), grew = true;
                    }
            }
            if (check_cofinal_ladder(l, cand, n - 1).passed()) c = cand;
        }
        auto ext = extend_by_cofinal_copy(l, c, n);
        auto sub = induced(l, c);
        for (Elem y : members(ext.new_elements)) {
            Elem origin = copy_origin(ext, l, y);
            std::vector<std::string> expected{l.id(origin)};
            for (Elem q : sub.covers(sub.index(l.id(origin)))) expected.push_back(sub.id(q) + kCopySuffix);
            std::sort(expected.begin(), expected.end());
            CHECK(cover_ids(ext.extended, ext.extended.id(y)) == expected);
        }
    }
}
