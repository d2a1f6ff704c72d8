#include <doctest.h>

#include "ladders/error.hpp"
#include "ladders/rho.hpp"
#include "rho_oracle.hpp"

using namespace ladders;

namespace {

RhoTable two_levels(std::vector<int> row) {
    RhoTable t(2, static_cast<int>(row.size()));
    t.set_row(0, 1, std::move(row));
    return t;
}

}  // namespace

TEST_CASE("order examples") {
    auto t = two_levels({2, 2, 2});
    CHECK(leq_rho(t, KPoint::bottom(), KPoint::at(1, 2, 0)));
    CHECK(leq_rho(t, KPoint::at(0, 0, 0), KPoint::at(1, 0, 2)));
    CHECK_FALSE(leq_rho(t, KPoint::at(0, 0, 0), KPoint::at(1, 0, 1)));
    // Within one level the order is the product order.
    CHECK(leq_rho(t, KPoint::at(1, 0, 1), KPoint::at(1, 2, 1)));
    CHECK_FALSE(leq_rho(t, KPoint::at(1, 1, 0), KPoint::at(1, 0, 5)));
    CHECK_THROWS_AS(leq_rho(t, KPoint::at(0, 3, 0), KPoint::at(1, 0, 0)), WindowExceeded);
}

TEST_CASE("join closed form") {
    auto t = two_levels({1, 2, 3});
    auto x = KPoint::at(0, 2, 0), y = KPoint::at(1, 0, 0);
    CHECK(join_rho(t, x, y) == KPoint::at(1, 2, 3));
    CHECK(join_rho(t, x, x) == x);
    CHECK(join_rho(t, KPoint::bottom(), y) == y);
    // Brute-force least upper bound in a box with height 5.
    auto pts = oracle::box_points({2, 3, 5});
    CHECK(oracle::lub(t, pts, x, y) == std::optional<KPoint>(KPoint::at(1, 2, 3)));
}

TEST_CASE("projection closed form") {
    auto t = two_levels({1, 3});
    CHECK(pi_rho(t, 1, KPoint::at(1, 1, 2)) == KPoint::at(0, 0, 2));
    CHECK(pi_rho(t, 0, KPoint::at(0, 1, 1)) == KPoint::bottom());
    CHECK(pi_rho(t, 1, KPoint::at(0, 1, 1)) == KPoint::at(0, 1, 1));
    CHECK(pi_rho(t, 1, KPoint::at(1, 0, 0)) == KPoint::bottom());
    auto pts = oracle::box_points({2, 2, 5});
    CHECK(oracle::proj(t, pts, 1, KPoint::at(1, 1, 2)) == std::optional<KPoint>(KPoint::at(0, 0, 2)));
}

TEST_CASE("axiom checker") {
    RhoTable zero(4, 3);
    CHECK(check_rho_axioms(zero).passed());

    auto dec = two_levels({2, 1});
    auto r = check_rho_axioms(dec);
    REQUIRE_FALSE(r.passed());
    CHECK(r.witnesses()[0].claim == "rho1");
    CHECK(r.witnesses()[0].elements == std::vector<std::string>{"0", "1", "0"});

    RhoTable t(3, 2);
    t.set_row(0, 2, {1, 1});
    r = check_rho_axioms(t);
    REQUIRE_FALSE(r.passed());
    CHECK(r.witnesses()[0].claim == "rho2");
    CHECK(r.witnesses()[0].elements == std::vector<std::string>{"0", "1", "2", "0"});
}

TEST_CASE("lower finiteness profile") {
    RhoTable zero(3, 2);
    auto r = check_lower_finiteness(zero, 2);
    CHECK(r.passed());
    CHECK(*r.find_note("level 2") == "2,2,2");
    CHECK(*r.find_note("level 0") == "0,0,0");
    auto one = check_lower_finiteness(RhoTable(1, 2), 3);
    CHECK(*one.find_note("level 0") == "0,0,0,0");
    RhoTable gaps(3, 1);
    gaps.set_row(0, 2, {2});
    gaps.set_row(1, 2, {0});
    CHECK(*check_lower_finiteness(gaps, 2).find_note("level 2") == "1,1,2");
}

TEST_CASE("3-ladder on boxes") {
    RhoTable zero(2, 2);
    CHECK(check_3ladder_box(zero, {2, 2, 3}).passed());
    RhoTable one(1, 3);
    auto mb = materialize(one, {1, 3, 3});
    CHECK(is_n_ladder(mb.poset, 2).passed());
    CHECK(check_3ladder_box(one, {1, 3, 3}).passed());
    CHECK(check_3ladder_box(zero, {0, 0, 0}).passed());
    CHECK(materialize(zero, {0, 0, 0}).poset.size() == 1);
    CHECK_THROWS_AS(check_3ladder_box(two_levels({2, 1}), {2, 2, 3}), PreconditionError);
}

TEST_CASE("box status matches the axioms on small tables") {
    auto good = two_levels({0, 2});
    CHECK(box_semilattice_status(materialize(good, default_box(good))).passed());
    RhoTable t(3, 2);
    t.set_row(0, 2, {1, 1});
    CHECK_FALSE(box_semilattice_status(materialize(t, default_box(t))).passed());
}

TEST_CASE("builder examples") {
    std::vector<std::vector<int>> f{{0, 0, 0}, {1, 2, 4}};
    auto t = build_rho(2, 3, f);
    CHECK(t.row(0, 1) == std::vector<int>{1, 2, 4});

    std::vector<std::vector<int>> zeros(3, std::vector<int>(3, 0));
    auto z = build_rho(3, 3, zeros);
    CHECK(z.row(0, 1) == std::vector<int>{0, 0, 0});
    CHECK(z.row(0, 2) == std::vector<int>{0, 0, 0});
    CHECK(z.row(1, 2) == std::vector<int>{1, 1, 1});
    CHECK(check_rho_axioms(z).passed());

    auto single = build_rho(1, 2, {{0, 0}});
    CHECK(single.levels() == 1);

    CHECK_THROWS_AS(build_rho(3, 2, {{0, 0}, {0, 0}}), PreconditionError);
    CHECK_THROWS_AS(build_rho(2, 2, {{0, 0}, {2, 1}}), PreconditionError);
    CHECK_THROWS_AS(build_rho(2, 3, {{0, 0}, {0, 0}}), PreconditionError);
}

TEST_CASE("builder with a chosen sequence") {
    Rng rng(9);
    auto f = random_f_family(rng, 5, 4, 6);
    BuildChoices choices;
    choices.sequences[4] = {0, 0, 2, 3};
    std::vector<BuildTrace> trace;
    auto t = build_rho(5, 4, f, choices, &trace);
    CHECK(check_rho_axioms(t).passed());
    REQUIRE(trace.size() == 4);
    CHECK(trace[3].sequence == std::vector<int>{0, 0, 2, 3});
    for (int d = 1; d < 5; ++d)
        for (int k = 0; k < 4; ++k) CHECK(f[d][k] <= t.at(0, d, k));
    choices.sequences[2] = {0};
    CHECK_THROWS_AS(build_rho(5, 4, f, choices), PreconditionError);
}

TEST_CASE("non-maximality witness examples") {
    auto t = two_levels({1, 1, 2});
    std::vector<int> f{0, 0, 0};
    auto set = nonmax_witness_set(t, f, {2, 3, 4});
    CHECK(set.size() == 4);
    for (std::size_t i = 1; i < set.size(); ++i) CHECK(set[i].level == 0);
    CHECK(nonmax_witness(t, f, {2, 3, 4}).passed());

    CHECK(nonmax_witness(t, f, {0, 0, 0}).passed());

    RhoTable zero(3, 3);
    std::vector<int> id{0, 1, 2};
    auto zset = nonmax_witness_set(zero, id, {3, 3, 4});
    CHECK(zset.size() == 10);
    CHECK(nonmax_witness(zero, id, {3, 3, 4}).passed());
}

TEST_CASE("breadth marker") {
    auto t = two_levels({0, 3});
    auto xs = breadth_marker(t);
    CHECK(xs[0] == KPoint::at(0, 0, 4));
    CHECK(check_breadth_marker(t).passed());
    CHECK_THROWS_AS(breadth_marker(RhoTable(2, 1)), WindowExceeded);
}

TEST_CASE("box status equals the axiom verdict on random tables") {
    Rng rng(17);
    int passing = 0, failing = 0;
    for (int i = 0; i < 60; ++i) {
        auto t = random_rho_table(rng, rng.uniform(1, 4), rng.uniform(1, 4), 5);
        bool axioms = check_rho_axioms(t).passed();
        bool box = box_semilattice_status(materialize(t, default_box(t))).passed();
        CHECK(axioms == box);
        (axioms ? passing : failing)++;
    }
    CHECK(passing > 0);
    CHECK(failing > 0);
}

TEST_CASE("closed forms equal brute force on built tables") {
    Rng rng(23);
    for (int i = 0; i < 4; ++i) {
        auto f = random_f_family(rng, 3, 2, 3);
        auto t = build_rho(3, 2, f);
        Box b = default_box(t);
        b.height = std::min(b.height, 6);
        auto pts = oracle::box_points(b);
        auto in_box = [&](const KPoint& p) { return p.zero || p.m < b.height; };
        for (const auto& x : pts)
            for (const auto& y : pts) {
                auto j = join_rho(t, x, y);
                if (!in_box(j)) continue;
                CHECK(oracle::lub(t, pts, x, y) == std::optional<KPoint>(j));
            }
        for (const auto& x : pts)
            for (int a = 0; a <= (x.zero ? 0 : x.level); ++a)
                CHECK(oracle::proj(t, pts, a, x) == std::optional<KPoint>(pi_rho(t, a, x)));
    }
}
