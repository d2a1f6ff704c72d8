#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ladders/poset.hpp"
#include "ladders/random.hpp"
#include "ladders/report.hpp"

namespace ladders {

// Rows rho(a, b)(0..window-1) for levels a < b < levels. rho(a, a) is
// identically zero and never stored.
class RhoTable {
public:
    RhoTable() = default;
    RhoTable(int levels, int window);

    int levels() const { return levels_; }
    int window() const { return window_; }

    int at(int a, int b, int n) const;  // throws WindowExceeded when n >= window
    const std::vector<int>& row(int a, int b) const;
    void set_row(int a, int b, std::vector<int> values);
    void set(int a, int b, int n, int value);
    int max_value() const;

    bool operator==(const RhoTable&) const = default;

private:
    std::size_t slot(int a, int b) const;

    int levels_ = 1;
    int window_ = 1;
    std::vector<std::vector<int>> rows_;
};

// Either the least element or (level, n, m).
struct KPoint {
    bool zero = true;
    int level = 0;
    int n = 0;
    int m = 0;

    static KPoint bottom() { return {}; }
    static KPoint at(int level, int n, int m) { return {false, level, n, m}; }
    bool operator==(const KPoint&) const = default;
    std::string id() const;
};

// Finite region {0} ∪ levels × window × height used to materialize the order.
// A zero dimension leaves only the least element.
struct Box {
    int levels = 1;
    int window = 1;
    int height = 1;
};

bool leq_rho(const RhoTable& t, const KPoint& x, const KPoint& y);
KPoint join_rho(const RhoTable& t, const KPoint& x, const KPoint& y);
// Greatest element of K_level below x; x itself when x already lies in K_level.
KPoint pi_rho(const RhoTable& t, int level, const KPoint& x);

Report check_rho_axioms(const RhoTable& t);
// Reports |{v < a : rho(v, a)(0) <= n}| for every level a and n <= bound.
Report check_lower_finiteness(const RhoTable& t, int bound);

// The box as a poset under leq_rho, with the point behind each element.
struct MaterializedBox {
    Box box;
    FinitePoset poset;
    std::vector<KPoint> points;
    Bits interior;  // points whose closed-form join with every box point stays in the box

    Elem index_of(const KPoint& p) const;
    bool contains(const KPoint& p) const;
};

MaterializedBox materialize(const RhoTable& t, const Box& box);
// Default box for a table: all levels and the whole window, with height
// max value + window + 2.
Box default_box(const RhoTable& t);

// Brute-force status: the box relation is a partial order and every pair of
// interior points has a least upper bound in the box.
Report box_semilattice_status(const MaterializedBox& mb);
Report check_3ladder_box(const RhoTable& t, const Box& box);

struct BuildChoices {
    // Stage -> prefix of the non-decreasing sequence (d_n); it continues with
    // its last entry, which must be stage - 1. Missing stages use
    // d_n = min(n, stage - 1).
    std::map<int, std::vector<int>> sequences;
};

struct BuildTrace {
    int stage = 0;
    std::vector<int> sequence;   // d_0 .. d_L, with d_L = stage - 1 first reached at L
    std::vector<int> dominator;  // f*_stage over the window
    std::vector<int> thresholds; // k_0 .. k_L
};

RhoTable build_rho(int levels, int window, const std::vector<std::vector<int>>& f_family,
                   const BuildChoices& choices = {}, std::vector<BuildTrace>* trace = nullptr);

// Checks the set {0} ∪ {(a, n, f(n)) : rho(0, a)(n) <= f(n)} inside the box:
// meet-closed, at most 2 lower covers per member, and every box point
// (a, n, m) with headroom lies below a member. Headroom means some n' >= n in
// the window has max(m, rho(0, a)(n')) <= f(n') < height; points without it
// are counted in a note.
Report nonmax_witness(const RhoTable& t, const std::vector<int>& f, const Box& box);
std::vector<KPoint> nonmax_witness_set(const RhoTable& t, const std::vector<int>& f, const Box& box);

// The triple (0,0,rho(0,1)(1)+1), (0,1,0), (1,0,0); needs levels >= 2 and window >= 2.
std::vector<KPoint> breadth_marker(const RhoTable& t);
Report check_breadth_marker(const RhoTable& t);

// Independent uniform entries in [0, max_value], then each row made
// non-decreasing by a running maximum.
RhoTable random_rho_table(Rng& rng, int levels, int window, int max_value);
// Non-decreasing arrays with entries in [0, max_value].
std::vector<std::vector<int>> random_f_family(Rng& rng, int count, int window, int max_value);

}  // namespace ladders
