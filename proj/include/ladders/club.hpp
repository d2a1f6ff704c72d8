#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ladders/poset.hpp"
#include "ladders/report.hpp"

namespace ladders {

// Point of E = ω × {0,1}; (n,i) < (m,j) iff n < m and j = 1.
struct EPoint {
    int n = 0;
    int i = 0;
    bool operator==(const EPoint&) const = default;
};

bool e_leq(const EPoint& a, const EPoint& b);

// Element of the staged lattice: the least element or (level, n, i).
struct ClubPoint {
    bool zero = true;
    int level = 0;
    EPoint e;

    static ClubPoint bottom() { return {}; }
    static ClubPoint at(int level, int n, int i) { return {false, level, {n, i}}; }
    bool operator==(const ClubPoint&) const = default;
    std::string id() const;
};

// Levels 0..levels()-1 built so far, each with rungs n < width(level). Level
// a >= 1 sits over the chain sequence(a) in the levels below it.
class ClubState {
public:
    static ClubState base(int width);

    int levels() const { return static_cast<int>(widths_.size()); }
    int width(int level) const { return widths_[level]; }
    const std::vector<int>& widths() const { return widths_; }
    const std::vector<Elem>& sequence(int level) const { return sequences_[level]; }
    const FinitePoset& order() const { return order_; }
    const std::vector<ClubPoint>& points() const { return points_; }
    const ClubPoint& point(Elem e) const { return points_[e]; }
    Elem index_of(const ClubPoint& p) const;

    // Members of K_level: the least element and every point below that level.
    Bits ideal(int level) const;
    // The least element and every point off the top rung of its level.
    Bits interior() const;
    // Top-rung points with i = 0; nothing above their level dominates them.
    Bits corners() const;

    ClubState with_level(int width, std::vector<Elem> sequence) const;

private:
    std::vector<int> widths_;
    std::vector<std::vector<Elem>> sequences_;
    std::vector<ClubPoint> points_;
    FinitePoset order_;
};

using ElementPredicate = std::function<bool(const ClubPoint&)>;

// Seeded choice of a strictly increasing chain x_0 < ... < x_{length-1} of
// points of K_level satisfying pi_{a(x_k)+1}(x_{k+1}) != x_k, ending at a
// point that dominates every non-corner point of K_level, and never using a
// point where avoid holds. Throws InfeasibleError with the longest feasible
// length otherwise.
std::vector<Elem> choose_stage_sequence(const ClubState& state, int level, int length,
                                        const ElementPredicate& avoid, std::uint64_t seed);

// Validates the sequence and adds the next level with the given width;
// (level, n, i) sits over sequence[2n + i]. Throws PreconditionError with a
// witness when the sequence is unusable.
ClubState extend_stage(const ClubState& state, int level, const std::vector<Elem>& sequence, int width);

// Itemized check of the lattice, ideal, same-level, projection and
// eventual-domination properties plus the lower-cover profile.
Report check_club_properties(const ClubState& state);
// Every 3-subset of the interior has a 2-subset with the same join, and the
// interior passes the 3-ladder check.
Report check_breadth2(const ClubState& state);
// Per level: how many members of c have i = 0 and i = 1. Notes only.
Report club_level_diagnostic(const ClubState& state, const Bits& c);

struct ClubBuildOptions {
    std::optional<int> target_parity;  // chains use only points with this i
    bool widen_base = true;            // base width becomes max(w0, 2 * w1)
};

// widths[a] is the number of rungs of level a; the last entry repeats when
// stages exceeds the schedule.
ClubState build_club(int stages, const std::vector<int>& widths, std::uint64_t seed,
                     const ClubBuildOptions& options = {});

}  // namespace ladders
