#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ladders/poset.hpp"
#include "ladders/report.hpp"

namespace ladders {

// Second coordinate of D = ω × {⊥, 0, 1}.
enum class Mark : int { bottom = 0, zero = 1, one = 2 };

struct DPoint {
    int n = 0;
    Mark a = Mark::bottom;
    bool operator==(const DPoint&) const = default;
};

// (n,a) < (m,b) for distinct points with n <= m iff a = ⊥ or n < m.
bool d_leq(const DPoint& x, const DPoint& y);

struct DiamondPoint {
    int level = 0;
    DPoint d;
    bool operator==(const DiamondPoint&) const = default;
    std::string id() const;  // "(level,n,⊥|0|1)" with ⊥ written as "b"
};

// Standard diagonal enumeration: pair(n, m) = (n+m)(n+m+1)/2 + m.
long pair_index(int n, int m);
std::pair<int, int> unpair(long k);

struct TreeNode {
    int level = 0;
    int index = 0;
    bool operator==(const TreeNode&) const = default;
    std::string id() const;  // "t<level>.<index>"
};

// Levels 0..levels()-1 of the lattice, each with rungs n < width(), and the
// tree levels of the same heights with width() nodes each. Node (a, k) for
// a >= 1 hangs below (a-1, n) where (n, m) = unpair(k).
class DiamondState {
public:
    static DiamondState base(int width);

    int levels() const { return levels_; }
    int stages() const { return levels_ - 1; }
    int width() const { return width_; }
    const FinitePoset& order() const { return order_; }
    std::size_t size() const { return points_.size(); }
    const DiamondPoint& point(Elem e) const { return points_[e]; }
    Elem index_of(const DiamondPoint& p) const;
    Elem index_of(int level, int n, Mark a) const { return index_of({level, {n, a}}); }

    Bits ideal(int level) const;  // K_level: points of lower levels
    // Principal ideal of the top level's (W-1, ⊥): every point off the top
    // rung plus every (a, W-1, ⊥).
    Bits interior() const;

    // Gamma label of a node, as sorted point indices.
    const std::vector<Elem>& gamma(const TreeNode& x) const;
    Bits gamma_set(const TreeNode& x) const;
    std::vector<TreeNode> children(const TreeNode& x) const;
    TreeNode parent(const TreeNode& x) const;  // level >= 1 only
    // Threshold used when the node's children were made: least h such that
    // (level, h', ⊥) is in the label for every window h' >= h.
    int threshold(const TreeNode& x) const;
    // Targets of the labelling map for a parent with threshold h, top rung first.
    std::vector<DPoint> label_targets(int h) const;

    DiamondState successor_extend() const;
    // Test hook: replace a label.
    DiamondState with_gamma(const TreeNode& x, std::vector<Elem> label) const;

private:
    void add_level();

    int width_ = 0;
    int levels_ = 0;
    std::vector<DiamondPoint> points_;
    FinitePoset order_;
    std::vector<std::vector<std::vector<Elem>>> gamma_;  // [level][node]
};

// Adds the next successor level; throws WindowExceeded when a parent label
// leaves no target for the labelling map.
DiamondState successor_extend(const DiamondState& state, int level);
DiamondState build_diamond(int stages, int width);

// Windowed (1)-(4), (6), (8)-(13); (5) and (7) are noted as not evaluated.
Report check_properties(const DiamondState& state);
// Gamma(x) is meet-closed, dominates the interior of K_{ht(x)+1}, and each
// member has at most two lower covers inside it, namely the expected ones.
Report gamma_ladder_check(const DiamondState& state, const TreeNode& x);
Report lower_cover_profile(const DiamondState& state);

// Nodes with no children in the window.
std::vector<TreeNode> leaves(const DiamondState& state);
// Union of the labels from the root down to the leaf.
Bits branch_union(const DiamondState& state, const TreeNode& leaf);
// Meet-closure and the two-cover bound of a branch union, plus the levels a
// where some interior point of K_a has all its upper bounds in c.
Report branch_check(const DiamondState& state, const Bits& c);

}  // namespace ladders
