#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ladders/poset.hpp"
#include "ladders/random.hpp"
#include "ladders/report.hpp"

namespace ladders {

using Node = std::vector<int>;

std::string node_id(const Node& a);  // "()", "(0)", "(1,0)"
// Lexicographic order with a proper prefix below its extensions.
bool lex_less(const Node& a, const Node& b);
bool is_prefix(const Node& a, const Node& b);
// Lexicographically smaller and not a prefix.
bool lex_star_less(const Node& a, const Node& b);

// Sequences of length < = n whose i-th entry is below bounds[i]; at finite
// scale no entry is a limit, so every node is nonlimit and the maximal nodes
// are exactly those of length n.
class IndexTree {
public:
    IndexTree(int n, std::vector<int> bounds);

    int n() const { return n_; }
    const std::vector<int>& bounds() const { return bounds_; }
    const std::vector<Node>& nodes() const { return nodes_; }  // lexicographic
    const std::vector<Node>& leaves() const { return leaves_; }  // length n, lexicographic
    bool contains(const Node& a) const;
    bool maximal(const Node& a) const { return static_cast<int>(a.size()) == n_; }
    std::vector<Node> children(const Node& a) const;

private:
    int n_;
    std::vector<int> bounds_;
    std::vector<Node> nodes_, leaves_;
};

class IdealFamily {
public:
    IdealFamily(FinitePoset base, IndexTree tree);

    const FinitePoset& base() const { return base_; }
    const IndexTree& tree() const { return tree_; }
    const Bits& ideal(const Node& a) const;
    void set_ideal(const Node& a, Bits ideal);

    // Union of the ideals of all nodes lexicographically below a without
    // being its prefix.
    Bits lex_star_union(const Node& a) const;
    // J_a for a leaf.
    Bits block(const Node& a) const;
    // Lexicographically least leaf whose ideal holds x.
    Node leaf_of(Elem x) const;

private:
    FinitePoset base_;
    IndexTree tree_;
    std::map<Node, Bits> ideals_;
};

// Clauses (1)-(3), (6), block nonemptiness for (5), proper non-last children
// for (7), the partition, and order compatibility of leaf_of; (4) is noted
// as vacuous.
Report validate_family(const IdealFamily& fam);

// Finite partial map (leaf, slot) -> element of that leaf's block.
struct Condition {
    std::map<std::pair<Node, int>, Elem> values;

    bool defined(const Node& a, int m) const { return values.count({a, m}) > 0; }
    Elem at(const Node& a, int m) const { return values.at({a, m}); }
    // q extends p: same values on dom(p).
    bool extends(const Condition& p) const;
};

// Throws PreconditionError when a key is not a leaf or a value leaves its block.
void check_condition(const IdealFamily& fam, const Condition& p);
Bits c_of(const IdealFamily& fam, const Condition& p);

struct DensityResult {
    Condition q;
    Elem y;
};
// Fills slot gaps of p with the least block element, joins everything with x
// into y, then appends the projection of y to each leaf met below y.
DensityResult density_extend(const IdealFamily& fam, const Condition& p, Elem x);

// Union of pairwise compatible conditions; throws PreconditionError otherwise.
Condition common_extension(const IdealFamily& fam, const std::vector<Condition>& conditions);
// C over the filter the conditions generate (equal to C of their union):
// meet-closure, the cover bound n+1 through the projection set, and C_p
// inside C_q whenever q extends p.
Report filter_union_checks(const IdealFamily& fam, const std::vector<Condition>& conditions);

// Family over a random lattice of at most max_base elements, built node by
// node in lexicographic order with the ideal-closure loop; nullopt when the
// attempt fails validation.
std::optional<IdealFamily> random_family(Rng& rng, int n, const std::vector<int>& bounds, int max_base);

}  // namespace ladders
