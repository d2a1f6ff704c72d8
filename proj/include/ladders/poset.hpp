#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "ladders/report.hpp"

namespace ladders {

using Elem = std::size_t;
using Bits = boost::dynamic_bitset<>;
using IdPair = std::pair<std::string, std::string>;

// Finite poset over opaque string ids. The relation is stored in full (as
// up/down bitsets) and may be invalid until checked: operations other than
// validate_poset require valid().
class FinitePoset {
public:
    FinitePoset() = default;

    // pairs list every (a, b) with a <= b; nothing is inferred.
    static FinitePoset from_leq(std::vector<std::string> ids, const std::vector<IdPair>& pairs);
    // pairs are generating relations; the order is their reflexive-transitive closure.
    static FinitePoset from_covers(std::vector<std::string> ids, const std::vector<IdPair>& pairs);

    template <class Leq>
    static FinitePoset from_relation(std::vector<std::string> ids, Leq&& leq) {
        FinitePoset p(std::move(ids));
        for (Elem i = 0; i < p.size(); ++i)
            for (Elem j = 0; j < p.size(); ++j)
                if (leq(i, j)) p.set(i, j);
        p.finalize();
        return p;
    }

    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }
    const std::string& id(Elem e) const { return ids_[e]; }
    const std::vector<std::string>& ids() const { return ids_; }
    Elem index(const std::string& id) const;  // throws UnknownElement
    std::optional<Elem> find(const std::string& id) const;

    bool valid() const { return valid_; }
    bool leq(Elem a, Elem b) const { return up_[a][b]; }
    bool lt(Elem a, Elem b) const { return a != b && up_[a][b]; }
    const Bits& up(Elem e) const { return up_[e]; }
    const Bits& down(Elem e) const { return down_[e]; }

    // Valid posets only.
    const std::vector<Elem>& covers(Elem e) const { return covers_[e]; }
    std::optional<Elem> join(Elem a, Elem b) const;
    std::optional<Elem> meet(Elem a, Elem b) const;
    // Elements sorted so that a < b implies a comes first; ties by id.
    const std::vector<Elem>& linear_order() const { return order_; }

    Bits empty_set() const { return Bits(size()); }
    Bits full_set() const { Bits b(size()); b.set(); return b; }

private:
    explicit FinitePoset(std::vector<std::string> ids);
    void set(Elem a, Elem b) { up_[a].set(b); down_[b].set(a); }
    void finalize();

    std::vector<std::string> ids_;
    std::unordered_map<std::string, Elem> index_;
    std::vector<Bits> up_, down_;
    bool valid_ = false;
    std::vector<Elem> order_;
    std::vector<std::size_t> pos_;
    std::vector<Bits> up_by_pos_;     // up set indexed by linear position
    std::vector<Bits> down_by_rpos_;  // down set indexed by reversed position
    std::vector<std::vector<Elem>> covers_;
};

Report validate_poset(const FinitePoset& p);

std::optional<Elem> join(const FinitePoset& p, Elem x, Elem y);
std::optional<Elem> meet(const FinitePoset& p, Elem x, Elem y);
std::optional<std::string> join(const FinitePoset& p, const std::string& x, const std::string& y);
std::optional<std::string> meet(const FinitePoset& p, const std::string& x, const std::string& y);
// Join of a nonempty set; absent when some partial join is missing.
std::optional<Elem> join_of(const FinitePoset& p, const Bits& s);

Report is_join_semilattice(const FinitePoset& p);
Report is_lattice(const FinitePoset& p);
std::vector<Elem> lower_covers(const FinitePoset& p, Elem x);
Report is_n_ladder(const FinitePoset& p, int n);
// Same check restricted to a region: joins and meets of region pairs must
// exist in p, and region elements have at most n lower covers in p.
Report is_n_ladder(const FinitePoset& p, int n, const Bits& region);

// Least n such that every (n+1)-subset has an n-subset with the same join.
// Throws PreconditionError when p is not a join-semilattice.
int breadth(const FinitePoset& p);
// Exhaustive check that every (n+1)-subset of region has an n-subset with the
// same join (joins taken in p). Witnesses are the irredundant subsets.
Report breadth_at_most(const FinitePoset& p, int n, const Bits& region);

Report is_ideal(const FinitePoset& p, const Bits& s);
Report is_proper_ideal(const FinitePoset& p, const Bits& s);
Bits ideal_generated(const FinitePoset& p, const Bits& x);
Bits principal_ideal(const FinitePoset& p, Elem x);
// Greatest element of ideal ∩ ↓x.
Elem pi(const FinitePoset& p, const Bits& ideal, Elem x);

Report is_meet_subsemilattice(const FinitePoset& p, const Bits& c);
Report is_cofinal(const FinitePoset& p, const Bits& c);

std::optional<Elem> least_element(const FinitePoset& p);
std::optional<Elem> greatest_element(const FinitePoset& p);
std::vector<Elem> maximal_elements(const FinitePoset& p, const Bits& s);

// Subposet on the members of s, keeping ids.
FinitePoset induced(const FinitePoset& p, const Bits& s);

Bits make_set(const FinitePoset& p, const std::vector<std::string>& ids);
std::vector<std::string> ids_of(const FinitePoset& p, const Bits& s);
std::vector<Elem> members(const Bits& s);

// Transitive reduction as id pairs (a, b) with a covered by b, sorted.
std::vector<IdPair> cover_pairs(const FinitePoset& p);

}  // namespace ladders
