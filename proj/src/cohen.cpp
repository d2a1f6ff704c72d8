#include "ladders/cohen.hpp"

#include <algorithm>

#include "ladders/error.hpp"
#include "ladders/generators.hpp"

namespace ladders {

namespace {

constexpr Elem npos = Bits::npos;

void enumerate(const std::vector<int>& bounds, int n, Node& cur, std::vector<Node>& out) {
    out.push_back(cur);
    if (static_cast<int>(cur.size()) == n) return;
    for (int v = 0; v < bounds[cur.size()]; ++v) {
        cur.push_back(v);
        enumerate(bounds, n, cur, out);
        cur.pop_back();
    }
}

std::vector<std::string> ids(const FinitePoset& p, std::initializer_list<Elem> es) {
    std::vector<std::string> out;
    for (Elem e : es) out.push_back(p.id(e));
    return out;
}

std::string slot_id(const Node& a, int m) { return node_id(a) + "#" + std::to_string(m); }

Node last_replaced(const Node& a, std::size_t i, int value) {
    Node b(a.begin(), a.begin() + static_cast<long>(i));
    b.push_back(value);
    return b;
}

}  // namespace

std::string node_id(const Node& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s + ")";
}

bool lex_less(const Node& a, const Node& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool is_prefix(const Node& a, const Node& b) {
    return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

bool lex_star_less(const Node& a, const Node& b) { return lex_less(a, b) && !is_prefix(a, b); }

IndexTree::IndexTree(int n, std::vector<int> bounds) : n_(n), bounds_(std::move(bounds)) {
    if (n_ < 1) throw PreconditionError("IndexTree: n must be at least 1");
    if (static_cast<int>(bounds_.size()) != n_)
        throw PreconditionError("IndexTree: need one bound per coordinate");
    for (int b : bounds_)
        if (b < 1) throw PreconditionError("IndexTree: bounds must be positive");
    Node cur;
    enumerate(bounds_, n_, cur, nodes_);
    for (const Node& a : nodes_)
        if (maximal(a)) leaves_.push_back(a);
}

bool IndexTree::contains(const Node& a) const {
    if (static_cast<int>(a.size()) > n_) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < 0 || a[i] >= bounds_[i]) return false;
    return true;
}

std::vector<Node> IndexTree::children(const Node& a) const {
    std::vector<Node> out;
    if (maximal(a)) return out;
    for (int v = 0; v < bounds_[a.size()]; ++v) {
        Node c = a;
        c.push_back(v);
        out.push_back(std::move(c));
    }
    return out;
}

IdealFamily::IdealFamily(FinitePoset base, IndexTree tree) : base_(std::move(base)), tree_(std::move(tree)) {
    if (!base_.valid()) throw PreconditionError("IdealFamily: base is not a valid poset");
}

const Bits& IdealFamily::ideal(const Node& a) const {
    auto it = ideals_.find(a);
    if (it == ideals_.end()) throw PreconditionError("IdealFamily: no ideal for node " + node_id(a));
    return it->second;
}

void IdealFamily::set_ideal(const Node& a, Bits ideal) {
    if (!tree_.contains(a)) throw PreconditionError("IdealFamily: " + node_id(a) + " is not a node");
    if (ideal.size() != base_.size()) throw PreconditionError("IdealFamily: ideal has the wrong size");
    ideals_[a] = std::move(ideal);
}

// Nodes without an ideal yet are skipped so that the union can be taken
// while a family is being built.
Bits IdealFamily::lex_star_union(const Node& a) const {
    Bits u = base_.empty_set();
    for (const auto& [b, s] : ideals_) {
        if (!lex_less(b, a)) break;
        if (!is_prefix(b, a)) u |= s;
    }
    return u;
}

Bits IdealFamily::block(const Node& a) const { return ideal(a) - lex_star_union(a); }

Node IdealFamily::leaf_of(Elem x) const {
    for (const Node& a : tree_.leaves())
        if (ideal(a)[x]) return a;
    throw PreconditionError("leaf_of: " + base_.id(x) + " lies in no leaf ideal");
}

Report validate_family(const IdealFamily& fam) {
    const FinitePoset& L = fam.base();
    const IndexTree& T = fam.tree();
    Report r("ideal-family");
    for (const Node& a : T.nodes()) {
        Report ir = is_ideal(L, fam.ideal(a));
        for (const Witness& w : ir.witnesses()) {
            auto el = w.elements;
            el.insert(el.begin(), node_id(a));
            r.fail("not-an-ideal/" + w.claim, el);
        }
    }
    if (!r.passed()) return r;

    if (fam.ideal({}) != L.full_set()) r.fail("(1) root-not-everything");
    for (const Node& a : T.nodes()) {
        if (T.maximal(a)) continue;
        auto kids = T.children(a);
        Bits u = L.empty_set();
        for (const Node& c : kids) u |= fam.ideal(c);
        if (u != fam.ideal(a)) r.fail("(2) not-union-of-children", {node_id(a)});
        for (std::size_t k = 0; k + 1 < kids.size(); ++k)
            if (!fam.ideal(kids[k]).is_subset_of(fam.ideal(kids[k + 1])))
                r.fail("(3) children-not-increasing", {node_id(kids[k]), node_id(kids[k + 1])});
        for (std::size_t k = 0; k + 1 < kids.size(); ++k)
            if (!fam.ideal(kids[k]).is_proper_subset_of(fam.ideal(a)))
                r.fail("(7) child-not-smaller", {node_id(kids[k]), node_id(a)});
    }
    r.note("(4)", "vacuous: no limit coordinates at finite scale");

    for (const Node& g : T.leaves())
        if (fam.block(g).none()) r.fail("(5) empty-block", {node_id(g)});

    for (const Node& a : T.nodes())
        for (const Node& g : T.leaves()) {
            if (!lex_less(g, a)) break;
            if ((fam.ideal(a) & fam.block(g)).any() && !fam.ideal(g).is_subset_of(fam.ideal(a)))
                r.fail("(6) not-absorbed", {node_id(g), node_id(a)});
        }

    Bits seen = L.empty_set();
    for (const Node& g : T.leaves()) {
        Bits b = fam.block(g);
        if ((seen & b).any()) r.fail("partition-overlap", {node_id(g)});
        seen |= b;
    }
    if (seen != L.full_set()) r.fail("partition-not-covering", ids_of(L, L.full_set() - seen));
    if (!r.passed()) return r;

    std::vector<Node> leaf(L.size());
    for (Elem x = 0; x < L.size(); ++x) leaf[x] = fam.leaf_of(x);
    for (Elem x = 0; x < L.size(); ++x)
        for (Elem y = L.up(x).find_first(); y != npos; y = L.up(x).find_next(y)) {
            if (lex_less(leaf[y], leaf[x]))
                r.fail("order-compat/lex", ids(L, {x, y}));
            else if (!fam.ideal(leaf[x]).is_subset_of(fam.ideal(leaf[y])))
                r.fail("order-compat/ideal", ids(L, {x, y}));
        }
    return r;
}

bool Condition::extends(const Condition& p) const {
    for (const auto& [k, v] : p.values) {
        auto it = values.find(k);
        if (it == values.end() || it->second != v) return false;
    }
    return true;
}

void check_condition(const IdealFamily& fam, const Condition& p) {
    const IndexTree& T = fam.tree();
    for (const auto& [k, v] : p.values) {
        const auto& [a, m] = k;
        if (!T.contains(a) || !T.maximal(a))
            throw PreconditionError("malformed condition: " + node_id(a) + " is not a length-n node");
        if (m < 0) throw PreconditionError("malformed condition: negative slot at " + node_id(a));
        if (v >= fam.base().size()) throw PreconditionError("malformed condition: value out of range");
        if (!fam.block(a)[v])
            throw PreconditionError("malformed condition: " + fam.base().id(v) + " at " + slot_id(a, m) +
                                    " is outside the block");
    }
}

Bits c_of(const IdealFamily& fam, const Condition& p) {
    check_condition(fam, p);
    const FinitePoset& L = fam.base();
    const IndexTree& T = fam.tree();
    Bits c = L.empty_set();
    for (const Node& a : T.leaves()) {
        std::vector<Node> earlier;
        for (const Node& g : T.nodes())
            if (lex_star_less(g, a)) earlier.push_back(g);
        std::vector<Elem> prefix;
        for (int m = 0; p.defined(a, m); ++m) {
            const Elem x = p.at(a, m);
            prefix.push_back(x);
            // (b): every earlier slot is defined (the loop stops at the first
            // gap) and carries a value below x.
            bool ok = std::all_of(prefix.begin(), prefix.end(), [&](Elem v) { return L.leq(v, x); });
            // (c): the projections land in earlier blocks, which are settled.
            for (std::size_t i = 0; ok && i < earlier.size(); ++i)
                ok = c[pi(L, fam.ideal(earlier[i]), x)];
            if (ok) c.set(x);
        }
    }
    return c;
}

DensityResult density_extend(const IdealFamily& fam, const Condition& p, Elem x) {
    check_condition(fam, p);
    const FinitePoset& L = fam.base();
    if (x >= L.size()) throw PreconditionError("density_extend: element out of range");

    Condition q = p;
    std::map<Node, int> top;  // one past the largest filled slot
    for (const auto& [k, v] : p.values) top[k.first] = std::max(top[k.first], k.second + 1);
    for (const auto& [a, end] : top) {
        const Bits blk = fam.block(a);
        Elem least = npos;
        for (Elem e : L.linear_order())
            if (blk[e]) {
                least = e;
                break;
            }
        for (int m = 0; m < end; ++m)
            if (!q.defined(a, m)) q.values[{a, m}] = least;
    }

    Elem y = x;
    for (const auto& [k, v] : q.values) {
        auto j = L.join(y, v);
        if (!j) throw PreconditionError("density_extend: base has no join of " + L.id(y) + " and " + L.id(v));
        y = *j;
    }

    std::vector<Node> reached;
    for (Elem z = L.down(y).find_first(); z != npos; z = L.down(y).find_next(z)) {
        Node a = fam.leaf_of(z);
        if (std::find(reached.begin(), reached.end(), a) == reached.end()) reached.push_back(std::move(a));
    }
    for (const Node& a : reached) {
        const int slot = top.count(a) ? top[a] : 0;
        q.values[{a, slot}] = pi(L, fam.ideal(a), y);
    }
    return {std::move(q), y};
}

Condition common_extension(const IdealFamily& fam, const std::vector<Condition>& conditions) {
    Condition u;
    for (const Condition& p : conditions) {
        check_condition(fam, p);
        for (const auto& [k, v] : p.values) {
            auto [it, inserted] = u.values.emplace(k, v);
            if (!inserted && it->second != v)
                throw PreconditionError("incompatible conditions at " + slot_id(k.first, k.second));
        }
    }
    return u;
}

Report filter_union_checks(const IdealFamily& fam, const std::vector<Condition>& conditions) {
    const FinitePoset& L = fam.base();
    const IndexTree& T = fam.tree();
    const int n = T.n();
    const Condition g = common_extension(fam, conditions);
    const Bits cg = c_of(fam, g);

    Report r("filter-union");
    r.note("c-size", std::to_string(cg.count()));

    std::vector<Bits> cs;
    for (const Condition& p : conditions) cs.push_back(c_of(fam, p));
    for (std::size_t i = 0; i < conditions.size(); ++i) {
        if (!cs[i].is_subset_of(cg)) r.fail("not-inside-union", {std::to_string(i)});
        for (std::size_t j = 0; j < conditions.size(); ++j)
            if (i != j && conditions[j].extends(conditions[i]) && !cs[i].is_subset_of(cs[j]))
                r.fail("not-monotone", {std::to_string(i), std::to_string(j)});
    }

    r.absorb(is_meet_subsemilattice(L, cg));

    for (Elem x = cg.find_first(); x != npos; x = cg.find_next(x)) {
        const Node a = fam.leaf_of(x);
        Bits s = L.empty_set();
        for (int i = 0; i < n; ++i)
            if (a[i] > 0) s.set(pi(L, fam.ideal(last_replaced(a, i, a[i] - 1)), x));
        Bits same = cg & fam.block(a) & L.down(x);
        same.reset(x);
        Elem c0 = npos;
        for (Elem e = same.find_first(); e != npos; e = same.find_next(e))
            if (c0 == npos || L.leq(c0, e)) c0 = e;
        if (c0 != npos) s.set(c0);

        for (Elem e = s.find_first(); e != npos; e = s.find_next(e)) {
            if (!cg[e]) r.fail("projection-outside-c", ids(L, {x, e}));
            if (!L.lt(e, x)) r.fail("projection-not-below", ids(L, {x, e}));
        }
        Bits below = cg & L.down(x);
        below.reset(x);
        for (Elem y = below.find_first(); y != npos; y = below.find_next(y))
            if ((L.up(y) & s).none()) r.fail("projection-not-dominating", ids(L, {x, y}));

        std::size_t covers = 0;
        for (Elem y = below.find_first(); y != npos; y = below.find_next(y))
            if ((below & L.up(y)).count() == 1) ++covers;
        if (covers > static_cast<std::size_t>(n + 1)) r.fail("too-many-covers", {L.id(x)});
    }
    return r;
}

std::optional<IdealFamily> random_family(Rng& rng, int n, const std::vector<int>& bounds, int max_base) {
    Rng local = rng.substream("cohen-family");
    IdealFamily fam(random_lattice(local, max_base), IndexTree(n, bounds));
    const FinitePoset& L = fam.base();
    const IndexTree& T = fam.tree();
    fam.set_ideal({}, L.full_set());

    // Close under absorbing the ideals of lex-smaller leaves whose block the
    // current set meets.
    auto closure = [&](const Node& a, const Bits& seed) {
        Bits f = ideal_generated(L, seed);
        for (bool grew = true; grew;) {
            grew = false;
            Bits g = f;
            for (const Node& leaf : T.leaves()) {
                if (!lex_less(leaf, a)) break;
                if ((f & fam.block(leaf)).any()) g |= fam.ideal(leaf);
            }
            if (g != f) {
                f = ideal_generated(L, g);
                grew = true;
            }
        }
        return f;
    };

    for (const Node& a : T.nodes()) {
        if (a.empty()) continue;
        const Node parent(a.begin(), a.end() - 1);
        const Bits& up = fam.ideal(parent);
        const int k = a.back();
        if (k == bounds[a.size() - 1] - 1) {
            fam.set_ideal(a, up);
            continue;
        }
        Bits base = L.empty_set();
        Bits cand;
        if (k == 0) {
            cand = up - fam.lex_star_union(a);
        } else {
            const Bits& prev = fam.ideal(last_replaced(a, a.size() - 1, k - 1));
            cand = up - prev - fam.lex_star_union(parent);
            base = prev;
            for (Elem e : L.linear_order())
                if (up[e] && !prev[e]) {
                    base.set(e);
                    break;
                }
        }
        // Candidates in random order; the first whose closure stays strictly
        // inside the parent wins.
        std::vector<Elem> order = members(cand);
        std::shuffle(order.begin(), order.end(), local.engine());
        std::optional<Bits> chosen;
        for (Elem z : order) {
            Bits seed = base;
            seed.set(z);
            Bits f = closure(a, seed);
            if (f.is_proper_subset_of(up)) {
                chosen = std::move(f);
                break;
            }
        }
        if (!chosen) return std::nullopt;
        fam.set_ideal(a, std::move(*chosen));
    }
    if (!validate_family(fam).passed()) return std::nullopt;
    return fam;
}

}  // namespace ladders
