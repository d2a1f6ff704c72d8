#include "ladders/poset.hpp"

#include <algorithm>
#include <functional>

#include "ladders/error.hpp"

namespace ladders {

namespace {

constexpr auto npos = Bits::npos;

void require_valid(const FinitePoset& p, const char* op) {
    if (!p.valid()) throw PreconditionError(std::string(op) + ": poset is not validated");
}

}  // namespace

FinitePoset::FinitePoset(std::vector<std::string> ids) : ids_(std::move(ids)) {
    for (Elem i = 0; i < ids_.size(); ++i)
        if (!index_.emplace(ids_[i], i).second) throw ParseError("duplicate element id: " + ids_[i]);
    up_.assign(ids_.size(), Bits(ids_.size()));
    down_.assign(ids_.size(), Bits(ids_.size()));
}

FinitePoset FinitePoset::from_leq(std::vector<std::string> ids, const std::vector<IdPair>& pairs) {
    FinitePoset p(std::move(ids));
    for (const auto& [a, b] : pairs) p.set(p.index(a), p.index(b));
    p.finalize();
    return p;
}

FinitePoset FinitePoset::from_covers(std::vector<std::string> ids, const std::vector<IdPair>& pairs) {
    FinitePoset p(std::move(ids));
    const std::size_t n = p.size();
    for (Elem i = 0; i < n; ++i) p.up_[i].set(i);
    for (const auto& [a, b] : pairs) p.up_[p.index(a)].set(p.index(b));
    for (Elem k = 0; k < n; ++k)
        for (Elem i = 0; i < n; ++i)
            if (p.up_[i][k]) p.up_[i] |= p.up_[k];
    for (Elem i = 0; i < n; ++i)
        for (Elem j = p.up_[i].find_first(); j != npos; j = p.up_[i].find_next(j)) p.down_[j].set(i);
    p.finalize();
    return p;
}

Elem FinitePoset::index(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw UnknownElement(id);
    return it->second;
}

std::optional<Elem> FinitePoset::find(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

void FinitePoset::finalize() {
    const std::size_t n = size();
    valid_ = true;
    for (Elem i = 0; i < n && valid_; ++i) {
        if (!up_[i][i]) valid_ = false;
        for (Elem j = up_[i].find_first(); valid_ && j != npos; j = up_[i].find_next(j)) {
            if (j != i && up_[j][i]) valid_ = false;
            if (!up_[j].is_subset_of(up_[i])) valid_ = false;
        }
    }
    if (!valid_) return;

    order_.resize(n);
    for (Elem i = 0; i < n; ++i) order_[i] = i;
    std::vector<std::size_t> below(n);
    for (Elem i = 0; i < n; ++i) below[i] = down_[i].count();
    std::sort(order_.begin(), order_.end(), [&](Elem a, Elem b) {
        if (below[a] != below[b]) return below[a] < below[b];
        return ids_[a] < ids_[b];
    });
    pos_.assign(n, 0);
    for (std::size_t k = 0; k < n; ++k) pos_[order_[k]] = k;
    up_by_pos_.assign(n, Bits(n));
    down_by_rpos_.assign(n, Bits(n));
    for (Elem i = 0; i < n; ++i) {
        for (Elem j = up_[i].find_first(); j != npos; j = up_[i].find_next(j)) up_by_pos_[i].set(pos_[j]);
        for (Elem j = down_[i].find_first(); j != npos; j = down_[i].find_next(j))
            down_by_rpos_[i].set(n - 1 - pos_[j]);
    }

    covers_.assign(n, {});
    for (Elem x = 0; x < n; ++x) {
        Bits strict = down_[x];
        strict.reset(x);
        for (Elem c = strict.find_first(); c != npos; c = strict.find_next(c))
            if ((up_[c] & strict).count() == 1) covers_[x].push_back(c);
    }
}

std::optional<Elem> FinitePoset::join(Elem a, Elem b) const {
    Bits ub = up_by_pos_[a] & up_by_pos_[b];
    std::size_t k = ub.find_first();
    if (k == npos) return std::nullopt;
    Elem c = order_[k];
    if (!ub.is_subset_of(up_by_pos_[c])) return std::nullopt;
    return c;
}

std::optional<Elem> FinitePoset::meet(Elem a, Elem b) const {
    Bits lb = down_by_rpos_[a] & down_by_rpos_[b];
    std::size_t k = lb.find_first();
    if (k == npos) return std::nullopt;
    Elem c = order_[size() - 1 - k];
    if (!lb.is_subset_of(down_by_rpos_[c])) return std::nullopt;
    return c;
}

Report validate_poset(const FinitePoset& p) {
    Report r("poset");
    const std::size_t n = p.size();
    for (Elem a = 0; a < n; ++a)
        if (!p.leq(a, a)) r.fail("reflexivity", {p.id(a)});
    for (Elem a = 0; a < n; ++a)
        for (Elem b = a + 1; b < n; ++b)
            if (p.leq(a, b) && p.leq(b, a)) r.fail("antisymmetry", {p.id(a), p.id(b)});
    for (Elem a = 0; a < n; ++a)
        for (Elem b = p.up(a).find_first(); b != npos; b = p.up(a).find_next(b)) {
            Bits missing = p.up(b) - p.up(a);
            for (Elem c = missing.find_first(); c != npos; c = missing.find_next(c))
                r.fail("transitivity", {p.id(a), p.id(b), p.id(c)});
        }
    return r;
}

std::optional<Elem> join(const FinitePoset& p, Elem x, Elem y) {
    require_valid(p, "join");
    return p.join(x, y);
}

std::optional<Elem> meet(const FinitePoset& p, Elem x, Elem y) {
    require_valid(p, "meet");
    return p.meet(x, y);
}

std::optional<std::string> join(const FinitePoset& p, const std::string& x, const std::string& y) {
    auto j = join(p, p.index(x), p.index(y));
    if (!j) return std::nullopt;
    return p.id(*j);
}

std::optional<std::string> meet(const FinitePoset& p, const std::string& x, const std::string& y) {
    auto m = meet(p, p.index(x), p.index(y));
    if (!m) return std::nullopt;
    return p.id(*m);
}

std::optional<Elem> join_of(const FinitePoset& p, const Bits& s) {
    require_valid(p, "join_of");
    std::size_t i = s.find_first();
    if (i == npos) return std::nullopt;
    std::optional<Elem> acc = i;
    for (i = s.find_next(i); i != npos && acc; i = s.find_next(i)) acc = p.join(*acc, i);
    return acc;
}

Report is_join_semilattice(const FinitePoset& p) {
    require_valid(p, "is_join_semilattice");
    Report r("join-semilattice");
    for (Elem a = 0; a < p.size(); ++a)
        for (Elem b = a + 1; b < p.size(); ++b)
            if (!p.join(a, b)) r.fail("join-absent", {p.id(a), p.id(b)});
    return r;
}

Report is_lattice(const FinitePoset& p) {
    require_valid(p, "is_lattice");
    Report r("lattice");
    for (Elem a = 0; a < p.size(); ++a)
        for (Elem b = a + 1; b < p.size(); ++b) {
            if (!p.join(a, b)) r.fail("join-absent", {p.id(a), p.id(b)});
            if (!p.meet(a, b)) r.fail("meet-absent", {p.id(a), p.id(b)});
        }
    return r;
}

std::vector<Elem> lower_covers(const FinitePoset& p, Elem x) {
    require_valid(p, "lower_covers");
    return p.covers(x);
}

Report is_n_ladder(const FinitePoset& p, int n) {
    require_valid(p, "is_n_ladder");
    Report r(std::to_string(n) + "-ladder");
    r.absorb(is_lattice(p));
    for (Elem x = 0; x < p.size(); ++x)
        if (static_cast<int>(p.covers(x).size()) > n)
            r.fail("too-many-lower-covers", {p.id(x), std::to_string(p.covers(x).size())});
    return r;
}

Report is_n_ladder(const FinitePoset& p, int n, const Bits& region) {
    require_valid(p, "is_n_ladder");
    Report r(std::to_string(n) + "-ladder");
    for (Elem a = region.find_first(); a != npos; a = region.find_next(a)) {
        for (Elem b = region.find_next(a); b != npos; b = region.find_next(b)) {
            if (!p.join(a, b)) r.fail("join-absent", {p.id(a), p.id(b)});
            if (!p.meet(a, b)) r.fail("meet-absent", {p.id(a), p.id(b)});
        }
        if (static_cast<int>(p.covers(a).size()) > n)
            r.fail("too-many-lower-covers", {p.id(a), std::to_string(p.covers(a).size())});
    }
    return r;
}

int breadth(const FinitePoset& p) {
    require_valid(p, "breadth");
    Report js = is_join_semilattice(p);
    if (!js) throw PreconditionError("breadth: not a join-semilattice", js);
    if (p.empty()) return 1;

    // A subset with no proper subset of the same join is irredundant; such
    // sets are closed under subsets, so those of size k+1 extend those of
    // size k. Breadth is the largest size reached.
    struct Irredundant {
        std::vector<Elem> elems;
        Elem top;
    };
    auto is_irredundant = [&](const std::vector<Elem>& xs, Elem top) {
        for (std::size_t skip = 0; skip < xs.size(); ++skip) {
            std::optional<Elem> acc;
            for (std::size_t i = 0; i < xs.size(); ++i) {
                if (i == skip) continue;
                acc = acc ? p.join(*acc, xs[i]) : std::optional<Elem>(xs[i]);
            }
            if (acc && *acc == top) return false;
        }
        return true;
    };
    std::vector<Irredundant> level;
    for (Elem x = 0; x < p.size(); ++x) level.push_back({{x}, x});
    int n = 1;
    for (;;) {
        std::vector<Irredundant> next;
        for (const auto& s : level)
            for (Elem t = s.elems.back() + 1; t < p.size(); ++t) {
                Elem top = *p.join(s.top, t);
                if (top == s.top) continue;
                std::vector<Elem> xs = s.elems;
                xs.push_back(t);
                if (is_irredundant(xs, top)) next.push_back({std::move(xs), top});
            }
        if (next.empty()) return n;
        ++n;
        level = std::move(next);
    }
}

Report breadth_at_most(const FinitePoset& p, int n, const Bits& region) {
    require_valid(p, "breadth_at_most");
    Report r("breadth<=" + std::to_string(n));
    const std::vector<Elem> pool = members(region);
    const std::size_t k = static_cast<std::size_t>(n) + 1;
    if (pool.size() < k) return r;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    std::vector<Elem> xs(k);
    for (;;) {
        for (std::size_t i = 0; i < k; ++i) xs[i] = pool[idx[i]];
        std::optional<Elem> top = xs[0];
        for (std::size_t i = 1; i < k && top; ++i) top = p.join(*top, xs[i]);
        std::vector<std::string> names;
        for (Elem x : xs) names.push_back(p.id(x));
        if (!top) {
            r.fail("join-absent", names);
        } else {
            bool reduced = false;
            for (std::size_t skip = 0; skip < k && !reduced; ++skip) {
                std::optional<Elem> acc;
                for (std::size_t i = 0; i < k; ++i) {
                    if (i == skip) continue;
                    acc = acc ? p.join(*acc, xs[i]) : std::optional<Elem>(xs[i]);
                    if (!acc) break;
                }
                reduced = acc && *acc == *top;
            }
            if (!reduced) r.fail("irredundant-subset", names);
        }
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == pool.size() - k + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return r;
}

Report is_ideal(const FinitePoset& p, const Bits& s) {
    require_valid(p, "is_ideal");
    Report r("ideal");
    if (s.none()) {
        r.fail("empty");
        return r;
    }
    for (Elem x = s.find_first(); x != npos; x = s.find_next(x)) {
        Bits outside = p.down(x) - s;
        for (Elem y = outside.find_first(); y != npos; y = outside.find_next(y))
            r.fail("not-downward-closed", {p.id(x), p.id(y)});
    }
    for (Elem a = s.find_first(); a != npos; a = s.find_next(a))
        for (Elem b = s.find_next(a); b != npos; b = s.find_next(b))
            if (!(p.up(a) & p.up(b) & s).any()) r.fail("not-directed", {p.id(a), p.id(b)});
    return r;
}

Report is_proper_ideal(const FinitePoset& p, const Bits& s) {
    Report r = is_ideal(p, s);
    r.set_title("proper-ideal");
    if (s.count() == p.size()) r.fail("not-proper");
    return r;
}

Bits ideal_generated(const FinitePoset& p, const Bits& x) {
    require_valid(p, "ideal_generated");
    if (x.none()) throw PreconditionError("ideal_generated: empty generating set");
    Bits joins = x;
    for (bool grew = true; grew;) {
        grew = false;
        for (Elem a = joins.find_first(); a != npos; a = joins.find_next(a))
            for (Elem b = joins.find_next(a); b != npos; b = joins.find_next(b)) {
                auto j = p.join(a, b);
                if (!j) {
                    Report r("join-semilattice");
                    r.fail("join-absent", {p.id(a), p.id(b)});
                    throw PreconditionError("ideal_generated: join absent", r);
                }
                if (!joins[*j]) {
                    joins.set(*j);
                    grew = true;
                }
            }
    }
    Bits out = p.empty_set();
    for (Elem a = joins.find_first(); a != npos; a = joins.find_next(a)) out |= p.down(a);
    return out;
}

Bits principal_ideal(const FinitePoset& p, Elem x) { return p.down(x); }

Elem pi(const FinitePoset& p, const Bits& ideal, Elem x) {
    require_valid(p, "pi");
    Bits below = ideal & p.down(x);
    for (Elem m = below.find_first(); m != npos; m = below.find_next(m))
        if (below.is_subset_of(p.down(m))) return m;
    throw PreconditionError("pi: ideal meets the principal ideal of " + p.id(x) + " without a greatest element");
}

Report is_meet_subsemilattice(const FinitePoset& p, const Bits& c) {
    require_valid(p, "is_meet_subsemilattice");
    Report r("meet-subsemilattice");
    for (Elem a = c.find_first(); a != npos; a = c.find_next(a))
        for (Elem b = c.find_next(a); b != npos; b = c.find_next(b)) {
            auto m = p.meet(a, b);
            if (!m)
                r.fail("meet-absent", {p.id(a), p.id(b)});
            else if (!c[*m])
                r.fail("meet-outside", {p.id(a), p.id(b), p.id(*m)});
        }
    return r;
}

Report is_cofinal(const FinitePoset& p, const Bits& c) {
    require_valid(p, "is_cofinal");
    Report r("cofinal");
    for (Elem x = 0; x < p.size(); ++x)
        if (!p.up(x).intersects(c)) r.fail("not-dominated", {p.id(x)});
    return r;
}

std::optional<Elem> least_element(const FinitePoset& p) {
    for (Elem x = 0; x < p.size(); ++x)
        if (p.up(x).count() == p.size()) return x;
    return std::nullopt;
}

std::optional<Elem> greatest_element(const FinitePoset& p) {
    for (Elem x = 0; x < p.size(); ++x)
        if (p.down(x).count() == p.size()) return x;
    return std::nullopt;
}

std::vector<Elem> maximal_elements(const FinitePoset& p, const Bits& s) {
    std::vector<Elem> out;
    for (Elem x = s.find_first(); x != npos; x = s.find_next(x))
        if ((p.up(x) & s).count() == 1) out.push_back(x);
    return out;
}

FinitePoset induced(const FinitePoset& p, const Bits& s) {
    std::vector<Elem> keep = members(s);
    std::vector<std::string> ids;
    for (Elem x : keep) ids.push_back(p.id(x));
    return FinitePoset::from_relation(std::move(ids), [&](Elem i, Elem j) { return p.leq(keep[i], keep[j]); });
}

Bits make_set(const FinitePoset& p, const std::vector<std::string>& ids) {
    Bits out = p.empty_set();
    for (const auto& id : ids) out.set(p.index(id));
    return out;
}

std::vector<std::string> ids_of(const FinitePoset& p, const Bits& s) {
    std::vector<std::string> out;
    for (Elem x = s.find_first(); x != npos; x = s.find_next(x)) out.push_back(p.id(x));
    return out;
}

std::vector<Elem> members(const Bits& s) {
    std::vector<Elem> out;
    for (Elem x = s.find_first(); x != npos; x = s.find_next(x)) out.push_back(x);
    return out;
}

std::vector<IdPair> cover_pairs(const FinitePoset& p) {
    require_valid(p, "cover_pairs");
    std::vector<IdPair> out;
    for (Elem x = 0; x < p.size(); ++x)
        for (Elem c : p.covers(x)) out.emplace_back(p.id(c), p.id(x));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ladders
