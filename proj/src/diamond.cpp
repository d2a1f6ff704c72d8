#include "ladders/diamond.hpp"

#include <algorithm>

#include "ladders/error.hpp"

namespace ladders {

namespace {

constexpr Elem npos = Bits::npos;

const char* mark_name(Mark a) {
    switch (a) {
        case Mark::bottom: return "b";
        case Mark::zero: return "0";
        case Mark::one: return "1";
    }
    return "?";
}

std::vector<Elem> elements_of(const Bits& s) {
    std::vector<Elem> out;
    for (Elem e = s.find_first(); e != npos; e = s.find_next(e)) out.push_back(e);
    return out;
}

// Lower covers of z inside the set c.
std::vector<Elem> covers_within(const FinitePoset& p, const Bits& c, Elem z) {
    Bits below = c & p.down(z);
    below.reset(z);
    std::vector<Elem> out;
    for (Elem y = below.find_first(); y != npos; y = below.find_next(y))
        if ((below & p.up(y)).count() == 1) out.push_back(y);
    return out;
}

}  // namespace

bool d_leq(const DPoint& x, const DPoint& y) {
    if (x == y) return true;
    if (x.n > y.n) return false;
    return x.a == Mark::bottom || x.n < y.n;
}

std::string DiamondPoint::id() const {
    return "(" + std::to_string(level) + "," + std::to_string(d.n) + "," + mark_name(d.a) + ")";
}

std::string TreeNode::id() const { return "t" + std::to_string(level) + "." + std::to_string(index); }

long pair_index(int n, int m) {
    const long s = static_cast<long>(n) + m;
    return s * (s + 1) / 2 + m;
}

std::pair<int, int> unpair(long k) {
    long s = 0;
    while ((s + 1) * (s + 2) / 2 <= k) ++s;
    const long m = k - s * (s + 1) / 2;
    return {static_cast<int>(s - m), static_cast<int>(m)};
}

DiamondState DiamondState::base(int width) {
    if (width < 1) throw WindowExceeded("diamond: width must be at least 1");
    DiamondState st;
    st.width_ = width;
    st.add_level();
    std::vector<std::vector<Elem>> labels;
    for (int n = 0; n < width; ++n) {
        std::vector<Elem> g;
        for (int m = n; m < width; ++m) g.push_back(st.index_of(0, m, Mark::bottom));
        g.push_back(st.index_of(0, n, n % 2 == 0 ? Mark::zero : Mark::one));
        std::sort(g.begin(), g.end());
        labels.push_back(std::move(g));
    }
    st.gamma_.push_back(std::move(labels));
    return st;
}

void DiamondState::add_level() {
    const int level = levels_;
    const Elem old = points_.size();
    for (int n = 0; n < width_; ++n)
        for (Mark a : {Mark::bottom, Mark::zero, Mark::one}) points_.push_back({level, {n, a}});
    std::vector<std::string> ids;
    for (const auto& pt : points_) ids.push_back(pt.id());
    const FinitePoset prev = order_;
    const auto& pts = points_;
    // Points of the new level sit over p_n = (level-1, n, ⊥).
    order_ = FinitePoset::from_relation(std::move(ids), [&](Elem a, Elem b) {
        if (a < old && b < old) return prev.leq(a, b);
        if (b < old) return false;
        if (a >= old) return d_leq(pts[a].d, pts[b].d);
        return prev.leq(a, index_of(level - 1, pts[b].d.n, Mark::bottom));
    });
    ++levels_;
}

Elem DiamondState::index_of(const DiamondPoint& p) const {
    if (p.level < 0 || p.level >= levels_ || p.d.n < 0 || p.d.n >= width_) throw UnknownElement(p.id());
    return static_cast<Elem>(p.level) * 3 * static_cast<Elem>(width_) + 3 * static_cast<Elem>(p.d.n) +
           static_cast<Elem>(p.d.a);
}

Bits DiamondState::ideal(int level) const {
    Bits s(points_.size());
    for (Elem e = 0; e < points_.size(); ++e)
        if (points_[e].level < level) s.set(e);
    return s;
}

Bits DiamondState::interior() const { return order_.down(index_of(levels_ - 1, width_ - 1, Mark::bottom)); }

const std::vector<Elem>& DiamondState::gamma(const TreeNode& x) const {
    if (x.level < 0 || x.level >= levels_ || x.index < 0 || x.index >= width_) throw UnknownElement(x.id());
    return gamma_[static_cast<std::size_t>(x.level)][static_cast<std::size_t>(x.index)];
}

Bits DiamondState::gamma_set(const TreeNode& x) const {
    Bits s(points_.size());
    for (Elem e : gamma(x)) s.set(e);
    return s;
}

std::vector<TreeNode> DiamondState::children(const TreeNode& x) const {
    std::vector<TreeNode> out;
    if (x.level + 1 >= levels_) return out;
    for (int m = 0; pair_index(x.index, m) < width_; ++m)
        out.push_back({x.level + 1, static_cast<int>(pair_index(x.index, m))});
    return out;
}

TreeNode DiamondState::parent(const TreeNode& x) const {
    if (x.level < 1) throw PreconditionError("diamond: root nodes have no parent");
    return {x.level - 1, unpair(x.index).first};
}

int DiamondState::threshold(const TreeNode& x) const {
    const auto g = gamma_set(x);
    int h = width_;
    while (h > 0 && g[index_of(x.level, h - 1, Mark::bottom)]) --h;
    return h;
}

std::vector<DPoint> DiamondState::label_targets(int h) const {
    std::vector<DPoint> out;
    for (int r = width_ - 1; r >= h; --r) {
        out.push_back({r, Mark::zero});
        out.push_back({r, Mark::one});
    }
    return out;
}

DiamondState DiamondState::successor_extend() const {
    DiamondState st = *this;
    const int level = levels_;
    st.add_level();
    std::vector<std::vector<Elem>> labels;
    for (int k = 0; k < width_; ++k) {
        const auto [n, m] = unpair(k);
        const TreeNode up{level - 1, n};
        const int h = threshold(up);
        const auto targets = label_targets(h);
        if (targets.empty())
            throw WindowExceeded("diamond: label of " + up.id() + " has no tail of bottoms inside width " +
                                 std::to_string(width_));
        std::vector<Elem> g = gamma(up);
        for (int r = h; r < width_; ++r) g.push_back(st.index_of(level, r, Mark::bottom));
        const DPoint f = targets[static_cast<std::size_t>(m) % targets.size()];
        g.push_back(st.index_of({level, f}));
        std::sort(g.begin(), g.end());
        labels.push_back(std::move(g));
    }
    st.gamma_.push_back(std::move(labels));
    return st;
}

DiamondState DiamondState::with_gamma(const TreeNode& x, std::vector<Elem> label) const {
    gamma(x);
    DiamondState st = *this;
    std::sort(label.begin(), label.end());
    st.gamma_[static_cast<std::size_t>(x.level)][static_cast<std::size_t>(x.index)] = std::move(label);
    return st;
}

DiamondState successor_extend(const DiamondState& state, int level) {
    if (level != state.levels())
        throw PreconditionError("diamond: level " + std::to_string(level) + " is not the next level (" +
                                std::to_string(state.levels()) + ")");
    return state.successor_extend();
}

DiamondState build_diamond(int stages, int width) {
    if (stages < 0) throw PreconditionError("diamond: negative stage count");
    DiamondState st = DiamondState::base(width);
    for (int a = 1; a <= stages; ++a) st = successor_extend(st, a);
    return st;
}

Report check_properties(const DiamondState& state) {
    Report r("diamond properties");
    r.note("level-0 labels", "seeded: node n gets (0,m,b) for m >= n and (0,n,n mod 2)");
    r.note("(5)", "not evaluated");
    r.note("(7)", "not evaluated");
    const auto& p = state.order();
    if (!p.valid()) {
        r.fail("not-a-poset");
        return r;
    }
    const int w = state.width();
    const Bits inner = state.interior();
    const auto inner_elems = elements_of(inner);
    auto count_before = r.failure_count();
    auto tally = [&](const std::string& prop) {
        r.note(prop + " failures", std::to_string(r.failure_count() - count_before));
        count_before = r.failure_count();
    };

    for (std::size_t a = 0; a < inner_elems.size(); ++a)
        for (std::size_t b = a + 1; b < inner_elems.size(); ++b) {
            Elem x = inner_elems[a], y = inner_elems[b];
            auto j = p.join(x, y);
            if (!j || !inner[*j]) r.fail("(1) join-absent", {p.id(x), p.id(y)});
            if (!p.meet(x, y)) r.fail("(1) meet-absent", {p.id(x), p.id(y)});
        }
    tally("(1)");

    for (int a = 1; a < state.levels(); ++a) {
        const Bits k = state.ideal(a);
        for (Elem x = k.find_first(); x != npos; x = k.find_next(x))
            if (!p.down(x).is_subset_of(k)) r.fail("(2) not-down-closed", {std::to_string(a), p.id(x)});
        const Bits ki = k & inner;
        for (Elem x = ki.find_first(); x != npos; x = ki.find_next(x))
            for (Elem y = ki.find_next(x); y != npos; y = ki.find_next(y))
                if (!(p.up(x) & p.up(y) & k).any()) r.fail("(2) not-directed", {std::to_string(a), p.id(x), p.id(y)});
    }
    tally("(2)");

    for (Elem x = 0; x < state.size(); ++x)
        for (Elem y = 0; y < state.size(); ++y) {
            const auto &px = state.point(x), &py = state.point(y);
            if (px.level == py.level && p.leq(x, y) != d_leq(px.d, py.d)) r.fail("(3) level-order", {p.id(x), p.id(y)});
        }
    tally("(3)");

    for (Elem y = 0; y < state.size(); ++y) {
        const auto& py = state.point(y);
        const Elem base = state.index_of(py.level, py.d.n, Mark::bottom);
        const Bits k = state.ideal(py.level) & p.down(y);
        if (!k.is_subset_of(p.down(base))) r.fail("(4) below-not-under-bottom", {p.id(y)});
    }
    tally("(4)");

    for (int a = 1; a < state.levels(); ++a)
        for (int k = 0; k < w; ++k) {
            const TreeNode x{a, k};
            const TreeNode up = state.parent(x);
            if (up.index >= w) r.fail("(6) parent-outside-window", {x.id()});
            const auto ch = state.children(up);
            if (std::find(ch.begin(), ch.end(), x) == ch.end()) r.fail("(6) edge-mismatch", {x.id(), up.id()});
        }
    tally("(6)");

    std::vector<TreeNode> nodes;
    for (int a = 0; a < state.levels(); ++a)
        for (int k = 0; k < w; ++k) nodes.push_back({a, k});

    for (const auto& x : nodes)
        for (Elem z : state.gamma(x))
            if (state.point(z).level > x.level) r.fail("(8) above-height", {x.id(), p.id(z)});
    tally("(8)");

    for (const auto& x : nodes) {
        const Bits g = state.gamma_set(x);
        for (Elem z : state.gamma(x)) {
            const int lz = state.point(z).level;
            if (lz == 0) continue;
            const Elem proj = pi(p, state.ideal(lz), z);
            if (!g[proj]) r.fail("(9) projection-missing", {x.id(), p.id(z), p.id(proj)});
        }
    }
    tally("(9)");

    for (const auto& x : nodes) {
        const Bits g = state.gamma_set(x);
        for (int a = 0; a <= x.level; ++a)
            if (!g[state.index_of(a, w - 1, Mark::bottom)]) r.fail("(10) no-bottom-tail", {x.id(), std::to_string(a)});
    }
    tally("(10)");

    for (const auto& x : nodes) {
        const Bits g = state.gamma_set(x);
        for (int a = 0; a <= x.level; ++a)
            for (int n = 0; n < w; ++n)
                if (g[state.index_of(a, n, Mark::zero)] && g[state.index_of(a, n, Mark::one)])
                    r.fail("(11) both-marks", {x.id(), state.point(state.index_of(a, n, Mark::zero)).id()});
    }
    tally("(11)");

    for (int a = 1; a < state.levels(); ++a)
        for (int k = 0; k < w; ++k) {
            const TreeNode x{a, k};
            if (!state.gamma_set(state.parent(x)).is_subset_of(state.gamma_set(x)))
                r.fail("(12) label-shrinks", {state.parent(x).id(), x.id()});
        }
    tally("(12)");

    // (13): the marks reachable through the children of x cover every rung
    // from some threshold to the top; needs at least two children in the window.
    long narrow = 0;
    for (int a = 1; a < state.levels(); ++a)
        for (int k = 0; k < w; ++k) {
            const TreeNode x{a - 1, k};
            const auto ch = state.children(x);
            Bits reach(state.size());
            for (const auto& y : ch) reach |= state.gamma_set(y);
            int from = w;
            while (from > 0 && reach[state.index_of(a, from - 1, Mark::zero)] &&
                   reach[state.index_of(a, from - 1, Mark::one)])
                --from;
            if (ch.size() < 2) {
                ++narrow;
                continue;
            }
            if (from == w) r.fail("(13) no-full-rung", {x.id()});
        }
    r.note("(13) nodes with fewer than two children", std::to_string(narrow));
    tally("(13)");

    r.note("interior-size", std::to_string(inner.count()));
    r.note("box-size", std::to_string(state.size()));
    return r;
}

Report gamma_ladder_check(const DiamondState& state, const TreeNode& x) {
    Report r("gamma " + x.id());
    const auto& p = state.order();
    const Bits g = state.gamma_set(x);
    const Bits want = state.ideal(x.level + 1) & state.interior();
    for (Elem e = want.find_first(); e != npos; e = want.find_next(e))
        if (!(p.up(e) & g).any()) r.fail("not-cofinal", {p.id(e)});
    if (g.none()) return r;
    r.absorb(is_meet_subsemilattice(p, g));

    for (Elem z = g.find_first(); z != npos; z = g.find_next(z)) {
        const auto& pz = state.point(z);
        auto got = covers_within(p, g, z);
        if (got.size() > 2) r.fail("too-many-covers", {p.id(z)});
        // Expected: the greatest member below z on its own level, and the
        // projection of z to the levels below unless it sits under that one.
        std::vector<Elem> expect;
        std::optional<Elem> prev;
        for (Elem y = g.find_first(); y != npos; y = g.find_next(y))
            if (y != z && state.point(y).level == pz.level && p.leq(y, z) && (!prev || p.leq(*prev, y))) prev = y;
        if (prev) expect.push_back(*prev);
        if (pz.level > 0) {
            const Elem proj = pi(p, state.ideal(pz.level), z);
            if (!prev || !p.leq(proj, *prev)) expect.push_back(proj);
        }
        std::sort(got.begin(), got.end());
        std::sort(expect.begin(), expect.end());
        if (got != expect) r.fail("unexpected-covers", {p.id(z)});
    }
    return r;
}

Report lower_cover_profile(const DiamondState& state) {
    Report r("diamond lower covers");
    const auto& p = state.order();
    for (Elem e = 0; e < state.size(); ++e) {
        const auto& pt = state.point(e);
        std::vector<Elem> cv = p.covers(e);
        std::sort(cv.begin(), cv.end());
        if (pt.d.a != Mark::bottom) {
            if (cv != std::vector<Elem>{state.index_of(pt.level, pt.d.n, Mark::bottom)})
                r.fail("marked-point-covers", {p.id(e)});
            continue;
        }
        std::vector<Elem> allowed;
        if (pt.d.n > 0) {
            allowed.push_back(state.index_of(pt.level, pt.d.n - 1, Mark::zero));
            allowed.push_back(state.index_of(pt.level, pt.d.n - 1, Mark::one));
        }
        if (pt.level > 0) allowed.push_back(pi(p, state.ideal(pt.level), e));
        bool ok = cv.size() <= 3;
        for (Elem c : cv) ok = ok && std::find(allowed.begin(), allowed.end(), c) != allowed.end();
        if (!ok) r.fail("bottom-point-covers", {p.id(e)});
    }
    return r;
}

std::vector<TreeNode> leaves(const DiamondState& state) {
    std::vector<TreeNode> out;
    for (int a = 0; a < state.levels(); ++a)
        for (int k = 0; k < state.width(); ++k)
            if (state.children({a, k}).empty()) out.push_back({a, k});
    return out;
}

Bits branch_union(const DiamondState& state, const TreeNode& leaf) {
    Bits c = state.gamma_set(leaf);
    for (TreeNode x = leaf; x.level > 0;) {
        x = state.parent(x);
        c |= state.gamma_set(x);
    }
    return c;
}

Report branch_check(const DiamondState& state, const Bits& c) {
    Report r("branch union");
    const auto& p = state.order();
    r.absorb(is_meet_subsemilattice(p, c));
    for (Elem z = c.find_first(); z != npos; z = c.find_next(z))
        if (covers_within(p, c, z).size() > 2) r.fail("too-many-covers", {p.id(z)});
    const Bits inner = state.interior();
    long stuck = 0;
    for (int a = 1; a <= state.levels(); ++a) {
        const Bits k = state.ideal(a);
        const Bits ki = k & inner;
        bool cofinal = true;
        for (Elem e = ki.find_first(); e != npos && cofinal; e = ki.find_next(e))
            if ((p.up(e) & k).is_subset_of(c)) cofinal = false;
        if (!cofinal) ++stuck;
    }
    r.note("levels where the complement is not cofinal", std::to_string(stuck));
    if (stuck > 1) r.fail("complement-not-cofinal-twice");
    return r;
}

}  // namespace ladders
