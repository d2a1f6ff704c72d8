#include "ladders/club.hpp"

#include <algorithm>
#include <string>

#include "ladders/error.hpp"
#include "ladders/random.hpp"

namespace ladders {

namespace {

constexpr Elem npos = Bits::npos;

std::vector<Elem> elements_of(const Bits& s) {
    std::vector<Elem> out;
    for (Elem e = s.find_first(); e != npos; e = s.find_next(e)) out.push_back(e);
    return out;
}

// Points of K_level other than corners: what a cofinal chain must dominate.
Bits must_dominate(const ClubState& st, int level) {
    Bits s = st.ideal(level) - st.corners();
    return s;
}

bool dominates(const FinitePoset& p, Elem top, const Bits& s) { return s.is_subset_of(p.down(top)); }

// Condition on consecutive chain elements: x < y and pi_{level(x)+1}(y) != x.
bool compliant(const ClubState& st, const std::vector<Bits>& ideals, Elem x, Elem y) {
    const auto& p = st.order();
    if (!p.lt(x, y)) return false;
    const int lx = st.point(x).level;
    return pi(p, ideals[lx + 1], y) != x;
}

std::vector<Bits> all_ideals(const ClubState& st) {
    std::vector<Bits> out;
    for (int a = 0; a <= st.levels(); ++a) out.push_back(st.ideal(a));
    return out;
}

}  // namespace

bool e_leq(const EPoint& a, const EPoint& b) { return a == b || (a.n < b.n && b.i == 1); }

std::string ClubPoint::id() const {
    if (zero) return "0";
    return "(" + std::to_string(level) + "," + std::to_string(e.n) + "," + std::to_string(e.i) + ")";
}

ClubState ClubState::base(int width) {
    if (width < 1) throw PreconditionError("club: base width must be at least 1");
    ClubState st;
    st.widths_ = {width};
    st.sequences_ = {{}};
    st.points_.push_back(ClubPoint::bottom());
    for (int n = 0; n < width; ++n)
        for (int i = 0; i < 2; ++i) st.points_.push_back(ClubPoint::at(0, n, i));
    std::vector<std::string> ids;
    for (const auto& pt : st.points_) ids.push_back(pt.id());
    const auto& pts = st.points_;
    st.order_ = FinitePoset::from_relation(std::move(ids), [&](Elem a, Elem b) {
        if (pts[a].zero) return true;
        if (pts[b].zero) return false;
        return e_leq(pts[a].e, pts[b].e);
    });
    return st;
}

Elem ClubState::index_of(const ClubPoint& p) const {
    if (p.zero) return 0;
    if (p.level < 0 || p.level >= levels() || p.e.n < 0 || p.e.n >= widths_[p.level] || p.e.i < 0 || p.e.i > 1)
        throw UnknownElement(p.id());
    Elem idx = 1;
    for (int a = 0; a < p.level; ++a) idx += 2 * static_cast<Elem>(widths_[a]);
    return idx + 2 * static_cast<Elem>(p.e.n) + static_cast<Elem>(p.e.i);
}

Bits ClubState::ideal(int level) const {
    Bits s(points_.size());
    for (Elem e = 0; e < points_.size(); ++e)
        if (points_[e].zero || points_[e].level < level) s.set(e);
    return s;
}

Bits ClubState::interior() const {
    Bits s(points_.size());
    for (Elem e = 0; e < points_.size(); ++e)
        if (points_[e].zero || points_[e].e.n < widths_[points_[e].level] - 1) s.set(e);
    return s;
}

Bits ClubState::corners() const {
    Bits s(points_.size());
    for (Elem e = 0; e < points_.size(); ++e) {
        const auto& pt = points_[e];
        if (!pt.zero && pt.e.n == widths_[pt.level] - 1 && pt.e.i == 0) s.set(e);
    }
    return s;
}

ClubState ClubState::with_level(int width, std::vector<Elem> sequence) const {
    ClubState st;
    st.widths_ = widths_;
    st.widths_.push_back(width);
    st.sequences_ = sequences_;
    st.sequences_.push_back(std::move(sequence));
    st.points_ = points_;
    const int level = levels();
    for (int n = 0; n < width; ++n)
        for (int i = 0; i < 2; ++i) st.points_.push_back(ClubPoint::at(level, n, i));
    std::vector<std::string> ids;
    for (const auto& pt : st.points_) ids.push_back(pt.id());

    const Elem old = points_.size();
    const auto& pts = st.points_;
    const auto& seq = st.sequences_.back();
    st.order_ = FinitePoset::from_relation(std::move(ids), [&](Elem a, Elem b) {
        if (a < old && b < old) return order_.leq(a, b);
        if (b < old) return false;
        if (a >= old) return e_leq(pts[a].e, pts[b].e);
        return order_.leq(a, seq[2 * pts[b].e.n + pts[b].e.i]);
    });
    return st;
}

std::vector<Elem> choose_stage_sequence(const ClubState& state, int level, int length,
                                        const ElementPredicate& avoid, std::uint64_t seed) {
    if (level != state.levels())
        throw PreconditionError("club: stage " + std::to_string(level) + " is not the next stage (" +
                                std::to_string(state.levels()) + ")");
    if (length < 0) throw PreconditionError("club: negative sequence length");
    if (length == 0) return {};
    const auto& p = state.order();
    const auto ideals = all_ideals(state);

    Bits usable(p.size());
    for (Elem e = 0; e < p.size(); ++e)
        if (!state.point(e).zero && ideals[level][e] && !(avoid && avoid(state.point(e)))) usable.set(e);
    const Bits target = must_dominate(state, level);

    // can[k]: usable starts of a compliant chain of exactly k elements ending cofinally.
    std::vector<Bits> can(1, Bits(p.size()));
    can.emplace_back(p.size());
    for (Elem e = usable.find_first(); e != npos; e = usable.find_next(e))
        if (dominates(p, e, target)) can[1].set(e);
    int k = 1;
    while (k < length && can[k].any()) {
        Bits next(p.size());
        for (Elem x = usable.find_first(); x != npos; x = usable.find_next(x))
            for (Elem y = can[k].find_first(); y != npos; y = can[k].find_next(y))
                if (compliant(state, ideals, x, y)) {
                    next.set(x);
                    break;
                }
        can.push_back(std::move(next));
        ++k;
    }
    if (k < length || can[length].none()) {
        long best = 0;
        for (int j = 1; j < static_cast<int>(can.size()); ++j)
            if (can[j].any()) best = j;
        throw InfeasibleError("club: no compliant cofinal chain of length " + std::to_string(length) +
                                  " in stage " + std::to_string(level) + " (longest feasible " +
                                  std::to_string(best) + ")",
                              best);
    }

    Rng rng = Rng(seed).substream("club-stage-" + std::to_string(level));
    auto pick = [&](const std::vector<Elem>& from) {
        return from[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(from.size()) - 1))];
    };
    std::vector<Elem> chain{pick(elements_of(can[length]))};
    for (int left = length - 1; left >= 1; --left) {
        std::vector<Elem> options;
        for (Elem y = can[left].find_first(); y != npos; y = can[left].find_next(y))
            if (compliant(state, ideals, chain.back(), y)) options.push_back(y);
        if (options.empty()) throw InternalError("club: chain search lost feasibility");
        chain.push_back(pick(options));
    }
    return chain;
}

ClubState extend_stage(const ClubState& state, int level, const std::vector<Elem>& sequence, int width) {
    if (level != state.levels())
        throw PreconditionError("club: stage " + std::to_string(level) + " is not the next stage (" +
                                std::to_string(state.levels()) + ")");
    if (width < 1) throw PreconditionError("club: width must be at least 1");
    const std::size_t need = 2 * static_cast<std::size_t>(width);
    Report r("stage " + std::to_string(level) + " sequence");
    if (sequence.size() < need) {
        r.note("required-length", std::to_string(need));
        throw PreconditionError("club: sequence has " + std::to_string(sequence.size()) + " elements, width " +
                                    std::to_string(width) + " needs " + std::to_string(need),
                                r);
    }
    const auto& p = state.order();
    const auto ideals = all_ideals(state);
    std::vector<Elem> seq(sequence.begin(), sequence.begin() + static_cast<std::ptrdiff_t>(need));
    for (Elem e : seq) {
        if (e >= p.size()) throw UnknownElement("#" + std::to_string(e));
        if (state.point(e).zero || !ideals[level][e]) r.fail("outside-stage", {p.id(e)});
    }
    if (!r.passed()) throw PreconditionError("club: sequence leaves the current stage", r);
    for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
        if (!p.lt(seq[k], seq[k + 1]))
            r.fail("not-increasing", {p.id(seq[k]), p.id(seq[k + 1])});
        else if (!compliant(state, ideals, seq[k], seq[k + 1]))
            r.fail("condition-a", {p.id(seq[k]), p.id(seq[k + 1])});
    }
    Bits missed = must_dominate(state, level) - p.down(seq.back());
    if (missed.any()) {
        std::vector<std::string> ids{p.id(seq.back())};
        for (Elem e : elements_of(missed)) ids.push_back(p.id(e));
        r.fail("not-cofinal", ids);
    }
    if (!r.passed()) throw PreconditionError("club: sequence rejected", r);

    ClubState next = state.with_level(width, std::move(seq));
    Report props = check_club_properties(next);
    if (!props.passed()) throw PropertyViolation("club: stage " + std::to_string(level) + " breaks a property", props);
    return next;
}

Report check_club_properties(const ClubState& state) {
    Report r("club properties");
    const auto& p = state.order();
    if (!p.valid()) {
        r.fail("not-a-poset");
        return r;
    }
    const Bits inner = state.interior();
    const auto inner_elems = elements_of(inner);
    const auto ideals = all_ideals(state);

    // (1) joins and meets of interior pairs exist in the box.
    for (std::size_t a = 0; a < inner_elems.size(); ++a)
        for (std::size_t b = a + 1; b < inner_elems.size(); ++b) {
            Elem x = inner_elems[a], y = inner_elems[b];
            if (!p.join(x, y)) r.fail("(1) join-absent", {p.id(x), p.id(y)});
            if (!p.meet(x, y)) r.fail("(1) meet-absent", {p.id(x), p.id(y)});
        }

    // (2) each K_b is down-closed and directed on the interior.
    for (int b = 1; b < state.levels(); ++b) {
        const Bits& k = ideals[b];
        for (Elem x = k.find_first(); x != npos; x = k.find_next(x))
            if (!p.down(x).is_subset_of(k)) r.fail("(2) not-down-closed", {std::to_string(b), p.id(x)});
        const Bits ki = k & inner;
        for (Elem x = ki.find_first(); x != npos; x = ki.find_next(x))
            for (Elem y = ki.find_next(x); y != npos; y = ki.find_next(y))
                if (!(p.up(x) & p.up(y) & k).any()) r.fail("(2) not-directed", {std::to_string(b), p.id(x), p.id(y)});
    }

    // (3) the order inside a level is that of E; (4) projections separate a level.
    std::vector<std::vector<Elem>> by_level(static_cast<std::size_t>(state.levels()));
    for (Elem e = 1; e < p.size(); ++e) by_level[static_cast<std::size_t>(state.point(e).level)].push_back(e);
    for (int g = 0; g < state.levels(); ++g) {
        const auto& lv = by_level[static_cast<std::size_t>(g)];
        for (Elem x : lv)
            for (Elem y : lv)
                if (p.leq(x, y) != e_leq(state.point(x).e, state.point(y).e))
                    r.fail("(3) level-order", {p.id(x), p.id(y)});
        for (int b = 1; b <= g; ++b) {
            std::vector<Elem> proj;
            for (Elem x : lv) proj.push_back(pi(p, ideals[b], x));
            for (std::size_t s = 0; s < lv.size(); ++s)
                for (std::size_t t = s + 1; t < lv.size(); ++t)
                    if (proj[s] == proj[t])
                        r.fail("(4) projection-collision", {std::to_string(b), p.id(lv[s]), p.id(lv[t]), p.id(proj[s])});
        }
    }

    // (6) {n : x <= (a,n,0)} is an end segment of the window.
    for (int a = 1; a < state.levels(); ++a) {
        long boundary = 0;
        const Bits& k = ideals[a];
        for (Elem x = k.find_first(); x != npos; x = k.find_next(x)) {
            bool seen = false;
            for (int n = 0; n < state.width(a); ++n) {
                bool below = p.leq(x, state.index_of(ClubPoint::at(a, n, 0)));
                if (seen && !below) {
                    r.fail("(6) not-eventual", {std::to_string(a), p.id(x)});
                    break;
                }
                seen = seen || below;
            }
            if (!seen) ++boundary;
        }
        r.note("(6) level " + std::to_string(a) + " undominated in window", std::to_string(boundary));
    }

    // Lower covers: (a,n,0) has exactly pi_a of itself, (a,n,1) at most three
    // from (a,n-1,0), (a,n-1,1) and pi_a of itself.
    for (Elem e = 1; e < p.size(); ++e) {
        const auto& pt = state.point(e);
        const Elem proj = pi(p, ideals[pt.level], e);
        const auto& cv = p.covers(e);
        if (pt.e.i == 0) {
            if (cv.size() != 1 || cv[0] != proj) r.fail("cover-profile", {p.id(e)});
            continue;
        }
        std::vector<Elem> allowed{proj};
        if (pt.e.n > 0) {
            allowed.push_back(state.index_of(ClubPoint::at(pt.level, pt.e.n - 1, 0)));
            allowed.push_back(state.index_of(ClubPoint::at(pt.level, pt.e.n - 1, 1)));
        }
        bool ok = cv.size() <= 3;
        for (Elem c : cv) ok = ok && std::find(allowed.begin(), allowed.end(), c) != allowed.end();
        if (!ok) r.fail("cover-profile", {p.id(e)});
    }
    r.note("interior-size", std::to_string(inner.count()));
    r.note("box-size", std::to_string(p.size()));
    return r;
}

Report check_breadth2(const ClubState& state) {
    Report r("club breadth 2");
    const Bits inner = state.interior();
    r.absorb(breadth_at_most(state.order(), 2, inner));
    r.absorb(is_n_ladder(state.order(), 3, inner));
    r.note("interior-size", std::to_string(inner.count()));
    return r;
}

Report club_level_diagnostic(const ClubState& state, const Bits& c) {
    Report r("club level diagnostic");
    std::vector<long> zeros(static_cast<std::size_t>(state.levels())), ones(zeros.size());
    for (Elem e = c.find_first(); e != npos; e = c.find_next(e)) {
        const auto& pt = state.point(e);
        if (pt.zero) continue;
        (pt.e.i == 0 ? zeros : ones)[static_cast<std::size_t>(pt.level)]++;
    }
    long both = 0;
    for (int a = 0; a < state.levels(); ++a) {
        auto s = static_cast<std::size_t>(a);
        r.note("level " + std::to_string(a), "i=0: " + std::to_string(zeros[s]) + ", i=1: " + std::to_string(ones[s]));
        if (zeros[s] > 0 && ones[s] > 0) ++both;
    }
    r.note("levels-with-both", std::to_string(both));
    return r;
}

ClubState build_club(int stages, const std::vector<int>& widths, std::uint64_t seed, const ClubBuildOptions& options) {
    if (stages < 1) throw PreconditionError("club: at least one stage is required");
    if (widths.empty()) throw PreconditionError("club: empty width schedule");
    auto width_at = [&](int a) { return widths[std::min<std::size_t>(static_cast<std::size_t>(a), widths.size() - 1)]; };
    int base = width_at(0);
    if (options.widen_base && stages > 1) base = std::max(base, 2 * width_at(1));
    ClubState st = ClubState::base(base);
    ElementPredicate avoid;
    if (options.target_parity) {
        const int parity = *options.target_parity;
        avoid = [parity](const ClubPoint& pt) { return pt.e.i != parity; };
    }
    for (int a = 1; a < stages; ++a) {
        const int w = width_at(a);
        auto seq = choose_stage_sequence(st, a, 2 * w, avoid, seed);
        st = extend_stage(st, a, seq, w);
    }
    return st;
}

}  // namespace ladders
