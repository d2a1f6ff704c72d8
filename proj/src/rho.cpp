#include "ladders/rho.hpp"

#include <algorithm>

#include "ladders/error.hpp"

namespace ladders {

namespace {

constexpr auto npos = Bits::npos;

std::string num(int v) { return std::to_string(v); }

}  // namespace

RhoTable::RhoTable(int levels, int window) : levels_(levels), window_(window) {
    if (levels < 1 || window < 1) throw PreconditionError("rho table needs at least one level and window 1");
    rows_.assign(static_cast<std::size_t>(levels) * levels, std::vector<int>(window, 0));
}

std::size_t RhoTable::slot(int a, int b) const {
    if (a < 0 || b >= levels_ || a >= b) throw PreconditionError("rho row needs levels a < b < " + num(levels_));
    return static_cast<std::size_t>(a) * levels_ + b;
}

int RhoTable::at(int a, int b, int n) const {
    if (n < 0 || n >= window_) throw WindowExceeded("index " + num(n) + " outside window " + num(window_));
    if (a == b) return 0;
    return rows_[slot(a, b)][n];
}

const std::vector<int>& RhoTable::row(int a, int b) const { return rows_[slot(a, b)]; }

void RhoTable::set_row(int a, int b, std::vector<int> values) {
    if (static_cast<int>(values.size()) != window_) throw PreconditionError("rho row length differs from window");
    for (int v : values)
        if (v < 0) throw PreconditionError("rho values must be non-negative");
    rows_[slot(a, b)] = std::move(values);
}

void RhoTable::set(int a, int b, int n, int value) {
    if (n < 0 || n >= window_) throw WindowExceeded("index " + num(n) + " outside window " + num(window_));
    if (value < 0) throw PreconditionError("rho values must be non-negative");
    rows_[slot(a, b)][n] = value;
}

int RhoTable::max_value() const {
    int best = 0;
    for (int a = 0; a < levels_; ++a)
        for (int b = a + 1; b < levels_; ++b)
            for (int v : rows_[slot(a, b)]) best = std::max(best, v);
    return best;
}

std::string KPoint::id() const {
    if (zero) return "0";
    return "(" + num(level) + "," + num(n) + "," + num(m) + ")";
}

bool leq_rho(const RhoTable& t, const KPoint& x, const KPoint& y) {
    if (x.zero) return true;
    if (y.zero) return false;
    if (x.n >= t.window() || y.n >= t.window())
        throw WindowExceeded("point outside window: " + (x.n >= t.window() ? x.id() : y.id()));
    return x.level <= y.level && x.n <= y.n && x.m <= y.m && t.at(x.level, y.level, x.n) <= y.m;
}

KPoint join_rho(const RhoTable& t, const KPoint& x, const KPoint& y) {
    if (x.zero) return y;
    if (y.zero) return x;
    const KPoint& lo = x.level <= y.level ? x : y;
    const KPoint& hi = x.level <= y.level ? y : x;
    if (hi.n >= t.window() || lo.n >= t.window())
        throw WindowExceeded("point outside window: " + (hi.n >= t.window() ? hi.id() : lo.id()));
    return KPoint::at(hi.level, std::max(lo.n, hi.n), std::max({lo.m, hi.m, t.at(lo.level, hi.level, lo.n)}));
}

KPoint pi_rho(const RhoTable& t, int level, const KPoint& x) {
    if (x.zero) return x;
    if (x.n >= t.window()) throw WindowExceeded("point outside window: " + x.id());
    if (level > x.level) return x;
    int nu = -1;
    for (int mu = 0; mu < level; ++mu)
        if (t.at(mu, x.level, 0) <= x.m) nu = mu;
    if (nu < 0) return KPoint::bottom();
    int n_prime = 0;
    for (int k = 0; k <= x.n; ++k)
        if (t.at(nu, x.level, k) <= x.m) n_prime = k;
    return KPoint::at(nu, n_prime, x.m);
}

Report check_rho_axioms(const RhoTable& t) {
    Report r("rho-axioms");
    const int A = t.levels(), N = t.window();
    for (int a = 0; a < A; ++a)
        for (int b = a + 1; b < A; ++b)
            for (int n = 0; n + 1 < N; ++n)
                if (t.at(a, b, n) > t.at(a, b, n + 1)) r.fail("rho1", {num(a), num(b), num(n)});
    for (int a = 0; a < A; ++a)
        for (int b = a + 1; b < A; ++b)
            for (int c = b + 1; c < A; ++c)
                for (int n = 0; n < N; ++n) {
                    const int ab = t.at(a, b, n), ac = t.at(a, c, n), bc = t.at(b, c, n);
                    const std::vector<std::string> w{num(a), num(b), num(c), num(n)};
                    if (ac > std::max(ab, bc)) r.fail("rho2", w);
                    if (ab > std::max(ac, bc)) r.fail("rho3", w);
                    if (bc > std::max(ac, t.at(b, c, 0))) r.fail("rho4", w);
                }
    return r;
}

Report check_lower_finiteness(const RhoTable& t, int bound) {
    Report r("lower-finiteness");
    for (int a = 0; a < t.levels(); ++a) {
        std::string profile;
        for (int n = 0; n <= bound; ++n) {
            int count = 0;
            for (int v = 0; v < a; ++v)
                if (t.at(v, a, 0) <= n) ++count;
            profile += (n ? "," : "") + num(count);
        }
        r.note("level " + num(a), profile);
    }
    return r;
}

Elem MaterializedBox::index_of(const KPoint& p) const {
    if (!contains(p)) throw WindowExceeded("point outside box: " + p.id());
    if (p.zero) return 0;
    return 1 + (static_cast<Elem>(p.level) * box.window + p.n) * box.height + p.m;
}

bool MaterializedBox::contains(const KPoint& p) const {
    if (p.zero) return true;
    return p.level >= 0 && p.level < box.levels && p.n >= 0 && p.n < box.window && p.m >= 0 && p.m < box.height;
}

MaterializedBox materialize(const RhoTable& t, const Box& box) {
    if (box.levels < 0 || box.window < 0 || box.height < 0) throw PreconditionError("box dimensions must be non-negative");
    if (box.levels > t.levels() || box.window > t.window())
        throw WindowExceeded("box exceeds the table's levels or window");
    MaterializedBox mb{box, {}, {}, {}};
    mb.points.push_back(KPoint::bottom());
    for (int a = 0; a < box.levels; ++a)
        for (int n = 0; n < box.window; ++n)
            for (int m = 0; m < box.height; ++m) mb.points.push_back(KPoint::at(a, n, m));
    std::vector<std::string> ids;
    for (const auto& p : mb.points) ids.push_back(p.id());
    mb.poset = FinitePoset::from_relation(std::move(ids),
                                          [&](Elem i, Elem j) { return leq_rho(t, mb.points[i], mb.points[j]); });
    mb.interior = Bits(mb.points.size());
    for (Elem i = 0; i < mb.points.size(); ++i) {
        bool inside = true;
        for (Elem j = 0; j < mb.points.size() && inside; ++j)
            inside = mb.contains(join_rho(t, mb.points[i], mb.points[j]));
        if (inside) mb.interior.set(i);
    }
    return mb;
}

Box default_box(const RhoTable& t) { return {t.levels(), t.window(), t.max_value() + t.window() + 2}; }

Report box_semilattice_status(const MaterializedBox& mb) {
    Report r("box-join-semilattice");
    const FinitePoset& p = mb.poset;
    if (!p.valid()) {
        Report v = validate_poset(p);
        r.fail("not-a-poset", v.witnesses().empty() ? std::vector<std::string>{} : v.witnesses()[0].elements);
        return r;
    }
    for (Elem a = mb.interior.find_first(); a != npos; a = mb.interior.find_next(a))
        for (Elem b = mb.interior.find_next(a); b != npos; b = mb.interior.find_next(b))
            if (!p.join(a, b)) r.fail("join-absent", {p.id(a), p.id(b)});
    r.note("interior", num(static_cast<int>(mb.interior.count())) + "/" + num(static_cast<int>(p.size())));
    return r;
}

Report check_3ladder_box(const RhoTable& t, const Box& box) {
    Report axioms = check_rho_axioms(t);
    if (!axioms) throw PreconditionError("check_3ladder_box: rho axioms fail", axioms);
    MaterializedBox mb = materialize(t, box);
    Report r = is_n_ladder(mb.poset, 3, mb.interior);
    r.set_title("3-ladder-box");
    return r;
}

RhoTable build_rho(int levels, int window, const std::vector<std::vector<int>>& f_family,
                   const BuildChoices& choices, std::vector<BuildTrace>* trace) {
    if (levels < 1 || window < 1) throw PreconditionError("build_rho: levels and window must be positive");
    if (static_cast<int>(f_family.size()) < levels)
        throw PreconditionError("build_rho: need " + num(levels) + " functions, got " + num(static_cast<int>(f_family.size())));
    for (const auto& f : f_family) {
        if (static_cast<int>(f.size()) < window) throw PreconditionError("build_rho: function shorter than the window");
        for (int k = 0; k < window; ++k) {
            if (f[k] < 0) throw PreconditionError("build_rho: negative function value");
            if (k > 0 && f[k] < f[k - 1]) throw PreconditionError("build_rho: function is not non-decreasing");
        }
    }

    RhoTable t(levels, window);
    for (int d = 1; d < levels; ++d) {
        std::vector<int> seq;
        if (auto it = choices.sequences.find(d); it != choices.sequences.end()) {
            seq = it->second;
            if (seq.empty() || seq.back() != d - 1)
                throw PreconditionError("build_rho: sequence for stage " + num(d) + " must end at " + num(d - 1));
            for (std::size_t i = 0; i < seq.size(); ++i)
                if (seq[i] < 0 || seq[i] > d - 1 || (i && seq[i] < seq[i - 1]))
                    throw PreconditionError("build_rho: sequence for stage " + num(d) + " is not non-decreasing below it");
            seq.resize(std::find(seq.begin(), seq.end(), d - 1) - seq.begin() + 1);
        } else {
            for (int n = 0; n < d; ++n) seq.push_back(n);
        }
        const int last = static_cast<int>(seq.size()) - 1;

        std::vector<int> dom(window);
        for (int k = 0; k < window; ++k) {
            dom[k] = f_family[d][k];
            for (int i = 0; i <= last; ++i)
                for (int j = i + 1; j <= last; ++j) dom[k] = std::max(dom[k], t.at(seq[i], seq[j], k));
        }

        std::vector<int> thresholds(last + 1, 0);
        for (int n = 0; n <= last; ++n) {
            int kn = window - 1;
            for (int k0 = window - 1; k0 >= 0; --k0) {
                bool ok = true;
                for (int m = 0; m < n && ok; ++m) ok = t.at(seq[m], seq[n], k0) <= dom[k0];
                if (!ok) break;
                kn = k0;
            }
            thresholds[n] = n ? std::max(kn, thresholds[n - 1]) : kn;
        }

        for (int a = 0; a < d; ++a) {
            int na = 0;
            while (seq[na] < a) ++na;
            const int top = seq[na];
            std::vector<int> values(window);
            for (int k = 0; k < window; ++k) {
                int v = std::max({na, dom[k], t.at(a, top, k)});
                for (int m = 0; m < na; ++m) v = std::max(v, t.at(seq[m], top, thresholds[na]));
                values[k] = v;
            }
            t.set_row(a, d, std::move(values));
        }
        if (trace) trace->push_back({d, seq, dom, thresholds});
    }
    return t;
}

std::vector<KPoint> nonmax_witness_set(const RhoTable& t, const std::vector<int>& f, const Box& box) {
    if (static_cast<int>(f.size()) < box.window) throw PreconditionError("nonmax_witness: function shorter than the box window");
    std::vector<KPoint> out{KPoint::bottom()};
    for (int a = 0; a < box.levels; ++a)
        for (int n = 0; n < box.window; ++n)
            if (f[n] < box.height && t.at(0, a, n) <= f[n]) out.push_back(KPoint::at(a, n, f[n]));
    return out;
}

Report nonmax_witness(const RhoTable& t, const std::vector<int>& f, const Box& box) {
    Report axioms = check_rho_axioms(t);
    if (!axioms) throw PreconditionError("nonmax_witness: rho axioms fail", axioms);
    for (std::size_t k = 1; k < f.size(); ++k)
        if (f[k] < f[k - 1]) throw PreconditionError("nonmax_witness: function is not non-decreasing");
    MaterializedBox mb = materialize(t, box);
    const FinitePoset& p = mb.poset;
    Bits c = p.empty_set();
    for (const auto& pt : nonmax_witness_set(t, f, box)) c.set(mb.index_of(pt));

    Report r("nonmax-witness");
    Bits region = c & mb.interior;
    for (Elem a = region.find_first(); a != npos; a = region.find_next(a))
        for (Elem b = region.find_next(a); b != npos; b = region.find_next(b)) {
            auto m = p.meet(a, b);
            if (!m || !c[*m]) r.fail("meet-not-in-set", {p.id(a), p.id(b)});
        }
    FinitePoset sub = induced(p, c);
    for (Elem a = region.find_first(); a != npos; a = region.find_next(a)) {
        const auto& cov = sub.covers(sub.index(p.id(a)));
        if (cov.size() > 2) r.fail("too-many-lower-covers", {p.id(a), num(static_cast<int>(cov.size()))});
    }
    int without_headroom = 0;
    for (Elem x = mb.interior.find_first(); x != npos; x = mb.interior.find_next(x)) {
        const KPoint& pt = mb.points[x];
        bool headroom = pt.zero;
        for (int n = pt.zero ? 0 : pt.n; n < box.window && !headroom; ++n)
            headroom = pt.m <= f[n] && f[n] < box.height && t.at(0, pt.level, n) <= f[n];
        if (!headroom) {
            ++without_headroom;
            continue;
        }
        if (!p.up(x).intersects(c)) r.fail("not-dominated", {p.id(x)});
    }
    r.note("members", num(static_cast<int>(c.count())));
    r.note("points-without-headroom", num(without_headroom));
    r.attach("set", ids_of(p, c));
    return r;
}

std::vector<KPoint> breadth_marker(const RhoTable& t) {
    if (t.levels() < 2 || t.window() < 2) throw WindowExceeded("breadth marker needs two levels and window 2");
    return {KPoint::at(0, 0, t.at(0, 1, 1) + 1), KPoint::at(0, 1, 0), KPoint::at(1, 0, 0)};
}

Report check_breadth_marker(const RhoTable& t) {
    Report r("breadth-marker");
    auto xs = breadth_marker(t);
    for (int i = 0; i < 3; ++i) {
        const KPoint& y = xs[(i + 1) % 3];
        const KPoint& z = xs[(i + 2) % 3];
        if (leq_rho(t, xs[i], join_rho(t, y, z))) r.fail("below-join-of-others", {xs[i].id(), y.id(), z.id()});
    }
    return r;
}

RhoTable random_rho_table(Rng& rng, int levels, int window, int max_value) {
    RhoTable t(levels, window);
    for (int a = 0; a < levels; ++a)
        for (int b = a + 1; b < levels; ++b) {
            std::vector<int> row(window);
            for (int& v : row) v = rng.uniform(0, max_value);
            for (int k = 1; k < window; ++k) row[k] = std::max(row[k], row[k - 1]);
            t.set_row(a, b, std::move(row));
        }
    return t;
}

std::vector<std::vector<int>> random_f_family(Rng& rng, int count, int window, int max_value) {
    std::vector<std::vector<int>> out(count, std::vector<int>(window));
    for (auto& f : out) {
        for (int& v : f) v = rng.uniform(0, max_value);
        for (int k = 1; k < window; ++k) f[k] = std::max(f[k], f[k - 1]);
    }
    return out;
}

}  // namespace ladders
