#include "ladders/extension.hpp"

#include <algorithm>

#include "ladders/error.hpp"

namespace ladders {

namespace {

constexpr auto npos = Bits::npos;

void require(const Report& r, const std::string& what) {
    if (!r.passed()) throw PreconditionError(what, r);
}

}  // namespace

Report check_cofinal_ladder(const FinitePoset& p, const Bits& c, int k) {
    Report r("cofinal-" + std::to_string(k) + "-ladder");
    if (c.none()) {
        r.fail("empty");
        return r;
    }
    r.absorb(is_cofinal(p, c));
    r.absorb(is_meet_subsemilattice(p, c));
    if (k < 1) {
        r.fail("no-ladders-below-1", {std::to_string(k)});
        return r;
    }
    r.absorb(is_n_ladder(induced(p, c), k));
    return r;
}

ExtensionResult extend_by_cofinal_copy(const FinitePoset& l, const Bits& c, int n) {
    if (n < 2) throw PreconditionError("extend_by_cofinal_copy: n must be at least 2");
    if (!l.valid()) throw PreconditionError("extend_by_cofinal_copy: input is not a poset", validate_poset(l));
    require(is_n_ladder(l, n), "extend_by_cofinal_copy: input is not an " + std::to_string(n) + "-ladder");
    require(check_cofinal_ladder(l, c, n - 1),
            "extend_by_cofinal_copy: subset is not a cofinal meet-subsemilattice (" + std::to_string(n - 1) +
                "-ladder)");

    const std::vector<Elem> originals = members(c);
    const std::size_t base = l.size();
    std::vector<std::string> ids = l.ids();
    for (Elem x : originals) {
        std::string copy = l.id(x) + kCopySuffix;
        if (l.find(copy)) throw PreconditionError("extend_by_cofinal_copy: copy id already used: " + copy);
        ids.push_back(std::move(copy));
    }
    auto origin = [&](Elem e) { return e < base ? e : originals[e - base]; };
    auto extended = FinitePoset::from_relation(std::move(ids), [&](Elem a, Elem b) {
        if (a >= base && b < base) return false;
        return l.leq(origin(a), origin(b));
    });
    if (!extended.valid()) throw InternalError("extend_by_cofinal_copy: extension is not a poset");

    ExtensionResult out{std::move(extended), Bits(base + originals.size()), Bits(base + originals.size())};
    for (Elem x = 0; x < base; ++x) out.embedded_ideal.set(x);
    for (Elem x = base; x < out.extended.size(); ++x) out.new_elements.set(x);
    return out;
}

Elem copy_origin(const ExtensionResult& ext, const FinitePoset& l, Elem copy) {
    const std::string& id = ext.extended.id(copy);
    const std::string suffix = kCopySuffix;
    if (id.size() < suffix.size() || id.compare(id.size() - suffix.size(), suffix.size(), suffix) != 0)
        throw PreconditionError("copy_origin: not a copy: " + id);
    return l.index(id.substr(0, id.size() - suffix.size()));
}

Bits induced_cofinal_subsemilattice(const FinitePoset& k, const Bits& l, Elem b, int n) {
    require(is_n_ladder(k, n), "induced_cofinal_subsemilattice: ambient is not an " + std::to_string(n) + "-ladder");
    require(is_proper_ideal(k, l), "induced_cofinal_subsemilattice: subset is not a proper ideal");
    if (l[b]) throw PreconditionError("induced_cofinal_subsemilattice: base point lies in the ideal");
    Bits out = k.empty_set();
    const Bits& above = k.up(b);
    for (Elem x = above.find_first(); x != npos; x = above.find_next(x)) out.set(pi(k, l, x));
    return out;
}

Report finite_nonmaximality_check(const FinitePoset& l, int n) {
    require(is_n_ladder(l, n), "finite_nonmaximality_check: input is not an " + std::to_string(n) + "-ladder");
    Report r("non-maximality");
    if (n < 2) {
        r.fail("no-(n-1)-ladder", {std::to_string(n)});
        return r;
    }
    std::vector<Elem> sorted(l.size());
    for (Elem x = 0; x < l.size(); ++x) sorted[x] = x;
    std::sort(sorted.begin(), sorted.end(), [&](Elem a, Elem b) { return l.id(a) < l.id(b); });
    for (std::size_t k = 1; k <= sorted.size(); ++k) {
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        for (;;) {
            Bits c = l.empty_set();
            for (std::size_t i : idx) c.set(sorted[i]);
            if (check_cofinal_ladder(l, c, n - 1).passed()) {
                r.attach("witness", ids_of(l, c));
                return r;
            }
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == sorted.size() - k + (i - 1)) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    r.fail("no-cofinal-(n-1)-ladder", {std::to_string(n)});
    return r;
}

Report check_predecessor_formula(const ExtensionResult& ext, const FinitePoset& l) {
    Report r("predecessor-formula");
    const FinitePoset& k = ext.extended;
    for (Elem y = ext.new_elements.find_first(); y != npos; y = ext.new_elements.find_next(y)) {
        const Elem origin = copy_origin(ext, l, y);
        Bits expected = k.empty_set();
        for (Elem x = 0; x < l.size(); ++x)
            if (l.leq(x, origin)) expected.set(x);
        for (Elem z = ext.new_elements.find_first(); z != npos; z = ext.new_elements.find_next(z))
            if (l.lt(copy_origin(ext, l, z), origin)) expected.set(z);
        Bits strict = k.down(y);
        strict.reset(y);
        if (strict != expected) r.fail("predecessors-differ", {k.id(y)});
    }
    return r;
}

}  // namespace ladders
