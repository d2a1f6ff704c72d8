#include "ladders/generators.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

namespace ladders {

FinitePoset m3() {
    return FinitePoset::from_covers({"bottom", "a0", "a1", "a2", "top"},
                                    {{"bottom", "a0"}, {"bottom", "a1"}, {"bottom", "a2"},
                                     {"a0", "top"}, {"a1", "top"}, {"a2", "top"}});
}

FinitePoset chain(int k) {
    std::vector<std::string> ids;
    for (int i = 0; i < k; ++i) ids.push_back("c" + std::to_string(i));
    return FinitePoset::from_relation(std::move(ids), [](Elem a, Elem b) { return a <= b; });
}

FinitePoset antichain(int k) {
    std::vector<std::string> ids;
    for (int i = 0; i < k; ++i) ids.push_back("a" + std::to_string(i));
    return FinitePoset::from_relation(std::move(ids), [](Elem a, Elem b) { return a == b; });
}

FinitePoset grid(int rows, int cols) {
    std::vector<std::string> ids;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) ids.push_back("g" + std::to_string(i) + "_" + std::to_string(j));
    const auto c = static_cast<Elem>(cols);
    return FinitePoset::from_relation(std::move(ids),
                                      [c](Elem a, Elem b) { return a / c <= b / c && a % c <= b % c; });
}

namespace {

// Poset of a family of subsets (bitmasks) under inclusion, ids in order of
// (size, mask).
FinitePoset from_family(std::set<unsigned> family) {
    std::vector<unsigned> sets(family.begin(), family.end());
    std::sort(sets.begin(), sets.end(), [](unsigned a, unsigned b) {
        if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
        return a < b;
    });
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < sets.size(); ++i) ids.push_back("e" + std::to_string(i));
    return FinitePoset::from_relation(std::move(ids),
                                      [&](Elem a, Elem b) { return (sets[a] & ~sets[b]) == 0; });
}

std::set<unsigned> random_closed_family(Rng& rng, int max_size, bool intersections) {
    for (;;) {
        const int ground = rng.uniform(2, 4);
        const unsigned full = (1u << ground) - 1;
        std::set<unsigned> family;
        if (intersections) family.insert(full);
        const int draws = rng.uniform(1, max_size);
        for (int i = 0; i < draws; ++i) {
            unsigned s = static_cast<unsigned>(rng.uniform(intersections ? 0 : 1, static_cast<int>(full)));
            family.insert(s);
        }
        for (bool grew = true; grew;) {
            grew = false;
            std::vector<unsigned> cur(family.begin(), family.end());
            for (unsigned a : cur)
                for (unsigned b : cur) {
                    unsigned c = intersections ? (a & b) : (a | b);
                    if (family.insert(c).second) grew = true;
                }
        }
        if (static_cast<int>(family.size()) <= max_size) return family;
    }
}

}  // namespace

FinitePoset random_lattice(Rng& rng, int max_size) {
    return from_family(random_closed_family(rng, max_size, true));
}

FinitePoset random_join_semilattice(Rng& rng, int max_size) {
    return from_family(random_closed_family(rng, max_size, false));
}

FinitePoset random_ladder(Rng& rng, int n, int max_size) {
    if (n <= 1) return chain(rng.uniform(1, max_size));
    for (;;) {
        FinitePoset p = random_lattice(rng, max_size);
        bool ok = true;
        for (Elem x = 0; x < p.size() && ok; ++x) ok = static_cast<int>(p.covers(x).size()) <= n;
        if (ok) return p;
    }
}

}  // namespace ladders
