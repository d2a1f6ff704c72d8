#pragma once

#include <map>
#include <set>
#include <vector>

#include "ladders/cohen.hpp"
#include "oracles.hpp"

namespace oracle {

// Reference side: its own prefix and lexicographic tests, blocks straight from
// the definition, and C as the least fixpoint of clauses (a)-(c).
struct CohenRef {
    const ladders::IdealFamily& fam;
    Order o;
    std::vector<ladders::Node> nodes;
    std::map<ladders::Node, std::vector<bool>> ideal;

    explicit CohenRef(const ladders::IdealFamily& f) : fam(f), o(f.base()), nodes(f.tree().nodes()) {
        for (const ladders::Node& a : nodes) {
            std::vector<bool> v(o.n);
            for (int x = 0; x < o.n; ++x) v[x] = f.ideal(a)[x];
            ideal[a] = v;
        }
    }

    static bool prefix(const ladders::Node& a, const ladders::Node& b) {
        if (a.size() > b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return false;
        return true;
    }
    static bool star_before(const ladders::Node& b, const ladders::Node& a) {
        if (prefix(b, a) || prefix(a, b)) return false;
        std::size_t i = 0;
        while (b[i] == a[i]) ++i;
        return b[i] < a[i];
    }

    std::vector<bool> block(const ladders::Node& a) const {
        std::vector<bool> out = ideal.at(a);
        for (const ladders::Node& b : nodes)
            if (star_before(b, a))
                for (int x = 0; x < o.n; ++x)
                    if (ideal.at(b)[x]) out[x] = false;
        return out;
    }

    std::set<int> c_of(const ladders::Condition& p) const {
        std::set<int> c;
        for (bool grew = true; grew;) {
            grew = false;
            for (const auto& [k, v] : p.values) {
                const auto& [a, m] = k;
                const int x = static_cast<int>(v);
                if (c.count(x)) continue;
                bool ok = true;
                for (int j = 0; j < m && ok; ++j) {
                    auto it = p.values.find({a, j});
                    ok = it != p.values.end() && o.le[it->second][x];
                }
                for (const ladders::Node& g : nodes)
                    if (ok && star_before(g, a)) ok = c.count(pi(o, ideal.at(g), x)) > 0;
                if (ok) {
                    c.insert(x);
                    grew = true;
                }
            }
        }
        return c;
    }
};

}  // namespace oracle
