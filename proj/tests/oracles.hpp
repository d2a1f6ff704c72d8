#pragma once

// Brute-force reference implementations over a plain boolean matrix. They
// share no code with the library beyond reading the relation.

#include <optional>
#include <vector>

#include "ladders/poset.hpp"

namespace oracle {

struct Order {
    int n = 0;
    std::vector<std::vector<bool>> le;

    explicit Order(const ladders::FinitePoset& p) : n(static_cast<int>(p.size())) {
        le.assign(n, std::vector<bool>(n, false));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) le[a][b] = p.leq(a, b);
    }
};

inline std::optional<int> join(const Order& o, int a, int b) {
    for (int c = 0; c < o.n; ++c) {
        if (!o.le[a][c] || !o.le[b][c]) continue;
        bool least = true;
        for (int d = 0; d < o.n && least; ++d)
            if (o.le[a][d] && o.le[b][d] && !o.le[c][d]) least = false;
        if (least) return c;
    }
    return std::nullopt;
}

inline std::optional<int> meet(const Order& o, int a, int b) {
    for (int c = 0; c < o.n; ++c) {
        if (!o.le[c][a] || !o.le[c][b]) continue;
        bool greatest = true;
        for (int d = 0; d < o.n && greatest; ++d)
            if (o.le[d][a] && o.le[d][b] && !o.le[d][c]) greatest = false;
        if (greatest) return c;
    }
    return std::nullopt;
}

inline std::optional<int> join_mask(const Order& o, unsigned long mask) {
    std::optional<int> acc;
    for (int i = 0; i < o.n; ++i) {
        if (!(mask >> i & 1)) continue;
        acc = acc ? join(o, *acc, i) : std::optional<int>(i);
        if (!acc) return std::nullopt;
    }
    return acc;
}

// Breadth straight from the definition: the least n such that every nonempty
// subset X has a subset Y with |Y| <= n and the same join.
inline int definitional_breadth(const Order& o) {
    int best = 1;
    const unsigned long all = 1ul << o.n;
    for (unsigned long x = 1; x < all; ++x) {
        auto jx = join_mask(o, x);
        if (!jx) continue;
        int least = __builtin_popcountl(x);
        for (unsigned long y = x; y; y = (y - 1) & x) {
            int size = __builtin_popcountl(y);
            if (size < least && join_mask(o, y) == jx) least = size;
        }
        best = std::max(best, least);
    }
    return best;
}

inline std::vector<int> covers(const Order& o, int x) {
    std::vector<int> out;
    for (int q = 0; q < o.n; ++q) {
        if (q == x || !o.le[q][x]) continue;
        bool between = false;
        for (int z = 0; z < o.n && !between; ++z)
            if (z != q && z != x && o.le[q][z] && o.le[z][x]) between = true;
        if (!between) out.push_back(q);
    }
    return out;
}

// Greatest element of ideal ∩ ↓x, or -1.
inline int pi(const Order& o, const std::vector<bool>& ideal, int x) {
    for (int m = 0; m < o.n; ++m) {
        if (!ideal[m] || !o.le[m][x]) continue;
        bool greatest = true;
        for (int y = 0; y < o.n && greatest; ++y)
            if (ideal[y] && o.le[y][x] && !o.le[y][m]) greatest = false;
        if (greatest) return m;
    }
    return -1;
}

// All ideals as membership vectors: nonempty, down-closed, directed.
inline std::vector<std::vector<bool>> ideals(const Order& o) {
    std::vector<std::vector<bool>> out;
    for (unsigned long s = 1; s < (1ul << o.n); ++s) {
        bool ok = true;
        for (int a = 0; a < o.n && ok; ++a) {
            if (!(s >> a & 1)) continue;
            for (int b = 0; b < o.n && ok; ++b) {
                if (o.le[b][a] && !(s >> b & 1)) ok = false;
                if (!(s >> b & 1)) continue;
                bool bounded = false;
                for (int c = 0; c < o.n && !bounded; ++c)
                    bounded = (s >> c & 1) && o.le[a][c] && o.le[b][c];
                if (!bounded) ok = false;
            }
        }
        if (!ok) continue;
        std::vector<bool> v(o.n);
        for (int a = 0; a < o.n; ++a) v[a] = s >> a & 1;
        out.push_back(v);
    }
    return out;
}

}  // namespace oracle
