#pragma once

#include "ladders/poset.hpp"
#include "ladders/random.hpp"

namespace ladders {

// Named fixtures.
FinitePoset m3();                      // bottom < a0, a1, a2 < top
FinitePoset chain(int k);              // c0 < c1 < ... < c{k-1}
FinitePoset antichain(int k);          // a0, ..., a{k-1}
FinitePoset grid(int rows, int cols);  // g{i}_{j}, product order

// Lattice of an intersection-closed family of subsets of a small ground set
// (the ground set included), with at most max_size elements.
FinitePoset random_lattice(Rng& rng, int max_size);
// Union-closed family of nonempty subsets; a join-semilattice that need not
// have a least element.
FinitePoset random_join_semilattice(Rng& rng, int max_size);
// Random lattice in which every element has at most n lower covers.
FinitePoset random_ladder(Rng& rng, int n, int max_size);

}  // namespace ladders
