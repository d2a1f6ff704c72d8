#pragma once

#include <string>

#include "ladders/poset.hpp"
#include "ladders/report.hpp"

namespace ladders {

// Suffix marking the copy of a cofinal subset; stripping it recovers the
// original element.
inline constexpr const char* kCopySuffix = "'";

struct ExtensionResult {
    FinitePoset extended;
    Bits embedded_ideal;  // image of the input lattice
    Bits new_elements;    // the copy of the cofinal subset
};

// Report on whether c, in the order induced from p, is a cofinal
// meet-subsemilattice that is a k-ladder. k < 1 always fails.
Report check_cofinal_ladder(const FinitePoset& p, const Bits& c, int k);

// Adds a copy of c on top of l: copies are ordered as their originals, and an
// old element lies below a copy iff it lies below the original. Requires n >= 2,
// l an n-ladder and c a cofinal meet-subsemilattice that is an (n-1)-ladder.
ExtensionResult extend_by_cofinal_copy(const FinitePoset& l, const Bits& c, int n);

// The element of l a copy stands for.
Elem copy_origin(const ExtensionResult& ext, const FinitePoset& l, Elem copy);

// {pi_l(x) : x >= b}, as a subset of k. Requires k an n-ladder, l a proper
// ideal of k and b outside l.
Bits induced_cofinal_subsemilattice(const FinitePoset& k, const Bits& l, Elem b, int n);

// Searches subsets by increasing size (ties broken by sorted ids) for a
// cofinal meet-subsemilattice that is an (n-1)-ladder; passes with the first
// one found attached as evidence.
Report finite_nonmaximality_check(const FinitePoset& l, int n);

// Checks that every copy's strict down-set is {x in l : x <= origin} together
// with the copies of elements strictly below the origin.
Report check_predecessor_formula(const ExtensionResult& ext, const FinitePoset& l);

}  // namespace ladders
