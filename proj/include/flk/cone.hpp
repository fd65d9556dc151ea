#pragma once

#include "flk/lattice.hpp"

#include <optional>

namespace flk {

// Lattice of signature (1, rank - 1).
struct HyperbolicLattice {
    IntLattice lattice;

    HyperbolicLattice() = default;
    // Throws PreconditionError unless the form is non-degenerate hyperbolic.
    explicit HyperbolicLattice(IntLattice l);

    size_t rank() const { return lattice.rank(); }
    Int pair(const IntVec& x, const IntVec& y) const { return lattice.pair(x, y); }
    Int square(const IntVec& x) const { return lattice.pair(x, x); }
};

// Optional global sign flip, applied first, then the reflections in order.
struct ReflectionWord {
    bool flip = false;
    std::vector<IntVec> roots;
};

bool is_root(const HyperbolicLattice& l, const IntVec& d);

// x + (x, d) d for a root d.
IntVec reflect(const HyperbolicLattice& l, const IntVec& x, const IntVec& d);

IntVec apply_word(const HyperbolicLattice& l, const ReflectionWord& w, const IntVec& x);

// Roots orthogonal to v (finite since v^2 > 0).
std::vector<IntVec> walls_through(const HyperbolicLattice& l, const IntVec& v);

// Walls separating x from a, one root d per wall, signed so that
// (x, d) < 0 < (a, d); lexicographically ordered. x and a must be positive
// and in the same half of the positive cone; a must lie on no wall.
std::vector<IntVec> separating_roots(const HyperbolicLattice& l, const IntVec& x, const IntVec& a);

struct ChamberWalk {
    ReflectionWord word;
    IntVec end;
};

// Moves x into the chamber of a by reflections, choosing among separating
// roots the one with the smallest |(x, d)|, then the lexicographically
// smallest.
ChamberWalk chamber_walk(const HyperbolicLattice& l, const IntVec& x, const IntVec& a);

struct AmpleDegree {
    std::optional<Int> degree;  // none: nothing found within the bound
    IntVec witness;
};

// Minimum of x^2 over x in the closed chamber of a with 0 < x^2 <= bound and
// 0 < (x, a) <= pair_bound (default: bound). a may lie on walls.
AmpleDegree min_ample_degree(const HyperbolicLattice& l, const IntVec& a, const Int& bound,
                             std::optional<Int> pair_bound = std::nullopt);

struct SupersingularCheck {
    bool holds = false;
    int exponent = -1;  // a with |d| = p^a, or -1 when |d| is not a power of p
};

// d = -p^a with a even and 2 <= a <= 20.
SupersingularCheck supersingular_disc_check(const Int& d, const Int& p);

}  // namespace flk
