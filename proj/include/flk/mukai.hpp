#pragma once

#include "flk/lattice.hpp"
#include "flk/padic.hpp"

#include <optional>

namespace flk {

// Rational span of NS plus one formal transcendental direction alpha, with
// (alpha, NS) = 0. The b part of a Mukai vector lives here.
struct MukaiSpace {
    RatMatrix ns_gram;
    Rat alpha_square = 0;

    MukaiSpace() = default;
    MukaiSpace(RatMatrix ns, Rat alpha_square);
    MukaiSpace(const IntLattice& ns, const Rat& alpha_square);

    // NS coordinates followed by the alpha coordinate.
    size_t dim() const { return ns_gram.rows() + 1; }
    size_t ns_rank() const { return ns_gram.rows(); }
    Rat b_pair(const RatVec& x, const RatVec& y) const;
};

struct MukaiVector {
    Rat a;       // H^0
    RatVec b;    // size space.dim()
    Rat c;       // H^4

    bool operator==(const MukaiVector& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator!=(const MukaiVector& o) const { return !(*this == o); }
};

MukaiVector mukai_zero(const MukaiSpace& s);
MukaiVector mukai_unit(const MukaiSpace& s);
// (0, D, 0) with D in NS coordinates.
MukaiVector ns_class(const MukaiSpace& s, const RatVec& d);
// (a, D + t alpha, c).
MukaiVector make_vector(const MukaiSpace& s, const Rat& a, const RatVec& d, const Rat& t,
                        const Rat& c);

MukaiVector operator+(const MukaiVector& x, const MukaiVector& y);
MukaiVector operator-(const MukaiVector& x, const MukaiVector& y);

// b b' - a c' - a' c.
Rat mukai_pairing(const MukaiSpace& s, const MukaiVector& x, const MukaiVector& y);
// (a a', a b' + a' b, a c' + a' c + b b').
MukaiVector mukai_mult(const MukaiSpace& s, const MukaiVector& x, const MukaiVector& y);
// e^B = (1, B, B^2/2) for B in the b part.
MukaiVector mukai_exp(const MukaiSpace& s, const RatVec& b);

// chi(v, v') = -(v, v').
Rat riemann_roch_chi(const MukaiSpace& s, const MukaiVector& x, const MukaiVector& y);

std::string to_string(const MukaiVector& v);

// Class alpha / ell^level in T (x) Q_ell / Z_ell. Normalized representatives
// have alpha primitive and reduced modulo ell^level; level 0 is the trivial
// class with alpha = 0.
struct BField {
    IntMatrix t_gram;
    IntVec alpha;
    Int ell;
    unsigned level = 0;

    Int r() const { return ipow(ell, level); }
    Rat alpha_square() const;
};

// Validates the data (prime ell, symmetric T, alpha of the right size and
// primitive when level > 0) and returns the normalized representative.
BField make_bfield(IntMatrix t_gram, IntVec alpha, const Int& ell, unsigned level);

// Removes common ell powers and reduces alpha modulo ell^level.
BField normalize(BField b);

// ell^level for a primitive alpha.
Int brauer_order(const BField& b);

// alpha/ell^n + beta/ell^m = (ell^m alpha + ell^n beta)/ell^(n+m), normalized.
BField brauer_add(const BField& x, const BField& y);

bool operator==(const BField& x, const BField& y);

// Integral twisted Chow lattice {(a r, D + a alpha, c) : a, c in Z, D in NS}.
// Untwisted means Z + NS + Z with no alpha component.
struct TwistedChowLattice {
    size_t ns_rank = 0;
    Int r = 1;
    bool twisted = true;
};

bool twisted_chow_contains(const TwistedChowLattice& l, const MukaiVector& v);

struct TwistedVector {
    MukaiVector v;
    // Set when the rank is a multiple of r: whether v is integral.
    std::optional<bool> integral;
};

// e^(alpha/r) ch (1, 0, 1), with ch = (rank, c1 in NS, chi part).
TwistedVector twisted_mukai_vector(const MukaiSpace& s, const Rat& rank, const RatVec& c1,
                                   const Rat& chi, const BField& bf);

struct ModuliReport {
    Int modulus;       // ell^N
    Int v_square;      // exact (v, v)
    Int v_dot_u;       // exact (v, u)
    Int d_square;
    Int brauer;        // order of gamma / ell^n
    bool square_vanishes = false;
    bool pairing_matches = false;
    bool coprime = false;
    bool order_matches = false;
    bool in_twisted_chow = false;

    bool pass() const {
        return square_vanishes && pairing_matches && coprime && order_matches && in_twisted_chow;
    }
};

struct ModuliVector {
    MukaiSpace space;  // alpha direction is gamma
    IntVec gamma;      // in T, entries in [0, ell^N)
    MukaiVector v;     // (ell^n, gamma + D, 0)
    MukaiVector u;     // (ell^n, gamma, 0)
    ModuliReport report;
};

// Finds gamma in T with gamma^2 = -D^2 mod ell^N and builds the isotropic
// vector v. Requires ell odd, ell coprime to disc NS and to D^2, T unimodular
// at ell.
ModuliVector construct_moduli_vector(const IntLattice& ns, const IntVec& d, const IntMatrix& t,
                                     const Int& ell, unsigned n,
                                     unsigned precision = kDefaultPrecision);

}  // namespace flk
