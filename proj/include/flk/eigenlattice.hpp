#pragma once

#include "flk/weil.hpp"
#include "flk/witt.hpp"

namespace flk {

// Lattice with a Frobenius-like endomorphism. Entries are exact rationals
// whose denominators must be prime to the working prime ell.
struct FrobeniusModule {
    RatMatrix gram;
    RatMatrix phi;
    Int q;
    unsigned weight = 0;

    size_t rank() const { return gram.rows(); }
};

// Checks symmetry, phi^T G phi = q^w G, integrality of the characteristic
// polynomial (naming the offending coefficient) and the Weil property.
// Returns the characteristic polynomial.
IntPoly validate_module(const FrobeniusModule& m);

// Sublattice over Z_ell (or W) given by basis columns, with its Gram matrix.
struct LocalLattice {
    WittMatrix basis;
    WittMatrix gram;
    int disc_valuation = 0;
    int reliable_precision = 0;
    size_t rank() const { return basis.cols(); }
};

// Saturated kernel of (phi - lambda) over Z_ell with the restricted form.
LocalLattice fixed_eigenlattice(const FrobeniusModule& m, const Int& lambda, const Int& ell,
                                unsigned precision = kDefaultPrecision);

struct GHSplit {
    GHFactorization gh;
    WittMatrix m1;  // basis of h(phi) M
    WittMatrix m2;  // basis of g(phi) M
    int index_valuation = 0;  // v_ell [M : M1 + M2]
    int eigen_index_valuation = 0;  // v_ell [N : M1]
    bool orthogonal = false;
};

// Throws PreconditionError("semisimplicity violated") when lambda is not a
// semisimple eigenvalue.
GHSplit split_gh(const FrobeniusModule& m, const Int& ell, unsigned precision = kDefaultPrecision);

struct DiscBoundReport {
    Int ell;
    int v0 = 0;  // v_ell(disc M)
    int v = 0;   // v_ell(disc N)
    size_t eigen_rank = 0;
    Int c, c_prime;
    bool first_applies = false;  // ell > C
    bool first_holds = true;     // v <= v0 (when it applies)
    bool second_holds = true;    // v <= C' + v0
    bool pass() const { return first_holds && second_holds; }
};

DiscBoundReport disc_bound_report(const FrobeniusModule& m, const Int& ell,
                                  unsigned precision = kDefaultPrecision,
                                  double budget = kDefaultBudget);
// Same, with constants computed by the caller.
DiscBoundReport disc_bound_report(const FrobeniusModule& m, const Int& ell,
                                  const WeilConstants& constants,
                                  unsigned precision = kDefaultPrecision);

// sigma-semilinear endomorphism x -> A sigma(x) of a lattice over W.
struct SemilinearModule {
    std::shared_ptr<const WittRing> ring;
    WittMatrix gram;
    WittMatrix a;
    size_t rank() const { return gram.rows(); }
};

struct SemilinearReport {
    Int p;
    unsigned f = 1;
    size_t n = 0;
    size_t rank_nprime = 0;  // W-rank of N' = M^{phi = q}
    size_t rank_n = 0;       // Z_p-rank of N = N'^{phi0 = p}
    int witt_disc_valuation = 0;   // v_p(disc_W N')
    int trace_disc_valuation = 0;  // v_p(disc of the trace-form lattice)
    int disc_valuation = 0;        // v_p(disc N)
    unsigned c4 = 0;
    int bound = 0;  // f * v_W(disc N') + 2 c4 n f
    bool pass() const { return disc_valuation <= bound; }
};

// A^T G A = p^2 sigma(G).
void validate_semilinear(const SemilinearModule& m);
// phi = A sigma(A) ... sigma^{f-1}(A), the W-linear f-th power.
WittMatrix linear_power(const SemilinearModule& m);
SemilinearReport semilinear_pipeline(const SemilinearModule& m);

// C3 = C2 f + 2 r C4 f.
Int c3_constant(const Int& c2, unsigned c4, unsigned f, unsigned rank);

struct ParityResult {
    Int left;   // square-free part of disc(V^{+1} + V^{-1})
    Int right;  // square-free part of (-1)^{n/2} disc(V)
    size_t n = 0;
    size_t plus_rank = 0, minus_rank = 0;
    bool equal() const { return left == right; }
};

// Requires phi orthogonal for G and semisimple on the +-1 eigenspaces.
ParityResult eigen_disc_parity(const RatMatrix& gram, const RatMatrix& phi);

}  // namespace flk
