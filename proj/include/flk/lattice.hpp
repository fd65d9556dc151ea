#pragma once

#include "flk/matrix.hpp"

#include <string>
#include <utility>
#include <vector>

namespace flk {

// Finite-rank integer lattice given by its Gram matrix.
struct IntLattice {
    IntMatrix gram;
    std::vector<std::string> labels;

    IntLattice() = default;
    // Throws PreconditionError naming the first asymmetric entry pair.
    explicit IntLattice(IntMatrix g, std::vector<std::string> labels = {});

    size_t rank() const { return gram.rows(); }
    Int pair(const IntVec& x, const IntVec& y) const { return bilinear(gram, x, y); }
};

// Sublattice spanned by the columns of `basis` (ambient.rank() x k).
struct SublatticeEmbedding {
    IntLattice ambient;
    IntMatrix basis;

    IntLattice induced() const;
    size_t rank() const { return basis.cols(); }
};

Int disc(const IntLattice& l);

// (disc of the induced Gram, det(C)^2 * disc(ambient)). The basis must be
// square and non-singular.
std::pair<Int, Int> sublattice_disc(const SublatticeEmbedding& e);

// Saturated sublattice {x : (x, s) = 0 for all s}.
SublatticeEmbedding orthogonal_complement(const IntLattice& l, const std::vector<IntVec>& s);

// Smallest saturated sublattice containing e.
SublatticeEmbedding saturate(const SublatticeEmbedding& e);

bool is_saturated(const SublatticeEmbedding& e);

// Same subgroup of Z^n, regardless of chosen bases.
bool same_sublattice(const IntMatrix& a, const IntMatrix& b);

IntLattice direct_sum(const IntLattice& a, const IntLattice& b);

// Counts of positive, negative and zero entries after diagonalizing a
// symmetric rational form by congruence.
struct Signature {
    size_t positive = 0;
    size_t negative = 0;
    size_t zero = 0;
};
Signature signature(const RatMatrix& g);

// All integer v with v^T q v <= bound for positive definite q, in
// lexicographic order. Exact (Fincke-Pohst over Q).
std::vector<IntVec> short_vectors(const RatMatrix& q, const Rat& bound);

}  // namespace flk
