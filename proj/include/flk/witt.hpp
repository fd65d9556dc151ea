#pragma once

#include "flk/matrix.hpp"
#include "flk/padic.hpp"
#include "flk/poly.hpp"

#include <memory>
#include <string>

namespace flk {

class WittRing;

// Element of W = Z_p[x]/(h) modulo p^N, stored as f coefficients in
// [0, p^N). An element without a ring is a plain integer constant; it takes
// the ring of the other operand in mixed arithmetic.
class WittElement {
  public:
    WittElement() : c_{Int(0)} {}
    WittElement(long v) : c_{Int(v)} {}
    WittElement(const Int& v) : c_{v} {}
    WittElement(std::shared_ptr<const WittRing> ring, IntVec coeffs);

    const std::shared_ptr<const WittRing>& ring() const { return ring_; }
    // Coefficients of 1, x, ..., x^{f-1}; for a constant, a single entry.
    const IntVec& coeffs() const { return c_; }

    bool is_zero() const;
    // min over coefficients of v_p, or N when zero. Requires a ring.
    int valuation() const;

    WittElement operator+(const WittElement& o) const;
    WittElement operator-(const WittElement& o) const;
    WittElement operator-() const;
    WittElement operator*(const WittElement& o) const;
    WittElement& operator+=(const WittElement& o) { return *this = *this + o; }
    WittElement& operator-=(const WittElement& o) { return *this = *this - o; }
    WittElement& operator*=(const WittElement& o) { return *this = *this * o; }

    bool operator==(const WittElement& o) const;
    bool operator!=(const WittElement& o) const { return !(*this == o); }

  private:
    std::shared_ptr<const WittRing> ring_;
    IntVec c_;
};

// The unramified extension of Z_p of degree f at precision N with its
// Frobenius automorphism sigma.
class WittRing : public std::enable_shared_from_this<WittRing> {
  public:
    static std::shared_ptr<const WittRing> create(const Int& p, unsigned f, unsigned n);

    const Int& prime() const { return p_; }
    unsigned degree() const { return f_; }
    unsigned precision() const { return n_; }
    const Int& modulus() const { return mod_; }
    // Monic defining polynomial (coefficients in [0, p)).
    const IntPoly& defining_polynomial() const { return h_; }

    WittElement zero() const;
    WittElement one() const;
    WittElement from_int(const Int& v) const;
    WittElement from_rational(const Rat& v) const;
    WittElement from_coeffs(const IntVec& c) const;
    // The generator x.
    WittElement gen() const;
    // Lift a plain constant into this ring (no-op if already in it).
    WittElement lift(const WittElement& a) const;

    WittElement add(const WittElement& a, const WittElement& b) const;
    WittElement sub(const WittElement& a, const WittElement& b) const;
    WittElement mul(const WittElement& a, const WittElement& b) const;
    WittElement sigma(const WittElement& a) const;
    WittElement sigma_power(const WittElement& a, unsigned k) const;
    // Inverse of a unit; throws PreconditionError otherwise.
    WittElement inverse(const WittElement& a) const;
    WittElement pow(const WittElement& a, const Int& e) const;
    // a / p^k for a divisible by p^k; result is known modulo p^{N-k}, stored
    // with zero padding.
    WittElement divide_by_p_power(const WittElement& a, unsigned k) const;

    // Z_p-valued trace and norm (as residues mod p^N), via the regular
    // representation on the basis 1, x, ..., x^{f-1}.
    Int trace(const WittElement& a) const;
    Int norm(const WittElement& a) const;
    // Matrix of multiplication by a on the basis.
    IntMatrix multiplication_matrix(const WittElement& a) const;

    // Reduce an integer modulo p^N into [0, p^N).
    Int reduce(const Int& v) const;

    std::string describe() const;

  private:
    WittRing(const Int& p, unsigned f, unsigned n);
    void init_frobenius();

    Int p_;
    unsigned f_;
    unsigned n_;
    Int mod_;
    IntPoly h_;
    IntVec sigma_x_;
};

using WittMatrix = Matrix<WittElement>;

// Lexicographically smallest monic irreducible polynomial of degree f over
// F_p, ordered by sum c_i p^i over the non-leading coefficients.
IntPoly standard_defining_polynomial(const Int& p, unsigned f);

WittMatrix to_witt(const std::shared_ptr<const WittRing>& ring, const RatMatrix& m);
WittMatrix to_witt(const std::shared_ptr<const WittRing>& ring, const IntMatrix& m);
WittMatrix witt_identity(const std::shared_ptr<const WittRing>& ring, size_t n);
WittMatrix sigma(const WittMatrix& m);
WittMatrix mul(const WittMatrix& a, const WittMatrix& b);

// Smith form over the local ring: D = L * A * R with L, R invertible and D
// diagonal with pivots of non-decreasing valuation.
struct LocalSmith {
    WittMatrix l, l_inv, r;
    std::vector<int> pivot_valuations;  // one per non-zero pivot
    // Digits that remain reliable in kernel/image bases.
    int reliable_precision = 0;
    size_t rank() const { return pivot_valuations.size(); }
};

// Throws PrecisionError if a non-zero pivot has valuation >= N/2.
LocalSmith local_smith(const WittMatrix& a, const WittRing* ring = nullptr);

// Saturated basis (columns) of {x : A x = 0}.
// The ring may be omitted when some entry carries it.
WittMatrix local_kernel(const WittMatrix& a, const WittRing* ring = nullptr);
WittMatrix local_kernel(const WittMatrix& a, int& reliable_precision, const WittRing* ring = nullptr);

// Valuation of det(A) via Smith form; throws PrecisionError if A is singular
// at the working precision.
int local_det_valuation(const WittMatrix& a, const WittRing* ring = nullptr);

// Columns of m spanning the saturation of the column span.
WittMatrix local_saturation(const WittMatrix& m, const WittRing* ring = nullptr);

struct TraceFormDisc {
    PadicInt disc;        // disc of the rank fn trace-form lattice over Z_p
    int valuation = 0;    // v_p of it
    int witt_valuation = 0;  // v_p(disc_W(G))
    int constant = 0;     // v_p of the trace-form disc of W itself
};

// Restriction of scalars of a W-valued symmetric form to Z_p via the trace,
// on the basis x^i e_j. Asserts valuation = f * witt_valuation + constant.
TraceFormDisc trace_form_disc(const WittMatrix& g, const WittRing* ring = nullptr);

// Gram matrix of the restricted form, index j*f + i for x^i e_j.
IntMatrix trace_form_gram(const WittMatrix& g, const WittRing* ring = nullptr);

}  // namespace flk
