#include "flk/eigenlattice.hpp"

#include "flk/errors.hpp"

#include <algorithm>

namespace flk {

namespace {

RatMatrix evaluate(const IntPoly& p, const RatMatrix& a) {
    const size_t n = a.rows();
    RatMatrix acc(n, n, Rat(0));
    for (int k = p.degree(); k >= 0; --k)
        acc = acc * a + scale(RatMatrix::identity(n), Rat(p.coeff(k)));
    return acc;
}

RatMatrix shifted(const RatMatrix& a, const Rat& lambda) {
    return a - scale(RatMatrix::identity(a.rows()), lambda);
}

// Basis of the column span of a over the local ring: columns of L^{-1} scaled
// by the Smith pivots.
WittMatrix local_image(const WittMatrix& a, const WittRing& ring) {
    LocalSmith s = local_smith(a, &ring);
    WittMatrix out(a.rows(), s.rank());
    for (size_t j = 0; j < s.rank(); ++j) {
        WittElement scale_j = ring.from_int(ipow(ring.prime(), s.pivot_valuations[j]));
        for (size_t i = 0; i < a.rows(); ++i) out(i, j) = ring.mul(s.l_inv(i, j), scale_j);
    }
    return out;
}

WittMatrix hcat(const WittMatrix& a, const WittMatrix& b) {
    WittMatrix out(a.rows(), a.cols() + b.cols());
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
        for (size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
    }
    return out;
}

// Determinant valuation, refusing pivots that the available digits cannot
// certify.
int certified_det_valuation(const WittMatrix& m, int reliable, const WittRing& ring) {
    if (m.rows() == 0) return 0;
    LocalSmith s = local_smith(m, &ring);
    if (s.rank() < m.rows()) throw PrecisionError("insufficient precision");
    int v = 0;
    for (int x : s.pivot_valuations) {
        if (2 * x >= reliable) throw PrecisionError("insufficient precision");
        v += x;
    }
    return v;
}

// Entries of a - b all divisible by p^e.
bool agree_modulo(const WittMatrix& a, const WittMatrix& b, int e, const WittRing& ring) {
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) {
            WittElement d = ring.sub(a(i, j), b(i, j));
            if (!d.is_zero() && d.valuation() < e) return false;
        }
    return true;
}

bool all_zero(const WittMatrix& m) {
    for (const auto& e : m.data())
        if (!e.is_zero()) return false;
    return true;
}

}  // namespace

IntPoly validate_module(const FrobeniusModule& m) {
    const size_t n = m.rank();
    if (!m.gram.square() || !m.phi.square() || m.phi.rows() != n)
        throw PreconditionError("gram and phi must be square of the same size");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (m.gram(i, j) != m.gram(j, i))
                throw PreconditionError("gram not symmetric: entries (" + std::to_string(i) + "," +
                                        std::to_string(j) + ") and (" + std::to_string(j) + "," +
                                        std::to_string(i) + ") differ");
    Int p;
    unsigned e;
    if (!prime_power(m.q, p, e)) throw PreconditionError("q = " + m.q.get_str() + " is not a prime power");
    if (m.weight % 2) throw PreconditionError("even weight required");
    auto cp = berkowitz_charpoly(m.phi, Rat(0), Rat(1));
    std::vector<Int> c;
    for (size_t k = 0; k < cp.size(); ++k) {
        if (cp[k].get_den() != 1)
            throw PreconditionError("characteristic polynomial coefficient of T^" + std::to_string(k) +
                                    " is not integral: " + cp[k].get_str());
        c.emplace_back(cp[k].get_num());
    }
    Rat qw(ipow(m.q, m.weight));
    if (m.phi.transpose() * m.gram * m.phi != scale(m.gram, qw))
        throw PreconditionError("phi is not a similitude: phi^T G phi != q^w G");
    IntPoly f(c);
    if (n > 0 && !is_weil_polynomial(f, m.q, m.weight))
        throw PreconditionError("characteristic polynomial " + to_string(f) +
                                " is not a Weil polynomial");
    return f;
}

LocalLattice fixed_eigenlattice(const FrobeniusModule& m, const Int& lambda, const Int& ell,
                                unsigned precision) {
    auto zl = WittRing::create(ell, 1, precision);
    const size_t n = m.rank();
    LocalLattice out;
    if (n == 0) {
        out.basis = WittMatrix(0, 0);
        out.gram = WittMatrix(0, 0);
        out.reliable_precision = static_cast<int>(precision);
        return out;
    }
    WittMatrix shift = to_witt(zl, shifted(m.phi, Rat(lambda)));
    int reliable = 0;
    out.basis = local_kernel(shift, reliable, zl.get());
    out.reliable_precision = reliable;
    out.gram = out.basis.transpose() * to_witt(zl, m.gram) * out.basis;
    out.disc_valuation = certified_det_valuation(out.gram, reliable, *zl);
    return out;
}

GHSplit split_gh(const FrobeniusModule& m, const Int& ell, unsigned precision) {
    IntPoly f = validate_module(m);
    const Int lambda = weil_radius(m.q, m.weight);
    const size_t n = m.rank();
    RatMatrix shift = shifted(m.phi, Rat(lambda));
    if (rank(shift) != rank(shift * shift)) throw PreconditionError("semisimplicity violated");
    GHSplit out;
    out.gh = factor_gh(f, m.q, m.weight);
    auto zl = WittRing::create(ell, 1, precision);
    WittMatrix h_phi = to_witt(zl, evaluate(out.gh.h, m.phi));
    WittMatrix g_phi = to_witt(zl, evaluate(out.gh.g, m.phi));
    out.m1 = local_image(h_phi, *zl);
    out.m2 = local_image(g_phi, *zl);
    WittMatrix gram = to_witt(zl, m.gram);
    out.orthogonal = all_zero(out.m1.transpose() * gram * out.m2);
    if (out.m1.cols() + out.m2.cols() != n) throw InvariantError("M1 + M2 does not have full rank");
    out.index_valuation = n ? local_det_valuation(hcat(out.m1, out.m2), zl.get()) : 0;
    LocalLattice eigen = fixed_eigenlattice(m, lambda, ell, precision);
    if (eigen.rank() != out.m1.cols()) throw InvariantError("M1 does not have finite index in N");
    int v1 = out.m1.cols() ? local_det_valuation(out.m1.transpose() * gram * out.m1, zl.get()) : 0;
    out.eigen_index_valuation = (v1 - eigen.disc_valuation) / 2;
    return out;
}

DiscBoundReport disc_bound_report(const FrobeniusModule& m, const Int& ell,
                                  const WeilConstants& constants, unsigned precision) {
    validate_module(m);
    if (!is_prime(ell)) throw PreconditionError(ell.get_str() + " is not prime");
    DiscBoundReport r;
    r.ell = ell;
    Rat d = det(m.gram);
    if (d == 0) throw PreconditionError("degenerate lattice: disc = 0");
    r.v0 = valuation(d, ell);
    LocalLattice n = fixed_eigenlattice(m, weil_radius(m.q, m.weight), ell, precision);
    r.v = n.disc_valuation;
    r.eigen_rank = n.rank();
    r.c = constants.c;
    r.c_prime = constants.c_prime;
    r.first_applies = ell > constants.c;
    r.first_holds = !r.first_applies || r.v <= r.v0;
    r.second_holds = r.v <= constants.c_prime + r.v0;
    return r;
}

DiscBoundReport disc_bound_report(const FrobeniusModule& m, const Int& ell, unsigned precision,
                                  double budget) {
    return disc_bound_report(m, ell, weil_constants(m.q, m.weight, std::max<size_t>(1, m.rank()), budget),
                             precision);
}

void validate_semilinear(const SemilinearModule& m) {
    const size_t n = m.rank();
    if (!m.ring) throw PreconditionError("semilinear module without a Witt ring");
    if (!m.gram.square() || !m.a.square() || m.a.rows() != n)
        throw PreconditionError("gram and phi0 must be square of the same size");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (m.gram(i, j) != m.gram(j, i))
                throw PreconditionError("gram not symmetric: entries (" + std::to_string(i) + "," +
                                        std::to_string(j) + ") and (" + std::to_string(j) + "," +
                                        std::to_string(i) + ") differ");
    WittElement p2 = m.ring->from_int(m.ring->prime() * m.ring->prime());
    WittMatrix lhs = m.a.transpose() * m.gram * m.a;
    WittMatrix rhs = scale(sigma(m.gram), p2);
    if (lhs != rhs) throw PreconditionError("phi0 is not compatible: A^T G A != p^2 sigma(G)");
}

WittMatrix linear_power(const SemilinearModule& m) {
    WittMatrix acc = m.a, cur = m.a;
    for (unsigned k = 1; k < m.ring->degree(); ++k) {
        cur = sigma(cur);
        acc = acc * cur;
    }
    return acc;
}

SemilinearReport semilinear_pipeline(const SemilinearModule& m) {
    validate_semilinear(m);
    const WittRing& ring = *m.ring;
    const unsigned f = ring.degree();
    const size_t n = m.rank();
    const Int p = ring.prime();
    SemilinearReport r;
    r.p = p;
    r.f = f;
    r.n = n;
    r.c4 = c4_constant(p, f);
    if (n == 0) return r;
    WittMatrix phi = linear_power(m);
    WittMatrix shift = phi - scale(witt_identity(m.ring, n), ring.from_int(ipow(p, f)));
    int reliable = 0;
    WittMatrix b = local_kernel(shift, reliable, &ring);
    if (local_kernel(shift * shift, &ring).cols() != b.cols())
        throw PreconditionError("semisimplicity violated: q is not a semisimple eigenvalue");
    const size_t k = b.cols();
    r.rank_nprime = k;
    WittMatrix gram_nprime = b.transpose() * m.gram * b;
    r.witt_disc_valuation = certified_det_valuation(gram_nprime, reliable, ring);
    r.bound = static_cast<int>(f) * r.witt_disc_valuation + static_cast<int>(2 * r.c4 * n * f);
    if (k == 0) return r;

    // phi0 restricted to N': solve B A' = A sigma(B) with a left inverse of B.
    LocalSmith s = local_smith(b, &ring);
    WittMatrix d_inv(k, n);
    for (size_t j = 0; j < k; ++j)
        if (s.pivot_valuations[j] != 0) throw InvariantError("eigenlattice basis is not saturated");
    WittMatrix db = s.l * b * s.r;  // diagonal with unit pivots
    for (size_t j = 0; j < k; ++j) d_inv(j, j) = ring.inverse(db(j, j));
    WittMatrix left_inv = s.r * d_inv * s.l;
    WittMatrix a_restricted = left_inv * m.a * sigma(b);
    if (!agree_modulo(b * a_restricted, m.a * sigma(b), reliable, ring)) throw InvariantError("phi0 does not preserve N'");

    // Z_p-matrix of phi0 on N' in the basis x^i e_j (index j f + i).
    // A' is only determined modulo p^reliable.
    auto zp = WittRing::create(p, 1, static_cast<unsigned>(reliable));
    const size_t kf = k * f;
    IntMatrix m0(kf, kf);
    WittElement sx = ring.sigma(ring.gen()), sxi = ring.one();
    for (unsigned i = 0; i < f; ++i) {
        for (size_t j = 0; j < k; ++j)
            for (size_t l = 0; l < k; ++l) {
                WittElement w = ring.mul(sxi, ring.lift(a_restricted(l, j)));
                for (unsigned c = 0; c < f; ++c) m0(l * f + c, j * f + i) = w.coeffs()[c];
            }
        sxi = ring.mul(sxi, sx);
    }
    r.trace_disc_valuation = trace_form_disc(gram_nprime, &ring).valuation;

    WittMatrix shift0 = to_witt(zp, m0) - scale(witt_identity(zp, kf), zp->from_int(p));
    int reliable0 = 0;
    WittMatrix kn = local_kernel(shift0, reliable0, zp.get());
    r.rank_n = kn.cols();
    if (r.rank_n == 0) return r;
    // Back to W-coordinates in N' and pair with the W-valued form.
    WittMatrix vecs(k, r.rank_n);
    for (size_t c = 0; c < r.rank_n; ++c)
        for (size_t j = 0; j < k; ++j) {
            IntVec coeffs(f);
            for (unsigned i = 0; i < f; ++i) coeffs[i] = kn(j * f + i, c).coeffs()[0];
            vecs(j, c) = ring.from_coeffs(coeffs);
        }
    WittMatrix gn = vecs.transpose() * gram_nprime * vecs;
    // p^2 (v, w) = p^2 sigma((v, w)) on N, so the pairing is sigma-fixed only
    // modulo p^(known - 2).
    const int known = std::min(reliable, reliable0) - 2;
    if (known <= 0) throw PrecisionError("insufficient precision");
    const Int noise = ipow(Int(p), known);
    WittMatrix gz(r.rank_n, r.rank_n);
    for (size_t i = 0; i < r.rank_n; ++i)
        for (size_t j = 0; j < r.rank_n; ++j) {
            IntVec c = ring.lift(gn(i, j)).coeffs();
            for (unsigned t = 1; t < f; ++t)
                if (c[t] % noise != 0) throw InvariantError("pairing on N is not Z_p-valued");
            gz(i, j) = zp->from_int(c[0]);
        }
    r.disc_valuation = certified_det_valuation(gz, std::min(reliable, reliable0), *zp);
    return r;
}

Int c3_constant(const Int& c2, unsigned c4, unsigned f, unsigned rank) {
    return c2 * f + Int(2) * rank * c4 * f;
}

ParityResult eigen_disc_parity(const RatMatrix& gram, const RatMatrix& phi) {
    const size_t n = gram.rows();
    if (!gram.square() || !phi.square() || phi.rows() != n)
        throw PreconditionError("gram and phi must be square of the same size");
    if (!is_symmetric(gram)) throw PreconditionError("gram not symmetric");
    Rat dv = det(gram);
    if (dv == 0) throw PreconditionError("degenerate quadratic space");
    if (phi.transpose() * gram * phi != gram) throw PreconditionError("phi is not orthogonal");
    ParityResult r;
    Rat left = 1;
    std::vector<RatVec> cols;
    for (int sign : {1, -1}) {
        RatMatrix shift = shifted(phi, Rat(sign));
        if (rank(shift) != rank(shift * shift)) throw PreconditionError("semisimplicity violated");
        RatMatrix k = rational_kernel(shift);
        (sign == 1 ? r.plus_rank : r.minus_rank) = k.cols();
        if (k.cols()) left *= det(k.transpose() * gram * k);
    }
    r.n = n - r.plus_rank - r.minus_rank;
    if (r.n % 2) throw PreconditionError("impossible by eigenvalue pairing");
    if (left == 0) throw InvariantError("eigenspaces are degenerate");
    Rat right = (r.n / 2) % 2 ? Rat(-dv) : dv;
    r.left = squarefree_part(left);
    r.right = squarefree_part(right);
    return r;
}

}  // namespace flk
