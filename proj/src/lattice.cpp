#include "flk/lattice.hpp"

#include <algorithm>
#include <functional>

namespace flk {

IntLattice::IntLattice(IntMatrix g, std::vector<std::string> l)
    : gram(std::move(g)), labels(std::move(l)) {
    if (!gram.square())
        throw PreconditionError("gram matrix is " + std::to_string(gram.rows()) + "x" +
                                std::to_string(gram.cols()) + ", expected square");
    for (size_t i = 0; i < gram.rows(); ++i)
        for (size_t j = i + 1; j < gram.cols(); ++j)
            if (gram(i, j) != gram(j, i))
                throw PreconditionError("gram not symmetric: entry (" + std::to_string(i) + "," +
                                        std::to_string(j) + ") = " + gram(i, j).get_str() +
                                        " but (" + std::to_string(j) + "," + std::to_string(i) +
                                        ") = " + gram(j, i).get_str());
    if (!labels.empty() && labels.size() != gram.rows())
        throw PreconditionError("label count does not match rank");
}

IntLattice SublatticeEmbedding::induced() const {
    if (basis.rows() != ambient.rank())
        throw PreconditionError("basis vectors do not lie in the ambient lattice");
    return IntLattice(basis.transpose() * ambient.gram * basis);
}

Int disc(const IntLattice& l) { return det(l.gram); }

std::pair<Int, Int> sublattice_disc(const SublatticeEmbedding& e) {
    if (!e.basis.square() || e.basis.rows() != e.ambient.rank())
        throw PreconditionError("change of basis must be square of the ambient rank");
    Int c = det(e.basis);
    if (c == 0) throw PreconditionError("infinite index");
    return {disc(e.induced()), c * c * disc(e.ambient)};
}

SublatticeEmbedding orthogonal_complement(const IntLattice& l, const std::vector<IntVec>& s) {
    const size_t n = l.rank();
    if (s.empty()) return {l, IntMatrix::identity(n)};
    for (const auto& v : s)
        if (v.size() != n) throw PreconditionError("vector length does not match lattice rank");
    IntMatrix conditions = IntMatrix::from_columns(s, n).transpose() * l.gram;
    return {l, integer_kernel(conditions)};
}

SublatticeEmbedding saturate(const SublatticeEmbedding& e) {
    return {e.ambient, saturation(e.basis)};
}

bool is_saturated(const SublatticeEmbedding& e) {
    if (e.basis.cols() == 0) return true;
    IntVec d = smith_invariants(e.basis);
    for (const auto& x : d)
        if (x != 1) return false;
    return true;
}

bool same_sublattice(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) return false;
    IntMatrix ha = a.cols() ? hnf_columns(a) : IntMatrix(a.rows(), 0);
    IntMatrix hb = b.cols() ? hnf_columns(b) : IntMatrix(b.rows(), 0);
    return ha == hb;
}

IntLattice direct_sum(const IntLattice& a, const IntLattice& b) {
    std::vector<std::string> labels;
    if (!a.labels.empty() && !b.labels.empty()) {
        labels = a.labels;
        labels.insert(labels.end(), b.labels.begin(), b.labels.end());
    }
    return IntLattice(direct_sum(a.gram, b.gram), labels);
}

Signature signature(const RatMatrix& g0) {
    if (!is_symmetric(g0)) throw PreconditionError("signature of a non-symmetric form");
    RatMatrix g = g0;
    const size_t n = g.rows();
    Signature s;
    auto swap_both = [&](size_t i, size_t j) {
        for (size_t c = 0; c < n; ++c) std::swap(g(i, c), g(j, c));
        for (size_t r = 0; r < n; ++r) std::swap(g(r, i), g(r, j));
    };
    for (size_t k = 0; k < n; ++k) {
        size_t p = k;
        while (p < n && g(p, p) == 0) ++p;
        if (p == n) {
            // Zero diagonal: e_i + e_j has norm 2 g_ij.
            size_t bi = n, bj = n;
            for (size_t i = k; i < n && bi == n; ++i)
                for (size_t j = i + 1; j < n; ++j)
                    if (g(i, j) != 0) {
                        bi = i;
                        bj = j;
                        break;
                    }
            if (bi == n) {
                s.zero += n - k;
                break;
            }
            for (size_t c = 0; c < n; ++c) g(bi, c) += g(bj, c);
            for (size_t r = 0; r < n; ++r) g(r, bi) += g(r, bj);
            p = bi;
        }
        swap_both(k, p);
        const Rat pivot = g(k, k);
        (pivot > 0 ? s.positive : s.negative) += 1;
        for (size_t i = k + 1; i < n; ++i) {
            if (g(i, k) == 0) continue;
            Rat f = g(i, k) / pivot;
            for (size_t c = k; c < n; ++c) g(i, c) -= f * g(k, c);
            for (size_t r = k; r < n; ++r) g(r, i) -= f * g(r, k);
        }
    }
    return s;
}

std::vector<IntVec> short_vectors(const RatMatrix& q, const Rat& bound) {
    const size_t n = q.rows();
    if (!is_symmetric(q)) throw PreconditionError("short vectors of a non-symmetric form");
    // q(v) = sum_i d_i (v_i + sum_{j>i} mu_ij v_j)^2
    RatMatrix w = q;
    std::vector<Rat> d(n);
    RatMatrix mu(n, n, Rat(0));
    for (size_t i = 0; i < n; ++i) {
        d[i] = w(i, i);
        if (d[i] <= 0) throw PreconditionError("form is not positive definite");
        for (size_t j = i + 1; j < n; ++j) mu(i, j) = w(i, j) / d[i];
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = i + 1; k < n; ++k) w(j, k) -= w(j, i) * mu(i, k);
    }
    std::vector<IntVec> out;
    if (bound < 0) return out;
    IntVec v(n);
    std::function<void(size_t, const Rat&)> descend = [&](size_t level, const Rat& rem) {
        const size_t i = level - 1;
        Rat c = 0;
        for (size_t j = i + 1; j < n; ++j) c -= mu(i, j) * v[j];
        Rat r = rem / d[i];
        Int s = isqrt(Int(r.get_num() / r.get_den()));
        Int lo, hi;
        mpz_fdiv_q(lo.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
        hi = lo + 1;
        lo -= s + 1;
        hi += s + 1;
        for (Int k = lo; k <= hi; ++k) {
            Rat diff = Rat(k) - c;
            Rat used = d[i] * diff * diff;
            if (used > rem) continue;
            v[i] = k;
            if (i == 0)
                out.push_back(v);
            else
                descend(i, rem - used);
        }
    };
    if (n == 0) {
        out.push_back(v);
        return out;
    }
    descend(n, bound);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace flk
