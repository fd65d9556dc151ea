#pragma once

#include "flk/cone.hpp"
#include "flk/eigenlattice.hpp"
#include "flk/weil.hpp"

#include <deque>
#include <functional>
#include <map>
#include <optional>

namespace flk::testing {

inline Int form(const IntMatrix& g, const IntVec& x, const IntVec& y) {
    Int s = 0;
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = 0; j < y.size(); ++j) s += x[i] * g(i, j) * y[j];
    return s;
}

// Every root in the box |coords| <= r, by exhaustion.
inline std::vector<IntVec> roots_in_box(const IntMatrix& g, long r) {
    const size_t n = g.rows();
    std::vector<IntVec> out;
    IntVec v(n, Int(-r));
    for (;;) {
        if (form(g, v, v) == -2) out.push_back(v);
        size_t i = 0;
        while (i < n && v[i] == r) v[i++] = -r;
        if (i == n) break;
        v[i] += 1;
    }
    return out;
}

struct BfsResult {
    size_t length = 0;
    IntVec end;
};

// Shortest reflection word (over a complete finite root list) taking x, or
// -x when (x, a) < 0, into the chamber of a.
inline std::optional<BfsResult> bfs_walk(const IntMatrix& g, const std::vector<IntVec>& roots, IntVec x,
                                         const IntVec& a, size_t max_len) {
    if (form(g, x, a) < 0)
        for (auto& e : x) e = -e;
    auto in_chamber = [&](const IntVec& y) {
        for (const auto& d : roots)
            if (form(g, y, d) * form(g, a, d) < 0) return false;
        return true;
    };
    std::map<IntVec, size_t> seen{{x, 0}};
    std::deque<IntVec> queue{x};
    while (!queue.empty()) {
        IntVec y = queue.front();
        queue.pop_front();
        size_t depth = seen[y];
        if (in_chamber(y)) return BfsResult{depth, y};
        if (depth == max_len) continue;
        for (const auto& d : roots) {
            Int s = form(g, y, d);
            IntVec z = y;
            for (size_t i = 0; i < z.size(); ++i) z[i] += s * d[i];
            if (seen.emplace(z, depth + 1).second) queue.push_back(z);
        }
    }
    return std::nullopt;
}

// Fraction-free Gaussian elimination.
inline Int bareiss_det(IntMatrix a) {
    const size_t n = a.rows();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            size_t r = k + 1;
            while (r < n && a(r, k) == 0) ++r;
            if (r == n) return 0;
            for (size_t j = 0; j < n; ++j) std::swap(a(k, j), a(r, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

// v_ell of the disc of the saturated integer kernel of (phi - lambda) with
// the restricted form.
inline int exact_eigen_valuation(const FrobeniusModule& m, const Int& lambda, const Int& ell) {
    IntMatrix shift = to_integer(m.phi - scale(RatMatrix::identity(m.rank()), Rat(lambda)));
    IntMatrix k = integer_kernel(shift);
    if (k.cols() == 0) return 0;
    Int d = bareiss_det(k.transpose() * to_integer(m.gram) * k);
    return valuation(d, ell);
}

// Every monic degree-d integer polynomial in the coefficient box
// |a_i| <= binom(d, i) R^{d-i}, filtered by the exact modulus test.
inline std::vector<IntPoly> weil_box_oracle(const Int& q, unsigned w, unsigned d) {
    const Int r = weil_radius(q, w);
    std::vector<IntPoly> out;
    std::vector<Int> c(d + 1, Int(0));
    c[d] = 1;
    std::function<void(unsigned)> rec = [&](unsigned i) {
        if (i == d) {
            IntPoly f(c);
            if (is_weil_polynomial(f, q, w)) out.push_back(f);
            return;
        }
        Int bound = binomial(d, i) * ipow(r, d - i);
        for (Int a = -bound; a <= bound; ++a) {
            c[i] = a;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

// (x, y) in the explicit Gram of Z + (NS + T) + Z with the ends paired to -1.
inline Int explicit_mukai_pairing(const IntMatrix& ns, const IntMatrix& t, const IntVec& x, const IntVec& y) {
    IntMatrix inner = direct_sum(ns, t);
    const size_t m = inner.rows() + 2;
    IntMatrix g(m, m, Int(0));
    g(0, m - 1) = g(m - 1, 0) = -1;
    for (size_t i = 0; i < inner.rows(); ++i)
        for (size_t j = 0; j < inner.cols(); ++j) g(i + 1, j + 1) = inner(i, j);
    return bilinear(g, x, y);
}

}  // namespace flk::testing
