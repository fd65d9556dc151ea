#include "flk/matrix.hpp"

#include <algorithm>

namespace flk {

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

IntMatrix to_integer(const RatMatrix& m) {
    IntMatrix r(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).get_den() != 1)
                throw PreconditionError("matrix entry (" + std::to_string(i) + "," +
                                        std::to_string(j) + ") is not an integer");
            r(i, j) = m(i, j).get_num();
        }
    return r;
}

Int det(const IntMatrix& m0) {
    if (!m0.square()) throw PreconditionError("determinant of a non-square matrix");
    const size_t n = m0.rows();
    if (n == 0) return 1;
    IntMatrix m = m0;
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            for (size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Int t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = t;
            }
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> rref(RatMatrix& m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        for (size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(p, j));
        Rat inv = 1 / m(r, c);
        for (size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rat f = m(i, c);
            for (size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Column operations on a and (optionally) the transform u so that a*u stays
// consistent: col_j <- x*col_j + y*col_k, col_k <- z*col_j + w*col_k.
void combine_columns(IntMatrix& a, IntMatrix* u, size_t j, size_t k, const Int& x,
                     const Int& y, const Int& z, const Int& w) {
    auto apply = [&](IntMatrix& m) {
        for (size_t i = 0; i < m.rows(); ++i) {
            Int cj = m(i, j), ck = m(i, k);
            m(i, j) = x * cj + y * ck;
            m(i, k) = z * cj + w * ck;
        }
    };
    apply(a);
    if (u) apply(*u);
}

void swap_columns(IntMatrix& m, size_t j, size_t k) {
    for (size_t i = 0; i < m.rows(); ++i) std::swap(m(i, j), m(i, k));
}

// Unimodular column reduction: returns the number of non-zero columns of the
// echelon form; on return a*u0 = a (updated) with u the accumulated
// unimodular transform, and columns [rank, cols) of a are zero.
size_t column_echelon(IntMatrix& a, IntMatrix& u) {
    u = IntMatrix::identity(a.cols());
    size_t col = 0;
    for (size_t i = 0; i < a.rows() && col < a.cols(); ++i) {
        for (size_t k = col + 1; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            if (a(i, col) == 0) {
                swap_columns(a, col, k);
                swap_columns(u, col, k);
                continue;
            }
            Int g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a(i, col).get_mpz_t(),
                       a(i, k).get_mpz_t());
            Int p = a(i, col) / g, q = a(i, k) / g;
            // [s, -q; t, p] has determinant s*p + t*q = 1.
            combine_columns(a, &u, col, k, s, t, Int(-q), p);
        }
        if (a(i, col) != 0) ++col;
    }
    return col;
}

}  // namespace

Rat det(const RatMatrix& m0) {
    if (!m0.square()) throw PreconditionError("determinant of a non-square matrix");
    const size_t n = m0.rows();
    RatMatrix m = m0;
    Rat d = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (size_t j = 0; j < n; ++j) std::swap(m(c, j), m(p, j));
            d = -d;
        }
        d *= m(c, c);
        for (size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            Rat f = m(i, c) / m(c, c);
            for (size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return d;
}

size_t rank(const RatMatrix& m) {
    RatMatrix t = m;
    return rref(t).size();
}

size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

RatMatrix rational_kernel(const RatMatrix& m) {
    RatMatrix t = m;
    auto pivots = rref(t);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        RatVec v(m.cols(), Rat(0));
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -t(r, free);
        basis.push_back(std::move(v));
    }
    return RatMatrix::from_columns(basis, m.cols());
}

RatMatrix inverse(const RatMatrix& m) {
    if (!m.square()) throw PreconditionError("inverse of a non-square matrix");
    const size_t n = m.rows();
    RatMatrix aug(n, 2 * n, Rat(0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto pivots = rref(aug);
    if (pivots.size() < n || (n && pivots[n - 1] != n - 1))
        throw PreconditionError("matrix is singular");
    return aug.submatrix(0, n, n, n);
}

IntMatrix integer_kernel(const IntMatrix& m) {
    IntMatrix a = m, u;
    size_t r = column_echelon(a, u);
    IntMatrix k = u.submatrix(0, r, u.rows(), u.cols() - r);
    if (k.cols() == 0) return k;
    return hnf_columns(k);
}

IntMatrix hnf_rows(const IntMatrix& m0) {
    IntMatrix m = m0;
    const size_t nr = m.rows(), nc = m.cols();
    size_t r = 0;
    std::vector<size_t> pivot_cols;
    for (size_t c = 0; c < nc && r < nr; ++c) {
        // gcd-eliminate column c among rows r..nr-1
        for (size_t i = r + 1; i < nr; ++i) {
            if (m(i, c) == 0) continue;
            if (m(r, c) == 0) {
                for (size_t j = 0; j < nc; ++j) std::swap(m(r, j), m(i, j));
                continue;
            }
            Int g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m(r, c).get_mpz_t(),
                       m(i, c).get_mpz_t());
            Int p = m(r, c) / g, q = m(i, c) / g;
            for (size_t j = 0; j < nc; ++j) {
                Int a = m(r, j), b = m(i, j);
                m(r, j) = s * a + t * b;
                m(i, j) = p * b - q * a;
            }
        }
        if (m(r, c) == 0) continue;
        if (m(r, c) < 0)
            for (size_t j = 0; j < nc; ++j) m(r, j) = -m(r, j);
        for (size_t i = 0; i < r; ++i) {
            Int f;
            mpz_fdiv_q(f.get_mpz_t(), m(i, c).get_mpz_t(), m(r, c).get_mpz_t());
            if (f == 0) continue;
            for (size_t j = 0; j < nc; ++j) m(i, j) -= f * m(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    return m.submatrix(0, 0, r, nc);
}

IntMatrix hnf_columns(const IntMatrix& m) { return hnf_rows(m.transpose()).transpose(); }

IntVec smith_invariants(const IntMatrix& m0) {
    IntMatrix m = m0;
    const size_t nr = m.rows(), nc = m.cols();
    IntVec out;
    for (size_t t = 0; t < std::min(nr, nc); ++t) {
        // Move a non-zero entry of least absolute value to (t, t).
        bool found = false;
        for (;;) {
            size_t bi = 0, bj = 0;
            found = false;
            for (size_t i = t; i < nr; ++i)
                for (size_t j = t; j < nc; ++j)
                    if (m(i, j) != 0 && (!found || abs(m(i, j)) < abs(m(bi, bj)))) {
                        bi = i;
                        bj = j;
                        found = true;
                    }
            if (!found) break;
            for (size_t j = 0; j < nc; ++j) std::swap(m(t, j), m(bi, j));
            for (size_t i = 0; i < nr; ++i) std::swap(m(i, t), m(i, bj));
            bool clean = true;
            for (size_t i = t + 1; i < nr; ++i) {
                Int q = m(i, t) / m(t, t);
                if (q != 0)
                    for (size_t j = t; j < nc; ++j) m(i, j) -= q * m(t, j);
                if (m(i, t) != 0) clean = false;
            }
            for (size_t j = t + 1; j < nc; ++j) {
                Int q = m(t, j) / m(t, t);
                if (q != 0)
                    for (size_t i = t; i < nr; ++i) m(i, j) -= q * m(i, t);
                if (m(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // Divisibility condition: fold a violating row into row t.
            bool divides = true;
            for (size_t i = t + 1; i < nr && divides; ++i)
                for (size_t j = t + 1; j < nc; ++j)
                    if (m(i, j) % m(t, t) != 0) {
                        for (size_t jj = t; jj < nc; ++jj) m(t, jj) += m(i, jj);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (!found) break;
        out.push_back(abs(m(t, t)));
    }
    return out;
}

IntMatrix saturation(const IntMatrix& m) {
    const size_t n = m.rows();
    if (m.cols() == 0) return IntMatrix(n, 0);
    IntMatrix left = integer_kernel(m.transpose());
    if (left.cols() == 0) return IntMatrix::identity(n);
    return integer_kernel(left.transpose());
}

IntVec primitive_integer(const RatVec& v) {
    Int den = 1;
    for (const auto& x : v) den = lcm(den, Int(x.get_den()));
    IntVec out(v.size());
    Int g = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        Rat s = v[i] * den;
        out[i] = s.get_num();
        g = gcd(g, out[i]);
    }
    if (g == 0) throw PreconditionError("zero vector has no primitive multiple");
    for (auto& x : out) x /= g;
    return out;
}

IntMatrix clear_denominators_columns(const RatMatrix& m) {
    std::vector<IntVec> cols;
    for (size_t j = 0; j < m.cols(); ++j) cols.push_back(primitive_integer(m.col(j)));
    return IntMatrix::from_columns(cols, m.rows());
}

}  // namespace flk
