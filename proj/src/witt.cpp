#include "flk/witt.hpp"

#include "flk/errors.hpp"

#include <algorithm>

namespace flk {

namespace {

Int mod(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Polynomials over F_p as coefficient vectors, low degree first.
using Fp = IntVec;

void fp_trim(Fp& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Fp fp_rem(Fp a, const Fp& b, const Int& p) {
    fp_trim(a);
    Int inv = inverse_mod(b.back(), p);
    while (a.size() >= b.size()) {
        Int f = mod(a.back() * inv, p);
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] = mod(a[shift + i] - f * b[i], p);
        fp_trim(a);
    }
    return a;
}

Fp fp_mulmod(const Fp& a, const Fp& b, const Fp& h, const Int& p) {
    if (a.empty() || b.empty()) return {};
    Fp c(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    for (auto& x : c) x = mod(x, p);
    return fp_rem(c, h, p);
}

Fp fp_gcd(Fp a, Fp b, const Int& p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        Fp r = fp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool fp_irreducible(const Fp& h, const Int& p) {
    const size_t f = h.size() - 1;
    if (f == 1) return true;
    // No factor of degree i <= f/2 iff gcd(x^{p^i} - x, h) = 1 for all such i.
    Fp xp{Int(0), Int(1)};
    for (size_t i = 1; i <= f / 2; ++i) {
        Fp base = xp, acc{Int(1)};
        for (Int e = p; e > 0; e /= 2) {
            if (e % 2 == 1) acc = fp_mulmod(acc, base, h, p);
            base = fp_mulmod(base, base, h, p);
        }
        xp = acc;
        Fp diff = xp;
        if (diff.size() < 2) diff.resize(2, Int(0));
        diff[1] = mod(diff[1] - 1, p);
        fp_trim(diff);
        Fp g = fp_gcd(h, diff, p);
        if (g.size() > 1) return false;
    }
    return true;
}

const WittRing& common_ring(const WittElement& a, const WittElement& b) {
    if (a.ring() && b.ring() && a.ring() != b.ring()) {
        const auto& x = *a.ring();
        const auto& y = *b.ring();
        if (x.prime() != y.prime() || x.degree() != y.degree() || x.precision() != y.precision())
            throw PreconditionError("Witt elements from different rings");
    }
    return a.ring() ? *a.ring() : *b.ring();
}

}  // namespace

IntPoly standard_defining_polynomial(const Int& p, unsigned f) {
    if (!is_prime(p)) throw PreconditionError(p.get_str() + " is not prime");
    if (f == 0) throw PreconditionError("degree must be at least 1");
    Int count = ipow(p, f);
    for (Int idx = 0; idx < count; ++idx) {
        Fp h(f + 1, Int(0));
        Int rest = idx;
        for (unsigned i = 0; i < f; ++i) {
            h[i] = rest % p;
            rest /= p;
        }
        h[f] = 1;
        if (f > 1 && h[0] == 0) continue;
        if (fp_irreducible(h, p)) return IntPoly(h);
    }
    throw InvariantError("no irreducible polynomial found");
}

WittElement::WittElement(std::shared_ptr<const WittRing> ring, IntVec coeffs)
    : ring_(std::move(ring)), c_(std::move(coeffs)) {}

bool WittElement::is_zero() const {
    for (const auto& x : c_)
        if (ring_ ? x != 0 : x != 0) return false;
    return true;
}

int WittElement::valuation() const {
    if (!ring_) throw PreconditionError("valuation of an element without a ring");
    int v = static_cast<int>(ring_->precision());
    for (const auto& x : c_)
        if (x != 0) v = std::min(v, flk::valuation(x, ring_->prime()));
    return v;
}

WittElement WittElement::operator+(const WittElement& o) const {
    if (!ring_ && !o.ring_) return WittElement(c_[0] + o.c_[0]);
    return common_ring(*this, o).add(*this, o);
}

WittElement WittElement::operator-(const WittElement& o) const {
    if (!ring_ && !o.ring_) return WittElement(c_[0] - o.c_[0]);
    return common_ring(*this, o).sub(*this, o);
}

WittElement WittElement::operator-() const { return WittElement(0L) - *this; }

WittElement WittElement::operator*(const WittElement& o) const {
    if (!ring_ && !o.ring_) return WittElement(c_[0] * o.c_[0]);
    return common_ring(*this, o).mul(*this, o);
}

bool WittElement::operator==(const WittElement& o) const {
    if (!ring_ && !o.ring_) return c_[0] == o.c_[0];
    const WittRing& r = common_ring(*this, o);
    return r.lift(*this).c_ == r.lift(o).c_;
}

std::shared_ptr<const WittRing> WittRing::create(const Int& p, unsigned f, unsigned n) {
    std::shared_ptr<WittRing> r(new WittRing(p, f, n));
    r->init_frobenius();
    return r;
}

WittRing::WittRing(const Int& p, unsigned f, unsigned n) : p_(p), f_(f), n_(n) {
    if (!is_prime(p)) throw PreconditionError(p.get_str() + " is not prime");
    if (f == 0) throw PreconditionError("degree must be at least 1");
    if (n == 0) throw PreconditionError("precision must be at least 1");
    mod_ = ipow(p, n);
    h_ = standard_defining_polynomial(p, f);
}

void WittRing::init_frobenius() {
    // sigma(x) is the root of h congruent to x^p; Newton from x^p.
    WittElement y = pow(gen(), p_);
    auto self = shared_from_this();
    auto eval = [&](const IntPoly& poly, const WittElement& at) {
        WittElement acc = zero();
        for (int k = poly.degree(); k >= 0; --k) acc = mul(acc, at) + from_int(poly.coeff(k));
        return acc;
    };
    IntPoly dh = h_.derivative();
    for (unsigned digits = 1; digits < 2 * n_ + 2; digits *= 2)
        y = sub(y, mul(eval(h_, y), inverse(eval(dh, y))));
    if (!eval(h_, y).is_zero()) throw InvariantError("Frobenius lift did not converge");
    sigma_x_ = y.coeffs();
}

Int WittRing::reduce(const Int& v) const { return mod(v, mod_); }

WittElement WittRing::zero() const { return from_int(0); }
WittElement WittRing::one() const { return from_int(1); }

WittElement WittRing::from_int(const Int& v) const {
    IntVec c(f_, Int(0));
    c[0] = reduce(v);
    return WittElement(shared_from_this(), c);
}

WittElement WittRing::from_rational(const Rat& v) const {
    IntVec c(f_, Int(0));
    c[0] = reduce_rational(v, mod_);
    return WittElement(shared_from_this(), c);
}

WittElement WittRing::from_coeffs(const IntVec& c0) const {
    if (c0.size() > f_) throw PreconditionError("too many Witt coefficients for degree " +
                                                std::to_string(f_));
    IntVec c(f_, Int(0));
    for (size_t i = 0; i < c0.size(); ++i) c[i] = reduce(c0[i]);
    return WittElement(shared_from_this(), c);
}

WittElement WittRing::gen() const {
    if (f_ == 1) return from_int(-h_.coeff(0));
    IntVec c(f_, Int(0));
    c[1] = 1;
    return WittElement(shared_from_this(), c);
}

WittElement WittRing::lift(const WittElement& a) const {
    if (a.ring()) return a;
    return from_int(a.coeffs()[0]);
}

WittElement WittRing::add(const WittElement& a0, const WittElement& b0) const {
    WittElement a = lift(a0), b = lift(b0);
    IntVec c(f_);
    for (unsigned i = 0; i < f_; ++i) c[i] = reduce(a.coeffs()[i] + b.coeffs()[i]);
    return WittElement(shared_from_this(), c);
}

WittElement WittRing::sub(const WittElement& a0, const WittElement& b0) const {
    WittElement a = lift(a0), b = lift(b0);
    IntVec c(f_);
    for (unsigned i = 0; i < f_; ++i) c[i] = reduce(a.coeffs()[i] - b.coeffs()[i]);
    return WittElement(shared_from_this(), c);
}

WittElement WittRing::mul(const WittElement& a0, const WittElement& b0) const {
    WittElement a = lift(a0), b = lift(b0);
    IntVec c(2 * f_ - 1, Int(0));
    for (unsigned i = 0; i < f_; ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (unsigned j = 0; j < f_; ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
    for (size_t k = c.size(); k-- > f_;) {
        if (c[k] == 0) continue;
        Int t = c[k];
        for (unsigned i = 0; i < f_; ++i) c[k - f_ + i] -= t * h_.coeff(i);
        c[k] = 0;
    }
    c.resize(f_);
    for (auto& x : c) x = reduce(x);
    return WittElement(shared_from_this(), c);
}

WittElement WittRing::sigma(const WittElement& a0) const {
    WittElement a = lift(a0);
    if (f_ == 1) return a;
    WittElement sx(shared_from_this(), sigma_x_);
    WittElement acc = zero();
    for (size_t k = f_; k-- > 0;) acc = add(mul(acc, sx), from_int(a.coeffs()[k]));
    return acc;
}

WittElement WittRing::sigma_power(const WittElement& a, unsigned k) const {
    WittElement r = lift(a);
    for (unsigned i = 0; i < k % f_; ++i) r = sigma(r);
    return r;
}

WittElement WittRing::pow(const WittElement& a, const Int& e) const {
    WittElement base = lift(a), acc = one();
    for (Int k = e; k > 0; k /= 2) {
        if (k % 2 == 1) acc = mul(acc, base);
        base = mul(base, base);
    }
    return acc;
}

WittElement WittRing::inverse(const WittElement& a0) const {
    WittElement a = lift(a0);
    if (a.valuation() != 0) throw PreconditionError("inverse of a non-unit");
    // a^{p^f - 2} inverts a modulo p; Newton doubles the correct digits.
    WittElement y = pow(a, ipow(p_, f_) - 2);
    for (unsigned digits = 1; digits < n_; digits *= 2) y = mul(y, sub(from_int(2), mul(a, y)));
    return y;
}

WittElement WittRing::divide_by_p_power(const WittElement& a0, unsigned k) const {
    WittElement a = lift(a0);
    Int pk = ipow(p_, k);
    IntVec c(f_);
    for (unsigned i = 0; i < f_; ++i) {
        if (!mpz_divisible_p(a.coeffs()[i].get_mpz_t(), pk.get_mpz_t()))
            throw PreconditionError("element not divisible by p^" + std::to_string(k));
        c[i] = a.coeffs()[i] / pk;
    }
    return WittElement(shared_from_this(), c);
}

IntMatrix WittRing::multiplication_matrix(const WittElement& a) const {
    IntMatrix m(f_, f_);
    WittElement basis = one();
    WittElement x = gen();
    for (unsigned j = 0; j < f_; ++j) {
        WittElement col = mul(a, basis);
        for (unsigned i = 0; i < f_; ++i) m(i, j) = col.coeffs()[i];
        basis = mul(basis, x);
    }
    return m;
}

Int WittRing::trace(const WittElement& a) const {
    IntMatrix m = multiplication_matrix(a);
    Int t = 0;
    for (unsigned i = 0; i < f_; ++i) t += m(i, i);
    return reduce(t);
}

Int WittRing::norm(const WittElement& a) const { return reduce(det(multiplication_matrix(a))); }

std::string WittRing::describe() const {
    return "W(F_" + p_.get_str() + "^" + std::to_string(f_) + ") mod " + p_.get_str() + "^" +
           std::to_string(n_) + ", h = " + to_string(h_, "x");
}

WittMatrix to_witt(const std::shared_ptr<const WittRing>& ring, const RatMatrix& m) {
    WittMatrix w(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) w(i, j) = ring->from_rational(m(i, j));
    return w;
}

WittMatrix to_witt(const std::shared_ptr<const WittRing>& ring, const IntMatrix& m) {
    WittMatrix w(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) w(i, j) = ring->from_int(m(i, j));
    return w;
}

WittMatrix witt_identity(const std::shared_ptr<const WittRing>& ring, size_t n) {
    return WittMatrix::identity(n, ring->zero(), ring->one());
}

WittMatrix sigma(const WittMatrix& m) {
    WittMatrix s(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            const auto& e = m(i, j);
            s(i, j) = e.ring() ? e.ring()->sigma(e) : e;
        }
    return s;
}

WittMatrix mul(const WittMatrix& a, const WittMatrix& b) { return a * b; }

namespace {

const WittRing& ring_of(const WittMatrix& a, const WittRing* given) {
    if (given) return *given;
    for (const auto& e : a.data())
        if (e.ring()) return *e.ring();
    throw PreconditionError("matrix has no Witt ring attached");
}

void swap_rows(WittMatrix& m, size_t i, size_t k) {
    if (i == k) return;
    for (size_t j = 0; j < m.cols(); ++j) std::swap(m(i, j), m(k, j));
}

void swap_cols(WittMatrix& m, size_t j, size_t k) {
    if (j == k) return;
    for (size_t i = 0; i < m.rows(); ++i) std::swap(m(i, j), m(i, k));
}

}  // namespace

LocalSmith local_smith(const WittMatrix& a0, const WittRing* given) {
    const WittRing& ring = ring_of(a0, given);
    auto rp = ring.shared_from_this();
    const size_t m = a0.rows(), n = a0.cols();
    const int big = static_cast<int>(ring.precision());
    WittMatrix a(m, n);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j) a(i, j) = ring.lift(a0(i, j));
    LocalSmith s;
    s.l = witt_identity(rp, m);
    s.l_inv = witt_identity(rp, m);
    s.r = witt_identity(rp, n);
    int worst = 0;
    for (size_t t = 0; t < std::min(m, n); ++t) {
        size_t bi = 0, bj = 0;
        int best = big;
        for (size_t i = t; i < m; ++i)
            for (size_t j = t; j < n; ++j) {
                int v = a(i, j).valuation();
                if (v < best) {
                    best = v;
                    bi = i;
                    bj = j;
                }
            }
        if (best >= big) break;
        if (2 * best >= big)
            throw PrecisionError("pivot of valuation " + std::to_string(best) +
                                 " at precision " + std::to_string(big));
        swap_rows(a, t, bi);
        swap_rows(s.l, t, bi);
        swap_cols(s.l_inv, t, bi);
        swap_cols(a, t, bj);
        swap_cols(s.r, t, bj);
        const unsigned v = static_cast<unsigned>(best);
        WittElement unit_inv = ring.inverse(ring.divide_by_p_power(a(t, t), v));
        for (size_t i = t + 1; i < m; ++i) {
            if (a(i, t).is_zero()) continue;
            WittElement factor = ring.mul(ring.divide_by_p_power(a(i, t), v), unit_inv);
            for (size_t j = t; j < n; ++j) a(i, j) = ring.sub(a(i, j), ring.mul(factor, a(t, j)));
            for (size_t j = 0; j < m; ++j) s.l(i, j) = ring.sub(s.l(i, j), ring.mul(factor, s.l(t, j)));
            for (size_t k = 0; k < m; ++k)
                s.l_inv(k, t) = ring.add(s.l_inv(k, t), ring.mul(s.l_inv(k, i), factor));
        }
        for (size_t j = t + 1; j < n; ++j) {
            if (a(t, j).is_zero()) continue;
            WittElement factor = ring.mul(ring.divide_by_p_power(a(t, j), v), unit_inv);
            for (size_t i = t; i < m; ++i) a(i, j) = ring.sub(a(i, j), ring.mul(factor, a(i, t)));
            for (size_t i = 0; i < n; ++i) s.r(i, j) = ring.sub(s.r(i, j), ring.mul(factor, s.r(i, t)));
        }
        s.pivot_valuations.push_back(best);
        worst = std::max(worst, best);
    }
    s.reliable_precision = big - worst;
    return s;
}

WittMatrix local_kernel(const WittMatrix& a, int& reliable, const WittRing* ring) {
    LocalSmith s = local_smith(a, ring);
    reliable = s.reliable_precision;
    const size_t n = a.cols(), r = s.rank();
    return s.r.submatrix(0, r, n, n - r);
}

WittMatrix local_kernel(const WittMatrix& a, const WittRing* ring) {
    int reliable = 0;
    return local_kernel(a, reliable, ring);
}

int local_det_valuation(const WittMatrix& a, const WittRing* ring) {
    if (!a.square()) throw PreconditionError("determinant of a non-square matrix");
    if (a.rows() == 0) return 0;
    LocalSmith s = local_smith(a, ring);
    if (s.rank() < a.rows()) throw PrecisionError("insufficient precision");
    int v = 0;
    for (int x : s.pivot_valuations) v += x;
    return v;
}

WittMatrix local_saturation(const WittMatrix& m, const WittRing* ring) {
    if (m.cols() == 0) return m;
    LocalSmith s = local_smith(m, ring);
    return s.l_inv.submatrix(0, 0, m.rows(), s.rank());
}

IntMatrix trace_form_gram(const WittMatrix& g, const WittRing* given) {
    if (!g.square()) throw PreconditionError("gram must be square");
    const size_t n = g.rows();
    if (n == 0) return IntMatrix(0, 0);
    const WittRing& ring = ring_of(g, given);
    const unsigned f = ring.degree();
    std::vector<WittElement> powers{ring.one()};
    for (unsigned k = 1; k < 2 * f; ++k) powers.push_back(ring.mul(powers.back(), ring.gen()));
    IntMatrix out(n * f, n * f);
    for (size_t j = 0; j < n; ++j)
        for (size_t l = 0; l < n; ++l)
            for (unsigned i = 0; i < f; ++i)
                for (unsigned k = 0; k < f; ++k)
                    out(j * f + i, l * f + k) = ring.trace(ring.mul(powers[i + k], g(j, l)));
    return out;
}

TraceFormDisc trace_form_disc(const WittMatrix& g, const WittRing* given) {
    TraceFormDisc out;
    const size_t n = g.rows();
    if (n == 0) return out;
    const WittRing& ring = ring_of(g, given);
    auto zp = WittRing::create(ring.prime(), 1, ring.precision());
    IntMatrix t = trace_form_gram(g, &ring);
    out.disc = PadicInt(ring.prime(), ring.precision(), det(t));
    out.valuation = local_det_valuation(to_witt(zp, t), zp.get());
    out.witt_valuation = local_det_valuation(g, &ring);
    WittMatrix unit(1, 1);
    unit(0, 0) = ring.one();
    out.constant = local_det_valuation(to_witt(zp, trace_form_gram(unit, &ring)), zp.get());
    if (out.valuation != static_cast<int>(ring.degree()) * out.witt_valuation + out.constant)
        throw InvariantError("trace form valuation " + std::to_string(out.valuation) +
                             " differs from f * " + std::to_string(out.witt_valuation) + " + " +
                             std::to_string(out.constant));
    return out;
}

}  // namespace flk
