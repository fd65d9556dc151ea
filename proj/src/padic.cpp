#include "flk/padic.hpp"

#include "flk/errors.hpp"

namespace flk {

namespace {

Int mod(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

void require_compatible(const PadicInt& a, const PadicInt& b) {
    if (a.prime != b.prime || a.precision != b.precision)
        throw PreconditionError("p-adic operands with different prime or precision");
}

}  // namespace

PadicInt::PadicInt(const Int& p, unsigned n, const Int& value) : prime(p), precision(n) {
    if (!is_prime(p)) throw PreconditionError("modulus prime " + p.get_str() + " is not prime");
    if (n == 0) throw PreconditionError("precision must be at least 1");
    residue = mod(value, modulus());
}

PadicInt PadicInt::from_rational(const Int& p, unsigned n, const Rat& value) {
    PadicInt x(p, n, Int(0));
    x.residue = reduce_rational(value, x.modulus());
    return x;
}

int PadicInt::valuation() const {
    if (residue == 0) return static_cast<int>(precision);
    return flk::valuation(residue, prime);
}

PadicInt PadicInt::operator+(const PadicInt& o) const {
    require_compatible(*this, o);
    return PadicInt(prime, precision, residue + o.residue);
}

PadicInt PadicInt::operator-(const PadicInt& o) const {
    require_compatible(*this, o);
    return PadicInt(prime, precision, residue - o.residue);
}

PadicInt PadicInt::operator*(const PadicInt& o) const {
    require_compatible(*this, o);
    return PadicInt(prime, precision, residue * o.residue);
}

Int inverse_mod(const Int& a, const Int& m) {
    Int r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw PreconditionError(a.get_str() + " is not invertible modulo " + m.get_str());
    return r;
}

Int reduce_rational(const Rat& x, const Int& m) {
    Int num = x.get_num(), den = x.get_den();
    if (den == 1) return mod(num, m);
    if (gcd(den, m) != 1)
        throw PreconditionError("denominator of " + x.get_str() + " is not prime to the modulus");
    return mod(num * inverse_mod(den, m), m);
}

int legendre(const Int& a, const Int& p) { return mpz_legendre(a.get_mpz_t(), p.get_mpz_t()); }

Int sqrt_mod_prime(const Int& a0, const Int& p) {
    Int a = mod(a0, p);
    if (a == 0) return 0;
    if (legendre(a, p) != 1) throw PreconditionError(a.get_str() + " is not a square mod " + p.get_str());
    Int r;
    // Tonelli-Shanks.
    Int q = p - 1;
    unsigned s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    Int z = 2;
    while (legendre(z, p) != -1) ++z;
    Int c, t, e;
    mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    e = (q + 1) / 2;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    unsigned m = s;
    while (t != 1) {
        unsigned i = 0;
        Int tt = t;
        while (tt != 1) {
            tt = mod(tt * tt, p);
            ++i;
        }
        Int b = c;
        for (unsigned k = 0; k + i + 1 < m; ++k) b = mod(b * b, p);
        r = mod(r * b, p);
        c = mod(b * b, p);
        t = mod(t * c, p);
        m = i;
    }
    Int other = p - r;
    return other < r ? other : r;
}

std::optional<PadicInt> hensel_sqrt(const PadicInt& d) {
    if (d.prime == 2) throw PreconditionError("odd primes only");
    const int n = static_cast<int>(d.precision);
    const int v = d.valuation();
    if (v >= n) throw PrecisionError("insufficient precision");
    if (v % 2) return std::nullopt;
    const Int ell = d.prime;
    const Int m = ipow(ell, n - v);
    Int u = d.residue / ipow(ell, v);
    if (legendre(u, ell) != 1) return std::nullopt;
    Int x = sqrt_mod_prime(u, ell);
    // Newton: each step doubles the number of correct digits.
    for (int digits = 1; digits < n - v; digits *= 2) {
        Int fx = x * x - u;
        x = mod(x - fx * inverse_mod(2 * x, m), m);
    }
    return PadicInt(ell, d.precision, x * ipow(ell, v / 2));
}

namespace {

Int form_value(const IntMatrix& g, const IntVec& x) { return bilinear(g, x, x); }

// Lift x (a solution mod ell with unit partial derivative in coordinate j)
// to Q(x) = d mod m.
void lift_coordinate(const IntMatrix& g, IntVec& x, size_t j, const Int& d, const Int& m) {
    for (int guard = 0; guard < 256; ++guard) {
        Int fx = mod(form_value(g, x) - d, m);
        if (fx == 0) return;
        Int grad = 0;
        for (size_t k = 0; k < x.size(); ++k) grad += 2 * g(j, k) * x[k];
        x[j] = mod(x[j] - fx * inverse_mod(grad, m), m);
    }
    throw InvariantError("Hensel lift failed to converge");
}

// Lexicographically smallest non-zero x mod ell with Q(x) = d mod ell and
// some unit gradient coordinate; returns that coordinate.
std::optional<std::pair<IntVec, size_t>> residue_solution(const IntMatrix& g, const Int& d,
                                                         const Int& ell) {
    const size_t n = g.rows();
    IntVec x(n, Int(0));
    for (;;) {
        // advance odometer (last coordinate fastest)
        size_t k = n;
        while (k > 0) {
            --k;
            if (++x[k] < ell) break;
            x[k] = 0;
            if (k == 0) return std::nullopt;
        }
        if (mod(form_value(g, x) - d, ell) != 0) continue;
        IntVec gx = g * x;
        for (size_t j = 0; j < n; ++j)
            if (mod(gx[j], ell) != 0) return std::make_pair(x, j);
    }
}

}  // namespace

std::optional<IntVec> quadratic_represent(const IntMatrix& g0, const PadicInt& d) {
    if (d.prime == 2) throw PreconditionError("odd primes only");
    if (!is_symmetric(g0)) throw PreconditionError("gram not symmetric");
    const size_t n = g0.rows();
    const Int ell = d.prime;
    const Int big = d.modulus();
    if (n == 0) {
        if (d.is_zero()) return IntVec{};
        return std::nullopt;
    }
    if (mod(det(g0), ell) == 0) throw PreconditionError("discriminant not a unit");
    IntMatrix g(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) g(i, j) = mod(g0(i, j), big);
    if (d.is_zero()) return IntVec(n, Int(0));

    if (n == 1) {
        PadicInt ratio(ell, d.precision, d.residue * inverse_mod(g(0, 0), big));
        auto r = hensel_sqrt(ratio);
        if (!r) return std::nullopt;
        return IntVec{r->residue};
    }

    // Strip even powers of ell from d until a primitive solution exists.
    Int target = d.residue;
    unsigned k = 0;
    for (;;) {
        Int m = ipow(ell, d.precision - 2 * k);
        auto sol = residue_solution(g, mod(target, ell), ell);
        if (sol) {
            auto [x, j] = *sol;
            lift_coordinate(g, x, j, target, m);
            Int scale = ipow(ell, k);
            for (auto& c : x) c = mod(c * scale, big);
            return x;
        }
        if (target % (ell * ell) != 0 || 2 * (k + 1) >= d.precision) return std::nullopt;
        target /= ell * ell;
        ++k;
    }
}

}  // namespace flk
