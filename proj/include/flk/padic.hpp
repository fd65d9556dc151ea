#pragma once

#include "flk/matrix.hpp"

#include <optional>

namespace flk {

constexpr unsigned kDefaultPrecision = 32;

// Element of Z_ell known modulo ell^precision.
struct PadicInt {
    Int prime;
    unsigned precision = kDefaultPrecision;
    Int residue;  // in [0, prime^precision)

    PadicInt() = default;
    PadicInt(const Int& prime, unsigned precision, const Int& value);
    // Rational with denominator prime to ell.
    static PadicInt from_rational(const Int& prime, unsigned precision, const Rat& value);

    Int modulus() const { return ipow(prime, precision); }
    bool is_zero() const { return residue == 0; }
    // v_ell, or `precision` when the residue is zero.
    int valuation() const;
    bool is_unit() const { return valuation() == 0; }

    PadicInt operator+(const PadicInt& o) const;
    PadicInt operator-(const PadicInt& o) const;
    PadicInt operator*(const PadicInt& o) const;
    bool operator==(const PadicInt& o) const {
        return prime == o.prime && precision == o.precision && residue == o.residue;
    }
};

// Inverse of a unit modulo m (m > 1). Throws if not invertible.
Int inverse_mod(const Int& a, const Int& m);

// Image of an ell-integral rational in Z / m, with m a power of ell.
Int reduce_rational(const Rat& x, const Int& m);

// Legendre symbol (a / p) for odd prime p: 1, -1 or 0.
int legendre(const Int& a, const Int& p);

// Square root of a quadratic residue modulo an odd prime, the smaller of the
// two roots.
Int sqrt_mod_prime(const Int& a, const Int& p);

// x with x^2 = d mod ell^N when d is a square in Z_ell; none otherwise.
std::optional<PadicInt> hensel_sqrt(const PadicInt& d);

// gamma with gamma^T G gamma = d mod ell^N, G unimodular over Z_ell (ell odd).
std::optional<IntVec> quadratic_represent(const IntMatrix& g, const PadicInt& d);

}  // namespace flk
