#pragma once

#include "flk/poly.hpp"

#include <vector>

namespace flk {

constexpr double kDefaultBudget = 2e7;

struct WeilPolynomial {
    Int q;
    unsigned weight = 0;
    IntPoly poly;
};

// q^{w/2}; q must be a prime power and w even.
Int weil_radius(const Int& q, unsigned w);

// Exact test: monic integer f with every complex root of modulus R = q^{w/2}.
bool is_weil_polynomial(const IntPoly& f, const Int& q, unsigned w);

// Number of candidate polynomials the enumeration of degree d visits.
double weil_enumeration_estimate(const Int& q, unsigned w, unsigned d);

// All monic degree-d Weil polynomials, sorted by coefficient tuple from the
// T^{d-1} coefficient down. Throws BudgetError if the estimate exceeds budget.
std::vector<IntPoly> enumerate_weil_polys(const Int& q, unsigned w, unsigned d,
                                          double budget = kDefaultBudget);

struct GHFactorization {
    IntPoly g;  // (T - R)^m
    IntPoly h;
    unsigned m = 0;
    RatPoly a, b;  // a*g + b*h = 1
    Int denominator = 1;  // lcm of the denominators of a and b
};

GHFactorization factor_gh(const IntPoly& f, const Int& q, unsigned w);

struct WeilConstants {
    Int c = 1;        // largest prime dividing the denominator lcm (1 if none)
    Int c_prime = 0;  // 2 r s
    Int denominator = 1;
    unsigned s = 0;   // largest prime exponent in the denominator lcm
    // every enumerated polynomial of degree 1..r with its own denominator
    std::vector<std::pair<IntPoly, Int>> per_polynomial;
};

WeilConstants weil_constants(const Int& q, unsigned w, unsigned r, double budget = kDefaultBudget);

// Least r >= 0 with p^r a, p^r b p-integral for the Bezout pair of
// g = T - p, h = (T^f - p^f)/(T - p).
unsigned c4_constant(const Int& p, unsigned f);

}  // namespace flk
