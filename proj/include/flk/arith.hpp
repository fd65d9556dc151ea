#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace flk {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

Int ipow(const Int& base, unsigned long exp);
Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

// Floor of the square root of a non-negative integer.
Int isqrt(const Int& n);
bool is_perfect_square(const Int& n);

bool is_prime(const Int& n);

// Returns (p, e) if n = p^e with p prime and e >= 1.
bool prime_power(const Int& n, Int& p, unsigned& e);

// v_p(n); n must be non-zero.
int valuation(const Int& n, const Int& p);
// v_p of a non-zero rational (may be negative).
int valuation(const Rat& x, const Int& p);

// Prime factorization by trial division, primes ascending.
std::vector<std::pair<Int, unsigned>> factorize(const Int& n);

// Square-free part with sign, so x and squarefree_part(x) have the same
// class in Q*/(Q*)^2. x must be non-zero.
Int squarefree_part(const Rat& x);

// True iff x / y is a square in Q*.
bool same_square_class(const Rat& x, const Rat& y);

Int binomial(unsigned n, unsigned k);

// Euler's totient.
Int totient(const Int& n);

// Parse "a", "-a", "a/b" exactly. Throws PreconditionError on junk.
Rat parse_rational(const std::string& s);
Int parse_integer(const std::string& s);

// Comma separated integers / rationals, e.g. "1,-2,3".
IntVec parse_int_list(const std::string& s);
RatVec parse_rat_list(const std::string& s);

std::string to_string(const Int& x);
std::string to_string(const Rat& x);
std::string join(const IntVec& v, const char* sep = ",");
std::string join(const RatVec& v, const char* sep = ",");

// "2^5*3^3*5^2*7"
std::string factorization_string(const Int& n);

}  // namespace flk
