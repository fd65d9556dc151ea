#pragma once

#include "flk/arith.hpp"
#include "flk/errors.hpp"

#include <string>
#include <vector>

namespace flk {

// Dense univariate polynomial, coefficients low degree first, no trailing
// zeros. The zero polynomial has an empty coefficient vector.
template <class T>
class Poly {
  public:
    Poly() = default;
    Poly(std::vector<T> c) : c_(std::move(c)) { trim(); }
    Poly(const T& constant) : c_{constant} { trim(); }
    static Poly monomial(const T& a, size_t k) {
        std::vector<T> c(k + 1, T(0));
        c[k] = a;
        return Poly(c);
    }
    static Poly x() { return monomial(T(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    T coeff(size_t k) const { return k < c_.size() ? c_[k] : T(0); }
    T lead() const { return c_.empty() ? T(0) : c_.back(); }
    const std::vector<T>& coeffs() const { return c_; }

    T operator()(const T& x) const {
        T r = 0;
        for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    Poly operator+(const Poly& o) const {
        std::vector<T> r(std::max(c_.size(), o.c_.size()), T(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return Poly(r);
    }
    Poly operator-() const {
        std::vector<T> r = c_;
        for (auto& x : r) x = -x;
        return Poly(r);
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<T> r(c_.size() + o.c_.size() - 1, T(0));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return Poly(r);
    }
    Poly scaled(const T& s) const {
        std::vector<T> r = c_;
        for (auto& x : r) x *= s;
        return Poly(r);
    }
    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<T> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * T(static_cast<long>(i));
        return Poly(r);
    }
    Poly pow(unsigned e) const {
        Poly r(T(1)), b = *this;
        for (unsigned i = 0; i < e; ++i) r = r * b;
        return r;
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<T> c_;
};

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rat>;

RatPoly to_rational(const IntPoly& p);
// Throws if a coefficient is not integral.
IntPoly to_integer(const RatPoly& p);

// Euclidean division over Q: a = q*b + r, deg r < deg b.
void divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r);
RatPoly operator/(const RatPoly& a, const RatPoly& b);
RatPoly operator%(const RatPoly& a, const RatPoly& b);

RatPoly monic(const RatPoly& p);
// Monic gcd (zero if both are zero).
RatPoly gcd(const RatPoly& a, const RatPoly& b);

// Extended Euclid with monic remainders: returns monic gcd d and (s, t)
// with s*a + t*b = d, deg s < deg b - deg d, deg t < deg a - deg d.
RatPoly xgcd(const RatPoly& a, const RatPoly& b, RatPoly& s, RatPoly& t);

// Exact division of integer polynomials; throws if not divisible.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);

// Number of distinct real roots of p in the half-open interval (lo, hi],
// by a Sturm sequence over Q.
int sturm_count(const RatPoly& p, const Rat& lo, const Rat& hi);

// Squarefree part p / gcd(p, p').
RatPoly squarefree(const RatPoly& p);

// Lcm of the denominators of the coefficients.
Int denominator_lcm(const RatPoly& p);

// "T^2 - 3*T + 4" style rendering in variable `var`.
std::string to_string(const IntPoly& p, const char* var = "T");
std::string to_string(const RatPoly& p, const char* var = "T");
// Coefficient list, low degree first: "4,-3,1".
std::string coeff_list(const IntPoly& p);

}  // namespace flk
