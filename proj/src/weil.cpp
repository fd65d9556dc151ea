#include "flk/weil.hpp"

#include "flk/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace flk {

namespace {

IntPoly linear(const Int& root) { return IntPoly({Int(-root), Int(1)}); }

// Multiplicity of root r in f, and f with those factors removed.
unsigned strip_root(IntPoly& f, const Int& r) {
    unsigned m = 0;
    while (f.degree() > 0 && f(r) == 0) {
        f = exact_div(f, linear(r));
        ++m;
    }
    return m;
}

// Write P(T) = T^m Ptilde(T + R^2/T) for P of degree 2m; returns false if P
// has no such form.
bool to_trace_polynomial(const IntPoly& p, const Int& r2, IntPoly& out) {
    const int d = p.degree();
    if (d % 2) return false;
    const int m = d / 2;
    std::vector<Int> rest = p.coeffs();
    std::vector<Int> e(m + 1, Int(0));
    IntPoly base({r2, Int(0), Int(1)});  // T^2 + R^2
    for (int j = m; j >= 0; --j) {
        Int c = rest[m + j];
        e[j] = c;
        if (c == 0) continue;
        // subtract c * T^{m-j} (T^2 + R^2)^j
        IntPoly term = base.pow(j);
        for (int k = 0; k <= term.degree(); ++k) rest[m - j + k] -= c * term.coeff(k);
    }
    for (const auto& x : rest)
        if (x != 0) return false;
    out = IntPoly(e);
    return true;
}

IntPoly from_trace_polynomial(const IntPoly& pt, const Int& r2) {
    const int m = pt.degree();
    IntPoly base({r2, Int(0), Int(1)});
    IntPoly out;
    for (int j = 0; j <= m; ++j) {
        if (pt.coeff(j) == 0) continue;
        out = out + (base.pow(j) * IntPoly::monomial(Int(1), m - j)).scaled(pt.coeff(j));
    }
    return out;
}

// All roots of the monic polynomial real and in the open interval (-2R, 2R).
bool roots_in_open_interval(const IntPoly& pt, const Int& r) {
    if (pt.degree() <= 0) return true;
    RatPoly sq = squarefree(to_rational(pt));
    Rat lo(-2 * r), hi(2 * r);
    if (sq(hi) == 0 || sq(lo) == 0) return false;
    return sturm_count(sq, lo, hi) == sq.degree();
}

void require_weil_params(const Int& q, unsigned w) {
    Int p;
    unsigned e;
    if (!prime_power(q, p, e)) throw PreconditionError("q = " + q.get_str() + " is not a prime power");
    if (w % 2) throw PreconditionError("even weight required");
}

}  // namespace

Int weil_radius(const Int& q, unsigned w) {
    require_weil_params(q, w);
    return ipow(q, w / 2);
}

bool is_weil_polynomial(const IntPoly& f0, const Int& q, unsigned w) {
    const Int r = weil_radius(q, w);
    if (f0.degree() < 1 || f0.lead() != 1) return false;
    IntPoly f = f0;
    strip_root(f, r);
    strip_root(f, Int(-r));
    IntPoly pt;
    if (!to_trace_polynomial(f, r * r, pt)) return false;
    return roots_in_open_interval(pt, r);
}

double weil_enumeration_estimate(const Int& q, unsigned w, unsigned d) {
    const double r = weil_radius(q, w).get_d();
    double total = 0;
    for (unsigned m = 0; 2 * m <= d; ++m) {
        double box = 1;
        for (unsigned k = 1; k <= m; ++k)
            box *= 2 * binomial(m, k).get_d() * std::pow(2 * r, k) + 1;
        // (a, b) splits of the remaining degree into T - R and T + R factors
        total += box * (d - 2 * m + 1);
    }
    return total;
}

std::vector<IntPoly> enumerate_weil_polys(const Int& q, unsigned w, unsigned d, double budget) {
    const Int r = weil_radius(q, w);
    if (d < 1) throw PreconditionError("degree must be at least 1");
    double estimate = weil_enumeration_estimate(q, w, d);
    if (estimate > budget)
        throw BudgetError("enumeration budget exceeded: estimate " + std::to_string(estimate) +
                              " candidates for q=" + q.get_str() + " w=" + std::to_string(w) +
                              " d=" + std::to_string(d),
                          estimate);
    const Int r2 = r * r;
    std::vector<IntPoly> out;
    for (unsigned m = 0; 2 * m <= d; ++m) {
        // Monic trace polynomials of degree m with roots in (-2R, 2R): the
        // coefficient of u^{m-k} is bounded by binom(m, k) (2R)^k.
        std::vector<IntPoly> traces;
        std::vector<Int> coeffs(m + 1, Int(0));
        coeffs[m] = 1;
        std::function<void(unsigned)> rec = [&](unsigned k) {
            if (k > m) {
                IntPoly pt(coeffs);
                if (roots_in_open_interval(pt, r)) traces.push_back(pt);
                return;
            }
            Int bound = binomial(m, k) * ipow(2 * r, k);
            for (Int c = -bound; c <= bound; ++c) {
                coeffs[m - k] = c;
                rec(k + 1);
            }
        };
        rec(1);
        for (const auto& pt : traces) {
            IntPoly core = from_trace_polynomial(pt, r2);
            for (unsigned a = 0; a + 2 * m <= d; ++a) {
                unsigned b = d - 2 * m - a;
                out.push_back(core * linear(r).pow(a) * linear(-r).pow(b));
            }
        }
    }
    auto key = [](const IntPoly& p) {
        std::vector<Int> k(p.coeffs().rbegin(), p.coeffs().rend());
        return k;
    };
    std::sort(out.begin(), out.end(), [&](const IntPoly& x, const IntPoly& y) { return key(x) < key(y); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

GHFactorization factor_gh(const IntPoly& f, const Int& q, unsigned w) {
    if (!is_weil_polynomial(f, q, w)) throw PreconditionError("not a Weil polynomial: " + to_string(f));
    const Int r = weil_radius(q, w);
    GHFactorization out;
    out.h = f;
    out.m = strip_root(out.h, r);
    out.g = linear(r).pow(out.m);
    if (out.m == 0) {
        out.a = RatPoly(Rat(1));
        out.b = RatPoly();
    } else if (out.h.degree() == 0) {
        out.a = RatPoly();
        out.b = RatPoly(Rat(1));
    } else {
        RatPoly d = xgcd(to_rational(out.g), to_rational(out.h), out.a, out.b);
        if (d != RatPoly(Rat(1))) throw InvariantError("g and h are not coprime");
    }
    if (to_rational(out.g) * out.a + to_rational(out.h) * out.b != RatPoly(Rat(1)))
        throw InvariantError("Bezout identity failed");
    out.denominator = lcm(denominator_lcm(out.a), denominator_lcm(out.b));
    return out;
}

WeilConstants weil_constants(const Int& q, unsigned w, unsigned r, double budget) {
    if (r < 1) throw PreconditionError("rank must be at least 1");
    double estimate = 0;
    for (unsigned d = 1; d <= r; ++d) estimate += weil_enumeration_estimate(q, w, d);
    if (estimate > budget)
        throw BudgetError("enumeration budget exceeded: estimate " + std::to_string(estimate) +
                              " candidates for q=" + q.get_str() + " w=" + std::to_string(w) +
                              " r=" + std::to_string(r),
                          estimate);
    WeilConstants out;
    for (unsigned d = 1; d <= r; ++d)
        for (const auto& f : enumerate_weil_polys(q, w, d, budget)) {
            Int den = factor_gh(f, q, w).denominator;
            out.per_polynomial.emplace_back(f, den);
            out.denominator = lcm(out.denominator, den);
        }
    for (const auto& [p, e] : factorize(out.denominator)) {
        out.c = p;  // primes ascend, so the last one is the largest
        out.s = std::max(out.s, e);
    }
    out.c_prime = Int(2 * r) * out.s;
    return out;
}

unsigned c4_constant(const Int& p, unsigned f) {
    if (!is_prime(p)) throw PreconditionError(p.get_str() + " is not prime");
    if (f < 1) throw PreconditionError("degree must be at least 1");
    if (f == 1) return 0;
    IntPoly g = linear(p);
    IntPoly h = exact_div(IntPoly::monomial(Int(1), f) - IntPoly(ipow(p, f)), g);
    RatPoly a, b;
    xgcd(to_rational(g), to_rational(h), a, b);
    int worst = 0;
    for (const RatPoly* poly : {&a, &b})
        for (const auto& c : poly->coeffs())
            if (c != 0) worst = std::min(worst, valuation(c, p));
    return static_cast<unsigned>(-worst);
}

}  // namespace flk
