#include "flk/cone.hpp"

#include "flk/errors.hpp"

#include <algorithm>

namespace flk {

namespace {

constexpr int kMaxWalkSteps = 100000;

void check_vector(const HyperbolicLattice& l, const IntVec& v, const char* name) {
    if (v.size() != l.rank())
        throw PreconditionError(std::string(name) + " has " + std::to_string(v.size()) +
                                " coordinates, expected " + std::to_string(l.rank()));
}

// Positive definite majorant 2 (v, a)^2 / a^2 - v^2.
RatMatrix majorant(const HyperbolicLattice& l, const IntVec& a) {
    const RatMatrix g = to_rational(l.lattice.gram);
    const RatVec ga = to_rational(IntMatrix::column(l.lattice.gram * a)).col(0);
    const Rat a2(l.square(a));
    RatMatrix m(l.rank(), l.rank());
    for (size_t i = 0; i < l.rank(); ++i)
        for (size_t j = 0; j < l.rank(); ++j) m(i, j) = 2 * ga[i] * ga[j] / a2 - g(i, j);
    return m;
}

// Roots d with (x, d) < 0 < (a, d) for positive x, a with (x, a) > 0.
std::vector<IntVec> separating(const HyperbolicLattice& l, const IntVec& x, const IntVec& a) {
    const Int x2 = l.square(x), a2 = l.square(a), xa = l.pair(x, a);
    // On span{x, a}: a^2 s^2 - 2 (x a) s t + x^2 t^2 <= 2((x a)^2 - x^2 a^2) with
    // s = (x, d), t = (a, d) of opposite signs, so t^2 <= K / x^2.
    const Int k = 2 * (xa * xa - x2 * a2);
    std::vector<IntVec> out;
    if (k <= 0) return out;
    const Rat t2_max = Rat(k) / Rat(x2);
    const Rat bound = 2 + 2 * t2_max / Rat(a2);
    for (auto& d : short_vectors(majorant(l, a), bound)) {
        if (l.square(d) != -2) continue;
        // One root per wall: the one positive on a.
        if (l.pair(a, d) > 0 && l.pair(x, d) < 0) out.push_back(std::move(d));
    }
    return out;
}

void check_positive_pair(const HyperbolicLattice& l, const IntVec& x, const IntVec& a) {
    check_vector(l, x, "x");
    check_vector(l, a, "a");
    if (l.square(x) <= 0) throw PreconditionError("x is not positive: x^2 = " + l.square(x).get_str());
    if (l.square(a) <= 0) throw PreconditionError("a is not positive: a^2 = " + l.square(a).get_str());
}

}  // namespace

HyperbolicLattice::HyperbolicLattice(IntLattice l) : lattice(std::move(l)) {
    Signature s = signature(to_rational(lattice.gram));
    if (s.zero || s.positive != 1)
        throw PreconditionError("lattice is not hyperbolic: signature (" + std::to_string(s.positive) + ", " +
                                std::to_string(s.negative) + ") with " + std::to_string(s.zero) +
                                " null directions");
}

bool is_root(const HyperbolicLattice& l, const IntVec& d) { return d.size() == l.rank() && l.square(d) == -2; }

IntVec reflect(const HyperbolicLattice& l, const IntVec& x, const IntVec& d) {
    check_vector(l, x, "x");
    if (!is_root(l, d)) throw PreconditionError("not a root: d^2 must be -2");
    const Int s = l.pair(x, d);
    IntVec out = x;
    for (size_t i = 0; i < out.size(); ++i) out[i] += s * d[i];
    return out;
}

IntVec apply_word(const HyperbolicLattice& l, const ReflectionWord& w, const IntVec& x) {
    IntVec y = x;
    if (w.flip)
        for (auto& e : y) e = -e;
    for (const auto& d : w.roots) y = reflect(l, y, d);
    return y;
}

std::vector<IntVec> walls_through(const HyperbolicLattice& l, const IntVec& v) {
    check_vector(l, v, "v");
    if (l.square(v) <= 0) throw PreconditionError("walls are only finite through positive vectors");
    std::vector<IntVec> out;
    for (auto& d : short_vectors(majorant(l, v), Rat(2)))
        if (l.square(d) == -2 && l.pair(v, d) == 0) out.push_back(std::move(d));
    return out;
}

std::vector<IntVec> separating_roots(const HyperbolicLattice& l, const IntVec& x, const IntVec& a) {
    check_positive_pair(l, x, a);
    if (l.pair(x, a) <= 0) throw PreconditionError("x and a lie in opposite halves of the positive cone");
    if (!walls_through(l, a).empty()) throw PreconditionError("target not in chamber interior");
    return separating(l, x, a);
}

ChamberWalk chamber_walk(const HyperbolicLattice& l, const IntVec& x, const IntVec& a) {
    check_positive_pair(l, x, a);
    if (!walls_through(l, a).empty()) throw PreconditionError("target not in chamber interior");
    if (!walls_through(l, x).empty()) throw PreconditionError("start vector lies on a wall");
    ChamberWalk w;
    w.end = x;
    if (l.pair(x, a) < 0) {
        w.word.flip = true;
        for (auto& e : w.end) e = -e;
    }
    for (int step = 0;; ++step) {
        if (step > kMaxWalkSteps) throw InvariantError("chamber walk did not terminate");
        auto roots = separating(l, w.end, a);
        if (roots.empty()) break;
        // Roots arrive sorted, so the first minimum is the lexicographically smallest.
        const IntVec* best = nullptr;
        Int best_val;
        for (const auto& d : roots) {
            Int v = abs(l.pair(w.end, d));
            if (!best || v < best_val) {
                best = &d;
                best_val = v;
            }
        }
        w.word.roots.push_back(*best);
        w.end = reflect(l, w.end, *best);
    }
    return w;
}

AmpleDegree min_ample_degree(const HyperbolicLattice& l, const IntVec& a, const Int& bound,
                             std::optional<Int> pair_bound) {
    check_vector(l, a, "a");
    const Int a2 = l.square(a);
    if (a2 <= 0) throw PreconditionError("a is not positive: a^2 = " + a2.get_str());
    AmpleDegree out;
    const Int h = pair_bound.value_or(bound);
    if (bound < 1 || h < 1) return out;
    // 0 < (x, a) <= h and x^2 >= 1 give majorant <= 2 h^2 / a^2 - 1.
    const Rat cap = Rat(2 * h * h) / Rat(a2) - 1;
    for (const auto& x : short_vectors(majorant(l, a), cap)) {
        const Int x2 = l.square(x), xa = l.pair(x, a);
        if (x2 <= 0 || x2 > bound || xa <= 0 || xa > h) continue;
        if (out.degree && x2 >= *out.degree) continue;
        if (!separating(l, x, a).empty()) continue;
        out.degree = x2;
        out.witness = x;
    }
    return out;
}

SupersingularCheck supersingular_disc_check(const Int& d, const Int& p) {
    if (!is_prime(p)) throw PreconditionError("p = " + p.get_str() + " is not prime");
    SupersingularCheck out;
    if (d == 0) return out;
    Int m = abs(d);
    int a = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
        ++a;
    }
    if (m != 1) return out;
    out.exponent = a;
    out.holds = d < 0 && a % 2 == 0 && a >= 2 && a <= 20;
    return out;
}

}  // namespace flk
