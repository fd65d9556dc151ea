#include "flk/mukai.hpp"

#include "flk/errors.hpp"

namespace flk {

namespace {

bool divisible(const Int& a, const Int& m) { return mpz_divisible_p(a.get_mpz_t(), m.get_mpz_t()) != 0; }

Int integral(const Rat& x, const char* what) {
    if (x.get_den() != 1) throw InvariantError(std::string(what) + " is not an integer: " + x.get_str());
    return x.get_num();
}

void check_shape(const MukaiSpace& s, const MukaiVector& x) {
    if (x.b.size() != s.dim())
        throw PreconditionError("Mukai vector with " + std::to_string(x.b.size()) +
                                " b-coordinates in a space of dimension " + std::to_string(s.dim()));
}

RatVec add(const RatVec& x, const RatVec& y, const Rat& ky = 1) {
    RatVec out(x.size());
    for (size_t i = 0; i < x.size(); ++i) out[i] = x[i] + ky * y[i];
    return out;
}

RatVec scaled(const RatVec& x, const Rat& k) {
    RatVec out(x.size());
    for (size_t i = 0; i < x.size(); ++i) out[i] = k * x[i];
    return out;
}

}  // namespace

MukaiSpace::MukaiSpace(RatMatrix ns, Rat alpha_sq) : ns_gram(std::move(ns)), alpha_square(std::move(alpha_sq)) {
    if (!is_symmetric(ns_gram)) throw PreconditionError("NS gram not symmetric");
}

MukaiSpace::MukaiSpace(const IntLattice& ns, const Rat& alpha_sq) : MukaiSpace(to_rational(ns.gram), alpha_sq) {}

Rat MukaiSpace::b_pair(const RatVec& x, const RatVec& y) const {
    if (x.size() != dim() || y.size() != dim()) throw PreconditionError("b-vector size mismatch");
    const size_t n = ns_rank();
    Rat s = x[n] * y[n] * alpha_square;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (ns_gram(i, j) != 0) s += x[i] * ns_gram(i, j) * y[j];
    return s;
}

MukaiVector mukai_zero(const MukaiSpace& s) { return MukaiVector{0, RatVec(s.dim(), Rat(0)), 0}; }

MukaiVector mukai_unit(const MukaiSpace& s) { return MukaiVector{1, RatVec(s.dim(), Rat(0)), 0}; }

MukaiVector ns_class(const MukaiSpace& s, const RatVec& d) { return make_vector(s, 0, d, 0, 0); }

MukaiVector make_vector(const MukaiSpace& s, const Rat& a, const RatVec& d, const Rat& t, const Rat& c) {
    if (d.size() != s.ns_rank())
        throw PreconditionError("NS class has " + std::to_string(d.size()) + " coordinates, expected " +
                                std::to_string(s.ns_rank()));
    RatVec b = d;
    b.push_back(t);
    return MukaiVector{a, b, c};
}

MukaiVector operator+(const MukaiVector& x, const MukaiVector& y) {
    if (x.b.size() != y.b.size()) throw PreconditionError("Mukai vectors from different spaces");
    return MukaiVector{x.a + y.a, add(x.b, y.b), x.c + y.c};
}

MukaiVector operator-(const MukaiVector& x, const MukaiVector& y) {
    if (x.b.size() != y.b.size()) throw PreconditionError("Mukai vectors from different spaces");
    return MukaiVector{x.a - y.a, add(x.b, y.b, -1), x.c - y.c};
}

Rat mukai_pairing(const MukaiSpace& s, const MukaiVector& x, const MukaiVector& y) {
    check_shape(s, x);
    check_shape(s, y);
    return s.b_pair(x.b, y.b) - x.a * y.c - y.a * x.c;
}

MukaiVector mukai_mult(const MukaiSpace& s, const MukaiVector& x, const MukaiVector& y) {
    check_shape(s, x);
    check_shape(s, y);
    return MukaiVector{x.a * y.a, add(scaled(y.b, x.a), x.b, y.a), x.a * y.c + y.a * x.c + s.b_pair(x.b, y.b)};
}

MukaiVector mukai_exp(const MukaiSpace& s, const RatVec& b) {
    return MukaiVector{1, b, s.b_pair(b, b) / 2};
}

Rat riemann_roch_chi(const MukaiSpace& s, const MukaiVector& x, const MukaiVector& y) {
    return -mukai_pairing(s, x, y);
}

std::string to_string(const MukaiVector& v) {
    return "(" + v.a.get_str() + ";" + join(v.b) + ";" + v.c.get_str() + ")";
}

Rat BField::alpha_square() const { return Rat(bilinear(t_gram, alpha, alpha)); }

BField normalize(BField b) {
    const Int& l = b.ell;
    while (b.level > 0) {
        bool all = true;
        for (const auto& x : b.alpha)
            if (!divisible(x, l)) {
                all = false;
                break;
            }
        if (!all) break;
        for (auto& x : b.alpha) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), l.get_mpz_t());
        --b.level;
    }
    Int r = b.r();
    for (auto& x : b.alpha) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), r.get_mpz_t());
    return b;
}

BField make_bfield(IntMatrix t_gram, IntVec alpha, const Int& ell, unsigned level) {
    if (!is_prime(ell)) throw PreconditionError("ell = " + ell.get_str() + " is not prime");
    if (!is_symmetric(t_gram)) throw PreconditionError("transcendental gram not symmetric");
    if (alpha.size() != t_gram.rows())
        throw PreconditionError("alpha has " + std::to_string(alpha.size()) + " coordinates, expected " +
                                std::to_string(t_gram.rows()));
    if (level > 0) {
        bool primitive = false;
        for (const auto& x : alpha) primitive = primitive || !divisible(x, ell);
        if (!primitive) throw PreconditionError("alpha is not primitive modulo " + ell.get_str());
    }
    return normalize(BField{std::move(t_gram), std::move(alpha), ell, level});
}

Int brauer_order(const BField& b) {
    if (b.level > 0) {
        bool primitive = false;
        for (const auto& x : b.alpha) primitive = primitive || !divisible(x, b.ell);
        if (!primitive) throw PreconditionError("alpha is not primitive modulo " + b.ell.get_str());
    }
    return b.r();
}

BField brauer_add(const BField& x, const BField& y) {
    if (x.ell != y.ell || x.t_gram != y.t_gram)
        throw PreconditionError("Brauer classes over different transcendental lattices");
    Int rx = x.r(), ry = y.r();
    IntVec g(x.alpha.size());
    for (size_t i = 0; i < g.size(); ++i) g[i] = ry * x.alpha[i] + rx * y.alpha[i];
    return normalize(BField{x.t_gram, g, x.ell, x.level + y.level});
}

bool operator==(const BField& x, const BField& y) {
    return x.ell == y.ell && x.level == y.level && x.alpha == y.alpha && x.t_gram == y.t_gram;
}

bool twisted_chow_contains(const TwistedChowLattice& l, const MukaiVector& v) {
    if (v.b.size() != l.ns_rank + 1) return false;
    Rat a = v.a / l.r;
    if (a.get_den() != 1 || v.c.get_den() != 1) return false;
    if (v.b[l.ns_rank] != (l.twisted ? a : Rat(0))) return false;
    for (size_t i = 0; i < l.ns_rank; ++i)
        if (v.b[i].get_den() != 1) return false;
    return true;
}

TwistedVector twisted_mukai_vector(const MukaiSpace& s, const Rat& rank, const RatVec& c1, const Rat& chi,
                                   const BField& bf) {
    if (bf.level > 0 && s.alpha_square != bf.alpha_square())
        throw PreconditionError("B-field alpha^2 = " + bf.alpha_square().get_str() +
                                " does not match the space (" + s.alpha_square.get_str() + ")");
    const Int r = bf.r();
    MukaiVector ch = make_vector(s, rank, c1, 0, chi);
    RatVec b(s.dim(), Rat(0));
    if (bf.level > 0) b[s.ns_rank()] = Rat(1) / Rat(r);
    MukaiVector sqrt_todd = make_vector(s, 1, RatVec(s.ns_rank(), Rat(0)), 0, 1);
    TwistedVector out;
    out.v = mukai_mult(s, mukai_mult(s, mukai_exp(s, b), ch), sqrt_todd);
    if (Rat(rank / r).get_den() == 1)
        out.integral = twisted_chow_contains(TwistedChowLattice{s.ns_rank(), r, bf.level > 0}, out.v);
    return out;
}

ModuliVector construct_moduli_vector(const IntLattice& ns, const IntVec& d, const IntMatrix& t, const Int& ell,
                                     unsigned n, unsigned precision) {
    if (!is_prime(ell)) throw PreconditionError("ell = " + ell.get_str() + " is not prime");
    if (ell == 2) throw PreconditionError("odd prime ell required");
    if (d.size() != ns.rank())
        throw PreconditionError("D has " + std::to_string(d.size()) + " coordinates, expected " +
                                std::to_string(ns.rank()));
    if (t.rows() == 0) throw PreconditionError("transcendental lattice of rank 0");
    if (!is_symmetric(t)) throw PreconditionError("transcendental gram not symmetric");
    if (divisible(disc(ns), ell)) throw PreconditionError("ell divides disc NS");
    const Int d2 = ns.pair(d, d);
    if (divisible(d2, ell)) throw PreconditionError("ell divides D^2 = " + d2.get_str());

    auto gamma = quadratic_represent(t, PadicInt(ell, precision, Int(-d2)));
    if (!gamma) throw PreconditionError("transcendental lattice does not represent -D^2");

    ModuliVector out;
    out.gamma = *gamma;
    out.space = MukaiSpace(ns, Rat(bilinear(t, out.gamma, out.gamma)));
    const Int r = ipow(ell, n);
    RatVec dq(d.begin(), d.end());
    out.v = make_vector(out.space, r, dq, 1, 0);
    out.u = make_vector(out.space, r, RatVec(ns.rank(), Rat(0)), 1, 0);

    ModuliReport& rep = out.report;
    rep.modulus = ipow(ell, precision);
    rep.d_square = d2;
    rep.v_square = integral(mukai_pairing(out.space, out.v, out.v), "v^2");
    rep.v_dot_u = integral(mukai_pairing(out.space, out.v, out.u), "v.u");
    rep.brauer = brauer_order(make_bfield(t, out.gamma, ell, n));
    rep.square_vanishes = divisible(rep.v_square, rep.modulus);
    rep.pairing_matches = divisible(rep.v_dot_u + d2, rep.modulus);
    rep.coprime = gcd(rep.v_dot_u, ell) == 1;
    rep.order_matches = rep.brauer == r;
    rep.in_twisted_chow = twisted_chow_contains(TwistedChowLattice{ns.rank(), r}, out.v);
    return out;
}

}  // namespace flk
