#include "doctest.h"
#include "flk/mukai.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace flk;

namespace {

MukaiSpace space_with(const IntMatrix& ns, long alpha_sq) { return MukaiSpace(IntLattice(ns), Rat(alpha_sq)); }

RatVec random_rat_vec(testing::Rng& rng, size_t n) {
    RatVec v(n);
    for (auto& x : v) x = testing::frac(rng.range(-6, 6), rng.range(1, 4));
    return v;
}

MukaiVector random_vector(testing::Rng& rng, const MukaiSpace& s) {
    return MukaiVector{testing::frac(rng.range(-6, 6), rng.range(1, 3)), random_rat_vec(rng, s.dim()),
                       testing::frac(rng.range(-6, 6), rng.range(1, 3))};
}

}  // namespace

TEST_CASE("pairing and product examples") {
    MukaiSpace s = space_with(IntMatrix{{2}}, 4);
    auto one_zero_one = make_vector(s, 1, {Rat(0)}, 0, 1);
    CHECK(mukai_pairing(s, one_zero_one, one_zero_one) == -2);
    auto b = make_vector(s, 0, {Rat(3)}, 2, 0);
    CHECK(mukai_pairing(s, b, b) == 2 * 9 + 4 * 4);
    CHECK(riemann_roch_chi(s, one_zero_one, one_zero_one) == 2);

    auto x = make_vector(s, 2, {Rat(1, 3)}, Rat(-1), 5);
    CHECK(mukai_mult(s, x, mukai_unit(s)) == x);
    CHECK(mukai_mult(s, mukai_unit(s), x) == x);
    CHECK(mukai_exp(s, RatVec{0, 0}) == mukai_unit(s));
    RatVec bf{Rat(1, 2), Rat(-3)};
    RatVec neg{Rat(-1, 2), Rat(3)};
    CHECK(mukai_mult(s, mukai_exp(s, bf), mukai_exp(s, neg)) == mukai_unit(s));

    MukaiSpace other = space_with(IntMatrix{{2, 0}, {0, 2}}, 4);
    CHECK_THROWS_AS(mukai_pairing(s, x, mukai_unit(other)), PreconditionError);
    CHECK_THROWS_AS(make_vector(s, 1, {}, 0, 0), PreconditionError);
}

TEST_CASE("isotropic vector from gamma orthogonal to D") {
    // gamma^2 = -D^2 gives v^2 = gamma^2 + D^2 = 0.
    MukaiSpace s = space_with(IntMatrix{{6}}, -6);
    auto v = make_vector(s, 25, {Rat(1)}, 1, 0);
    CHECK(mukai_pairing(s, v, v) == 0);
}

TEST_CASE("property: B-field shifts are isometries") {
    testing::Rng rng(301);
    for (int trial = 0; trial < 500; ++trial) {
        size_t r = rng.range(0, 3);
        RatMatrix g = to_rational(rng.symmetric(r, -4, 4));
        MukaiSpace s(g, testing::frac(rng.range(-8, 8), rng.range(1, 3)));
        auto x = random_vector(rng, s), y = random_vector(rng, s);
        auto e = mukai_exp(s, random_rat_vec(rng, s.dim()));
        CHECK(mukai_pairing(s, mukai_mult(s, e, x), mukai_mult(s, e, y)) == mukai_pairing(s, x, y));
        CHECK(riemann_roch_chi(s, x, y) == riemann_roch_chi(s, y, x));
    }
}

TEST_CASE("brauer order examples") {
    IntMatrix t{{1, 0}, {0, 1}};
    CHECK(brauer_order(make_bfield(t, {Int(1), Int(2)}, 5, 0)) == 1);
    CHECK(brauer_order(make_bfield(t, {Int(1), Int(2)}, 5, 3)) == 125);
    CHECK_THROWS_AS(make_bfield(t, {Int(5), Int(10)}, 5, 3), PreconditionError);
    CHECK_THROWS_AS(make_bfield(t, {Int(1)}, 5, 1), PreconditionError);
    CHECK_THROWS_AS(make_bfield(t, {Int(1), Int(0)}, 6, 1), PreconditionError);
}

TEST_CASE("brauer addition examples") {
    IntMatrix t{{2, 1}, {1, 2}};
    auto zero = make_bfield(t, {Int(0), Int(0)}, 2, 0);
    auto x = make_bfield(t, {Int(1), Int(0)}, 2, 1);
    CHECK(brauer_add(x, zero) == x);
    auto twice = brauer_add(x, x);
    CHECK(twice.level == 0);
    CHECK(brauer_order(twice) == 1);

    auto a = make_bfield(t, {Int(1), Int(3)}, 5, 1);
    auto b = make_bfield(t, {Int(4), Int(12)}, 5, 1);
    CHECK(brauer_add(a, b).level == 0);
    CHECK(brauer_add(a, b) == make_bfield(t, {Int(0), Int(0)}, 5, 0));
    // Representatives are reduced modulo ell^level.
    CHECK(make_bfield(t, {Int(6), Int(-1)}, 5, 1) == make_bfield(t, {Int(1), Int(4)}, 5, 1));
}

TEST_CASE("property: brauer group laws") {
    testing::Rng rng(302);
    IntMatrix t{{2, 1, 0}, {1, 4, 1}, {0, 1, -2}};
    for (int trial = 0; trial < 200; ++trial) {
        Int ell = rng.pick(std::vector<long>{2, 3, 5});
        auto random_class = [&]() {
            for (;;) {
                IntVec a{Int(rng.range(-20, 20)), Int(rng.range(-20, 20)), Int(rng.range(-20, 20))};
                unsigned lvl = rng.range(0, 3);
                bool prim = false;
                for (auto& x : a) prim = prim || !testing::divisible_by(x, ell);
                if (lvl > 0 && !prim) continue;
                return make_bfield(t, a, ell, lvl);
            }
        };
        auto x = random_class(), y = random_class(), z = random_class();
        CHECK(brauer_add(x, y) == brauer_add(y, x));
        CHECK(brauer_add(brauer_add(x, y), z) == brauer_add(x, brauer_add(y, z)));
        // Oracle: the class as a vector of Q/Z entries.
        auto as_rationals = [](const BField& b) {
            RatVec v;
            for (const auto& a : b.alpha) {
                Rat q(a, b.r());
                q.canonicalize();
                v.push_back(q - Rat(mpz_class(q.get_num() / q.get_den()) - (q < 0 && q.get_den() != 1 ? 1 : 0)));
            }
            return v;
        };
        auto lhs = as_rationals(brauer_add(x, y));
        auto xs = as_rationals(x), ys = as_rationals(y);
        for (size_t i = 0; i < 3; ++i) {
            Rat s = xs[i] + ys[i];
            if (s >= 1) s -= 1;
            CHECK(lhs[i] == s);
        }
        // ell-fold sum drops the order by exactly ell.
        if (x.level >= 1) {
            BField acc = x;
            for (long k = 1; k < ell; ++k) acc = brauer_add(acc, x);
            CHECK(brauer_order(acc) * ell == brauer_order(x));
        }
    }
}

TEST_CASE("twisted Chow membership") {
    TwistedChowLattice l{1, 25};
    MukaiSpace s = space_with(IntMatrix{{2}}, 6);
    CHECK(twisted_chow_contains(l, make_vector(s, 25, {Rat(0)}, 1, 0)));
    CHECK_FALSE(twisted_chow_contains(l, make_vector(s, 1, {Rat(0)}, 0, 0)));
    CHECK(twisted_chow_contains(l, make_vector(s, 0, {Rat(3)}, 0, 5)));
    CHECK_FALSE(twisted_chow_contains(l, make_vector(s, 0, {Rat(1, 2)}, 0, 5)));
    CHECK_FALSE(twisted_chow_contains(l, make_vector(s, 25, {Rat(0)}, 2, 0)));
    CHECK_FALSE(twisted_chow_contains(l, make_vector(s, 25, {Rat(0)}, 1, Rat(1, 3))));
    TwistedChowLattice plain{1, 1, false};
    CHECK(twisted_chow_contains(plain, make_vector(s, 1, {Rat(0)}, 0, 1)));
    CHECK_FALSE(twisted_chow_contains(plain, make_vector(s, 1, {Rat(0)}, 1, 1)));
}

TEST_CASE("property: twisted Chow lattice closure") {
    testing::Rng rng(303);
    for (int trial = 0; trial < 300; ++trial) {
        size_t r = rng.range(0, 3);
        IntMatrix g = rng.symmetric(r, -4, 4);
        MukaiSpace s(IntLattice(g), Rat(rng.range(-10, 10)));
        TwistedChowLattice l{r, ipow(Int(rng.pick(std::vector<long>{2, 3, 5})), rng.range(0, 3))};
        auto member = [&]() {
            long a = rng.range(-3, 3);
            RatVec d(r);
            for (auto& x : d) x = rng.range(-5, 5);
            return make_vector(s, Rat(a * l.r), d, Rat(a), Rat(rng.range(-5, 5)));
        };
        auto x = member(), y = member();
        REQUIRE(twisted_chow_contains(l, x));
        CHECK(twisted_chow_contains(l, x + y));
        RatVec d(r);
        for (auto& e : d) e = rng.range(-5, 5);
        auto k = make_vector(s, 0, d, 0, Rat(rng.range(-5, 5)));
        CHECK(twisted_chow_contains(l, mukai_mult(s, k, x)));
    }
}

TEST_CASE("twisted Mukai vector examples") {
    IntMatrix t{{1, 0}, {0, 3}};
    MukaiSpace plain = space_with(IntMatrix{{2}}, 0);
    auto untwisted = make_bfield(t, {Int(0), Int(0)}, 5, 0);
    auto o = twisted_mukai_vector(plain, 1, {Rat(0)}, 0, untwisted);
    CHECK(o.v == make_vector(plain, 1, {Rat(0)}, 0, 1));
    CHECK(o.integral == true);
    auto sheaf = twisted_mukai_vector(plain, 0, {Rat(4)}, 7, untwisted);
    CHECK(sheaf.v == make_vector(plain, 0, {Rat(4)}, 0, 7));

    auto bf = make_bfield(t, {Int(1), Int(1)}, 5, 1);  // alpha^2 = 4
    MukaiSpace s = space_with(IntMatrix{{2}}, 4);
    auto tw = twisted_mukai_vector(s, 5, {Rat(0)}, 0, bf);
    // (r, alpha, alpha^2/(2r) + r)
    CHECK(tw.v == make_vector(s, 5, {Rat(0)}, 1, Rat(2, 5) + 5));
    CHECK(tw.integral == false);
    auto no_rank = twisted_mukai_vector(s, 2, {Rat(0)}, 0, bf);
    CHECK_FALSE(no_rank.integral.has_value());
    CHECK_THROWS_AS(twisted_mukai_vector(plain, 5, {Rat(0)}, 0, bf), PreconditionError);
}

TEST_CASE("moduli vector examples") {
    IntLattice ns(IntMatrix{{2}});
    auto m = construct_moduli_vector(ns, {Int(1)}, IntMatrix{{0, 1}, {1, 0}}, 7, 2);
    CHECK(m.report.pass());
    CHECK(m.report.d_square == 2);
    CHECK(testing::divisible_by(m.report.v_dot_u + 2, ipow(Int(7), 32)));
    CHECK(m.v.a == 49);
    CHECK(m.report.brauer == 49);

    CHECK_THROWS_WITH_AS(construct_moduli_vector(ns, {Int(1)}, IntMatrix{{1}}, 5, 1),
                         "transcendental lattice does not represent -D^2", PreconditionError);
    auto untwisted = construct_moduli_vector(ns, {Int(1)}, IntMatrix{{0, 1}, {1, 0}}, 7, 0);
    CHECK(untwisted.v.a == 1);
    CHECK(untwisted.report.pass());

    CHECK_THROWS_AS(construct_moduli_vector(ns, {Int(1)}, IntMatrix{{1}}, 2, 1), PreconditionError);
    CHECK_THROWS_AS(construct_moduli_vector(IntLattice(IntMatrix{{6}}), {Int(1)}, IntMatrix{{1}}, 3, 1),
                    PreconditionError);
    CHECK_THROWS_AS(construct_moduli_vector(IntLattice(IntMatrix{{7}}), {Int(1)}, IntMatrix{{1}}, 7, 1),
                    PreconditionError);
    CHECK_THROWS_AS(construct_moduli_vector(ns, {Int(1)}, IntMatrix(0, 0), 7, 1), PreconditionError);
}

TEST_CASE("property: moduli vector construction") {
    testing::Rng rng(304);
    int built = 0, rejected = 0;
    while (built < 200) {
        auto in = testing::random_moduli_input(rng);
        Int d2 = in.ns.pair(in.d, in.d);
        bool representable = true;
        if (in.t.rows() == 1) representable = legendre(Int(-d2 * in.t(0, 0)), in.ell) == 1;
        if (!representable) {
            CHECK_THROWS_AS(construct_moduli_vector(in.ns, in.d, in.t, in.ell, in.n), PreconditionError);
            ++rejected;
            continue;
        }
        auto m = construct_moduli_vector(in.ns, in.d, in.t, in.ell, in.n);
        CHECK(m.report.pass());
        // Oracle: pair (ell^n, D, gamma, 0) in the explicit lattice.
        Int modulus = ipow(in.ell, 32), r = ipow(in.ell, in.n);
        IntVec v{r}, u{r};
        for (const auto& x : in.d) v.push_back(x), u.push_back(0);
        for (const auto& x : m.gamma) v.push_back(x), u.push_back(x);
        v.push_back(0);
        u.push_back(0);
        CHECK(testing::divisible_by(testing::explicit_mukai_pairing(in.ns.gram, in.t, v, v), modulus));
        Int vu = testing::explicit_mukai_pairing(in.ns.gram, in.t, v, u);
        CHECK(testing::divisible_by(vu + d2, modulus));
        CHECK(gcd(vu, in.ell) == 1);
        ++built;
    }
    CHECK(rejected > 0);
}
