#include "doctest.h"
#include "flk/eigenlattice.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace flk;

namespace {

RatMatrix R(const IntMatrix& m) { return to_rational(m); }

}  // namespace

TEST_CASE("fixed eigenlattice examples") {
    FrobeniusModule scalar{R(IntMatrix{{2, 1}, {1, 2}}), R(scale(IntMatrix::identity(2), Int(3))), 3, 2};
    auto all = fixed_eigenlattice(scalar, 3, 3);
    CHECK(all.rank() == 2);
    CHECK(all.disc_valuation == 1);

    FrobeniusModule none{R(IntMatrix::identity(1)), R(IntMatrix{{-2}}), 2, 2};
    auto empty = fixed_eigenlattice(none, 2, 5);
    CHECK(empty.rank() == 0);
    CHECK(empty.disc_valuation == 0);

    FrobeniusModule split{R(IntMatrix::identity(2)), R(IntMatrix{{2, 0}, {0, -2}}), 2, 2};
    validate_module(split);
    auto first = fixed_eigenlattice(split, 2, 3);
    REQUIRE(first.rank() == 1);
    CHECK(first.basis(1, 0).is_zero());
    CHECK(first.basis(0, 0).valuation() == 0);
}

TEST_CASE("module validation errors") {
    FrobeniusModule bad{R(IntMatrix{{0, 1}, {1, 0}}), R(IntMatrix{{2, 0}, {0, -2}}), 2, 2};
    CHECK_THROWS_AS(validate_module(bad), PreconditionError);
    FrobeniusModule frac{R(IntMatrix::identity(1)), RatMatrix{{Rat(1, 2)}}, 2, 0};
    CHECK_THROWS_WITH_AS(validate_module(frac),
                         "characteristic polynomial coefficient of T^0 is not integral: -1/2",
                         PreconditionError);
}

TEST_CASE("split_gh examples") {
    FrobeniusModule split{R(IntMatrix::identity(2)), R(IntMatrix{{2, 0}, {0, -2}}), 2, 2};
    auto s = split_gh(split, 3);
    CHECK(s.gh.m == 1);
    CHECK(s.m1.cols() == 1);
    CHECK(s.m2.cols() == 1);
    CHECK(s.m1(1, 0).is_zero());
    CHECK(s.m2(0, 0).is_zero());
    CHECK(s.orthogonal);

    FrobeniusModule none{R(IntMatrix::identity(1)), R(IntMatrix{{-2}}), 2, 2};
    auto n = split_gh(none, 3);
    CHECK(n.m1.cols() == 0);
    CHECK(n.m2.cols() == 1);

    FrobeniusModule full{R(IntMatrix::identity(2)), R(scale(IntMatrix::identity(2), Int(2))), 2, 2};
    auto f = split_gh(full, 3);
    CHECK(f.m1.cols() == 2);
    CHECK(f.m2.cols() == 0);

    // Jordan block at the eigenvalue: not semisimple.
    FrobeniusModule jordan{R(IntMatrix{{0, 1}, {1, 0}}), R(IntMatrix{{1, 1}, {0, 1}}), 2, 0};
    CHECK_THROWS(split_gh(jordan, 3));
}

TEST_CASE("disc bound examples") {
    // Unimodular, ell larger than C.
    FrobeniusModule uni{R(IntMatrix{{0, 1}, {1, 0}}), R(IntMatrix{{2, 0}, {0, 2}}), 2, 2};
    auto r = disc_bound_report(uni, 5);
    CHECK(r.v0 == 0);
    CHECK(r.v == 0);
    CHECK(r.first_applies);
    CHECK(r.pass());
    FrobeniusModule scalar{R(IntMatrix{{2, 1}, {1, 2}}), R(scale(IntMatrix::identity(2), Int(3))), 3, 2};
    auto s = disc_bound_report(scalar, 3);
    CHECK(s.v == s.v0);
    CHECK(s.pass());
}

TEST_CASE("property: random modules respect both discriminant bounds") {
    testing::Rng rng(1234);
    for (auto [q, w] : std::vector<std::pair<long, unsigned>>{{2, 0}, {2, 2}, {3, 0}, {3, 2}}) {
        testing::ModuleGenerator gen(rng, q, w, 3);
        for (int trial = 0; trial < 25; ++trial) {
            FrobeniusModule m = gen.next();
            CHECK(m.phi.transpose() * m.gram * m.phi == scale(m.gram, Rat(ipow(q, w))));
            Int ell = rng.pick(std::vector<Int>{2, 3, 5, 7});
            auto local_constants = weil_constants(q, w, std::max<size_t>(1, m.rank()));
            auto r = disc_bound_report(m, ell, local_constants);
            CHECK(r.pass());
            CHECK(r.v == testing::exact_eigen_valuation(m, weil_radius(q, w), ell));
            auto s = split_gh(m, ell);
            CHECK(s.orthogonal);
            int sl = 0;
            for (const auto& [p, e] : factorize(s.gh.denominator))
                if (p == ell) sl = e;
            CHECK(s.index_valuation <= static_cast<int>(m.rank()) * sl);
        }
    }
}

TEST_CASE("semilinear examples") {
    auto w5 = WittRing::create(5, 1, 32);
    SemilinearModule f1{w5, to_witt(w5, IntMatrix{{1, 0}, {0, 5}}), to_witt(w5, IntMatrix{{5, 0}, {0, -5}})};
    auto r = semilinear_pipeline(f1);
    CHECK(r.rank_nprime == 1);
    CHECK(r.rank_n == 1);
    CHECK(r.disc_valuation == 0);
    CHECK(r.bound == 0);

    auto w3 = WittRing::create(3, 2, 32);
    SemilinearModule rank1{w3, to_witt(w3, IntMatrix{{1}}), to_witt(w3, IntMatrix{{3}})};
    auto s = semilinear_pipeline(rank1);
    CHECK(s.c4 == 1);
    CHECK(s.rank_nprime == 1);
    CHECK(s.rank_n == 1);
    CHECK(s.disc_valuation <= 4);
    CHECK(s.bound == 4);
    CHECK(s.pass());

    SemilinearModule none{w3, to_witt(w3, IntMatrix{{0, 1}, {1, 0}}), to_witt(w3, IntMatrix{{1, 0}, {0, 9}})};
    auto t = semilinear_pipeline(none);
    CHECK(t.rank_n == 0);
    CHECK(t.disc_valuation == 0);
}

TEST_CASE("property: semilinear bound on random modules") {
    testing::Rng rng(77);
    for (long p : {2L, 3L, 5L})
        for (unsigned f : {1u, 2u, 3u}) {
            auto w = WittRing::create(p, f, 32);
            for (int trial = 0; trial < 6; ++trial) {
                SemilinearModule m = testing::random_semilinear(rng, w, 3);
                auto r = semilinear_pipeline(m);
                CHECK(r.pass());
                CHECK(r.rank_n <= r.rank_nprime * f);
            }
        }
}

TEST_CASE("semilinear pipeline agrees with the linear one when f = 1") {
    testing::Rng rng(91);
    for (long p : {2L, 3L, 5L}) {
        auto w = WittRing::create(p, 1, 32);
        for (int trial = 0; trial < 20; ++trial) {
            SemilinearModule m = testing::random_semilinear(rng, w, 3);
            auto r = semilinear_pipeline(m);
            // Same data as a linear module over Z_p with q = p, w = 2.
            const size_t n = m.rank();
            RatMatrix g(n, n), a(n, n);
            Int big = w->modulus();
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) {
                    Int gi = w->lift(m.gram(i, j)).coeffs()[0], ai = w->lift(m.a(i, j)).coeffs()[0];
                    if (gi > big / 2) gi -= big;
                    if (ai > big / 2) ai -= big;
                    g(i, j) = gi;
                    a(i, j) = ai;
                }
            auto n_lin = fixed_eigenlattice(FrobeniusModule{g, a, p, 2}, p, p);
            CHECK(r.rank_n == n_lin.rank());
            CHECK(r.disc_valuation == n_lin.disc_valuation);
        }
    }
}

TEST_CASE("eigen parity examples") {
    RatMatrix g{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
    auto a = eigen_disc_parity(g, RatMatrix{{Rat(2), Rat(0)}, {Rat(0), Rat(1, 2)}});
    CHECK(a.n == 2);
    CHECK(a.left == 1);
    CHECK(a.right == 1);
    auto b = eigen_disc_parity(g, RatMatrix::identity(2));
    CHECK(b.n == 0);
    CHECK(b.equal());
    auto c = eigen_disc_parity(RatMatrix::identity(2), scale(RatMatrix::identity(2), Rat(-1)));
    CHECK(c.minus_rank == 2);
    CHECK(c.equal());
}

TEST_CASE("property: eigen parity on random isometries") {
    testing::Rng rng(313);
    for (int trial = 0; trial < 100; ++trial) {
        auto [g, phi] = testing::random_isometry(rng, 6);
        auto r = eigen_disc_parity(g, phi);
        CHECK(r.equal());
    }
}

TEST_CASE("c3 formula") {
    CHECK(c3_constant(4, 2, 2, 22) == 4 * 2 + 44 * 2 * 2);
    CHECK(c3_constant(0, 0, 1, 1) == 0);
}
