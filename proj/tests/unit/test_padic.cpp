#include "doctest.h"
#include "flk/witt.hpp"
#include "support/random.hpp"

using namespace flk;

TEST_CASE("hensel square roots") {
    auto one = hensel_sqrt(PadicInt(7, 6, 1));
    REQUIRE(one);
    CHECK(one->residue == 1);
    auto r = hensel_sqrt(PadicInt(7, 6, 2));
    REQUIRE(r);
    CHECK(r->residue % 7 == 3);
    CHECK((r->residue * r->residue - 2) % ipow(7, 6) == 0);
    CHECK_FALSE(hensel_sqrt(PadicInt(5, 10, 2)));
    CHECK_FALSE(hensel_sqrt(PadicInt(5, 10, 10)));  // odd valuation
    auto even = hensel_sqrt(PadicInt(5, 10, 100));
    REQUIRE(even);
    CHECK(PadicInt(5, 10, even->residue * even->residue) == PadicInt(5, 10, 100));
    CHECK_THROWS_WITH_AS(hensel_sqrt(PadicInt(2, 8, 1)), "odd primes only", PreconditionError);
    CHECK_THROWS_WITH_AS(hensel_sqrt(PadicInt(3, 4, 81)), "insufficient precision", PrecisionError);
}

TEST_CASE("property: hensel_sqrt of a square squares back") {
    testing::Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        Int ell = rng.pick(std::vector<Int>{3, 5, 7, 11, 13});
        unsigned n = rng.range(2, 20);
        Int x = rng.range(1, 1000000);
        PadicInt d(ell, n, x * x);
        if (d.valuation() >= static_cast<int>(n)) continue;
        auto r = hensel_sqrt(d);
        REQUIRE(r);
        CHECK((*r * *r) == d);
    }
}

TEST_CASE("quadratic_represent examples") {
    auto g = quadratic_represent(IntMatrix{{1}}, PadicInt(5, 8, 4));
    REQUIRE(g);
    CHECK(((*g)[0] == 2 || (*g)[0] == ipow(5, 8) - 2));
    auto two = quadratic_represent(IntMatrix::identity(2), PadicInt(7, 5, -9));
    REQUIRE(two);
    CHECK(PadicInt(7, 5, bilinear(IntMatrix::identity(2), *two, *two)) == PadicInt(7, 5, -9));
    CHECK_FALSE(quadratic_represent(IntMatrix{{2}}, PadicInt(3, 8, 1)));
    CHECK_THROWS_WITH_AS(quadratic_represent(IntMatrix{{3, 0}, {0, 1}}, PadicInt(3, 8, 1)),
                         "discriminant not a unit", PreconditionError);
    CHECK_FALSE(quadratic_represent(IntMatrix(0, 0), PadicInt(3, 8, 1)));
}

TEST_CASE("property: quadratic_represent solutions substitute back") {
    testing::Rng rng(19);
    int found = 0;
    for (int trial = 0; trial < 300; ++trial) {
        Int ell = rng.pick(std::vector<Int>{3, 5, 7, 11});
        size_t n = rng.range(1, 4);
        IntMatrix g = rng.symmetric(n, -6, 6);
        if (det(g) % ell == 0) continue;
        unsigned prec = rng.range(4, 32);
        PadicInt d(ell, prec, Int(rng.range(-500, 500)));
        auto x = quadratic_represent(g, d);
        if (n >= 2 && d.is_unit()) CHECK(x.has_value());
        if (!x) continue;
        ++found;
        CHECK(PadicInt(ell, prec, bilinear(g, *x, *x)) == d);
    }
    CHECK(found > 100);
}

TEST_CASE("witt ring basics") {
    auto w5 = WittRing::create(5, 1, 10);
    auto a = w5->from_int(1234);
    CHECK(w5->sigma(a) == a);
    auto w3 = WittRing::create(3, 2, 8);
    CHECK(w3->trace(w3->one()) == 2);
    CHECK(w3->norm(w3->one()) == 1);
    CHECK(standard_defining_polynomial(3, 2) == IntPoly({Int(1), Int(0), Int(1)}));
    CHECK(standard_defining_polynomial(2, 2) == IntPoly({Int(1), Int(1), Int(1)}));
    CHECK_THROWS_AS(WittRing::create(6, 2, 8), PreconditionError);
}

TEST_CASE("property: frobenius is a ring automorphism of order f") {
    testing::Rng rng(41);
    for (auto [p, f] : std::vector<std::pair<int, unsigned>>{{2, 2}, {3, 2}, {2, 3}, {5, 3}, {3, 4}}) {
        auto w = WittRing::create(p, f, 8);
        auto random = [&] {
            IntVec c;
            for (unsigned i = 0; i < f; ++i) c.push_back(Int(rng.range(0, 1 << 20)));
            return w->from_coeffs(c);
        };
        for (int trial = 0; trial < 50; ++trial) {
            auto x = random(), y = random();
            CHECK(w->sigma_power(x, f) == x);
            CHECK(w->sigma(x * y) == w->sigma(x) * w->sigma(y));
            CHECK(w->sigma(x + y) == w->sigma(x) + w->sigma(y));
            CHECK(w->trace(w->sigma(x)) == w->trace(x));
            CHECK(w->norm(w->sigma(x)) == w->norm(x));
            // Galois-orbit oracles for trace and norm.
            WittElement sum = w->zero(), prod = w->one(), cur = x;
            for (unsigned k = 0; k < f; ++k) {
                sum += cur;
                prod *= cur;
                cur = w->sigma(cur);
            }
            CHECK(sum == w->from_int(w->trace(x)));
            CHECK(prod == w->from_int(w->norm(x)));
            // sigma reduces to the p-power map modulo p
            auto sp = w->sigma(x), xp = w->pow(x, p);
            for (unsigned i = 0; i < f; ++i) CHECK((sp.coeffs()[i] - xp.coeffs()[i]) % p == 0);
            if (x.valuation() == 0) CHECK(x * w->inverse(x) == w->one());
        }
    }
}

TEST_CASE("trace form discriminant") {
    auto w5 = WittRing::create(5, 1, 10);
    WittMatrix g = to_witt(w5, IntMatrix{{2, 1}, {1, 3}});
    auto t = trace_form_disc(g);
    CHECK(t.disc.residue == 5);
    CHECK(t.valuation == 1);
    auto w3 = WittRing::create(3, 2, 8);
    auto u = trace_form_disc(to_witt(w3, IntMatrix{{1}}));
    CHECK(u.valuation == 0);
    CHECK(u.constant == 0);
    auto s = trace_form_disc(to_witt(w3, scale(IntMatrix::identity(3), Int(3))));
    CHECK(s.valuation == 6);
    CHECK(s.witt_valuation == 3);
}

TEST_CASE("property: local kernel matches the exact integer kernel") {
    testing::Rng rng(43);
    for (int trial = 0; trial < 150; ++trial) {
        Int ell = rng.pick(std::vector<Int>{2, 3, 5});
        auto zl = WittRing::create(ell, 1, 32);
        size_t r = rng.range(1, 3), c = rng.range(1, 4);
        IntMatrix m = rng.matrix(r, c, -4, 4);
        WittMatrix k = local_kernel(to_witt(zl, m));
        IntMatrix exact = integer_kernel(m);
        REQUIRE(k.cols() == exact.cols());
        if (!k.cols()) continue;
        // Same Z_ell-module: the exact kernel is in the span of k with an
        // invertible change of basis, detected by unit determinant of the
        // stacked coordinates.
        WittMatrix ex = to_witt(zl, exact);
        WittMatrix prod = m.rows() ? to_witt(zl, m) * k : k;
        for (const auto& e : prod.data()) CHECK(e.is_zero());
        // disc of k^T k and exact^T exact have the same valuation
        CHECK(local_det_valuation(k.transpose() * k) ==
              local_det_valuation(ex.transpose() * ex));
    }
}

TEST_CASE("property: raising precision and truncating agrees") {
    testing::Rng rng(47);
    for (int trial = 0; trial < 50; ++trial) {
        Int x = rng.range(1, 1000);
        PadicInt d(7, 6, x * x);
        if (d.valuation() >= 6) continue;
        auto lo = hensel_sqrt(d);
        auto hi = hensel_sqrt(PadicInt(7, 12, x * x));
        REQUIRE(lo);
        REQUIRE(hi);
        // a root of ell^{2k} u is determined modulo ell^{N-k}
        Int m = ipow(7, 6 - d.valuation() / 2);
        CHECK(hi->residue % m == lo->residue % m);
    }
}
