#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "prepatlas/orbit.hpp"

using namespace prepatlas;

TEST_CASE("escape_radius examples") {
    auto R0 = escape_radius(Rational(0));
    CHECK(R0.is_rational());
    CHECK(R0.rational_value() == 2);

    auto R1 = escape_radius(Rational(1));
    CHECK(R1.minpoly() == IntPoly({2, -4, 1}));
    CHECK(alg_compare(R1, Rational(3)) == Cmp::greater);
    CHECK(alg_compare(R1, Rational(4)) == Cmp::less);

    auto R34 = escape_radius(Rational(3, 4));
    CHECK(R34.is_rational());
    CHECK(R34.rational_value() == Rational(45, 16));
}

TEST_CASE("real_slice examples") {
    auto s0 = real_slice(Rational(0));
    REQUIRE(s0.size() == 1);
    CHECK(s0[0].left.rational_value() == -2);
    CHECK(s0[0].right.rational_value() == Rational(1, 4));

    auto s1 = real_slice(Rational(1));
    CHECK(alg_compare(s1[0].left,
                      RealAlgebraic::from_quadratic(Rational(-2), Rational(-1), Rational(2))) ==
          Cmp::equal);
    CHECK(s1[0].right.rational_value() == 0);

    auto sh = real_slice(Rational(1, 2));
    CHECK(alg_compare(sh[0].left, RealAlgebraic::from_quadratic(
                                      Rational(-5, 4), Rational(-1, 2), Rational(5))) ==
          Cmp::equal);
    CHECK(sh[0].right.rational_value() == Rational(1, 4));
}

TEST_CASE("psi and prep_poly examples") {
    CHECK(psi(Rational(1), 1) == QPoly({Rational(1), Rational(1)}));
    CHECK(psi(Rational(1), 2) == QPoly({Rational(1), Rational(3), Rational(1)}));
    CHECK(psi(Rational(0), 3) ==
          QPoly({Rational(0), Rational(1), Rational(1), Rational(2), Rational(1)}));

    CHECK(prep_poly(Rational(0), 0, 2) == QPoly({Rational(0), Rational(1), Rational(1)}));
    CHECK(prep_poly(Rational(1), 0, 1) == QPoly({Rational(0), Rational(1)}));
    CHECK(prep_poly(Rational(1), 1, 2) == QPoly({Rational(0), Rational(2), Rational(1)}));

    CHECK_THROWS_WITH(psi(Rational(1), 15), "degree overflow");
    for (int n = 1; n <= 10; ++n) {
        QPoly p = psi(Rational(3, 2), n);
        CHECK(p.degree() == 1 << (n - 1));
        CHECK(p.leading() == 1);
    }
}

TEST_CASE("decide_rational examples") {
    auto r = decide_rational(Rational(1), Rational(-3));
    CHECK(r.verdict == Verdict::Preperiodic);
    CHECK(r.m == 0);
    CHECK(r.n == 2);
    CHECK(r.values[1] == -2);

    r = decide_rational(Rational(1), Rational(0));
    CHECK(r.verdict == Verdict::Preperiodic);
    CHECK(r.m == 0);
    CHECK(r.n == 1);

    r = decide_rational(Rational(1), Rational(1, 2));
    CHECK(r.verdict == Verdict::Escaped);
}

TEST_CASE("decide_algebraic examples") {
    auto v = decide_algebraic(Rational(1), IntPoly({2, 4, 1}));
    REQUIRE(v.size() == 2);
    for (const auto& rv : v) {
        CHECK(rv.verdict == Verdict::Preperiodic);
        CHECK(rv.m == 2);
        CHECK(rv.n == 3);
    }

    auto w = decide_algebraic(Rational(1), IntPoly({3, 1}));
    REQUIRE(w.size() == 1);
    CHECK(w[0].verdict == Verdict::Preperiodic);
    CHECK(w[0].m == 0);
    CHECK(w[0].n == 2);

    auto e = decide_algebraic(Rational(1), IntPoly({-2, 0, 1}));
    REQUIRE(e.size() == 2);
    for (const auto& rv : e) CHECK(rv.verdict == Verdict::Escaped);

    CHECK_THROWS_WITH(decide_algebraic(Rational(1), IntPoly({1, 2})),
                      "not an algebraic integer / not separable");
    CHECK_THROWS(decide_algebraic(Rational(1), IntPoly({1, 2, 1})));
    CHECK_THROWS(decide_algebraic(Rational(1, 2), IntPoly({2, 1})));
}

TEST_CASE("theta examples and verification hook") {
    auto t0 = theta(Rational(0));
    CHECK(t0.theta.rational_value() == -2);
    CHECK(t0.minpoly == QPoly({Rational(0), Rational(2), Rational(1)}));
    CHECK(t0.verified);

    auto t1 = theta(Rational(1));
    CHECK(alg_compare(t1.theta,
                      RealAlgebraic::from_quadratic(Rational(-2), Rational(-1), Rational(2))) ==
          Cmp::equal);
    CHECK(t1.minpoly == QPoly({Rational(2), Rational(4), Rational(1)}));
    CHECK(t1.verified);

    auto t32 = theta(Rational(3, 2));
    CHECK(t32.minpoly == QPoly({Rational(117, 16), Rational(13, 2), Rational(1)}));
    CHECK(alg_compare(t32.theta, RealAlgebraic::from_quadratic(
                                     Rational(-13, 4), Rational(-1, 2), Rational(13))) ==
          Cmp::equal);
    CHECK(t32.verified);

    for (int i = 1; i <= 50; ++i) CHECK(theta(Rational(2 * i - 51, 26)).verified);
}

TEST_CASE("property: divisibility F_{m,n} | F_{m+k,n+k}") {
    for (const Rational& alpha : {Rational(0), Rational(1), Rational(2)})
        for (int n = 1; n <= 5; ++n)
            for (int m = 0; m < n; ++m) {
                QPoly F = prep_poly(alpha, m, n);
                for (int k = 1; n + k <= 7; ++k)
                    CHECK(prep_poly(alpha, m + k, n + k).divisible_by(F));
            }
}

TEST_CASE("property: psi even in alpha, decide_rational verdict-symmetric") {
    for (const Rational& alpha : {Rational(1), Rational(3, 2), Rational(2)})
        for (int n = 1; n <= 8; ++n) CHECK(psi(alpha, n) == psi(-alpha, n));
    for (const Rational& c : {Rational(-2), Rational(0), Rational(-13, 8), Rational(1, 3)})
        for (const Rational& alpha : {Rational(1), Rational(1, 2), Rational(2)})
            CHECK(decide_rational(alpha, c).verdict == decide_rational(-alpha, c).verdict);
}

TEST_CASE("property: decide_rational vs naive orbit oracle") {
    for (const Rational& alpha : {Rational(0), Rational(1, 2), Rational(-1, 2), Rational(1),
                                  Rational(-1), Rational(3, 2), Rational(-3, 2), Rational(2),
                                  Rational(-2)}) {
        Rational s = alpha * alpha + 1;
        for (int num = -12; num <= 12; ++num)
            for (int den = 1; den <= 12; ++den) {
                Rational c(num, den);
                c.canonicalize();
                if (c.get_num() != num || c.get_den() != den) continue;
                auto rec = decide_rational(alpha, c);
                std::set<Rational> seen;
                Rational x = alpha;
                seen.insert(x);
                Verdict oracle = Verdict::BudgetExhausted;
                for (int it = 0; it < 2000; ++it) {
                    x = x * x + c;
                    // 2s >= R_alpha; a 256-bit height blowup also certifies
                    // that the orbit never repeats
                    if (abs_rational(x) > 2 * s ||
                        mpz_sizeinbase(x.get_den().get_mpz_t(), 2) > 256 ||
                        mpz_sizeinbase(x.get_num().get_mpz_t(), 2) > 256) {
                        oracle = Verdict::Escaped;
                        break;
                    }
                    if (!seen.insert(x).second) {
                        oracle = Verdict::Preperiodic;
                        break;
                    }
                }
                REQUIRE(oracle != Verdict::BudgetExhausted);
                CHECK(rec.verdict == oracle);
            }
    }
}
