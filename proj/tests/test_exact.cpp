#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "prepatlas/algebraic.hpp"
#include "prepatlas/interval_set.hpp"

using namespace prepatlas;

TEST_CASE("sturm_count on closed intervals") {
    CHECK(sturm_count(IntPoly({2, 4, 1}), Rational(-4), Rational(0)) == 2);
    CHECK(sturm_count(IntPoly({1, 0, 1}), Rational(-10), Rational(10)) == 0);
    // X(X+1)(X+2) = X^3 + 3X^2 + 2X, endpoint roots count
    CHECK(sturm_count(IntPoly({0, 2, 3, 1}), Rational(-3), Rational(0)) == 3);
    CHECK_THROWS(sturm_count(IntPoly::zero(), Rational(0), Rational(1)));
}

TEST_CASE("isolate_real_roots examples") {
    auto r = isolate_real_roots(IntPoly({2, 4, 1}));
    REQUIRE(r.size() == 2);
    Rational eps(Integer(1), Integer(1000000000));
    auto [lo0, hi0] = r[0].refine(eps);
    CHECK(lo0.get_d() == doctest::Approx(-3.41421356).epsilon(1e-8));
    auto [lo1, hi1] = r[1].refine(eps);
    CHECK(hi1.get_d() == doctest::Approx(-0.58578644).epsilon(1e-8));

    CHECK(isolate_real_roots(IntPoly({1, 0, 1})).empty());

    auto r3 = isolate_real_roots(IntPoly({1, 1, 2, 1}));
    REQUIRE(r3.size() == 1);
    CHECK(r3[0].to_double() == doctest::Approx(-1.7549).epsilon(1e-4));
}

TEST_CASE("alg_compare examples") {
    RealAlgebraic s = RealAlgebraic::from_quadratic(Rational(-2), Rational(-1), Rational(2));
    CHECK(alg_compare(s, Rational(-7, 2)) == Cmp::greater);
    auto roots = isolate_real_roots(IntPoly({-2, 0, 1}));
    REQUIRE(roots.size() == 2);
    CHECK(alg_compare(roots[1], roots[1]) == Cmp::equal);
    RealAlgebraic t = RealAlgebraic::from_quadratic(Rational(-2), Rational(1), Rational(2));
    CHECK(alg_compare(Rational(0), t) == Cmp::greater);
}

TEST_CASE("refine examples and invariant") {
    RealAlgebraic s = RealAlgebraic::from_quadratic(Rational(-2), Rational(-1), Rational(2));
    auto [lo, hi] = s.refine(Rational(1, 1000));
    CHECK(hi - lo < Rational(1, 1000));
    CHECK(lo.get_d() <= -3.41422);
    CHECK(hi.get_d() >= -3.41421);
    // the refined interval still isolates
    CHECK(sturm_count(s.minpoly(), lo, hi) == 1);

    auto half = RealAlgebraic::from_rational(Rational(1, 2)).refine(Rational(1, 10));
    CHECK(half.first == Rational(1, 2));
    CHECK(half.second == Rational(1, 2));

    RealAlgebraic r5 = RealAlgebraic::from_root(IntPoly({-5, 0, 1}), Rational(2), Rational(3));
    auto iv = r5.refine(Rational(1, 100));
    CHECK(iv.first.get_d() == doctest::Approx(2.2360).epsilon(1e-3));
}

TEST_CASE("property: sturm_count matches isolate_real_roots on random polynomials") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> cdist(-9, 9), ddist(1, 8);
    for (int trial = 0; trial < 200; ++trial) {
        int deg = ddist(rng);
        std::vector<Integer> cs(static_cast<std::size_t>(deg) + 1);
        for (auto& c : cs) c = cdist(rng);
        if (cs.back() == 0) cs.back() = 1;
        IntPoly p(cs);
        Rational B = p.root_bound() + 1;
        CHECK(sturm_count(p, -B, B) == static_cast<int>(isolate_real_roots(p).size()));
    }
}

TEST_CASE("property: outward-rounded sqrt always encloses") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> num(1, 10000), den(1, 1000);
    for (int trial = 0; trial < 200; ++trial) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        for (mpfr_prec_t prec : {16, 32, 64, 128}) {
            DyadicInterval s = DyadicInterval::from_rational(q, prec).sqrt();
            // lo^2 <= q <= hi^2, compared exactly
            Rational lo = s.lower(), hi = s.upper();
            CHECK(lo * lo <= q);
            CHECK(hi * hi >= q);
        }
    }
}

TEST_CASE("property: alg_compare is a total order") {
    std::vector<RealAlgebraic> pool;
    for (const IntPoly& p :
         {IntPoly({-2, 0, 1}), IntPoly({-3, 0, 1}), IntPoly({2, 4, 1}), IntPoly({-1, -1, 1})})
        for (const auto& r : isolate_real_roots(p)) pool.push_back(r);
    for (const Rational& q : {Rational(0), Rational(-3, 2), Rational(2)})
        pool.push_back(RealAlgebraic::from_rational(q));
    for (const auto& x : pool)
        for (const auto& y : pool) {
            Cmp xy = alg_compare(x, y), yx = alg_compare(y, x);
            // antisymmetry
            CHECK((xy == Cmp::equal) == (yx == Cmp::equal));
            if (xy == Cmp::less) CHECK(yx == Cmp::greater);
            for (const auto& z : pool) {
                // transitivity of <=
                if (xy != Cmp::greater && alg_compare(y, z) != Cmp::greater)
                    CHECK(alg_compare(x, z) != Cmp::greater);
            }
        }
}

TEST_CASE("IntervalSet validation and membership") {
    RealAlgebraic a = RealAlgebraic::from_rational(Rational(-2));
    RealAlgebraic b = RealAlgebraic::from_rational(Rational(0));
    RealAlgebraic c = RealAlgebraic::from_rational(Rational(1));
    RealAlgebraic d = RealAlgebraic::from_rational(Rational(3));
    IntervalSet s({{a, b}, {c, d}});
    CHECK(s.contains(RealAlgebraic::from_rational(Rational(-1))));
    CHECK(s.contains(b));
    CHECK(!s.contains(RealAlgebraic::from_rational(Rational(1, 2))));
    CHECK_THROWS(IntervalSet({{c, d}, {a, b}}));
    CHECK_THROWS(IntervalSet({{b, a}}));
}

TEST_CASE("polynomial helpers") {
    IntPoly p({0, 2, 3, 1});  // X(X+1)(X+2)
    CHECK(p.squarefree_part() == p.primitive_part());
    IntPoly sq = IntPoly({1, 1}) * IntPoly({1, 1}) * IntPoly({3, 1});
    CHECK(!sq.is_squarefree());
    CHECK(sq.squarefree_part() == IntPoly({1, 1}) * IntPoly({3, 1}));
    CHECK(IntPoly::gcd(IntPoly({-1, 0, 1}), IntPoly({1, 1})) == IntPoly({1, 1}));
    QPoly q({Rational(1, 2), Rational(1, 3)});
    CHECK(q.clear_denominators() == IntPoly({3, 2}));
}
