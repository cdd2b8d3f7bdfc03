#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "prepatlas/cantor.hpp"

using namespace prepatlas;

namespace {
const Rational kEps(Integer(1), Integer(1000000000000L));
}

TEST_CASE("fixed_point_u examples") {
    CHECK(fixed_point_u(Rational(-2)).contains(Rational(2)));
    CHECK(fixed_point_u(Rational(0)).contains(Rational(1)));
    CHECK(fixed_point_u(Rational(-6)).contains(Rational(3)));
    CHECK_THROWS_WITH(fixed_point_u(Rational(1, 2)), "complex fixed points");
}

TEST_CASE("preimage_v examples") {
    CHECK(preimage_v(Rational(-2)).contains(Rational(0)));
    // c = -6: v = sqrt(3), f(v) = 3 - 6 = -3 = -u
    DyadicInterval v6 = preimage_v(Rational(-6));
    DyadicInterval check = v6 * v6;
    CHECK(check.contains(Rational(3)));
    CHECK_THROWS_WITH(preimage_v(Rational(-1)), "v undefined at this parameter");

    // c = -5-sqrt(5) (the alpha=2 left endpoint of C_1): v(c) = 2 = alpha
    RealAlgebraic c = RealAlgebraic::from_quadratic(Rational(-5), Rational(-1), Rational(5));
    DyadicInterval vc = preimage_v(c.enclosure(128));
    CHECK(vc.contains(Rational(2)));
}

TEST_CASE("property: v-identity v^2 + c + u = 0 for random c <= -2") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> num(0, 40000), den(1, 100);
    for (int trial = 0; trial < 200; ++trial) {
        Rational c = Rational(-2) - Rational(num(rng), den(rng));
        c.canonicalize();
        DyadicInterval u = fixed_point_u(c, 128);
        DyadicInterval v = preimage_v(c, 128);
        DyadicInterval residue = v * v + DyadicInterval::from_rational(c, 128) + u;
        CHECK(residue.contains_zero());
    }
}

TEST_CASE("cantor_level examples") {
    auto l0 = cantor_level(Rational(2), 0, kEps);
    REQUIRE(l0.intervals.size() == 1);
    CHECK(l0.intervals[0].right.lo == -2);  // alpha - alpha^2
    CHECK(l0.intervals[0].left.tag.substr(0, 9) == "synthetic");

    auto l1 = cantor_level(Rational(2), 1, kEps);
    REQUIRE(l1.intervals.size() == 1);
    // [-5-sqrt5, -2]
    RealAlgebraic left = RealAlgebraic::from_quadratic(Rational(-5), Rational(-1), Rational(5));
    auto [lo, hi] = left.refine(kEps);
    CHECK(l1.intervals[0].left.lo <= hi);
    CHECK(l1.intervals[0].left.hi >= lo);
    CHECK(l1.intervals[0].right.lo == -2);
    CHECK(l1.intervals[0].right.exact());

    auto l2 = cantor_level(Rational(2), 2, kEps);
    REQUIRE(l2.intervals.size() == 2);
    CHECK(l2.intervals[0].right.hi < l2.intervals[1].left.lo);  // disjoint
    CHECK(l2.intervals[0].left.lo >= l1.intervals[0].left.lo);
    CHECK(l2.intervals[1].right.hi <= l1.intervals[0].right.hi);

    CHECK_THROWS_WITH(cantor_level(Rational(1), 1, kEps),
                      "Cantor construction requires |alpha| >= 2");
}

TEST_CASE("property: counts and nesting for n <= 8") {
    for (const Rational& alpha : {Rational(2), Rational(5, 2), Rational(3)}) {
        CantorLevel prev;
        for (int n = 1; n <= 8; ++n) {
            CantorLevel lvl = cantor_level(alpha, n, kEps);
            CHECK(lvl.intervals.size() == (std::size_t{1} << (n - 1)));
            // endpoints are genuine enclosures of width <= eps
            for (const auto& iv : lvl.intervals) {
                CHECK(iv.left.lo <= iv.left.hi);
                CHECK(iv.left.hi - iv.left.lo <= kEps);
                CHECK(iv.right.hi - iv.right.lo <= kEps);
            }
            if (n >= 2) {
                for (const auto& child : lvl.intervals) {
                    bool nested = false;
                    for (const auto& parent : prev.intervals)
                        if (parent.left.lo <= child.left.lo && child.right.hi <= parent.right.hi)
                            nested = true;
                    CHECK(nested);
                }
            }
            prev = std::move(lvl);
        }
    }
}

TEST_CASE("boundary tags record the defining equations") {
    auto l3 = cantor_level(Rational(2), 3, kEps);
    for (const auto& iv : l3.intervals) {
        bool left_outer = iv.left.tag == "f^3 = +u";
        bool left_inner = iv.left.tag.find("(f^3 = -u)") != std::string::npos;
        CHECK((left_outer || left_inner));
        bool right_outer = iv.right.tag == "f^3 = +u";
        bool right_inner = iv.right.tag.find("(f^3 = -u)") != std::string::npos;
        CHECK((right_outer || right_inner));
    }
}

TEST_CASE("localize_roots examples") {
    auto r = localize_roots(Rational(2), 0, 2);
    CHECK(r.ok);
    CHECK(r.degree == 2);
    CHECK(r.num_intervals == 2);
    CHECK(r.counts == std::vector<int>{1, 1});
    CHECK(r.outside == 0);

    auto r12 = localize_roots(Rational(2), 1, 2);
    CHECK(r12.ok);
    CHECK(r12.degree == 2);

    auto r04 = localize_roots(Rational(5, 2), 0, 4);
    CHECK(r04.ok);
    CHECK(r04.degree == 8);
    CHECK(r04.num_intervals == 8);
    for (int c : r04.counts) CHECK(c == 1);

    CHECK_THROWS(localize_roots(Rational(1), 0, 2));
}
