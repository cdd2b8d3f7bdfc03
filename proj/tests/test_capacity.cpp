#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "prepatlas/capacity.hpp"

using namespace prepatlas;

namespace {
RealAlgebraic neg_r1() {
    return RealAlgebraic::from_quadratic(Rational(-2), Rational(-1), Rational(2));
}
}  // namespace

TEST_CASE("interval_capacity examples") {
    auto c1 = interval_capacity(Rational(-2), Rational(2));
    CHECK(c1.is_rational());
    CHECK(c1.rational_value() == 1);

    auto c2 = interval_capacity(neg_r1(), RealAlgebraic::from_rational(Rational(0)));
    CHECK(alg_compare(c2, Rational(1)) == Cmp::less);
    CHECK(c2.to_double() == doctest::Approx(0.8535533906).epsilon(1e-9));

    auto c3 = interval_capacity(Rational(0), Rational(1));
    CHECK(c3.rational_value() == Rational(1, 4));

    CHECK_THROWS(interval_capacity(Rational(1), Rational(0)));
}

TEST_CASE("lemniscate_capacity examples and monotonicity") {
    DyadicInterval l1 = lemniscate_capacity(Rational(1), 1, 128);
    CHECK(l1.mid_double() == doctest::Approx(2 + std::sqrt(2.0)).epsilon(1e-12));
    DyadicInterval l2 = lemniscate_capacity(Rational(0), 2, 128);
    CHECK(l2.mid_double() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

    DyadicInterval prev = l1;
    for (int n = 2; n <= 20; ++n) {
        DyadicInterval cur = lemniscate_capacity(Rational(1), n, 192);
        CHECK(cur.certainly_lt(prev));
        CHECK(cur.certainly_gt(Rational(1)));
        prev = cur;
    }
    CHECK(prev.certainly_lt(Rational(10001, 10000)));
}

TEST_CASE("d_sequence examples") {
    CHECK(d_sequence(2) == 1);
    CHECK(d_sequence(3) == Rational(1, 16));
    CHECK(d_sequence(4) == Rational(1, 3125));
    CHECK_THROWS(d_sequence(1));
}

TEST_CASE("exact_n_diameter examples and monotonicity") {
    DyadicInterval d3 = exact_n_diameter(Rational(-2), Rational(2), 3, 128);
    CHECK(d3.mid_double() == doctest::Approx(std::cbrt(16.0)).epsilon(1e-12));

    DyadicInterval d2 = exact_n_diameter(Rational(0), Rational(4), 2, 128);
    CHECK(d2.contains(Rational(4)));

    DyadicInterval prev = exact_n_diameter(Rational(-2), Rational(2), 2, 192);
    for (int n = 3; n <= 8; ++n) {
        DyadicInterval cur = exact_n_diameter(Rational(-2), Rational(2), n, 192);
        CHECK(cur.certainly_lt(prev));
        CHECK(cur.certainly_gt(Rational(1)));
        prev = cur;
    }
}

TEST_CASE("fekete_optimize matches exact oracle") {
    auto f3 = fekete_optimize(-2, 2, 3);
    CHECK(std::fabs(f3.points[0] + 2) < 1e-7);
    CHECK(std::fabs(f3.points[1]) < 1e-7);
    CHECK(std::fabs(f3.points[2] - 2) < 1e-7);
    CHECK(f3.d_estimate ==
          doctest::Approx(exact_n_diameter(Rational(-2), Rational(2), 3, 128).mid_double())
              .epsilon(1e-6));

    auto f2 = fekete_optimize(-2, 2, 2);
    CHECK(f2.d_estimate == doctest::Approx(4).epsilon(1e-9));

    auto f4 = fekete_optimize(0, 1, 4);
    double exact = exact_n_diameter(Rational(0), Rational(1), 4, 128).mid_double();
    CHECK(f4.d_estimate == doctest::Approx(exact).epsilon(1e-6));

    // never exceeds the exact n-diameter (up to slack)
    for (int n = 2; n <= 8; ++n) {
        double ex = exact_n_diameter(Rational(-2), Rational(2), n, 192).upper_double();
        CHECK(fekete_optimize(-2, 2, n).d_estimate <= ex + 1e-9);
    }
}

TEST_CASE("property: brute-force grid reproduces a_n for n in {2,3,4}") {
    // configurations on a refining grid approach a_n = 4^{n(n-1)} D_n
    for (int n : {2, 3, 4}) {
        double best = 0;
        const int steps = 40;
        std::vector<int> idx(static_cast<std::size_t>(n), 0);
        // iterate nondecreasing index tuples
        for (;;) {
            double prod = 1;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    prod *= std::fabs((idx[static_cast<std::size_t>(i)] -
                                       idx[static_cast<std::size_t>(j)]) *
                                      (4.0 / steps));
            if (prod > best) best = prod;
            int k = n - 1;
            while (k >= 0 && idx[static_cast<std::size_t>(k)] == steps) --k;
            if (k < 0) break;
            int v = ++idx[static_cast<std::size_t>(k)];
            for (int j = k + 1; j < n; ++j) idx[static_cast<std::size_t>(j)] = v;
        }
        double an = best * best;  // (prod of distances)^2 = d_n^{n(n-1)} = a_n
        Rational exact_q =
            pow_rational(Rational(4), static_cast<unsigned long>(n) * (n - 1)) * d_sequence(n);
        double exact = exact_q.get_d();
        CHECK(std::fabs(an - exact) <= 1e-4 * exact);
    }
}

TEST_CASE("degree_bound examples") {
    auto r01 = degree_bound(Rational(0), Rational(1));
    REQUIRE(r01.n0.has_value());
    CHECK(*r01.n0 == 2);
    CHECK(r01.certified);

    auto rs = degree_bound(neg_r1(), RealAlgebraic::from_rational(Rational(0)));
    REQUIRE(rs.n0.has_value());
    CHECK(*rs.n0 == 12);
    CHECK(rs.certified);
    bool row12 = false;
    for (const auto& row : rs.table)
        if (row.n == 12) row12 = row.a_lt_b && row.ratio_lt;
    CHECK(row12);

    CHECK_THROWS_WITH(degree_bound(Rational(-2), Rational(2)), "criterion inapplicable");
}
