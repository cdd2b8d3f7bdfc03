#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "prepatlas/mandel.hpp"
#include "prepatlas/sturm.hpp"

using namespace prepatlas;

TEST_CASE("escape_grid examples") {
    // centers aligned so that integer parameters are sampled exactly:
    // re centers (2*col + 1 - 513)/256, im centers (2*row + 1 - 257)/256
    Window w{Rational(-513, 256), Rational(511, 256), Rational(-257, 256), Rational(255, 256)};
    EscapeGrid g = escape_grid(Rational(0), w, 512, 256, 200);
    const int row0 = 128;  // im = 0
    CHECK(g.at(row0, 128) == g.sentinel());  // c = -1: period-2 cycle
    CHECK(g.at(row0, 384) == 3);             // c = 1: 0 -> 1 -> 2 -> 5, |5| > 2
    EscapeGrid g1 = escape_grid(Rational(1), w, 512, 256, 200);
    CHECK(g1.at(row0, 0) == g1.sentinel());  // c = -2: 1 -> -1 -> -1 bounded
    // alpha=1, c=-5 escapes in one step (f(1) = -4, |−4| > R_1)
    Window w5{Rational(-11, 2), Rational(-9, 2), Rational(-1, 2), Rational(1, 2)};
    EscapeGrid g5 = escape_grid(Rational(1), w5, 1, 1, 50);
    CHECK(g5.at(0, 0) == 1);
}

TEST_CASE("grid marks exactly-sampled preperiodic parameters as bounded") {
    // The honest form of grid/root consistency: escape-time grids are
    // advisory, and a preperiodic parameter is only guaranteed sentinel when
    // a cell center hits it exactly (float drift at a non-aligned center can
    // legitimately escape). The window above aligns centers with the known
    // preperiodic parameters of alpha = 0.
    Window w{Rational(-513, 256), Rational(511, 256), Rational(-257, 256), Rational(255, 256)};
    EscapeGrid g = escape_grid(Rational(0), w, 512, 256, 200);
    const int row0 = 128;
    for (int col : {0, 128, 256})  // c = -2, -1, 0
        CHECK(g.at(row0, col) == g.sentinel());
    // quarter-sized cells still align
    EscapeGrid gq = escape_grid(Rational(0), w, 512, 256, 250);
    for (int col : {0, 128, 256}) CHECK(gq.at(row0, col) == gq.sentinel());
}

TEST_CASE("prep_roots examples") {
    auto rs = prep_roots(Rational(0), 0, 2);
    REQUIRE(rs.roots.size() == 2);
    CHECK(rs.roots[0].re == doctest::Approx(-1).epsilon(1e-10));
    CHECK(rs.roots[1].re == doctest::Approx(0).epsilon(1e-10));
    for (const auto& r : rs.roots) {
        CHECK(std::fabs(r.im) < 1e-10);
        CHECK(r.residual <= rs.tol);
    }

    auto rs3 = prep_roots(Rational(0), 0, 3);
    REQUIRE(rs3.roots.size() == 4);
    int reals = 0, complexes = 0;
    bool has_zero = false, has_neg = false;
    for (const auto& r : rs3.roots) {
        if (std::fabs(r.im) < 1e-9) {
            ++reals;
            if (std::fabs(r.re) < 1e-9) has_zero = true;
            if (std::fabs(r.re + 1.7549) < 1e-3) has_neg = true;
        } else {
            ++complexes;
        }
        CHECK(r.residual <= rs3.tol);
    }
    CHECK(reals == 2);
    CHECK(complexes == 2);
    CHECK(has_zero);
    CHECK(has_neg);

    auto rs2 = prep_roots(Rational(2), 1, 3);
    for (const auto& r : rs2.roots) CHECK(std::fabs(r.im) < 1e-9);
    IntPoly F = prep_poly_z(Rational(2), 1, 3).squarefree_part();
    CHECK(static_cast<int>(rs2.roots.size()) == F.degree());
    CHECK(count_distinct_real(F) == F.degree());
}

TEST_CASE("verify_in_disc examples") {
    auto r12 = verify_in_disc(prep_roots(Rational(1), 1, 2));
    CHECK(r12.ok);
    CHECK(r12.max_modulus == doctest::Approx(2).epsilon(1e-9));

    auto r02 = verify_in_disc(prep_roots(Rational(0), 0, 2));
    CHECK(r02.ok);
    CHECK(r02.slack == doctest::Approx(1).epsilon(1e-6));

    auto r21 = verify_in_disc(prep_roots(Rational(2), 0, 1));
    CHECK(r21.ok);
    CHECK(r21.max_modulus == doctest::Approx(2).epsilon(1e-9));
    CHECK(r21.radius == doctest::Approx(5 + std::sqrt(5.0)).epsilon(1e-9));
}

TEST_CASE("property: all real roots for |alpha| >= 2, n <= 6") {
    for (const Rational& alpha : {Rational(2), Rational(5, 2)})
        for (int n = 1; n <= 6; ++n)
            for (int m = 0; m < n; ++m) {
                IntPoly F = prep_poly_z(alpha, m, n).squarefree_part();
                CHECK(count_distinct_real(F) == F.degree());
            }
}

TEST_CASE("property: residual certification under interval arithmetic") {
    // prep_roots residuals are certified upper bounds; spot-check against a
    // direct double evaluation of F at each reported root
    for (int n : {2, 3, 4, 5}) {
        auto rs = prep_roots(Rational(1), 0, n);
        IntPoly F = prep_poly_z(Rational(1), 0, n).squarefree_part();
        for (const auto& r : rs.roots) {
            std::complex<double> z(r.re, r.im);
            double scale = 0, zp = 1;
            for (int i = 0; i <= F.degree(); ++i) {
                scale += std::fabs(F[static_cast<std::size_t>(i)].get_d()) * zp;
                zp *= std::abs(z);
            }
            std::complex<double> h(0, 0);
            for (int i = F.degree(); i >= 0; --i)
                h = h * z + std::complex<double>(F[static_cast<std::size_t>(i)].get_d(), 0);
            // at the exact root z = 0 both numerator and scale vanish
            if (scale == 0)
                CHECK(std::abs(h) == 0);
            else
                CHECK(std::abs(h) / scale <= rs.tol * 10);
        }
    }
}
