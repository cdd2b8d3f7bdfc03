#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "prepatlas/classify.hpp"

using namespace prepatlas;

namespace {
RealAlgebraic neg_r1() {
    return RealAlgebraic::from_quadratic(Rational(-2), Rational(-1), Rational(2));
}
}  // namespace

TEST_CASE("cyclotomic examples") {
    CHECK(cyclotomic(1) == IntPoly({-1, 1}));
    CHECK(cyclotomic(2) == IntPoly({1, 1}));
    CHECK(cyclotomic(4) == IntPoly({1, 0, 1}));
    CHECK(cyclotomic(8) == IntPoly({1, 0, 0, 0, 1}));
    CHECK(cyclotomic(12) == IntPoly({1, 0, -1, 0, 1}));
    CHECK(cyclotomic(7) == IntPoly({1, 1, 1, 1, 1, 1, 1}));
    // phi(105) = 48; classic first case with a coefficient of modulus 2
    CHECK(cyclotomic(105).degree() == 48);
}

TEST_CASE("shifted_chebyshev_minpoly examples") {
    CHECK(shifted_chebyshev_minpoly(4) == IntPoly({2, 1}));
    CHECK(shifted_chebyshev_minpoly(8) == IntPoly({2, 4, 1}));
    CHECK(shifted_chebyshev_minpoly(3) == IntPoly({3, 1}));
    CHECK_THROWS(shifted_chebyshev_minpoly(2));
    // all roots in [-4, 0]
    for (int n : {5, 7, 9, 12, 16, 30})
        CHECK(sturm_count(shifted_chebyshev_minpoly(n), Rational(-4), Rational(0)) ==
              shifted_chebyshev_minpoly(n).degree());
}

TEST_CASE("Kronecker round trip") {
    CHECK(kronecker_lift(IntPoly({2, 1})) == cyclotomic(4));
    CHECK(kronecker_lift(IntPoly({2, 4, 1})) == cyclotomic(8));
    for (int n : {3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 16, 20})
        CHECK(kronecker_roundtrip(shifted_chebyshev_minpoly(n)));
    CHECK(kronecker_roundtrip(IntPoly({0, 1})));       // X lifts to Phi_1^2
    CHECK(!kronecker_roundtrip(IntPoly({5, 1})));      // root outside [-4, 0]
    CHECK(!kronecker_roundtrip(IntPoly({1, 1, 1, 1})));  // not a Kronecker candidate
}

TEST_CASE("enumerate_candidates examples") {
    auto half = enumerate_candidates(RealAlgebraic::from_rational(Rational(-1, 2)),
                                     RealAlgebraic::from_rational(Rational(1, 2)), 2);
    REQUIRE(half.size() == 1);
    CHECK(half[0] == IntPoly::x());

    auto c = enumerate_candidates(neg_r1(), RealAlgebraic::from_rational(Rational(0)), 12);
    auto has = [&](const IntPoly& p) { return std::find(c.begin(), c.end(), p) != c.end(); };
    CHECK(has(IntPoly({0, 1})));
    CHECK(has(IntPoly({1, 1})));
    CHECK(has(IntPoly({2, 1})));
    CHECK(has(IntPoly({3, 1})));
    CHECK(has(IntPoly({2, 4, 1})));
    CHECK(!has(IntPoly({4, 1})));  // root -4 < -2-sqrt(2)
    for (const auto& p : c) {
        CHECK(p.leading() == 1);
        CHECK(p.is_squarefree());
        CHECK(p.degree() <= 11);
    }

    CHECK_THROWS_WITH(enumerate_candidates(RealAlgebraic::from_rational(Rational(-5)),
                                           RealAlgebraic::from_rational(Rational(0)), 3),
                      "interval not reducible to Kronecker form");
}

TEST_CASE("[-4,0] candidates cross-checked by brute force over quadratics") {
    auto c = enumerate_candidates(RealAlgebraic::from_rational(Rational(-4)),
                                  RealAlgebraic::from_rational(Rational(0)), 3);
    std::vector<IntPoly> brute;
    // monic X + b and X^2 + bX + c with coefficient bounds from root bound 4
    for (int b = 0; b <= 4; ++b) brute.push_back(IntPoly({b, 1}));
    for (int b = 0; b <= 8; ++b)
        for (int k = 0; k <= 16; ++k) {
            IntPoly p({k, b, 1});
            if (p.is_squarefree() && sturm_count(p, Rational(-4), Rational(0)) == 2)
                brute.push_back(p);
        }
    CHECK(c.size() == brute.size());
    for (const auto& p : brute) CHECK(std::find(c.begin(), c.end(), p) != c.end());
}

TEST_CASE("property: brute-force completeness at degree <= 3 on [-2-sqrt2, 0]") {
    RealAlgebraic a = neg_r1();
    RealAlgebraic b = RealAlgebraic::from_rational(Rational(0));
    auto enumd = enumerate_candidates(a, b, 12);
    std::vector<IntPoly> sub;
    for (const auto& p : enumd)
        if (p.degree() <= 3) sub.push_back(p);

    // all monic squarefree integer polynomials of degree <= 3 with roots in
    // [a, 0]: roots nonpositive forces nonnegative coefficients, bounded by
    // binomial sums of the root bound 7/2
    std::vector<IntPoly> brute;
    auto admit = [&](IntPoly p) {
        if (!p.is_squarefree()) return;
        // cheap rational prefilter, then the exact closed-interval test
        if (sturm_count(p, Rational(-7, 2), Rational(0)) != p.degree()) return;
        if (sturm_count(p, a, b) == p.degree()) brute.push_back(std::move(p));
    };
    for (int c0 = 0; c0 <= 3; ++c0) admit(IntPoly({c0, 1}));
    for (int c1 = 0; c1 <= 7; ++c1)
        for (int c0 = 0; c0 <= 12; ++c0) admit(IntPoly({c0, c1, 1}));
    for (int c2 = 0; c2 <= 10; ++c2)
        for (int c1 = 0; c1 <= 36; ++c1)
            for (int c0 = 0; c0 <= 42; ++c0) admit(IntPoly({c0, c1, c2, 1}));

    CHECK(sub.size() == brute.size());
    for (const auto& p : brute)
        CHECK(std::find(sub.begin(), sub.end(), p) != sub.end());
}

TEST_CASE("totally_real_test examples") {
    CHECK(totally_real_test(IntPoly({2, 4, 1})));
    CHECK(!totally_real_test(IntPoly({1, 0, 1})));
    CHECK(!totally_real_test(IntPoly({1, -2, 1})));  // (X-1)^2 not squarefree
}

TEST_CASE("classify_totally_real_prep alpha = 1") {
    auto r = classify_totally_real_prep(Rational(1));
    CHECK(r.degree_bound_n0 == 12);
    REQUIRE(r.accepted_parameters.size() == 5);
    std::vector<IntPoly> expect{IntPoly({0, 1}), IntPoly({1, 1}), IntPoly({2, 1}),
                                IntPoly({3, 1}), IntPoly({2, 4, 1})};
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(r.accepted_parameters[i].poly == expect[i]);
        CHECK(r.accepted_parameters[i].reverified);
    }
    CHECK(r.accepted.size() + r.rejected.size() == r.candidates_considered.size());
    CHECK(!r.notes.empty());
    // the rejected list names escape witnesses
    for (const auto& rej : r.rejected) CHECK(rej.reason.find("escapes") != std::string::npos);
    // X^2+3X+1 (preperiodic-looking Kronecker factor) is enumerated but rejected
    bool found = false;
    for (const auto& rej : r.rejected)
        if (rej.poly == IntPoly({1, 3, 1})) found = true;
    CHECK(found);
}

TEST_CASE("classify_totally_real_prep evenness and alpha = 0") {
    auto r1 = classify_totally_real_prep(Rational(1));
    auto rm = classify_totally_real_prep(Rational(-1));
    CHECK(rm.interval == r1.interval);
    CHECK(rm.degree_bound_n0 == r1.degree_bound_n0);
    CHECK(rm.candidates_considered == r1.candidates_considered);
    REQUIRE(rm.accepted.size() == r1.accepted.size());
    for (std::size_t i = 0; i < rm.accepted.size(); ++i)
        CHECK(rm.accepted[i].poly == r1.accepted[i].poly);
    REQUIRE(rm.rejected.size() == r1.rejected.size());
    for (std::size_t i = 0; i < rm.rejected.size(); ++i)
        CHECK(rm.rejected[i].poly == r1.rejected[i].poly);
    // every alpha=-1 witness is independently reverified even where the exact
    // (m, n) indices differ from the alpha=1 run
    for (const auto& a : rm.accepted_parameters) CHECK(a.reverified);

    auto r0 = classify_totally_real_prep(Rational(0));
    REQUIRE(r0.accepted_parameters.size() == 3);
    CHECK(r0.accepted_parameters[0].poly == IntPoly({0, 1}));
    CHECK(r0.accepted_parameters[1].poly == IntPoly({1, 1}));
    CHECK(r0.accepted_parameters[2].poly == IntPoly({2, 1}));
    CHECK(r0.rejected.empty());
    CHECK(r0.notes.empty());

    CHECK_THROWS(classify_totally_real_prep(Rational(1, 2)));
    CHECK_THROWS(classify_totally_real_prep(Rational(2)));
}
