#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prepatlas/orbit.hpp"

namespace prepatlas {

inline constexpr int kDegreeBoundCap = 64;

/// Logarithmic capacity (b - a)/4 of a closed interval; at most one endpoint
/// may be irrational.
RealAlgebraic interval_capacity(const RealAlgebraic& a, const RealAlgebraic& b);
inline RealAlgebraic interval_capacity(const Rational& a, const Rational& b) {
    return interval_capacity(RealAlgebraic::from_rational(a), RealAlgebraic::from_rational(b));
}

/// Certified enclosure of R_alpha^{1/2^{n-1}}, the capacity of the n-th
/// lemniscate approximant.
DyadicInterval lemniscate_capacity(const Rational& alpha, int n,
                                   mpfr_prec_t prec = default_precision());

/// D_2 = 1; D_n = n^n (n-2)^{n-2} / (2^{2n-2} (2n-3)^{2n-3}) * D_{n-1}.
Rational d_sequence(int n);

/// Certified enclosure of d_n([a,b]) = (b-a) * D_n^{1/(n(n-1))}.
DyadicInterval exact_n_diameter(const RealAlgebraic& a, const RealAlgebraic& b, int n,
                                mpfr_prec_t prec = default_precision());
inline DyadicInterval exact_n_diameter(const Rational& a, const Rational& b, int n,
                                       mpfr_prec_t prec = default_precision()) {
    return exact_n_diameter(RealAlgebraic::from_rational(a), RealAlgebraic::from_rational(b), n,
                            prec);
}

struct FeketeConfiguration {
    std::vector<double> points;
    double objective = 0;   // sum of log pairwise distances
    double d_estimate = 0;  // exp(2*objective/(n(n-1)))
    int iterations = 0;
};

/// Coordinate-ascent Fekete point search on [a, b] with golden-section line
/// search per inter-point cell; deterministic restarts.
FeketeConfiguration fekete_optimize(double a, double b, int n, int restarts = 8,
                                    unsigned seed = 1);

struct CriterionRow {
    int n = 0;
    Rational a_lo, a_hi;  // certified enclosure of a_n = (b-a)^{n(n-1)} D_n
    Rational b_n;         // exact n^{2n}/n!^2
    bool a_lt_b = false;      // certified a_n < b_n
    bool ratio_lt = false;    // certified a_{n+1}/a_n < b_{n+1}/b_n
};

struct CriterionReport {
    std::string interval;
    std::optional<int> n0;
    std::vector<CriterionRow> table;
    bool certified = false;
};

/// Degree-bound criterion over [a, b] (length < 4 required): reports the
/// published certificate index n0 — the smallest n passing both strict
/// inequalities whose predecessor also satisfies a_{n-1} < b_{n-1} — plus
/// the full comparison table.
CriterionReport degree_bound(const RealAlgebraic& a, const RealAlgebraic& b,
                             int cap = kDegreeBoundCap);
inline CriterionReport degree_bound(const Rational& a, const Rational& b,
                                    int cap = kDegreeBoundCap) {
    return degree_bound(RealAlgebraic::from_rational(a), RealAlgebraic::from_rational(b), cap);
}

}  // namespace prepatlas
