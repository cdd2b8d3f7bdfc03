#pragma once

#include <string>
#include <vector>

#include "prepatlas/orbit.hpp"

namespace prepatlas {

inline constexpr int kCantorDepthCap = 12;

/// Certified enclosure of u(c) = (1 + sqrt(1-4c))/2, the larger fixed point
/// of f_c. Requires c <= 1/4.
DyadicInterval fixed_point_u(const Rational& c, mpfr_prec_t prec = default_precision());
DyadicInterval fixed_point_u(const DyadicInterval& c);

/// Certified enclosure of v(c) = sqrt(u(c)^2 - 2u(c)), the positive preimage
/// of -u(c). Requires u(c) >= 2, i.e. c <= -2.
DyadicInterval preimage_v(const Rational& c, mpfr_prec_t prec = default_precision());
DyadicInterval preimage_v(const DyadicInterval& c);

/// Interval endpoint: certified rational enclosure [lo, hi] (lo == hi when
/// exact) plus the boundary equation it solves.
struct CantorEndpoint {
    Rational lo, hi;
    std::string tag;
    bool exact() const { return lo == hi; }
};

struct CantorInterval {
    CantorEndpoint left, right;
};

struct CantorLevel {
    Rational alpha;
    int depth = 0;
    std::vector<CantorInterval> intervals;
};

/// The level-n interval system of the Cantor construction for |alpha| >= 2.
/// n = 0 reports the clipped half-line [-R_alpha - 1, alpha - alpha^2]; for
/// n >= 1 there are exactly 2^{n-1} intervals, endpoints refined to width
/// <= eps by exact-sign bisection.
CantorLevel cantor_level(const Rational& alpha, int n, const Rational& eps);

struct LocalizationReport {
    bool ok = false;
    int degree = 0;         // degree of squarefree(F_{m,n})
    int real_roots = 0;     // distinct real roots (should equal degree)
    int num_intervals = 0;  // 2^{n-1}
    std::vector<int> counts;  // roots per interval, closed outer enclosures
    int outside = 0;
    std::string message;
};

/// Certifies one root of squarefree(F_{m,n}) per level-n interval and none
/// outside, via exact Sturm counts.
LocalizationReport localize_roots(const Rational& alpha, int m, int n,
                                  const Rational& eps = Rational(Integer(1), Integer(1000000000000L)));

}  // namespace prepatlas
