#pragma once

#include <string>
#include <utility>
#include <vector>

#include "prepatlas/dyadic.hpp"
#include "prepatlas/poly.hpp"
#include "prepatlas/sturm.hpp"

namespace prepatlas {

enum class Cmp { less, equal, greater };

/// Real algebraic number: squarefree primitive minimal polynomial (positive
/// leading coefficient) plus a rational isolating interval. Rational values
/// are stored with a degenerate interval (lo == hi). Immutable.
class RealAlgebraic {
  public:
    static RealAlgebraic from_rational(const Rational& q);
    /// Validates that squarefree(p) has exactly one root in the open (lo, hi)
    /// and that the endpoints are not roots.
    static RealAlgebraic from_root(const IntPoly& p, const Rational& lo, const Rational& hi);
    /// a + b*sqrt(s) with s >= 0; collapses to a rational when possible.
    static RealAlgebraic from_quadratic(const Rational& a, const Rational& b, const Rational& s);

    const IntPoly& minpoly() const { return minpoly_; }
    std::pair<Rational, Rational> isolation() const { return {lo_, hi_}; }
    bool is_rational() const { return lo_ == hi_; }
    /// Requires is_rational().
    const Rational& rational_value() const { return lo_; }

    /// Isolating interval of width < eps (degenerate for rationals).
    std::pair<Rational, Rational> refine(const Rational& eps) const;
    /// Certified dyadic enclosure at the given precision.
    DyadicInterval enclosure(mpfr_prec_t prec = default_precision()) const;
    double to_double() const;

    int sign() const;
    RealAlgebraic negated() const;
    RealAlgebraic shifted(const Rational& t) const;
    RealAlgebraic scaled(const Rational& k) const;

    std::string to_string() const;

  private:
    RealAlgebraic(IntPoly mp, Rational lo, Rational hi)
        : minpoly_(std::move(mp)), lo_(std::move(lo)), hi_(std::move(hi)) {}
    IntPoly minpoly_;
    Rational lo_, hi_;
};

Cmp alg_compare(const RealAlgebraic& x, const RealAlgebraic& y);
inline Cmp alg_compare(const RealAlgebraic& x, const Rational& y) {
    return alg_compare(x, RealAlgebraic::from_rational(y));
}
inline Cmp alg_compare(const Rational& x, const RealAlgebraic& y) {
    return alg_compare(RealAlgebraic::from_rational(x), y);
}
inline Cmp alg_compare(const Rational& x, const Rational& y) {
    int c = cmp(x, y);
    return c < 0 ? Cmp::less : (c == 0 ? Cmp::equal : Cmp::greater);
}
inline bool alg_le(const RealAlgebraic& x, const RealAlgebraic& y) {
    return alg_compare(x, y) != Cmp::greater;
}
inline bool alg_lt(const RealAlgebraic& x, const RealAlgebraic& y) {
    return alg_compare(x, y) == Cmp::less;
}

/// One value per distinct real root of squarefree(p), sorted increasing.
std::vector<RealAlgebraic> isolate_real_roots(const IntPoly& p);

/// Distinct real roots of p in the closed interval [a, b] (endpoint roots
/// count). Errors on the zero polynomial.
int sturm_count(const IntPoly& p, const RealAlgebraic& a, const RealAlgebraic& b);
inline int sturm_count(const IntPoly& p, const Rational& a, const Rational& b) {
    return sturm_count(p, RealAlgebraic::from_rational(a), RealAlgebraic::from_rational(b));
}

}  // namespace prepatlas
