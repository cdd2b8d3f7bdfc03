#pragma once

#include <string>
#include <vector>

#include "prepatlas/interval_set.hpp"
#include "prepatlas/poly.hpp"

namespace prepatlas {

inline constexpr int kPsiCap = 14;  // degree 2^13 = 8192

/// R_alpha = alpha^2 + 1 + sqrt(alpha^2 + 1); rational when alpha^2+1 is a
/// perfect rational square.
RealAlgebraic escape_radius(const Rational& alpha);

/// The real slice bound: [-R_alpha, 1/4] for |alpha| <= 1/2, else
/// [-R_alpha, |alpha| - alpha^2].
IntervalSet real_slice(const Rational& alpha);

/// psi_n(X) = f_X^n(alpha): psi_1 = X + alpha^2, psi_{k+1} = psi_k^2 + X.
/// Monic of degree 2^{n-1}; integer coefficients when alpha is an integer.
QPoly psi(const Rational& alpha, int n, int cap = kPsiCap);

/// F_{m,n} = psi_n - psi_m, with psi_0 the constant alpha.
QPoly prep_poly(const Rational& alpha, int m, int n, int cap = kPsiCap);

/// prep_poly with denominators cleared and content stripped (same roots).
IntPoly prep_poly_z(const Rational& alpha, int m, int n, int cap = kPsiCap);

enum class Verdict { Preperiodic, Escaped, BudgetExhausted };

struct OrbitRecord {
    Rational alpha;
    Rational c;
    std::vector<Rational> values;  // x_0 = alpha, x_1, ...
    Verdict verdict = Verdict::BudgetExhausted;
    int m = -1, n = -1;     // Preperiodic: x_n == x_m exactly, 0 <= m < n
    int escape_step = -1;   // Escaped
    std::string witness;    // escape mechanism description
};

/// Terminating preperiodicity decision for rational alpha and c.
OrbitRecord decide_rational(const Rational& alpha, const Rational& c, long budget = 100000);

struct RootVerdict {
    RealAlgebraic root;
    Verdict verdict = Verdict::Escaped;
    int m = -1, n = -1;
    int escape_step = -1;
    std::string witness;
};

/// Per-root preperiodicity verdicts for the algebraic-integer parameters
/// defined by a monic squarefree totally real minpoly; alpha must be an
/// integer. Exact iteration in Z[X]/(minpoly); one certified escape at any
/// real embedding settles every conjugate (preperiodicity is invariant under
/// conjugation).
std::vector<RootVerdict> decide_algebraic(const Rational& alpha, const IntPoly& minpoly);

struct ThetaResult {
    RealAlgebraic theta;
    QPoly minpoly;  // X^2 + 2(alpha^2+1)X + alpha^4 + alpha^2
    bool verified;  // exact check f^2_theta(alpha) == f^3_theta(alpha)
};

/// theta_alpha = -alpha^2 - 1 - sqrt(alpha^2 + 1), with its quadratic.
ThetaResult theta(const Rational& alpha);

}  // namespace prepatlas
