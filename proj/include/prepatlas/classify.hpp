#pragma once

#include <string>
#include <vector>

#include "prepatlas/capacity.hpp"
#include "prepatlas/orbit.hpp"

namespace prepatlas {

/// n-th cyclotomic polynomial via recursive division of X^n - 1.
IntPoly cyclotomic(int n);

/// Minimal polynomial of zeta_n + zeta_n^{-1} - 2 (monic, degree phi(n)/2,
/// roots in [-4, 0]); n >= 3.
IntPoly shifted_chebyshev_minpoly(int n);

/// Minimal polynomial of zeta_n + zeta_n^{-1} + (t + 2) for any n >= 1 and
/// integer shift t; degree 1 for n in {1, 2}.
IntPoly kronecker_factor(int n, const Integer& t);

/// z^deg(p) * p(z + 1/z - 2) as a polynomial in z; a product of cyclotomics
/// exactly when all roots of p lie in [-4, 0] and p is a Kronecker candidate.
IntPoly kronecker_lift(const IntPoly& p);

/// True iff kronecker_lift(p) factors completely into cyclotomic polynomials.
bool kronecker_roundtrip(const IntPoly& p);

/// All monic squarefree integer polynomials of degree <= n0 - 1 with every
/// root in the closed interval [a, b] (which must fit inside [t, t+4] for an
/// integer t), as products of distinct Kronecker factors.
std::vector<IntPoly> enumerate_candidates(const RealAlgebraic& a, const RealAlgebraic& b, int n0);

/// True iff p is squarefree with all distinct real roots.
bool totally_real_test(const IntPoly& p);

struct RootWitness {
    RealAlgebraic root;
    int m = -1, n = -1;  // exact relation f^n_c(alpha) = f^m_c(alpha)
};

struct AcceptedCandidate {
    IntPoly poly;
    std::vector<RootWitness> witnesses;
    bool reverified = false;  // independent check: poly | F_{m,n}
};

struct RejectedCandidate {
    IntPoly poly;
    std::string reason;
};

struct ClassificationResult {
    Rational alpha;
    std::string interval;
    int degree_bound_n0 = 0;
    std::vector<IntPoly> candidates_considered;
    std::vector<AcceptedCandidate> accepted;
    std::vector<RejectedCandidate> rejected;
    // accepted parameters by irreducible minimal polynomial
    std::vector<AcceptedCandidate> accepted_parameters;
    std::string notes;
};

/// Full pipeline for alpha in {-1, 0, 1}: real slice, degree bound,
/// Kronecker enumeration, per-candidate exact preperiodicity decision.
ClassificationResult classify_totally_real_prep(const Rational& alpha);

}  // namespace prepatlas
