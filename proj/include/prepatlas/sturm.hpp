#pragma once

#include <utility>
#include <vector>

#include "prepatlas/poly.hpp"

namespace prepatlas {

/// Sturm chain of the squarefree part of p; each entry primitive with the
/// sign pattern of the canonical chain (content is stripped by positive
/// constants only, so sign variations are unchanged).
std::vector<IntPoly> sturm_chain(const IntPoly& p);

int variations_at(const std::vector<IntPoly>& chain, const Rational& x);
int variations_at_pos_inf(const std::vector<IntPoly>& chain);
int variations_at_neg_inf(const std::vector<IntPoly>& chain);

/// Distinct real roots of p in the open interval (a, b); requires p(a) != 0
/// and p(b) != 0.
int count_open(const std::vector<IntPoly>& chain, const Rational& a, const Rational& b);

/// Distinct real roots of p over all of R.
int count_distinct_real(const IntPoly& p);

/// Isolating intervals for every distinct real root of p, left to right.
/// A degenerate pair (r, r) marks an exact rational root; otherwise the
/// interval is open with non-root rational endpoints and contains exactly
/// one root of the squarefree part.
std::vector<std::pair<Rational, Rational>> isolate_intervals(const IntPoly& p);

}  // namespace prepatlas
