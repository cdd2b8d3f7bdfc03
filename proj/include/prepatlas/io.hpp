#pragma once

#include <string>

#include "prepatlas/cantor.hpp"
#include "prepatlas/capacity.hpp"
#include "prepatlas/classify.hpp"
#include "prepatlas/mandel.hpp"

namespace prepatlas {

// All serializers are deterministic: stable key order, exact rational strings
// where the value is exact, and explicit enclosure-width metadata where it is
// not.

/// Binary PGM (P5), maxval = min(max_iter, 255). Bounded cells (sentinel)
/// render black; escape counts scale linearly to 1..maxval.
std::string to_pgm(const EscapeGrid& grid);

/// CSV "re,im,count" with exact rational cell-center coordinates.
std::string to_csv(const EscapeGrid& grid);

/// CSV "re,im,residual".
std::string to_csv(const ComplexRootSet& rs);
std::string to_json(const ComplexRootSet& rs);

std::string to_csv(const CantorLevel& lvl);
std::string to_json(const CantorLevel& lvl);

std::string to_json(const CriterionReport& rep);
/// Human-readable comparison table ending with the certificate line.
std::string to_table(const CriterionReport& rep);

std::string to_json(const ClassificationResult& res);
/// Human-readable report: candidates, decimal root enclosures, verdicts,
/// witnesses.
std::string to_report(const ClassificationResult& res);

/// Exact endpoint mini-grammar: sums of rational terms and quadratic surd
/// terms ("-2-sqrt2", "1/4", "-2+3*sqrt2", "sqrt(5)/2"). All surd terms must
/// share one radicand.
RealAlgebraic parse_endpoint(const std::string& s);

/// "a,b" with both endpoints in the mini-grammar; requires a < b.
std::pair<RealAlgebraic, RealAlgebraic> parse_interval(const std::string& s);

}  // namespace prepatlas
