#pragma once

#include <complex>
#include <string>
#include <vector>

#include "prepatlas/orbit.hpp"

namespace prepatlas {

struct Window {
    Rational re_min, re_max, im_min, im_max;
};

/// Escape-time raster over a parameter window. Cells hold the first n with
/// |f^n_c(alpha)| > R_alpha (double iteration, bailout rounded up), or
/// max_iter+1 when the orbit stays bounded within budget. Advisory
/// visualization only; classification verdicts come from the exact modules.
struct EscapeGrid {
    Rational alpha;
    Window window;
    int width = 0, height = 0;
    int max_iter = 0;
    std::vector<int> cells;  // row-major, height rows of width entries

    int at(int row, int col) const { return cells[static_cast<std::size_t>(row) * width + col]; }
    int sentinel() const { return max_iter + 1; }
};

EscapeGrid escape_grid(const Rational& alpha, const Window& window, int width, int height,
                       int max_iter, int threads = 1);

struct ComplexRoot {
    double re = 0, im = 0;
    double residual = 0;  // certified backward-relative residual bound
};

struct ComplexRootSet {
    Rational alpha;
    int m = 0, n = 0;
    double tol = 0;
    std::vector<ComplexRoot> roots;  // one per distinct root (squarefree part)
};

/// All complex roots of squarefree(F_{m,n}) by Aberth–Ehrlich simultaneous
/// iteration, each certified via 128-bit interval evaluation to backward
/// relative residual <= tol.
ComplexRootSet prep_roots(const Rational& alpha, int m, int n, double tol = 1e-12,
                          int threads = 1);

struct DiscReport {
    bool ok = false;
    double max_modulus = 0;
    double radius = 0;  // upper bound on R_alpha
    double slack = 0;   // radius + tol - max_modulus
    std::string offending;  // set when ok is false
};

/// Checks every root modulus <= R_alpha + tol (certified upper bounds).
DiscReport verify_in_disc(const ComplexRootSet& rs, double tol = 1e-9);

}  // namespace prepatlas
