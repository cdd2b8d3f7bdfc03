#include "prepatlas/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace prepatlas {

namespace {

/// b - a as a RealAlgebraic; supported when at least one endpoint is rational.
RealAlgebraic alg_length(const RealAlgebraic& a, const RealAlgebraic& b) {
    if (a.is_rational()) return b.shifted(-a.rational_value());
    if (b.is_rational()) return a.negated().shifted(b.rational_value());
    throw std::invalid_argument(
        "intervals with two irrational endpoints are not supported");
}

}  // namespace

RealAlgebraic interval_capacity(const RealAlgebraic& a, const RealAlgebraic& b) {
    if (alg_compare(a, b) != Cmp::less) throw std::invalid_argument("requires a < b");
    return alg_length(a, b).scaled(Rational(1, 4));
}

DyadicInterval lemniscate_capacity(const Rational& alpha, int n, mpfr_prec_t prec) {
    if (n < 1) throw std::invalid_argument("requires n >= 1");
    DyadicInterval R = escape_radius(alpha).enclosure(prec);
    unsigned long e = 1ul << (n - 1);
    return e == 1 ? R : R.rootn(e);
}

Rational d_sequence(int n) {
    if (n < 2) throw std::invalid_argument("requires n >= 2");
    Rational D = 1;
    for (int k = 3; k <= n; ++k) {
        Integer num, t;
        mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(k),
                      static_cast<unsigned long>(k));
        mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(k - 2),
                      static_cast<unsigned long>(k - 2));
        num *= t;
        Integer den, t2;
        mpz_ui_pow_ui(den.get_mpz_t(), 2ul, static_cast<unsigned long>(2 * k - 2));
        mpz_ui_pow_ui(t2.get_mpz_t(), static_cast<unsigned long>(2 * k - 3),
                      static_cast<unsigned long>(2 * k - 3));
        den *= t2;
        Rational f(num, den);
        f.canonicalize();
        D *= f;
    }
    return D;
}

DyadicInterval exact_n_diameter(const RealAlgebraic& a, const RealAlgebraic& b, int n,
                                mpfr_prec_t prec) {
    if (n < 2) throw std::invalid_argument("requires n >= 2");
    if (alg_compare(a, b) != Cmp::less) throw std::invalid_argument("requires a < b");
    DyadicInterval len = alg_length(a, b).enclosure(prec);
    Rational D = d_sequence(n);
    unsigned long e = static_cast<unsigned long>(n) * (n - 1);
    return len * DyadicInterval::from_rational(D, prec).rootn(e);
}

namespace {

double fekete_objective(const std::vector<double>& x) {
    double s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) s += std::log(std::fabs(x[i] - x[j]));
    return s;
}

/// Maximize the concave single-coordinate objective on [lo, hi] by
/// golden-section search.
double golden_max(const std::function<double(double)>& f, double lo, double hi) {
    const double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    for (int it = 0; it < 80 && b - a > 1e-14 * (1 + std::fabs(a)); ++it) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return fc > fd ? c : d;
}

}  // namespace

FeketeConfiguration fekete_optimize(double a, double b, int n, int restarts, unsigned seed) {
    if (n < 2) throw std::invalid_argument("requires n >= 2");
    if (!(a < b)) throw std::invalid_argument("requires a < b");
    FeketeConfiguration best;
    best.objective = -std::numeric_limits<double>::infinity();
    for (int r = 0; r < restarts; ++r) {
        // deterministic start: jittered Chebyshev-like nodes
        std::vector<double> x(static_cast<std::size_t>(n));
        unsigned state = seed + 0x9e3779b9u * static_cast<unsigned>(r + 1);
        for (int i = 0; i < n; ++i) {
            state = state * 1664525u + 1013904223u;
            double jitter = (static_cast<double>(state % 10007u) / 10007.0 - 0.5) / (4.0 * n);
            double t = (i + 0.5) / n + jitter;
            t = std::min(1.0, std::max(0.0, t));
            x[static_cast<std::size_t>(i)] = a + (b - a) * (0.5 - 0.5 * std::cos(M_PI * t));
        }
        double obj = fekete_objective(x);
        int sweeps = 0;
        for (; sweeps < 300; ++sweeps) {
            double prev = obj;
            for (int i = 0; i < n; ++i) {
                auto f = [&](double xi) {
                    double s = 0;
                    for (int j = 0; j < n; ++j)
                        if (j != i)
                            s += std::log(std::fabs(xi - x[static_cast<std::size_t>(j)]));
                    return s;
                };
                // the objective is concave on each cell between other points
                std::vector<double> cuts{a, b};
                for (int j = 0; j < n; ++j)
                    if (j != i) {
                        double xj = x[static_cast<std::size_t>(j)];
                        if (xj > a && xj < b) cuts.push_back(xj);
                    }
                std::sort(cuts.begin(), cuts.end());
                double bi = x[static_cast<std::size_t>(i)], bf = f(bi);
                for (std::size_t kdx = 0; kdx + 1 < cuts.size(); ++kdx) {
                    double lo = cuts[kdx], hi = cuts[kdx + 1];
                    if (hi - lo < 1e-13) continue;
                    double cand = golden_max(f, lo, hi);
                    double fc = f(cand);
                    if (fc > bf) {
                        bf = fc;
                        bi = cand;
                    }
                }
                x[static_cast<std::size_t>(i)] = bi;
            }
            obj = fekete_objective(x);
            if (obj - prev < 1e-13) break;
        }
        if (obj > best.objective) {
            std::sort(x.begin(), x.end());
            best.points = x;
            best.objective = obj;
            best.iterations = sweeps;
        }
    }
    best.d_estimate = std::exp(2.0 * best.objective / (static_cast<double>(n) * (n - 1)));
    return best;
}

namespace {

Rational b_sequence(int n) {
    Integer num;
    mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(n),
                  static_cast<unsigned long>(2 * n));
    Integer fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
    Rational r(num, Integer(fact * fact));
    r.canonicalize();
    return r;
}

}  // namespace

CriterionReport degree_bound(const RealAlgebraic& a, const RealAlgebraic& b, int cap) {
    if (alg_compare(a, b) != Cmp::less) throw std::invalid_argument("requires a < b");
    RealAlgebraic len = alg_length(a, b);
    // precondition: length < 4, decided exactly
    if (alg_compare(len, Rational(4)) != Cmp::less)
        throw std::invalid_argument("criterion inapplicable");

    CriterionReport rep;
    {
        std::ostringstream os;
        os << "[" << a.to_string() << ", " << b.to_string() << "]";
        rep.interval = os.str();
    }

    const bool rational_len = len.is_rational();
    Rational Lq = rational_len ? len.rational_value() : Rational(0);

    // a_n enclosure with adaptive precision until both comparisons at n are
    // strict; exact when the length is rational
    auto a_bounds = [&](int n, mpfr_prec_t prec) -> std::pair<Rational, Rational> {
        unsigned long e = static_cast<unsigned long>(n) * (n - 1);
        Rational D = d_sequence(n);
        if (rational_len) {
            Rational v = pow_rational(Lq, e) * D;
            return {v, v};
        }
        DyadicInterval L = len.enclosure(prec);
        DyadicInterval an = L.pow(e) * DyadicInterval::from_rational(D, prec);
        return {an.lower(), an.upper()};
    };

    std::optional<int> n0;
    std::vector<bool> pass_a;  // a_n < b_n per table row
    for (int n = 2; n <= cap; ++n) {
        CriterionRow row;
        row.n = n;
        row.b_n = b_sequence(n);
        Rational bn1 = b_sequence(n + 1);
        Rational ratio_rhs = bn1 / row.b_n;
        // a_{n+1}/a_n = L^{2n} * D_{n+1}/D_n
        Rational Dr = d_sequence(n + 1) / d_sequence(n);
        bool decided = false;
        for (mpfr_prec_t prec = 192; prec <= 1 << 15 && !decided; prec *= 2) {
            auto [alo, ahi] = a_bounds(n, prec);
            row.a_lo = alo;
            row.a_hi = ahi;
            Rational rlo, rhi;
            if (rational_len) {
                Rational rv = pow_rational(Lq, static_cast<unsigned long>(2 * n)) * Dr;
                rlo = rhi = rv;
            } else {
                DyadicInterval L = len.enclosure(prec);
                DyadicInterval rr = L.pow(static_cast<unsigned long>(2 * n)) *
                                    DyadicInterval::from_rational(Dr, prec);
                rlo = rr.lower();
                rhi = rr.upper();
            }
            if (ahi < row.b_n) {
                row.a_lt_b = true;
            } else if (alo >= row.b_n && rational_len) {
                row.a_lt_b = false;
            } else if (alo > row.b_n) {
                row.a_lt_b = false;
            } else if (!rational_len) {
                continue;  // enclosure straddles; refine
            }
            if (rhi < ratio_rhs) {
                row.ratio_lt = true;
            } else if (rlo >= ratio_rhs && rational_len) {
                row.ratio_lt = false;
            } else if (rlo > ratio_rhs) {
                row.ratio_lt = false;
            } else if (!rational_len) {
                continue;
            }
            decided = true;
        }
        if (!decided) break;  // cannot certify further rows
        rep.table.push_back(row);
        pass_a.push_back(row.a_lt_b);
        if (!n0 && row.a_lt_b && row.ratio_lt) {
            // publishable certificate: predecessor must also satisfy the
            // discriminant bound (the first sporadic pass is skipped)
            bool pred_ok = n == 2 || pass_a[pass_a.size() - 2];
            if (pred_ok) {
                n0 = n;
                rep.certified = true;
                break;
            }
        }
    }
    rep.n0 = n0;
    return rep;
}

}  // namespace prepatlas
