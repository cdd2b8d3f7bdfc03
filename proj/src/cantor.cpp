#include "prepatlas/cantor.hpp"

#include <sstream>
#include <stdexcept>

namespace prepatlas {

DyadicInterval fixed_point_u(const Rational& c, mpfr_prec_t prec) {
    if (c > Rational(1, 4)) throw std::invalid_argument("complex fixed points");
    DyadicInterval D = DyadicInterval::from_rational(1 - 4 * c, prec);
    DyadicInterval half = DyadicInterval::from_rational(Rational(1, 2), prec);
    return (DyadicInterval::from_rational(1, prec) + D.sqrt()) * half;
}

DyadicInterval fixed_point_u(const DyadicInterval& c) {
    if (c.upper() > Rational(1, 4)) throw std::invalid_argument("complex fixed points");
    mpfr_prec_t prec = c.precision();
    DyadicInterval D = DyadicInterval::from_rational(1, prec) -
                       DyadicInterval::from_rational(4, prec) * c;
    DyadicInterval half = DyadicInterval::from_rational(Rational(1, 2), prec);
    return (DyadicInterval::from_rational(1, prec) + D.sqrt()) * half;
}

DyadicInterval preimage_v(const Rational& c, mpfr_prec_t prec) {
    if (c > -2) throw std::invalid_argument("v undefined at this parameter");
    DyadicInterval u = fixed_point_u(c, prec);
    DyadicInterval two = DyadicInterval::from_rational(2, prec);
    return (u * (u - two)).abs().sqrt();
}

DyadicInterval preimage_v(const DyadicInterval& c) {
    if (c.upper() > -2) throw std::invalid_argument("v undefined at this parameter");
    DyadicInterval u = fixed_point_u(c);
    DyadicInterval two = DyadicInterval::from_rational(2, c.precision());
    return (u * (u - two)).abs().sqrt();
}

namespace {

/// sign(h - sqrt(D)) for rational h and D >= 0, exact.
int cmp_sqrt(const Rational& h, const Rational& D) {
    if (h < 0) return -1;
    return sgn(h * h - D);
}

/// sign(x + sqrt(D)) exact.
int sign_plus_sqrt(const Rational& x, const Rational& D) {
    if (x >= 0) return (x == 0 && D == 0) ? 0 : 1;
    return -cmp_sqrt(-x, D);
}

/// Exact orbit value f^n_c(alpha) for rational c.
Rational orbit_value(const Rational& alpha, const Rational& c, int n) {
    Rational x = alpha;
    for (int k = 0; k < n; ++k) x = x * x + c;
    return x;
}

/// sign(g - u(c)); requires c <= 1/4, g rational.
int sign_vs_u(const Rational& g, const Rational& c) {
    return cmp_sqrt(2 * g - 1, 1 - 4 * c);
}

/// sign(g + u(c)) = sign(g - (-u)).
int sign_vs_minus_u(const Rational& g, const Rational& c) {
    return sign_plus_sqrt(2 * g + 1, 1 - 4 * c);
}

/// sign(g - v(c)); requires c <= -2. Uses v^2 = -u - c.
int sign_vs_v(const Rational& g, const Rational& c) {
    if (g < 0) return -1;
    // sign(g^2 - v^2) = sign(g^2 + c + u(c))
    return sign_plus_sqrt(2 * (g * g + c) + 1, 1 - 4 * c);
}

/// sign(g + v(c)).
int sign_vs_minus_v(const Rational& g, const Rational& c) {
    if (g > 0) return 1;
    // sign(v - |g|) = sign(v^2 - g^2) = -sign(g^2 + c + u(c))
    return -sign_plus_sqrt(2 * (g * g + c) + 1, 1 - 4 * c);
}

/// sign of f^{level}_c(alpha) + u(c); negative exactly on the middle gap
/// carved out of each level-(level-1) interval.
int phi_sign(const Rational& alpha, const Rational& c, int level) {
    return sign_vs_minus_u(orbit_value(alpha, c, level), c);
}

/// Bisect phi on [a, b] (phi(a) and phi(b) of opposite sign) to width <= eps.
CantorEndpoint bisect_phi(const Rational& alpha, int level, Rational a, Rational b, int sa,
                          const Rational& eps) {
    while (b - a > eps) {
        Rational m = (a + b) / 2;
        int sm = phi_sign(alpha, m, level);
        if (sm == 0) return {m, m, ""};
        if (sm == sa)
            a = m;
        else
            b = m;
    }
    return {a, b, ""};
}

std::string v_tag(const Rational& alpha, const Rational& at, int level) {
    // the new endpoint solves f^{level} = -u, equivalently f^{level-1} = +-v;
    // record the observed orientation via the exact sign of f^{level-1}
    int s = sgn(orbit_value(alpha, at, level - 1));
    std::ostringstream os;
    os << "f^" << level - 1 << " = " << (s >= 0 ? "+v" : "-v") << " (f^" << level << " = -u)";
    return os.str();
}

}  // namespace

CantorLevel cantor_level(const Rational& alpha, int n, const Rational& eps) {
    if (abs_rational(alpha) < 2)
        throw std::invalid_argument("Cantor construction requires |alpha| >= 2");
    if (n < 0 || n > kCantorDepthCap) throw std::invalid_argument("depth cap exceeded");
    if (eps <= 0) throw std::invalid_argument("eps must be positive");

    CantorLevel lvl;
    lvl.alpha = alpha;
    Rational right0 = abs_rational(alpha) - alpha * alpha;  // alpha - alpha^2 for alpha >= 2
    // evenness: C_n depends on alpha only through alpha^2, so use |alpha|
    Rational a = abs_rational(alpha);
    if (n == 0) {
        lvl.depth = 0;
        // clip the half-line {c <= a - a^2} at -R_alpha - 1
        RealAlgebraic R = escape_radius(alpha);
        auto [rlo, rhi] = R.refine(eps);
        lvl.intervals.push_back(
            {{-rhi - 1, -rlo - 1, "synthetic clip at -R_alpha - 1"}, {right0, right0, "f^0 = +u"}});
        return lvl;
    }

    // C_1 = [-1 - a^2 - sqrt(1 + a^2), a - a^2]
    RealAlgebraic theta1 = RealAlgebraic::from_quadratic(-1 - a * a, Rational(-1), 1 + a * a);
    auto [tlo, thi] = theta1.refine(eps);
    CantorLevel cur;
    cur.alpha = alpha;
    cur.depth = 1;
    cur.intervals.push_back({{tlo, thi, "f^1 = -u"}, {right0, right0, "f^1 = +u"}});

    for (int level = 2; level <= n; ++level) {
        CantorLevel next;
        next.alpha = alpha;
        next.depth = level;
        for (const auto& parent : cur.intervals) {
            // inner bracket endpoints: phi = f^level + u is positive near the
            // parent boundary and negative on the middle gap
            Rational A = parent.left.hi, B = parent.right.lo;
            if (phi_sign(alpha, A, level) <= 0) A = parent.left.lo;
            if (phi_sign(alpha, B, level) <= 0) B = parent.right.hi;
            if (phi_sign(alpha, A, level) <= 0 || phi_sign(alpha, B, level) <= 0)
                throw std::logic_error("parent endpoint enclosure too coarse for subdivision");
            // find a witness in the gap: bisect on the sign of f^{level-1},
            // which crosses zero inside the gap
            Rational ga = A, gb = B;
            int sga = sgn(orbit_value(alpha, ga, level - 1));
            Rational w;
            for (;;) {
                w = (ga + gb) / 2;
                if (phi_sign(alpha, w, level) < 0) break;
                int sw = sgn(orbit_value(alpha, w, level - 1));
                if (sw == 0) break;  // f^{level-1} = 0 lies strictly inside the gap
                if (sw == sga)
                    ga = w;
                else
                    gb = w;
                if (gb - ga <= 0) throw std::logic_error("gap witness search collapsed");
            }
            CantorEndpoint e1 = bisect_phi(alpha, level, A, w, 1, eps);
            CantorEndpoint e2 = bisect_phi(alpha, level, w, B, -1, eps);
            e1.tag = v_tag(alpha, e1.lo, level);
            e2.tag = v_tag(alpha, e2.hi, level);
            CantorEndpoint lo = parent.left;
            CantorEndpoint ro = parent.right;
            std::ostringstream outer;
            outer << "f^" << level << " = +u";
            lo.tag = lo.tag.rfind("synthetic", 0) == 0 ? lo.tag : outer.str();
            ro.tag = outer.str();
            next.intervals.push_back({lo, e1});
            next.intervals.push_back({e2, ro});
        }
        cur = std::move(next);
    }
    return cur;
}

LocalizationReport localize_roots(const Rational& alpha, int m, int n, const Rational& eps) {
    if (abs_rational(alpha) < 2)
        throw std::invalid_argument("Cantor construction requires |alpha| >= 2");
    LocalizationReport rep;
    IntPoly F = prep_poly_z(alpha, m, n).squarefree_part();
    rep.degree = F.degree();
    rep.real_roots = count_distinct_real(F);
    CantorLevel lvl = cantor_level(alpha, n, eps);
    rep.num_intervals = static_cast<int>(lvl.intervals.size());
    int inside = 0;
    bool per_interval_ok = true;
    for (const auto& iv : lvl.intervals) {
        int cnt = sturm_count(F, iv.left.lo, iv.right.hi);
        rep.counts.push_back(cnt);
        inside += cnt;
        if (cnt != rep.degree / rep.num_intervals) per_interval_ok = false;
    }
    rep.outside = rep.real_roots - inside;
    rep.ok = per_interval_ok && rep.outside == 0 && rep.real_roots == rep.degree &&
             rep.degree % rep.num_intervals == 0;
    if (!rep.ok) {
        std::ostringstream os;
        os << "localization miscount: degree " << rep.degree << ", real roots " << rep.real_roots
           << ", intervals " << rep.num_intervals << ", outside " << rep.outside;
        rep.message = os.str();
    }
    return rep;
}

}  // namespace prepatlas
