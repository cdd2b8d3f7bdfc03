#include "prepatlas/orbit.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace prepatlas {

RealAlgebraic escape_radius(const Rational& alpha) {
    Rational s = alpha * alpha + 1;
    return RealAlgebraic::from_quadratic(s, Rational(1), s);
}

IntervalSet real_slice(const Rational& alpha) {
    RealAlgebraic left = escape_radius(alpha).negated();
    Rational aa = abs_rational(alpha);
    Rational right = aa <= Rational(1, 2) ? Rational(1, 4) : aa - alpha * alpha;
    return IntervalSet({{left, RealAlgebraic::from_rational(right)}});
}

QPoly psi(const Rational& alpha, int n, int cap) {
    if (n < 1) throw std::invalid_argument("psi requires n >= 1");
    if (n > cap) throw std::invalid_argument("degree overflow");
    QPoly p({alpha * alpha, Rational(1)});  // X + alpha^2
    QPoly x = QPoly::x();
    for (int k = 1; k < n; ++k) p = p * p + x;
    return p;
}

QPoly prep_poly(const Rational& alpha, int m, int n, int cap) {
    if (m < 0 || m >= n) throw std::invalid_argument("prep_poly requires 0 <= m < n");
    QPoly pn = psi(alpha, n, cap);
    QPoly pm = m == 0 ? QPoly::constant(alpha) : psi(alpha, m, cap);
    return pn - pm;
}

IntPoly prep_poly_z(const Rational& alpha, int m, int n, int cap) {
    return prep_poly(alpha, m, n, cap).clear_denominators().primitive_part();
}

namespace {

/// |x| > R_alpha = s + sqrt(s), s = alpha^2+1, decided exactly over Q.
bool exceeds_escape_radius(const Rational& x, const Rational& s) {
    Rational a = abs_rational(x);
    if (a <= s) return false;
    Rational t = a - s;
    return t * t > s;
}

}  // namespace

OrbitRecord decide_rational(const Rational& alpha, const Rational& c, long budget) {
    OrbitRecord rec;
    rec.alpha = alpha;
    rec.c = c;
    Rational s = alpha * alpha + 1;
    const Integer& dc = c.get_den();
    std::map<Rational, int> seen;
    Rational x = alpha;
    rec.values.push_back(x);
    seen[x] = 0;
    for (long k = 1; k <= budget; ++k) {
        x = x * x + c;
        rec.values.push_back(x);
        auto it = seen.find(x);
        if (it != seen.end()) {
            rec.verdict = Verdict::Preperiodic;
            rec.m = it->second;
            rec.n = static_cast<int>(k);
            return rec;
        }
        // non-Archimedean escape: a preperiodic orbit value (k >= 1) must
        // satisfy den(x_k)^2 | den(c); once violated, denominators double
        // their valuation excess forever
        Integer d2 = x.get_den() * x.get_den();
        if (mpz_divisible_p(dc.get_mpz_t(), d2.get_mpz_t()) == 0) {
            rec.verdict = Verdict::Escaped;
            rec.escape_step = static_cast<int>(k);
            rec.witness = "denominator growth (non-archimedean)";
            return rec;
        }
        if (exceeds_escape_radius(x, s)) {
            rec.verdict = Verdict::Escaped;
            rec.escape_step = static_cast<int>(k);
            rec.witness = "|value| > escape radius (archimedean)";
            return rec;
        }
        seen[x] = static_cast<int>(k);
    }
    rec.verdict = Verdict::BudgetExhausted;
    return rec;
}

namespace {

// element of Q[X]/(p), p monic of degree d; coords low-to-high, length d
using ModElem = std::vector<Rational>;

ModElem mod_square_plus_x(const ModElem& a, const IntPoly& p) {
    std::size_t d = a.size();
    std::vector<Rational> full(2 * d - 1, Rational(0));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) full[i + j] += a[i] * a[j];
    for (std::size_t i = 2 * d - 2; i >= d && i < full.size(); --i) {
        Rational top = full[i];
        if (top == 0) continue;
        full[i] = 0;
        for (std::size_t j = 0; j < d; ++j)
            full[i - d + j] -= top * Rational(p[j]);  // p monic
    }
    full.resize(d);
    if (d >= 2)
        full[1] += 1;  // + X
    else
        full[0] -= Rational(p[0]);  // X == -p0 in the degree-1 quotient
    return full;
}

DyadicInterval eval_mod(const ModElem& a, const DyadicInterval& x) {
    DyadicInterval acc = DyadicInterval::from_rational(0, x.precision());
    for (auto it = a.rbegin(); it != a.rend(); ++it)
        acc = acc * x + DyadicInterval::from_rational(*it, x.precision());
    return acc;
}

}  // namespace

std::vector<RootVerdict> decide_algebraic(const Rational& alpha, const IntPoly& minpoly) {
    if (!is_integer(alpha)) throw std::invalid_argument("alpha must be an integer");
    if (minpoly.degree() < 1 || minpoly.leading() != 1)
        throw std::invalid_argument("not an algebraic integer / not separable");
    if (!minpoly.is_squarefree())
        throw std::invalid_argument("not an algebraic integer / not separable");
    auto roots = isolate_real_roots(minpoly);
    if (static_cast<int>(roots.size()) != minpoly.degree())
        throw std::invalid_argument("minpoly must have all roots real");

    const std::size_t d = static_cast<std::size_t>(minpoly.degree());
    const mpfr_prec_t prec = std::max<mpfr_prec_t>(192, default_precision());
    DyadicInterval R = escape_radius(alpha).enclosure(prec);
    std::vector<DyadicInterval> embeddings;
    embeddings.reserve(roots.size());
    for (const auto& r : roots) embeddings.push_back(r.enclosure(prec));

    ModElem x(d, Rational(0));
    x[0] = alpha;
    std::map<ModElem, int> seen;
    seen[x] = 0;
    const int kIterCap = 300;
    for (int k = 1; k <= kIterCap; ++k) {
        x = mod_square_plus_x(x, minpoly);
        auto it = seen.find(x);
        if (it != seen.end()) {
            std::vector<RootVerdict> out;
            for (const auto& r : roots)
                out.push_back({r, Verdict::Preperiodic, it->second, k, -1,
                               "exact repeat in quotient ring"});
            return out;
        }
        for (std::size_t j = 0; j < embeddings.size(); ++j) {
            DyadicInterval v = eval_mod(x, embeddings[j]).abs();
            if (v.certainly_gt(R)) {
                // escape at one embedding settles every conjugate: the orbit
                // relation is preserved by conjugation
                std::ostringstream w;
                w << "escape at embedding " << roots[j].to_string() << " after " << k << " steps";
                std::vector<RootVerdict> out;
                for (const auto& r : roots)
                    out.push_back({r, Verdict::Escaped, -1, -1, k, w.str()});
                return out;
            }
        }
        seen[x] = k;
    }
    throw std::logic_error("internal iteration bound exceeded in decide_algebraic");
}

ThetaResult theta(const Rational& alpha) {
    Rational s = alpha * alpha + 1;
    ThetaResult res{RealAlgebraic::from_quadratic(-s, Rational(-1), s),
                    QPoly({s * s - s, 2 * s, Rational(1)}), false};
    // verify f^2_theta(alpha) == f^3_theta(alpha) exactly in Q(sqrt(s)):
    // elements a + b*sqrt(s) as coordinate pairs
    struct Q2 {
        Rational a, b;
    };
    Rational ss = s;
    auto sq_plus_c = [&ss](const Q2& v, const Q2& c) {
        return Q2{v.a * v.a + v.b * v.b * ss + c.a, 2 * v.a * v.b + c.b};
    };
    Q2 c{-s, Rational(-1)};
    Q2 x1 = sq_plus_c(Q2{alpha, Rational(0)}, c);
    Q2 x2 = sq_plus_c(x1, c);
    Q2 x3 = sq_plus_c(x2, c);
    res.verified = (x2.a == x3.a && x2.b == x3.b);
    return res;
}

}  // namespace prepatlas
