#include "prepatlas/algebraic.hpp"

#include <sstream>
#include <stdexcept>

namespace prepatlas {

namespace {
IntPoly normalize_minpoly(const IntPoly& p) {
    IntPoly q = p.squarefree_part();
    if (q.leading() < 0) q = -q;
    return q;
}
}  // namespace

RealAlgebraic RealAlgebraic::from_rational(const Rational& q) {
    IntPoly mp(std::vector<Integer>{Integer(-q.get_num()), Integer(q.get_den())});
    return RealAlgebraic(std::move(mp), q, q);
}

RealAlgebraic RealAlgebraic::from_root(const IntPoly& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial has no isolated root");
    IntPoly q = normalize_minpoly(p);
    if (lo == hi) {
        if (q.sign_at(lo) != 0) throw std::invalid_argument("degenerate interval is not a root");
        return from_rational(lo);
    }
    if (lo > hi) throw std::invalid_argument("inverted isolating interval");
    if (q.sign_at(lo) == 0 || q.sign_at(hi) == 0)
        throw std::invalid_argument("isolating interval endpoint is a root");
    auto chain = sturm_chain(q);
    if (count_open(chain, lo, hi) != 1)
        throw std::invalid_argument("interval does not isolate exactly one root");
    return RealAlgebraic(std::move(q), lo, hi);
}

RealAlgebraic RealAlgebraic::from_quadratic(const Rational& a, const Rational& b,
                                            const Rational& s) {
    if (s < 0) throw std::invalid_argument("negative radicand");
    if (b == 0 || s == 0) return from_rational(a);
    if (auto r = exact_sqrt(s)) return from_rational(a + b * *r);
    // x = a + b*sqrt(s)  =>  x^2 - 2a x + (a^2 - b^2 s) = 0
    QPoly quad({a * a - b * b * s, -2 * a, Rational(1)});
    IntPoly mp = quad.clear_denominators().primitive_part();
    auto roots = isolate_real_roots(mp);
    // roots are a ± |b|sqrt(s): pick max if b > 0, else min
    return b > 0 ? roots.back() : roots.front();
}

std::pair<Rational, Rational> RealAlgebraic::refine(const Rational& eps) const {
    if (eps <= 0) throw std::invalid_argument("nonpositive refinement width");
    if (is_rational()) return {lo_, lo_};
    Rational lo = lo_, hi = hi_;
    int slo = minpoly_.sign_at(lo);
    while (hi - lo >= eps) {
        Rational m = (lo + hi) / 2;
        int sm = minpoly_.sign_at(m);
        if (sm == 0) {
            // root is exactly m; shrink symmetrically around it
            Rational d = eps / 4;
            return {m - d, m + d};
        }
        if (sm == slo)
            lo = m;
        else
            hi = m;
    }
    return {lo, hi};
}

DyadicInterval RealAlgebraic::enclosure(mpfr_prec_t prec) const {
    if (is_rational()) return DyadicInterval::from_rational(lo_, prec);
    Rational eps = pow_rational(Rational(1, 2), static_cast<unsigned long>(prec));
    auto [lo, hi] = refine(eps);
    return DyadicInterval::from_endpoints(lo, hi, prec);
}

double RealAlgebraic::to_double() const {
    return enclosure(64).mid_double();
}

int RealAlgebraic::sign() const {
    if (is_rational()) return sgn(lo_);
    if (lo_ >= 0) return 1;
    if (hi_ <= 0) return -1;
    if (minpoly_.sign_at(Rational(0)) == 0) return 0;  // unique root in (lo,hi) is 0
    // bisect at 0: the root lies on the side with the sign change
    return minpoly_.sign_at(lo_) * minpoly_.sign_at(Rational(0)) < 0 ? -1 : 1;
}

RealAlgebraic RealAlgebraic::negated() const {
    if (is_rational()) return from_rational(-lo_);
    IntPoly mp = normalize_minpoly(IntPoly(QPoly(minpoly_).reflected().clear_denominators()));
    return RealAlgebraic(std::move(mp), -hi_, -lo_);
}

RealAlgebraic RealAlgebraic::shifted(const Rational& t) const {
    if (is_rational()) return from_rational(lo_ + t);
    IntPoly mp =
        normalize_minpoly(QPoly(minpoly_).shifted(-t).clear_denominators().primitive_part());
    return RealAlgebraic(std::move(mp), lo_ + t, hi_ + t);
}

RealAlgebraic RealAlgebraic::scaled(const Rational& k) const {
    if (k == 0) return from_rational(0);
    if (is_rational()) return from_rational(lo_ * k);
    IntPoly mp = normalize_minpoly(
        QPoly(minpoly_).scaled_arg(Rational(1) / k).clear_denominators().primitive_part());
    Rational a = lo_ * k, b = hi_ * k;
    if (a > b) std::swap(a, b);
    return RealAlgebraic(std::move(mp), a, b);
}

std::string RealAlgebraic::to_string() const {
    if (is_rational()) return lo_.get_str();
    std::ostringstream os;
    os << "root of " << minpoly_.to_string() << " in (" << lo_.get_str() << ", " << hi_.get_str()
       << ")";
    return os.str();
}

Cmp alg_compare(const RealAlgebraic& x, const RealAlgebraic& y) {
    if (x.is_rational() && y.is_rational()) return alg_compare(x.rational_value(), y.rational_value());
    if (y.is_rational()) {
        Cmp c = alg_compare(y, x);
        return c == Cmp::less ? Cmp::greater : (c == Cmp::greater ? Cmp::less : Cmp::equal);
    }
    if (x.is_rational()) {
        const Rational& r = x.rational_value();
        auto [lo, hi] = y.isolation();
        if (y.minpoly().sign_at(r) == 0 && lo < r && r < hi) return Cmp::equal;
        // refine y until r falls outside its isolating interval
        while (lo < r && r < hi) {
            std::tie(lo, hi) = [&] {
                Rational w = (hi - lo) / 4;
                RealAlgebraic yy = RealAlgebraic::from_root(y.minpoly(), lo, hi);
                return yy.refine(w);
            }();
        }
        return r <= lo ? Cmp::less : Cmp::greater;
    }
    // both genuinely algebraic
    IntPoly g = IntPoly::gcd(x.minpoly(), y.minpoly());
    auto chain = g.degree() > 0 ? sturm_chain(g) : std::vector<IntPoly>{};
    Rational xlo = x.isolation().first, xhi = x.isolation().second;
    Rational ylo = y.isolation().first, yhi = y.isolation().second;
    for (;;) {
        if (xhi <= ylo) return Cmp::less;
        if (yhi <= xlo) return Cmp::greater;
        Rational ilo = std::max(xlo, ylo), ihi = std::min(xhi, yhi);
        if (g.degree() > 0 && ilo < ihi && count_open(chain, ilo, ihi) >= 1) return Cmp::equal;
        auto rx = RealAlgebraic::from_root(x.minpoly(), xlo, xhi).refine((xhi - xlo) / 4);
        auto ry = RealAlgebraic::from_root(y.minpoly(), ylo, yhi).refine((yhi - ylo) / 4);
        std::tie(xlo, xhi) = rx;
        std::tie(ylo, yhi) = ry;
    }
}

std::vector<RealAlgebraic> isolate_real_roots(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("indeterminate root count");
    IntPoly q = p.squarefree_part();
    if (q.leading() < 0) q = -q;
    std::vector<RealAlgebraic> out;
    for (const auto& [lo, hi] : isolate_intervals(q)) {
        if (lo == hi)
            out.push_back(RealAlgebraic::from_rational(lo));
        else
            out.push_back(RealAlgebraic::from_root(q, lo, hi));
    }
    return out;
}

int sturm_count(const IntPoly& p, const RealAlgebraic& a, const RealAlgebraic& b) {
    if (p.is_zero()) throw std::invalid_argument("indeterminate root count");
    if (alg_compare(a, b) == Cmp::greater) throw std::invalid_argument("inverted interval");
    if (a.is_rational() && b.is_rational()) {
        const Rational& ra = a.rational_value();
        const Rational& rb = b.rational_value();
        IntPoly q = p.squarefree_part();
        if (q.degree() == 0) return 0;
        // divide out endpoint roots; the open-interval count plus these
        // inclusions is the closed-interval count
        int bonus = 0;
        auto strip_root = [&q](const Rational& r) {
            IntPoly lin(std::vector<Integer>{Integer(-r.get_num()), Integer(r.get_den())});
            q = q.divide_exact(lin).primitive_part();
        };
        if (q.sign_at(ra) == 0) {
            ++bonus;
            strip_root(ra);
        }
        if (ra != rb && !q.is_zero() && q.degree() > 0 && q.sign_at(rb) == 0) {
            ++bonus;
            strip_root(rb);
        }
        if (ra == rb || q.degree() <= 0) return bonus;
        auto chain = sturm_chain(q);
        return count_open(chain, ra, rb) + bonus;
    }
    // algebraic endpoint(s): count roots individually
    int n = 0;
    for (const auto& r : isolate_real_roots(p)) {
        if (alg_compare(r, a) != Cmp::less && alg_compare(r, b) != Cmp::greater) ++n;
    }
    return n;
}

}  // namespace prepatlas
