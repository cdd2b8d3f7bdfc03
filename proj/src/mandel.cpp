#include "prepatlas/mandel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace prepatlas {

EscapeGrid escape_grid(const Rational& alpha, const Window& window, int width, int height,
                       int max_iter, int threads) {
    if (width < 1 || height < 1) throw std::invalid_argument("resolution must be >= 1x1");
    if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
    if (window.re_min >= window.re_max || window.im_min >= window.im_max)
        throw std::invalid_argument("empty window");
    EscapeGrid g;
    g.alpha = alpha;
    g.window = window;
    g.width = width;
    g.height = height;
    g.max_iter = max_iter;
    g.cells.assign(static_cast<std::size_t>(width) * height, max_iter + 1);

    // bailout: upper bound on R_alpha, nudged to the next representable double
    double R = std::nextafter(escape_radius(alpha).enclosure(64).upper_double(),
                              std::numeric_limits<double>::infinity());
    double R2 = R * R;
    double a = alpha.get_d();
    double re0 = window.re_min.get_d(), re1 = window.re_max.get_d();
    double im0 = window.im_min.get_d(), im1 = window.im_max.get_d();
    double dre = (re1 - re0) / width, dim = (im1 - im0) / height;

    auto run_rows = [&](int row_begin, int row_end) {
        for (int row = row_begin; row < row_end; ++row) {
            double ci = im0 + dim * (row + 0.5);
            for (int col = 0; col < width; ++col) {
                double cr = re0 + dre * (col + 0.5);
                double zr = a, zi = 0;
                int count = max_iter + 1;
                for (int k = 1; k <= max_iter; ++k) {
                    double t = zr * zr - zi * zi + cr;
                    zi = 2 * zr * zi + ci;
                    zr = t;
                    if (zr * zr + zi * zi > R2) {
                        count = k;
                        break;
                    }
                }
                g.cells[static_cast<std::size_t>(row) * width + col] = count;
            }
        }
    };
    threads = std::max(1, std::min(threads, height));
    if (threads == 1) {
        run_rows(0, height);
    } else {
        std::vector<std::thread> pool;
        int chunk = (height + threads - 1) / threads;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(run_rows, t * chunk, std::min(height, (t + 1) * chunk));
        for (auto& th : pool) th.join();
    }
    return g;
}

namespace {

using Cplx = std::complex<double>;

/// Rectangular complex enclosure with outward-rounded dyadic components.
struct ComplexBox {
    DyadicInterval re, im;

    ComplexBox operator+(const ComplexBox& o) const { return {re + o.re, im + o.im}; }
    ComplexBox operator*(const ComplexBox& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    /// Upper bound on the modulus.
    double modulus_upper() const {
        DyadicInterval m2 = re * re + im * im;
        return m2.abs().sqrt().upper_double();
    }
};

ComplexBox box_from_double(double re, double im, mpfr_prec_t prec) {
    // doubles are exact dyadic values
    Rational qr(re), qi(im);
    return {DyadicInterval::from_rational(qr, prec), DyadicInterval::from_rational(qi, prec)};
}

/// Certified backward-relative residual |p(z)| / sum_i |a_i||z|^i at 128 bits.
double certified_residual(const IntPoly& p, double zre, double zim) {
    const mpfr_prec_t prec = 128;
    ComplexBox z = box_from_double(zre, zim, prec);
    ComplexBox acc = box_from_double(0, 0, prec);
    DyadicInterval zabs = (z.re * z.re + z.im * z.im).abs().sqrt();
    DyadicInterval denom = DyadicInterval::from_rational(0, prec);
    DyadicInterval zpow = DyadicInterval::from_rational(1, prec);
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        ComplexBox coeff = {DyadicInterval::from_rational(Rational(*it), prec),
                            DyadicInterval::from_rational(0, prec)};
        acc = acc * z + coeff;
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
        Integer av = c[i] < 0 ? Integer(-c[i]) : c[i];
        denom = denom + DyadicInterval::from_rational(Rational(av), prec) * zpow;
        zpow = zpow * zabs;
    }
    double num = acc.modulus_upper();
    double den = denom.lower_double();
    if (den <= 0) return std::numeric_limits<double>::infinity();
    return num / den;
}

/// Minimal complex floating-point value on MPFR reals (round-to-nearest);
/// used only inside the root iteration — certification is interval-based.
class MC {
  public:
    explicit MC(mpfr_prec_t prec) : prec_(prec) {
        mpfr_init2(re_, prec);
        mpfr_init2(im_, prec);
        mpfr_set_zero(re_, 1);
        mpfr_set_zero(im_, 1);
    }
    MC(const MC& o) : MC(o.prec_) {
        mpfr_set(re_, o.re_, MPFR_RNDN);
        mpfr_set(im_, o.im_, MPFR_RNDN);
    }
    MC(MC&& o) noexcept : MC(o.prec_) {
        mpfr_swap(re_, o.re_);
        mpfr_swap(im_, o.im_);
    }
    MC& operator=(MC o) {
        std::swap(prec_, o.prec_);
        mpfr_swap(re_, o.re_);
        mpfr_swap(im_, o.im_);
        return *this;
    }
    ~MC() {
        mpfr_clear(re_);
        mpfr_clear(im_);
    }
    static MC from_int(const Integer& v, mpfr_prec_t prec) {
        MC r(prec);
        mpfr_set_z(r.re_, v.get_mpz_t(), MPFR_RNDN);
        return r;
    }
    static MC from_polar(double radius, double theta, mpfr_prec_t prec) {
        MC r(prec);
        mpfr_set_d(r.re_, radius * std::cos(theta), MPFR_RNDN);
        mpfr_set_d(r.im_, radius * std::sin(theta), MPFR_RNDN);
        return r;
    }
    bool is_zero() const { return mpfr_zero_p(re_) && mpfr_zero_p(im_); }
    double re_d() const { return mpfr_get_d(re_, MPFR_RNDN); }
    double im_d() const { return mpfr_get_d(im_, MPFR_RNDN); }
    double abs_d() const {
        mpfr_t t;
        mpfr_init2(t, prec_);
        mpfr_hypot(t, re_, im_, MPFR_RNDN);
        double v = mpfr_get_d(t, MPFR_RNDN);
        mpfr_clear(t);
        return v;
    }

    MC operator+(const MC& o) const {
        MC r(prec_);
        mpfr_add(r.re_, re_, o.re_, MPFR_RNDN);
        mpfr_add(r.im_, im_, o.im_, MPFR_RNDN);
        return r;
    }
    MC operator-(const MC& o) const {
        MC r(prec_);
        mpfr_sub(r.re_, re_, o.re_, MPFR_RNDN);
        mpfr_sub(r.im_, im_, o.im_, MPFR_RNDN);
        return r;
    }
    MC operator*(const MC& o) const {
        MC r(prec_);
        mpfr_t t1, t2;
        mpfr_init2(t1, prec_);
        mpfr_init2(t2, prec_);
        mpfr_mul(t1, re_, o.re_, MPFR_RNDN);
        mpfr_mul(t2, im_, o.im_, MPFR_RNDN);
        mpfr_sub(r.re_, t1, t2, MPFR_RNDN);
        mpfr_mul(t1, re_, o.im_, MPFR_RNDN);
        mpfr_mul(t2, im_, o.re_, MPFR_RNDN);
        mpfr_add(r.im_, t1, t2, MPFR_RNDN);
        mpfr_clear(t1);
        mpfr_clear(t2);
        return r;
    }
    MC operator/(const MC& o) const {
        MC r(prec_);
        mpfr_t n2, t1, t2;
        mpfr_init2(n2, prec_);
        mpfr_init2(t1, prec_);
        mpfr_init2(t2, prec_);
        mpfr_mul(t1, o.re_, o.re_, MPFR_RNDN);
        mpfr_mul(t2, o.im_, o.im_, MPFR_RNDN);
        mpfr_add(n2, t1, t2, MPFR_RNDN);
        mpfr_mul(t1, re_, o.re_, MPFR_RNDN);
        mpfr_mul(t2, im_, o.im_, MPFR_RNDN);
        mpfr_add(t1, t1, t2, MPFR_RNDN);
        mpfr_div(r.re_, t1, n2, MPFR_RNDN);
        mpfr_mul(t1, im_, o.re_, MPFR_RNDN);
        mpfr_mul(t2, re_, o.im_, MPFR_RNDN);
        mpfr_sub(t1, t1, t2, MPFR_RNDN);
        mpfr_div(r.im_, t1, n2, MPFR_RNDN);
        mpfr_clear(n2);
        mpfr_clear(t1);
        mpfr_clear(t2);
        return r;
    }

  private:
    mpfr_prec_t prec_;
    mpfr_t re_, im_;
};

MC horner(const std::vector<MC>& coeffs, const MC& z, mpfr_prec_t prec) {
    MC acc(prec);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

}  // namespace

ComplexRootSet prep_roots(const Rational& alpha, int m, int n, double tol, int /*threads*/) {
    IntPoly F = prep_poly_z(alpha, m, n).squarefree_part();
    // strip root at zero explicitly for numerical conditioning
    int zero_roots = 0;
    while (!F.is_zero() && F[0] == 0) {
        F = F.divide_exact(IntPoly({0, 1}));
        ++zero_roots;
    }
    int deg = F.degree();
    // working precision scaled to coefficient size: ill-conditioning of
    // high-degree prep polynomials makes doubles insufficient
    std::size_t maxbits = 0;
    for (const auto& v : F.coeffs())
        maxbits = std::max(maxbits, mpz_sizeinbase(v.get_mpz_t(), 2));
    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(std::max<std::size_t>(192, maxbits + 160));

    std::vector<MC> coeffs, dcoeffs;
    for (int i = 0; i <= deg; ++i) coeffs.push_back(MC::from_int(F[static_cast<std::size_t>(i)], prec));
    for (int i = 1; i <= deg; ++i)
        dcoeffs.push_back(MC::from_int(Integer(F[static_cast<std::size_t>(i)] * i), prec));

    ComplexRootSet rs;
    rs.alpha = alpha;
    rs.m = m;
    rs.n = n;
    rs.tol = tol;

    std::vector<MC> z;
    const double golden_angle = 2.399963229728653;  // 2*pi*(1 - 1/phi)
    const MC one = MC::from_int(Integer(1), prec);
    bool converged = deg == 0;
    for (int attempt = 0; attempt < 5 && !converged; ++attempt) {
        double a0 = std::abs(F[0].get_d()), ad = std::abs(F.leading().get_d());
        double radius = std::pow(1.0 + a0 / ad, 1.0 / deg);
        double offset = 0.35 + 0.17 * attempt;  // deterministic restart schedule

        // stage 1: cheap double-precision sweep for starting points
        std::vector<Cplx> zd(static_cast<std::size_t>(deg));
        {
            std::vector<Cplx> cd(static_cast<std::size_t>(deg) + 1), dd(static_cast<std::size_t>(deg));
            for (int i = 0; i <= deg; ++i) cd[static_cast<std::size_t>(i)] = F[static_cast<std::size_t>(i)].get_d();
            for (int i = 1; i <= deg; ++i) dd[static_cast<std::size_t>(i - 1)] = double(i) * cd[static_cast<std::size_t>(i)];
            for (int k = 0; k < deg; ++k)
                zd[static_cast<std::size_t>(k)] = std::polar(radius, golden_angle * k + offset);
            auto hd = [](const std::vector<Cplx>& c, Cplx x) {
                Cplx acc = 0;
                for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
                return acc;
            };
            for (int iter = 0; iter < 200; ++iter) {
                double max_step = 0;
                for (int k = 0; k < deg; ++k) {
                    Cplx zk = zd[static_cast<std::size_t>(k)];
                    Cplx pv = hd(cd, zk), dv = hd(dd, zk);
                    if (pv == Cplx(0)) continue;
                    Cplx w = dv == Cplx(0) ? Cplx(0) : pv / dv;
                    Cplx s = 0;
                    for (int j = 0; j < deg; ++j)
                        if (j != k) s += 1.0 / (zk - zd[static_cast<std::size_t>(j)]);
                    Cplx den = 1.0 - w * s;
                    Cplx step = den == Cplx(0) ? w : w / den;
                    zd[static_cast<std::size_t>(k)] = zk - step;
                    max_step = std::max(max_step, std::abs(step) / std::max(1.0, std::abs(zk)));
                }
                if (max_step < 1e-14) break;
            }
        }

        // stage 2: high-precision polish; converged roots freeze but keep
        // contributing to the repulsion terms
        z.clear();
        for (int k = 0; k < deg; ++k) {
            MC v(prec);
            v = MC::from_polar(std::abs(zd[static_cast<std::size_t>(k)]),
                               std::arg(zd[static_cast<std::size_t>(k)]), prec);
            z.push_back(std::move(v));
        }
        std::vector<char> done(static_cast<std::size_t>(deg), 0);
        for (int iter = 0; iter < 400; ++iter) {
            bool all_done = true;
            for (int k = 0; k < deg; ++k) {
                if (done[static_cast<std::size_t>(k)]) continue;
                MC& zk = z[static_cast<std::size_t>(k)];
                MC pv = horner(coeffs, zk, prec);
                MC dv = horner(dcoeffs, zk, prec);
                if (pv.is_zero()) {
                    done[static_cast<std::size_t>(k)] = 1;
                    continue;
                }
                MC w = dv.is_zero() ? MC(prec) : pv / dv;
                MC s(prec);
                for (int j = 0; j < deg; ++j) {
                    if (j == k) continue;
                    s = s + one / (zk - z[static_cast<std::size_t>(j)]);
                }
                MC denom = one - w * s;
                MC step = denom.is_zero() ? w : w / denom;
                zk = zk - step;
                if (step.abs_d() / std::max(1.0, zk.abs_d()) < 1e-40)
                    done[static_cast<std::size_t>(k)] = 1;
                else
                    all_done = false;
            }
            if (all_done) break;
        }
        converged = true;
        for (int k = 0; k < deg && converged; ++k)
            if (certified_residual(F, z[static_cast<std::size_t>(k)].re_d(),
                                   z[static_cast<std::size_t>(k)].im_d()) > tol)
                converged = false;
    }
    if (!converged) {
        std::ostringstream os;
        os << "root finding did not reach residual tolerance " << tol << " for F_{" << m << ","
           << n << "}, alpha=" << rs.alpha.get_str();
        throw std::runtime_error(os.str());
    }
    for (int k = 0; k < zero_roots; ++k) rs.roots.push_back({0.0, 0.0, 0.0});
    for (int k = 0; k < deg; ++k) {
        double re = z[static_cast<std::size_t>(k)].re_d();
        double im = z[static_cast<std::size_t>(k)].im_d();
        rs.roots.push_back({re, im, certified_residual(F, re, im)});
    }
    std::sort(rs.roots.begin(), rs.roots.end(), [](const ComplexRoot& a, const ComplexRoot& b) {
        return a.re != b.re ? a.re < b.re : a.im < b.im;
    });
    return rs;
}

DiscReport verify_in_disc(const ComplexRootSet& rs, double tol) {
    DiscReport rep;
    rep.radius = escape_radius(rs.alpha).enclosure(64).upper_double();
    rep.ok = true;
    for (const auto& r : rs.roots) {
        ComplexBox b = {DyadicInterval::from_rational(Rational(r.re), 128),
                        DyadicInterval::from_rational(Rational(r.im), 128)};
        double mod = b.modulus_upper();
        rep.max_modulus = std::max(rep.max_modulus, mod);
        if (mod > rep.radius + tol && rep.ok) {
            rep.ok = false;
            std::ostringstream os;
            os << "root (" << r.re << ", " << r.im << ") modulus " << mod << " exceeds "
               << rep.radius << " + " << tol;
            rep.offending = os.str();
        }
    }
    rep.slack = rep.radius + tol - rep.max_modulus;
    return rep;
}

}  // namespace prepatlas
