#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cstdlib>
#include <string>

#include "prepatlas/rational.hpp"

namespace prepatlas {

/// Default working precision in bits; PREP_ATLAS_PRECISION overrides.
inline mpfr_prec_t default_precision() {
    static mpfr_prec_t p = [] {
        if (const char* env = std::getenv("PREP_ATLAS_PRECISION")) {
            long v = std::atol(env);
            if (v >= 16 && v <= 1 << 20) return static_cast<mpfr_prec_t>(v);
        }
        return static_cast<mpfr_prec_t>(64);
    }();
    return p;
}

/// Certified enclosure [lo, hi] of a real number, endpoints dyadic (MPFR),
/// all arithmetic outward-rounded so results always enclose the exact value.
class DyadicInterval {
  public:
    explicit DyadicInterval(mpfr_prec_t prec = default_precision()) : prec_(prec) {
        mpfr_init2(lo_, prec_);
        mpfr_init2(hi_, prec_);
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }
    DyadicInterval(const DyadicInterval& o) : prec_(o.prec_) {
        mpfr_init2(lo_, prec_);
        mpfr_init2(hi_, prec_);
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    DyadicInterval(DyadicInterval&& o) noexcept : prec_(o.prec_) {
        mpfr_init2(lo_, prec_);
        mpfr_init2(hi_, prec_);
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
    }
    DyadicInterval& operator=(DyadicInterval o) {
        std::swap(prec_, o.prec_);
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
        return *this;
    }
    ~DyadicInterval() {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }

    static DyadicInterval from_rational(const Rational& q, mpfr_prec_t prec = default_precision()) {
        DyadicInterval r(prec);
        mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
        return r;
    }
    static DyadicInterval from_endpoints(const Rational& a, const Rational& b,
                                         mpfr_prec_t prec = default_precision()) {
        DyadicInterval r(prec);
        mpfr_set_q(r.lo_, a.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(r.hi_, b.get_mpq_t(), MPFR_RNDU);
        return r;
    }

    mpfr_prec_t precision() const { return prec_; }

    DyadicInterval operator+(const DyadicInterval& o) const {
        DyadicInterval r(std::max(prec_, o.prec_));
        mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
        mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
        return r;
    }
    DyadicInterval operator-(const DyadicInterval& o) const {
        DyadicInterval r(std::max(prec_, o.prec_));
        mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
        mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
        return r;
    }
    DyadicInterval operator-() const {
        DyadicInterval r(prec_);
        mpfr_neg(r.lo_, hi_, MPFR_RNDD);
        mpfr_neg(r.hi_, lo_, MPFR_RNDU);
        return r;
    }
    DyadicInterval operator*(const DyadicInterval& o) const {
        DyadicInterval r(std::max(prec_, o.prec_));
        mpfr_t t;
        mpfr_init2(t, r.prec_);
        // lo: min of the four products rounded down
        mpfr_mul(r.lo_, lo_, o.lo_, MPFR_RNDD);
        mpfr_mul(t, lo_, o.hi_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        mpfr_mul(t, hi_, o.lo_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        mpfr_mul(t, hi_, o.hi_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        // hi: max of the four products rounded up
        mpfr_mul(r.hi_, lo_, o.lo_, MPFR_RNDU);
        mpfr_mul(t, lo_, o.hi_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_mul(t, hi_, o.lo_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_mul(t, hi_, o.hi_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_clear(t);
        return r;
    }

    /// Square root; requires lo >= 0.
    DyadicInterval sqrt() const {
        DyadicInterval r(prec_);
        mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
        mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
        return r;
    }
    /// k-th root for positive intervals.
    DyadicInterval rootn(unsigned long k) const {
        DyadicInterval r(prec_);
        mpfr_rootn_ui(r.lo_, lo_, k, MPFR_RNDD);
        mpfr_rootn_ui(r.hi_, hi_, k, MPFR_RNDU);
        return r;
    }
    /// Integer power (e >= 0).
    DyadicInterval pow(unsigned long e) const {
        DyadicInterval r = from_rational(1, prec_);
        DyadicInterval base = *this;
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }
    DyadicInterval abs() const {
        DyadicInterval r(prec_);
        if (mpfr_sgn(lo_) >= 0) return *this;
        if (mpfr_sgn(hi_) <= 0) return -*this;
        mpfr_set_zero(r.lo_, 1);
        mpfr_neg(r.hi_, lo_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, hi_, MPFR_RNDU);
        return r;
    }

    bool contains(const Rational& q) const {
        return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
    }
    bool contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

    /// Certified strict comparisons; false means "not decidable from this enclosure".
    bool certainly_lt(const DyadicInterval& o) const { return mpfr_cmp(hi_, o.lo_) < 0; }
    bool certainly_gt(const DyadicInterval& o) const { return mpfr_cmp(lo_, o.hi_) > 0; }
    bool certainly_lt(const Rational& q) const { return mpfr_cmp_q(hi_, q.get_mpq_t()) < 0; }
    bool certainly_gt(const Rational& q) const { return mpfr_cmp_q(lo_, q.get_mpq_t()) > 0; }

    /// Decided sign: -1, 0 (straddles zero), +1.
    int sign() const {
        if (mpfr_sgn(lo_) > 0) return 1;
        if (mpfr_sgn(hi_) < 0) return -1;
        return 0;
    }

    Rational lower() const { return mpfr_to_q(lo_); }
    Rational upper() const { return mpfr_to_q(hi_); }
    Rational width() const { return upper() - lower(); }
    double mid_double() const {
        return (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN)) / 2;
    }
    double upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
    double lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }

    std::string to_string(int digits = 17) const {
        char* s1 = nullptr;
        char* s2 = nullptr;
        mpfr_asprintf(&s1, "%.*Rg", digits, lo_);
        mpfr_asprintf(&s2, "%.*Rg", digits, hi_);
        std::string out = std::string("[") + s1 + ", " + s2 + "]";
        mpfr_free_str(s1);
        mpfr_free_str(s2);
        return out;
    }

  private:
    static Rational mpfr_to_q(const mpfr_t x) {
        Rational q;
        mpfr_get_q(q.get_mpq_t(), x);
        return q;
    }
    mpfr_prec_t prec_;
    mpfr_t lo_;
    mpfr_t hi_;
};

}  // namespace prepatlas
