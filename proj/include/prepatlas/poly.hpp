#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "prepatlas/dyadic.hpp"
#include "prepatlas/rational.hpp"

namespace prepatlas {

/// Dense integer-coefficient univariate polynomial, lowest degree first.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { normalize(); }
    IntPoly(std::initializer_list<long> coeffs) {
        for (long v : coeffs) c_.emplace_back(v);
        normalize();
    }
    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return IntPoly({1}); }
    static IntPoly x() { return IntPoly({0, 1}); }
    static IntPoly constant(Integer v) { return IntPoly(std::vector<Integer>{std::move(v)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Integer& leading() const { return c_.back(); }
    const Integer& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<Integer>& coeffs() const { return c_; }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

    IntPoly operator-() const {
        std::vector<Integer> r;
        r.reserve(c_.size());
        for (const auto& v : c_) r.push_back(-v);
        return IntPoly(std::move(r));
    }
    IntPoly scaled(const Integer& k) const {
        if (k == 0) return zero();
        std::vector<Integer> r;
        r.reserve(c_.size());
        for (const auto& v : c_) r.push_back(v * k);
        return IntPoly(std::move(r));
    }

    IntPoly derivative() const {
        if (c_.size() <= 1) return zero();
        std::vector<Integer> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
        return IntPoly(std::move(r));
    }

    Rational eval(const Rational& x) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
        return acc;
    }
    Integer eval(const Integer& x) const {
        Integer acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    DyadicInterval eval(const DyadicInterval& x) const {
        DyadicInterval acc = DyadicInterval::from_rational(0, x.precision());
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + DyadicInterval::from_rational(Rational(*it), x.precision());
        return acc;
    }
    int sign_at(const Rational& x) const { return sgn(eval(x)); }

    /// gcd of |coefficients|; 0 for the zero polynomial.
    Integer content() const {
        Integer g = 0;
        for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        return g;
    }
    /// Divides out the content, preserving the sign of the leading coefficient.
    IntPoly primitive_part() const {
        if (is_zero()) return zero();
        Integer g = content();
        std::vector<Integer> r;
        r.reserve(c_.size());
        for (const auto& v : c_) r.push_back(v / g);
        return IntPoly(std::move(r));
    }

    /// Exact division; throws if b does not divide *this over Z.
    IntPoly divide_exact(const IntPoly& b) const;
    bool divisible_by(const IntPoly& b) const;

    /// Positive-leading-coefficient primitive gcd (subresultant-free primitive PRS).
    static IntPoly gcd(IntPoly a, IntPoly b);
    IntPoly squarefree_part() const {
        if (is_zero()) throw std::invalid_argument("squarefree part of zero polynomial");
        if (degree() == 0) return one();
        IntPoly g = gcd(*this, derivative());
        return divide_exact(g).primitive_part();
    }
    bool is_squarefree() const {
        return degree() <= 0 || gcd(*this, derivative()).degree() == 0;
    }

    /// 1 + max|c_i| / |lead|: every real root has absolute value below this.
    Rational root_bound() const {
        if (is_zero()) throw std::invalid_argument("root bound of zero polynomial");
        Rational m = 0;
        for (std::size_t i = 0; i + 1 < c_.size(); ++i) {
            Rational t = abs_rational(Rational(c_[i]) / Rational(leading()));
            if (t > m) m = t;
        }
        return m + 1;
    }

    std::string to_string(const std::string& var = "x") const;

  private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Integer> c_;
};

/// Dense rational-coefficient polynomial; working type for psi_n with
/// non-integer alpha and for monic Euclidean algorithms.
class QPoly {
  public:
    QPoly() = default;
    explicit QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }
    QPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { normalize(); }
    explicit QPoly(const IntPoly& p) {
        c_.reserve(p.coeffs().size());
        for (const auto& v : p.coeffs()) c_.emplace_back(v);
    }
    static QPoly zero() { return QPoly(); }
    static QPoly constant(Rational v) { return QPoly(std::vector<Rational>{std::move(v)}); }
    static QPoly x() { return QPoly({Rational(0), Rational(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& leading() const { return c_.back(); }
    const Rational& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<Rational>& coeffs() const { return c_; }

    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

    QPoly operator-() const {
        std::vector<Rational> r;
        r.reserve(c_.size());
        for (const auto& v : c_) r.push_back(-v);
        return QPoly(std::move(r));
    }

    Rational eval(const Rational& x) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// Quotient and remainder over Q.
    std::pair<QPoly, QPoly> divrem(const QPoly& b) const;
    bool divisible_by(const QPoly& b) const { return divrem(b).second.is_zero(); }

    QPoly monic() const {
        if (is_zero()) return zero();
        std::vector<Rational> r;
        r.reserve(c_.size());
        for (const auto& v : c_) r.push_back(v / leading());
        return QPoly(std::move(r));
    }

    /// p(x + t).
    QPoly shifted(const Rational& t) const;
    /// p(k x).
    QPoly scaled_arg(const Rational& k) const;
    /// p(-x).
    QPoly reflected() const;

    /// Smallest positive multiplier clearing all denominators, as IntPoly.
    IntPoly clear_denominators() const;

    std::string to_string(const std::string& var = "x") const;

  private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

}  // namespace prepatlas
