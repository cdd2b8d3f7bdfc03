#include "prepatlas/poly.hpp"

#include <sstream>

namespace prepatlas {

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Integer> r(std::max(a.c_.size(), b.c_.size()), Integer(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Integer> r(std::max(a.c_.size(), b.c_.size()), Integer(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly::zero();
    std::vector<Integer> r(a.c_.size() + b.c_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::divide_exact(const IntPoly& b) const {
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    QPoly qa{QPoly(*this)};
    auto [q, r] = qa.divrem(QPoly(b));
    if (!r.is_zero()) throw std::invalid_argument("inexact polynomial division");
    std::vector<Integer> c;
    c.reserve(q.coeffs().size());
    for (const auto& v : q.coeffs()) {
        if (v.get_den() != 1) throw std::invalid_argument("inexact polynomial division over Z");
        c.push_back(v.get_num());
    }
    return IntPoly(std::move(c));
}

bool IntPoly::divisible_by(const IntPoly& b) const {
    if (b.is_zero()) return false;
    return QPoly(*this).divisible_by(QPoly(b));
}

namespace {
// prem(a, b): remainder of lc(b)^(deg a - deg b + 1) * a by b, all over Z.
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    std::vector<Integer> r(a.coeffs());
    const Integer& lb = b.leading();
    int db = b.degree();
    for (int i = a.degree(); i >= db; --i) {
        Integer top = r[static_cast<std::size_t>(i)];
        for (auto& v : r) v *= lb;
        for (int j = 0; j <= db; ++j)
            r[static_cast<std::size_t>(i - db + j)] -= top * b[static_cast<std::size_t>(j)];
    }
    return IntPoly(std::move(r));
}
}  // namespace

IntPoly IntPoly::gcd(IntPoly a, IntPoly b) {
    if (a.is_zero() && b.is_zero()) return zero();
    if (a.is_zero()) return b.primitive_part().leading() > 0 ? b.primitive_part() : (-b).primitive_part();
    if (b.is_zero()) return a.primitive_part().leading() > 0 ? a.primitive_part() : (-a).primitive_part();
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    // primitive PRS: pseudo-remainders over Z, content stripped each step
    while (!b.is_zero()) {
        IntPoly r = pseudo_rem(a, b);
        a = b;
        b = r.is_zero() ? zero() : r.primitive_part();
    }
    IntPoly res = a.primitive_part();
    if (res.leading() < 0) res = -res;
    return res;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Integer& v = c_[static_cast<std::size_t>(i)];
        if (v == 0) continue;
        if (!first) os << (v > 0 ? " + " : " - ");
        else if (v < 0) os << "-";
        Integer a = v > 0 ? v : Integer(-v);
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return QPoly(std::move(r));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return QPoly(std::move(r));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly::zero();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return QPoly(std::move(r));
}

std::pair<QPoly, QPoly> QPoly::divrem(const QPoly& b) const {
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    std::vector<Rational> rem = c_;
    int db = b.degree();
    if (degree() < db) return {QPoly::zero(), *this};
    std::vector<Rational> quot(static_cast<std::size_t>(degree() - db) + 1, Rational(0));
    for (int i = degree(); i >= db; --i) {
        Rational& top = rem[static_cast<std::size_t>(i)];
        if (top == 0) continue;
        Rational q = top / b.leading();
        quot[static_cast<std::size_t>(i - db)] = q;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] -= q * b.c_[static_cast<std::size_t>(j)];
    }
    return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly QPoly::shifted(const Rational& t) const {
    // Horner composition with (x + t)
    QPoly acc;
    QPoly lin({t, Rational(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + QPoly::constant(*it);
    return acc;
}

QPoly QPoly::scaled_arg(const Rational& k) const {
    std::vector<Rational> r = c_;
    Rational p = 1;
    for (auto& v : r) {
        v *= p;
        p *= k;
    }
    return QPoly(std::move(r));
}

QPoly QPoly::reflected() const {
    std::vector<Rational> r = c_;
    for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return QPoly(std::move(r));
}

IntPoly QPoly::clear_denominators() const {
    if (is_zero()) return IntPoly::zero();
    Integer l = 1;
    for (const auto& v : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
    std::vector<Integer> r;
    r.reserve(c_.size());
    for (const auto& v : c_) {
        Rational t = v * Rational(l);
        r.push_back(t.get_num());
    }
    return IntPoly(std::move(r));
}

std::string QPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& v = c_[static_cast<std::size_t>(i)];
        if (v == 0) continue;
        if (!first) os << (v > 0 ? " + " : " - ");
        else if (v < 0) os << "-";
        Rational a = abs_rational(v);
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

}  // namespace prepatlas
