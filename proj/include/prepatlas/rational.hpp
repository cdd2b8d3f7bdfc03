#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace prepatlas {

using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Integer floor_int(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

inline Integer ceil_int(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

inline Rational pow_rational(const Rational& q, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num().get_mpz_t(), q.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den().get_mpz_t(), q.get_den().get_mpz_t(), e);
    r.canonicalize();
    return r;
}

inline Rational abs_rational(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// Parses "p", "-p", or "p/q". No float forms; the CLI contract is exact.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

/// True if q = (p/r)^2 for some rational p/r; if so returns the nonnegative root.
inline std::optional<Rational> exact_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    if (!mpz_perfect_square_p(q.get_num().get_mpz_t())) return std::nullopt;
    if (!mpz_perfect_square_p(q.get_den().get_mpz_t())) return std::nullopt;
    Rational r;
    mpz_sqrt(r.get_num().get_mpz_t(), q.get_num().get_mpz_t());
    mpz_sqrt(r.get_den().get_mpz_t(), q.get_den().get_mpz_t());
    r.canonicalize();
    return r;
}

}  // namespace prepatlas
