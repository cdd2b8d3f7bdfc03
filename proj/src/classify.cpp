#include "prepatlas/classify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace prepatlas {

IntPoly cyclotomic(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic requires n >= 1");
    static std::map<int, IntPoly> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // Phi_n = (X^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<Integer> xn(static_cast<std::size_t>(n) + 1, Integer(0));
    xn.front() = -1;
    xn.back() = 1;
    IntPoly num(std::move(xn));
    for (int d = 1; d < n; ++d)
        if (n % d == 0) num = num.divide_exact(cyclotomic(d));
    cache.emplace(n, num);
    return num;
}

namespace {

int euler_phi(int n) {
    int r = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            r -= r / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

/// p(X + s) for integer s.
IntPoly int_shift(const IntPoly& p, const Integer& s) {
    IntPoly acc;
    IntPoly lin(std::vector<Integer>{s, Integer(1)});
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        acc = acc * lin + IntPoly::constant(*it);
    return acc;
}

/// Minimal polynomial of zeta_n + zeta_n^{-1} (n >= 3) by symmetrizing Phi_n:
/// z^{-m} Phi_n(z) = c_m + sum_k c_{m+k} (z^k + z^{-k}) with z^k + z^{-k}
/// given by the recursion p_0 = 2, p_1 = y, p_k = y p_{k-1} - p_{k-2}.
IntPoly chebyshev_symmetrize(int n) {
    IntPoly phi = cyclotomic(n);
    int m = phi.degree() / 2;
    IntPoly pk_prev = IntPoly::constant(2), pk = IntPoly::x();
    IntPoly psi = IntPoly::constant(phi[static_cast<std::size_t>(m)]);
    for (int k = 1; k <= m; ++k) {
        psi = psi + pk.scaled(phi[static_cast<std::size_t>(m + k)]);
        IntPoly next = IntPoly::x() * pk - pk_prev;
        pk_prev = pk;
        pk = next;
    }
    return psi;
}

}  // namespace

IntPoly kronecker_factor(int n, const Integer& t) {
    if (n < 1) throw std::invalid_argument("kronecker_factor requires n >= 1");
    if (n == 1) return IntPoly(std::vector<Integer>{-(t + 4), Integer(1)});  // zeta = 1
    if (n == 2) return IntPoly(std::vector<Integer>{-t, Integer(1)});       // zeta = -1
    // value is zeta + zeta^{-1} + (t+2), so substitute y = X - (t+2)
    return int_shift(chebyshev_symmetrize(n), -(t + 2));
}

IntPoly shifted_chebyshev_minpoly(int n) {
    if (n < 3) throw std::invalid_argument("shifted_chebyshev_minpoly requires n >= 3");
    return kronecker_factor(n, Integer(-4));
}

IntPoly kronecker_lift(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("kronecker_lift of zero polynomial");
    int d = p.degree();
    // z^d p(z + 1/z - 2) = sum_i a_i (z-1)^{2i} z^{d-i}
    IntPoly q({1, -2, 1});  // (z-1)^2
    IntPoly acc, qi = IntPoly::one();
    for (int i = 0; i <= d; ++i) {
        std::vector<Integer> mono(static_cast<std::size_t>(d - i) + 1, Integer(0));
        mono.back() = p[static_cast<std::size_t>(i)];
        acc = acc + qi * IntPoly(std::move(mono));
        qi = qi * q;
    }
    return acc;
}

bool kronecker_roundtrip(const IntPoly& p) {
    IntPoly L = kronecker_lift(p);
    if (L.is_zero() || L.leading() != 1) return false;
    for (int n = 1; n <= 1000 && L.degree() > 0; ++n) {
        if (euler_phi(n) > L.degree()) continue;
        IntPoly phi = cyclotomic(n);
        while (L.degree() >= phi.degree() && L.divisible_by(phi)) L = L.divide_exact(phi);
    }
    return L == IntPoly::one();
}

namespace {

Integer alg_floor(const RealAlgebraic& x) {
    if (x.is_rational()) return floor_int(x.rational_value());
    Rational eps(1, 16);
    for (;;) {
        auto [lo, hi] = x.refine(eps);
        Integer fl = floor_int(lo), fh = floor_int(hi);
        if (fl == fh) return fl;
        eps /= 16;  // x irrational, hence not an integer: terminates
    }
}

/// Irreducible Kronecker factors of degree <= maxdeg with all roots in [a, b].
std::vector<IntPoly> kronecker_factors(const RealAlgebraic& a, const RealAlgebraic& b, int maxdeg,
                                       Integer* shift_out) {
    if (alg_compare(a, b) != Cmp::less) throw std::invalid_argument("requires a < b");
    // the unit circle maps to [t, t+4] under z + 1/z + (t+2); need [a,b] inside
    Integer t = alg_floor(a);
    if (alg_compare(b, Rational(t + 4)) == Cmp::greater)
        throw std::invalid_argument("interval not reducible to Kronecker form");
    if (shift_out) *shift_out = t;
    // phi(n) >= sqrt(n/2), so n <= 1000 covers phi(n)/2 <= maxdeg for all
    // relevant maxdeg
    std::vector<IntPoly> factors;
    for (int n = 1; n <= 1000; ++n) {
        int deg = n <= 2 ? 1 : euler_phi(n) / 2;
        if (deg > maxdeg) continue;
        IntPoly f = kronecker_factor(n, t);
        if (sturm_count(f, a, b) == f.degree() &&
            std::find(factors.begin(), factors.end(), f) == factors.end())
            factors.push_back(f);
    }
    return factors;
}

bool poly_less(const IntPoly& x, const IntPoly& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    for (int i = x.degree(); i >= 0; --i) {
        int c = cmp(x[static_cast<std::size_t>(i)], y[static_cast<std::size_t>(i)]);
        if (c != 0) return c < 0;
    }
    return false;
}

/// All products of distinct factors (nonempty subsets) with total degree
/// <= maxdeg, each paired with the indices of its factors.
std::vector<std::pair<IntPoly, std::vector<std::size_t>>> factor_products(
    const std::vector<IntPoly>& factors, int maxdeg) {
    std::vector<std::pair<IntPoly, std::vector<std::size_t>>> out;
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t, IntPoly, int)> rec = [&](std::size_t i, IntPoly prod,
                                                             int deg) {
        if (deg > 0) out.emplace_back(prod, chosen);
        for (std::size_t j = i; j < factors.size(); ++j) {
            int nd = deg + factors[j].degree();
            if (nd > maxdeg) continue;
            chosen.push_back(j);
            rec(j + 1, prod * factors[j], nd);
            chosen.pop_back();
        }
    };
    rec(0, IntPoly::one(), 0);
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return poly_less(x.first, y.first); });
    return out;
}

}  // namespace

std::vector<IntPoly> enumerate_candidates(const RealAlgebraic& a, const RealAlgebraic& b,
                                          int n0) {
    if (n0 < 2) throw std::invalid_argument("requires n0 >= 2");
    auto factors = kronecker_factors(a, b, n0 - 1, nullptr);
    std::vector<IntPoly> out;
    for (auto& [p, idx] : factor_products(factors, n0 - 1)) out.push_back(p);
    return out;
}

bool totally_real_test(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("totally_real_test of zero polynomial");
    return p.is_squarefree() && count_distinct_real(p) == p.degree();
}

ClassificationResult classify_totally_real_prep(const Rational& alpha) {
    if (!(alpha == 0 || alpha == 1 || alpha == -1))
        throw std::invalid_argument(
            "supported alpha: -1, 0, 1 (parameters must be algebraic integers; "
            "the non-integral case is an open problem)");

    ClassificationResult res;
    res.alpha = alpha;
    IntervalSet slice = real_slice(alpha);
    const RealAlgebraic& a = slice[0].left;
    const RealAlgebraic& b = slice[0].right;

    CriterionReport bound = degree_bound(a, b);
    if (!bound.certified || !bound.n0)
        throw std::runtime_error("degree-bound criterion did not certify on the real slice");
    res.interval = bound.interval;
    res.degree_bound_n0 = *bound.n0;

    auto factors = kronecker_factors(a, b, res.degree_bound_n0 - 1, nullptr);

    // decide each irreducible factor once; every conjugate root shares the
    // verdict and the exact (m, n) relation
    struct FactorInfo {
        bool accepted = false;
        std::vector<RootWitness> witnesses;
        bool reverified = false;
        std::string reason;
    };
    std::vector<FactorInfo> info(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
        auto verdicts = decide_algebraic(alpha, factors[i]);
        FactorInfo& fi = info[i];
        fi.accepted = true;
        for (const auto& v : verdicts) {
            if (v.verdict != Verdict::Preperiodic) {
                fi.accepted = false;
                fi.reason = "some root escapes: " + v.witness;
                break;
            }
            fi.witnesses.push_back({v.root, v.m, v.n});
        }
        if (fi.accepted) {
            // independent check: the minimal polynomial must divide F_{m,n}
            fi.reverified = true;
            for (const auto& w : fi.witnesses)
                if (!prep_poly(alpha, w.m, w.n).divisible_by(QPoly(factors[i])))
                    fi.reverified = false;
        }
    }

    for (auto& [cand, idx] : factor_products(factors, res.degree_bound_n0 - 1)) {
        res.candidates_considered.push_back(cand);
        AcceptedCandidate acc{cand, {}, true};
        std::string reject;
        for (std::size_t j : idx) {
            const FactorInfo& fi = info[j];
            if (!fi.accepted) {
                if (!reject.empty()) reject += "; ";
                reject += "factor " + factors[j].to_string() + ": " + fi.reason;
            } else {
                acc.witnesses.insert(acc.witnesses.end(), fi.witnesses.begin(),
                                     fi.witnesses.end());
                acc.reverified = acc.reverified && fi.reverified;
            }
        }
        if (reject.empty())
            res.accepted.push_back(std::move(acc));
        else
            res.rejected.push_back({cand, reject});
    }

    std::vector<std::size_t> order(factors.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return poly_less(factors[x], factors[y]); });
    bool zero_accepted = false;
    for (std::size_t i : order) {
        if (!info[i].accepted) continue;
        res.accepted_parameters.push_back({factors[i], info[i].witnesses, info[i].reverified});
        if (factors[i] == IntPoly::x()) zero_accepted = true;
    }
    if (zero_accepted && abs_rational(alpha) == 1)
        res.notes =
            "c = 0 is preperiodic for this alpha (exhaustive search accepts the factor x); "
            "summaries listing only the five nonzero parameters for alpha = +-1 are incomplete";
    return res;
}

}  // namespace prepatlas
