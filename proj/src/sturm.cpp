#include "prepatlas/sturm.hpp"

#include <algorithm>
#include <stdexcept>

namespace prepatlas {

namespace {
// Primitive image of a rational-coefficient polynomial, scaled by a positive
// constant only (sign-faithful, as Sturm chains require).
IntPoly positive_primitive(const QPoly& p) {
    if (p.is_zero()) return IntPoly::zero();
    return p.clear_denominators().primitive_part();
}
}  // namespace

std::vector<IntPoly> sturm_chain(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("indeterminate root count");
    IntPoly q = p.squarefree_part();
    std::vector<IntPoly> chain{q};
    if (q.degree() == 0) return chain;
    chain.push_back(q.derivative().primitive_part());
    while (chain.back().degree() > 0) {
        QPoly rem = QPoly(chain[chain.size() - 2]).divrem(QPoly(chain.back())).second;
        if (rem.is_zero()) break;  // cannot happen for squarefree q, but be safe
        chain.push_back(positive_primitive(-rem));
    }
    return chain;
}

int variations_at(const std::vector<IntPoly>& chain, const Rational& x) {
    int v = 0, prev = 0;
    for (const auto& f : chain) {
        int s = f.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

int variations_at_pos_inf(const std::vector<IntPoly>& chain) {
    int v = 0, prev = 0;
    for (const auto& f : chain) {
        if (f.is_zero()) continue;
        int s = sgn(f.leading());
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

int variations_at_neg_inf(const std::vector<IntPoly>& chain) {
    int v = 0, prev = 0;
    for (const auto& f : chain) {
        if (f.is_zero()) continue;
        int s = sgn(f.leading());
        if (f.degree() % 2 == 1) s = -s;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

int count_open(const std::vector<IntPoly>& chain, const Rational& a, const Rational& b) {
    return variations_at(chain, a) - variations_at(chain, b);
}

int count_distinct_real(const IntPoly& p) {
    auto chain = sturm_chain(p);
    if (chain.front().degree() == 0) return 0;
    return variations_at_neg_inf(chain) - variations_at_pos_inf(chain);
}

std::vector<std::pair<Rational, Rational>> isolate_intervals(const IntPoly& p) {
    auto chain = sturm_chain(p);
    const IntPoly& q = chain.front();
    std::vector<std::pair<Rational, Rational>> out;
    if (q.degree() == 0) return out;
    Rational B = q.root_bound();
    // q(±B) != 0 since all roots lie strictly inside (-B, B)
    struct Seg {
        Rational a, b;
        int count;
    };
    std::vector<Seg> todo;
    int total = count_open(chain, -B, B);
    if (total > 0) todo.push_back({-B, B, total});
    while (!todo.empty()) {
        Seg s = todo.back();
        todo.pop_back();
        if (s.count == 1 && q.sign_at(s.a) * q.sign_at(s.b) < 0) {
            out.emplace_back(s.a, s.b);
            continue;
        }
        Rational m = (s.a + s.b) / 2;
        if (q.sign_at(m) == 0) {
            out.emplace_back(m, m);
            // shrink the flanking intervals away from the rational root m so
            // their endpoints are non-roots; the Sturm count is half-open
            // (a, b], so recount against the shrunk endpoints
            Rational d = (s.b - s.a) / 4;
            while (count_open(chain, m - d, m + d) > 1 || q.sign_at(m - d) == 0 ||
                   q.sign_at(m + d) == 0)
                d /= 2;
            int left = count_open(chain, s.a, m - d);
            int right = count_open(chain, m + d, s.b);
            if (left > 0) todo.push_back({s.a, m - d, left});
            if (right > 0) todo.push_back({m + d, s.b, right});
        } else {
            int left = count_open(chain, s.a, m);
            int right = s.count - left;
            if (left > 0) todo.push_back({s.a, m, left});
            if (right > 0) todo.push_back({m, s.b, right});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

}  // namespace prepatlas
