#include "prepatlas/io.hpp"

#include <json.hpp>

#include <cctype>
#include <cstdio>
#include <sstream>

namespace prepatlas {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string q_str(const Rational& q) { return q.get_str(); }

std::string d_str(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// Decimal enclosure of a real algebraic number plus explicit width metadata.
ordered_json enclosure_json(const RealAlgebraic& x) {
    ordered_json j;
    if (x.is_rational()) {
        j["exact"] = q_str(x.rational_value());
        j["decimal"] = d_str(x.to_double());
        j["enclosure_width"] = "0";
        return j;
    }
    DyadicInterval e = x.enclosure(128);
    j["minpoly"] = x.minpoly().to_string();
    j["decimal_lo"] = d_str(e.lower_double());
    j["decimal_hi"] = d_str(e.upper_double());
    j["enclosure_width"] = d_str(e.width().get_d());
    return j;
}

std::string enclosure_text(const RealAlgebraic& x) {
    if (x.is_rational()) return q_str(x.rational_value()) + " (exact)";
    DyadicInterval e = x.enclosure(128);
    std::ostringstream os;
    os << "[" << d_str(e.lower_double()) << ", " << d_str(e.upper_double()) << "] (width <= "
       << d_str(e.width().get_d()) << ")";
    return os.str();
}

ordered_json endpoint_json(const CantorEndpoint& e) {
    ordered_json j;
    j["lo"] = q_str(e.lo);
    j["hi"] = q_str(e.hi);
    j["decimal"] = d_str((e.lo.get_d() + e.hi.get_d()) / 2);
    j["enclosure_width"] = q_str(e.hi - e.lo);
    j["tag"] = e.tag;
    return j;
}

}  // namespace

std::string to_pgm(const EscapeGrid& grid) {
    int maxval = std::min(grid.max_iter, 255);
    std::ostringstream os;
    os << "P5\n" << grid.width << " " << grid.height << "\n" << maxval << "\n";
    for (int v : grid.cells) {
        int pix;
        if (v >= grid.sentinel())
            pix = 0;  // bounded within budget: black interior
        else
            pix = std::max(1, v * maxval / grid.max_iter);
        os.put(static_cast<char>(pix));
    }
    return os.str();
}

std::string to_csv(const EscapeGrid& grid) {
    Rational dre = (grid.window.re_max - grid.window.re_min) / grid.width;
    Rational dim = (grid.window.im_max - grid.window.im_min) / grid.height;
    std::ostringstream os;
    os << "re,im,count\n";
    for (int row = 0; row < grid.height; ++row) {
        Rational im = grid.window.im_min + dim * (2 * row + 1) / 2;
        for (int col = 0; col < grid.width; ++col) {
            Rational re = grid.window.re_min + dre * (2 * col + 1) / 2;
            os << q_str(re) << "," << q_str(im) << "," << grid.at(row, col) << "\n";
        }
    }
    return os.str();
}

std::string to_csv(const ComplexRootSet& rs) {
    std::ostringstream os;
    os << "re,im,residual\n";
    for (const auto& r : rs.roots)
        os << d_str(r.re) << "," << d_str(r.im) << "," << d_str(r.residual) << "\n";
    return os.str();
}

std::string to_json(const ComplexRootSet& rs) {
    ordered_json j;
    j["alpha"] = q_str(rs.alpha);
    j["m"] = rs.m;
    j["n"] = rs.n;
    j["tol"] = rs.tol;
    j["roots"] = ordered_json::array();
    for (const auto& r : rs.roots) {
        ordered_json e;
        e["re"] = r.re;
        e["im"] = r.im;
        e["residual"] = r.residual;
        j["roots"].push_back(e);
    }
    return j.dump(2) + "\n";
}

std::string to_csv(const CantorLevel& lvl) {
    std::ostringstream os;
    os << "index,left_lo,left_hi,left_tag,right_lo,right_hi,right_tag\n";
    for (std::size_t i = 0; i < lvl.intervals.size(); ++i) {
        const auto& iv = lvl.intervals[i];
        os << i << "," << q_str(iv.left.lo) << "," << q_str(iv.left.hi) << ",\"" << iv.left.tag
           << "\"," << q_str(iv.right.lo) << "," << q_str(iv.right.hi) << ",\"" << iv.right.tag
           << "\"\n";
    }
    return os.str();
}

std::string to_json(const CantorLevel& lvl) {
    ordered_json j;
    j["alpha"] = q_str(lvl.alpha);
    j["depth"] = lvl.depth;
    j["intervals"] = ordered_json::array();
    for (const auto& iv : lvl.intervals) {
        ordered_json e;
        e["left"] = endpoint_json(iv.left);
        e["right"] = endpoint_json(iv.right);
        j["intervals"].push_back(e);
    }
    return j.dump(2) + "\n";
}

std::string to_json(const CriterionReport& rep) {
    ordered_json j;
    j["interval"] = rep.interval;
    j["n0"] = rep.n0 ? ordered_json(*rep.n0) : ordered_json(nullptr);
    j["certified"] = rep.certified;
    j["table"] = ordered_json::array();
    for (const auto& row : rep.table) {
        ordered_json e;
        e["n"] = row.n;
        e["a_lo"] = q_str(row.a_lo);
        e["a_hi"] = q_str(row.a_hi);
        e["a_enclosure_width"] = q_str(row.a_hi - row.a_lo);
        e["b_n"] = q_str(row.b_n);
        e["a_lt_b"] = row.a_lt_b;
        e["ratio_lt"] = row.ratio_lt;
        j["table"].push_back(e);
    }
    return j.dump(2) + "\n";
}

std::string to_table(const CriterionReport& rep) {
    std::ostringstream os;
    os << "degree-bound criterion on " << rep.interval << "\n";
    os << "   n  a_n (enclosure)                              b_n               a<b  ratio<\n";
    for (const auto& row : rep.table) {
        char an[64], bn[64];
        std::snprintf(an, sizeof(an), "[%.6g, %.6g]", row.a_lo.get_d(), row.a_hi.get_d());
        std::snprintf(bn, sizeof(bn), "%.6g", row.b_n.get_d());
        os << "  " << (row.n < 10 ? " " : "") << row.n << "  ";
        os.width(45);
        os << std::left << an;
        os.width(18);
        os << bn;
        os << (row.a_lt_b ? "yes " : "no  ") << (row.ratio_lt ? "yes" : "no") << "\n";
        os << std::right;
    }
    if (rep.n0)
        os << (rep.certified ? "certified, " : "") << "n0 = " << *rep.n0 << "\n";
    else
        os << "no certificate found within the scanned range\n";
    return os.str();
}

namespace {

ordered_json accepted_json(const AcceptedCandidate& a) {
    ordered_json e;
    e["poly"] = a.poly.to_string();
    e["reverified"] = a.reverified;
    e["witnesses"] = ordered_json::array();
    for (const auto& w : a.witnesses) {
        ordered_json wj;
        wj["root"] = enclosure_json(w.root);
        wj["m"] = w.m;
        wj["n"] = w.n;
        e["witnesses"].push_back(wj);
    }
    return e;
}

}  // namespace

std::string to_json(const ClassificationResult& res) {
    ordered_json j;
    j["alpha"] = q_str(res.alpha);
    j["interval"] = res.interval;
    j["degree_bound"] = res.degree_bound_n0;
    j["candidates_considered"] = ordered_json::array();
    for (const auto& p : res.candidates_considered)
        j["candidates_considered"].push_back(p.to_string());
    j["accepted"] = ordered_json::array();
    for (const auto& a : res.accepted) j["accepted"].push_back(accepted_json(a));
    j["rejected"] = ordered_json::array();
    for (const auto& r : res.rejected) {
        ordered_json e;
        e["poly"] = r.poly.to_string();
        e["reason"] = r.reason;
        j["rejected"].push_back(e);
    }
    j["accepted_parameters"] = ordered_json::array();
    for (const auto& a : res.accepted_parameters) j["accepted_parameters"].push_back(accepted_json(a));
    j["notes"] = res.notes;
    return j.dump(2) + "\n";
}

std::string to_report(const ClassificationResult& res) {
    std::ostringstream os;
    os << "classification of totally real preperiodic parameters, alpha = " << q_str(res.alpha)
       << "\n";
    os << "interval: " << res.interval << "\n";
    os << "degree bound n0 = " << res.degree_bound_n0 << " (candidate degree <= "
       << res.degree_bound_n0 - 1 << ")\n";
    os << "candidates considered: " << res.candidates_considered.size() << ", accepted "
       << res.accepted.size() << ", rejected " << res.rejected.size() << "\n\n";
    os << "accepted parameters (by irreducible minimal polynomial):\n";
    for (const auto& a : res.accepted_parameters) {
        os << "  " << a.poly.to_string() << (a.reverified ? "  [witness reverified]" : "") << "\n";
        for (const auto& w : a.witnesses)
            os << "    root " << enclosure_text(w.root) << "  witness f^" << w.n
               << "(alpha) = f^" << w.m << "(alpha)\n";
    }
    os << "\nrejected candidates:\n";
    for (const auto& r : res.rejected) os << "  " << r.poly.to_string() << ": " << r.reason << "\n";
    if (!res.notes.empty()) os << "\nnote: " << res.notes << "\n";
    return os.str();
}

namespace {

struct SurdTerm {
    Rational coef;      // rational part contribution
    Rational sqrt_coef; // coefficient of sqrt(radicand)
    Rational radicand;  // 0 when the term is purely rational
};

/// One term of the mini-grammar: rational, or [c*]sqrtR[/d] with optional
/// parentheses around the radicand.
SurdTerm parse_term(std::string t) {
    auto pos = t.find("sqrt");
    if (pos == std::string::npos) return {parse_rational(t), 0, 0};
    Rational coef = 1;
    std::string head = t.substr(0, pos);
    if (!head.empty()) {
        if (head.back() != '*') throw std::invalid_argument("expected '*' before sqrt: " + t);
        head.pop_back();
        if (head.empty()) throw std::invalid_argument("empty coefficient before sqrt: " + t);
        coef = parse_rational(head);
    }
    std::string tail = t.substr(pos + 4);
    Rational div = 1;
    if (!tail.empty() && tail.front() == '(') {
        auto close = tail.find(')');
        if (close == std::string::npos) throw std::invalid_argument("unbalanced parens: " + t);
        std::string rest = tail.substr(close + 1);
        tail = tail.substr(1, close - 1);
        if (!rest.empty()) {
            if (rest.front() != '/') throw std::invalid_argument("trailing input after sqrt: " + t);
            div = parse_rational(rest.substr(1));
        }
    }
    if (tail.empty()) throw std::invalid_argument("missing radicand: " + t);
    Rational rad = parse_rational(tail);
    if (rad < 0) throw std::invalid_argument("negative radicand: " + t);
    if (auto r = exact_sqrt(rad)) return {coef * *r / div, 0, 0};
    return {0, coef / div, rad};
}

}  // namespace

RealAlgebraic parse_endpoint(const std::string& s) {
    std::string t;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    if (t.empty()) throw std::invalid_argument("empty endpoint expression");
    Rational a = 0, b = 0, rad = 0;
    std::size_t i = 0;
    while (i < t.size()) {
        int sign = 1;
        if (t[i] == '+' || t[i] == '-') {
            sign = t[i] == '-' ? -1 : 1;
            ++i;
        }
        std::size_t j = i;
        int depth = 0;
        while (j < t.size()) {
            if (t[j] == '(') ++depth;
            if (t[j] == ')') --depth;
            if (depth == 0 && (t[j] == '+' || t[j] == '-') && j > i &&
                t[j - 1] != '*' && t[j - 1] != '/')
                break;
            ++j;
        }
        if (j == i) throw std::invalid_argument("bad endpoint expression: " + s);
        SurdTerm term = parse_term(t.substr(i, j - i));
        a += sign * term.coef;
        if (term.radicand != 0) {
            if (rad != 0 && rad != term.radicand)
                throw std::invalid_argument("mixed radicands are not supported: " + s);
            rad = term.radicand;
            b += sign * term.sqrt_coef;
        }
        i = j;
    }
    if (b == 0 || rad == 0) return RealAlgebraic::from_rational(a);
    return RealAlgebraic::from_quadratic(a, b, rad);
}

std::pair<RealAlgebraic, RealAlgebraic> parse_interval(const std::string& s) {
    // split at the top-level comma
    auto pos = s.find(',');
    if (pos == std::string::npos)
        throw std::invalid_argument("interval must be \"a,b\": " + s);
    RealAlgebraic a = parse_endpoint(s.substr(0, pos));
    RealAlgebraic b = parse_endpoint(s.substr(pos + 1));
    if (alg_compare(a, b) != Cmp::less)
        throw std::invalid_argument("interval endpoints must satisfy a < b: " + s);
    return {a, b};
}

}  // namespace prepatlas
