#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "prepatlas/io.hpp"
#include "prepatlas/verify.hpp"

using namespace prepatlas;

namespace {

void emit(const std::string& data, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << data;
}

/// Window coordinates additionally accept decimal literals; "-2.5" converts
/// exactly to -5/2.
Rational parse_coord(const std::string& s) {
    auto dot = s.find('.');
    if (dot == std::string::npos) return parse_rational(s);
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac = s.size() - dot - 1;
    Rational num = parse_rational(digits);
    Rational den = 1;
    for (std::size_t i = 0; i < frac; ++i) den *= 10;
    Rational r = num / den;
    r.canonicalize();
    return r;
}

Window parse_window(const std::string& s) {
    std::istringstream is(s);
    std::string part;
    std::vector<Rational> v;
    while (std::getline(is, part, ',')) v.push_back(parse_coord(part));
    if (v.size() != 4) throw CLI::ValidationError("--window", "expected remin,remax,immin,immax");
    if (!(v[0] < v[1]) || !(v[2] < v[3]))
        throw CLI::ValidationError("--window", "window must be nonempty");
    return {v[0], v[1], v[2], v[3]};
}

std::pair<int, int> parse_res(const std::string& s) {
    auto x = s.find('x');
    if (x == std::string::npos) throw CLI::ValidationError("--res", "expected WIDTHxHEIGHT");
    int w = std::stoi(s.substr(0, x)), h = std::stoi(s.substr(x + 1));
    if (w < 1 || h < 1) throw CLI::ValidationError("--res", "resolution must be positive");
    return {w, h};
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Preperiodic: return "preperiodic";
        case Verdict::Escaped: return "escaped";
        default: return "budget exhausted";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and certified computations for preperiodic parameters of x^2 + c"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "worker thread cap")->capture_default_str();

    std::string alpha_s = "0", out_path, format, window_s, res_s = "512x512", interval_s, c_s,
                minpoly_s;
    int m = 0, n = 1, max_iter = 100, depth = 1, fekete_n = 0;
    double tol = 1e-12;
    std::string eps_s = "1/1000000000000";
    long budget = 100000;

    auto* render = app.add_subcommand("render", "escape-time raster of the parameter plane");
    render->add_option("--alpha", alpha_s, "exact rational alpha (p/q)");
    render->add_option("--window", window_s, "remin,remax,immin,immax (exact rationals)")
        ->required();
    render->add_option("--res", res_s, "WIDTHxHEIGHT")->capture_default_str();
    render->add_option("--max-iter", max_iter, "iteration budget")->capture_default_str();
    render->add_option("-o,--output", out_path, "output file (default stdout)");
    render->add_option("--format", format, "pgm | csv (default pgm)");

    auto* proots = app.add_subcommand("prep-roots", "certified complex roots of F_{m,n}");
    proots->add_option("--alpha", alpha_s, "exact rational alpha")->required();
    proots->add_option("--m", m, "lower index")->required();
    proots->add_option("--n", n, "upper index")->required();
    proots->add_option("--tol", tol, "residual tolerance")->capture_default_str();
    proots->add_option("-o,--output", out_path, "output file");
    proots->add_option("--format", format, "csv | json (default csv)");

    auto* decide = app.add_subcommand("decide", "exact preperiodicity decision");
    decide->add_option("--alpha", alpha_s, "exact rational alpha")->required();
    decide->add_option("--c", c_s, "exact rational parameter c");
    decide->add_option("--minpoly", minpoly_s,
                       "integer coefficients of a monic minimal polynomial, low degree first, "
                       "comma-separated (algebraic c)");
    decide->add_option("--budget", budget, "iteration budget (rational c)")->capture_default_str();

    auto* cantor = app.add_subcommand("cantor", "interval system of the Cantor construction");
    cantor->add_option("--alpha", alpha_s, "exact rational alpha, |alpha| >= 2")->required();
    cantor->add_option("--depth", depth, "level n")->capture_default_str();
    cantor->add_option("--eps", eps_s, "endpoint enclosure width (exact rational)")
        ->capture_default_str();
    cantor->add_option("-o,--output", out_path, "output file");
    cantor->add_option("--format", format, "json | csv (default json)");

    auto* capacity = app.add_subcommand("capacity", "interval capacity and n-diameters");
    capacity->add_option("--interval", interval_s, "\"a,b\" in the exact endpoint grammar")
        ->required();
    capacity->add_option("--n", fekete_n, "also report d_n and a Fekete estimate for this n");

    auto* dbound = app.add_subcommand("degree-bound", "capacity degree-bound criterion");
    dbound->add_option("--interval", interval_s, "\"a,b\" in the exact endpoint grammar")
        ->required();
    dbound->add_option("-o,--output", out_path, "output file");
    dbound->add_option("--format", format, "table | json (default table)");

    auto* classify = app.add_subcommand("classify", "totally real preperiodic parameters");
    classify->add_option("--alpha", alpha_s, "exact rational alpha in {-1, 0, 1}")->required();
    classify->add_option("-o,--output", out_path, "output file");
    classify->add_option("--format", format, "table | json (default table)");

    app.add_subcommand("verify-paper", "run the full verification suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (render->parsed()) {
            auto [w, h] = parse_res(res_s);
            auto grid = escape_grid(parse_rational(alpha_s), parse_window(window_s), w, h,
                                    max_iter, threads);
            emit(format == "csv" ? to_csv(grid) : to_pgm(grid), out_path);
        } else if (proots->parsed()) {
            auto rs = prep_roots(parse_rational(alpha_s), m, n, tol, threads);
            emit(format == "json" ? to_json(rs) : to_csv(rs), out_path);
        } else if (decide->parsed()) {
            if (!c_s.empty() && !minpoly_s.empty())
                throw CLI::ValidationError("decide", "--c and --minpoly are mutually exclusive");
            if (!c_s.empty()) {
                auto rec = decide_rational(parse_rational(alpha_s), parse_rational(c_s), budget);
                std::cout << "alpha = " << rec.alpha.get_str() << ", c = " << rec.c.get_str()
                          << ": " << verdict_name(rec.verdict) << "\n";
                if (rec.verdict == Verdict::Preperiodic)
                    std::cout << "witness: f^" << rec.n << "(alpha) = f^" << rec.m
                              << "(alpha) exactly\n";
                else if (rec.verdict == Verdict::Escaped)
                    std::cout << "witness: " << rec.witness << " at step " << rec.escape_step
                              << "\n";
                else
                    return 1;
            } else if (!minpoly_s.empty()) {
                std::istringstream is(minpoly_s);
                std::string part;
                std::vector<Integer> coeffs;
                while (std::getline(is, part, ','))
                    coeffs.emplace_back(parse_rational(part).get_num());
                auto verdicts = decide_algebraic(parse_rational(alpha_s), IntPoly(coeffs));
                for (const auto& v : verdicts) {
                    std::cout << v.root.to_string() << ": " << verdict_name(v.verdict);
                    if (v.verdict == Verdict::Preperiodic)
                        std::cout << ", f^" << v.n << "(alpha) = f^" << v.m << "(alpha)";
                    else
                        std::cout << ", " << v.witness;
                    std::cout << "\n";
                }
            } else {
                throw CLI::ValidationError("decide", "one of --c or --minpoly is required");
            }
        } else if (cantor->parsed()) {
            auto lvl = cantor_level(parse_rational(alpha_s), depth, parse_rational(eps_s));
            emit(format == "csv" ? to_csv(lvl) : to_json(lvl), out_path);
        } else if (capacity->parsed()) {
            auto [a, b] = parse_interval(interval_s);
            auto cap = interval_capacity(a, b);
            std::cout << "capacity([" << a.to_string() << ", " << b.to_string()
                      << "]) = " << cap.to_string() << " ~ "
                      << cap.enclosure(128).to_string(12) << "\n";
            if (fekete_n >= 2) {
                auto d = exact_n_diameter(a, b, fekete_n, 192);
                std::cout << "d_" << fekete_n << " = " << d.to_string(15) << " (enclosure width "
                          << d.width().get_d() << ")\n";
                auto fek = fekete_optimize(a.to_double(), b.to_double(), fekete_n);
                std::cout << "fekete estimate = " << fek.d_estimate << " from points";
                for (double p : fek.points) std::cout << " " << p;
                std::cout << "\n";
            }
        } else if (dbound->parsed()) {
            auto [a, b] = parse_interval(interval_s);
            auto rep = degree_bound(a, b);
            emit(format == "json" ? to_json(rep) : to_table(rep), out_path);
            if (!rep.certified) return 1;
        } else if (classify->parsed()) {
            auto res = classify_totally_real_prep(parse_rational(alpha_s));
            emit(format == "json" ? to_json(res) : to_report(res), out_path);
        } else {  // verify-paper
            auto results = run_verification();
            std::cout << format_results(results);
            if (!all_passed(results)) return 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "computation failed: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
