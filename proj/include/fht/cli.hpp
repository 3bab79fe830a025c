#pragma once

// Command-line front end.  Subcommands: compare, exact, asymptote,
// correlator, sweep, barnes, reps.  JSON results are emitted one object per
// line; CSV streams start with the versioned header line "# fh-toeplitz v1"
// and a column comment.  Output is deterministic for a fixed argument list.

#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fht/fhtoeplitz.hpp"

namespace fht::cli {

using nlohmann::json;

inline json to_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

inline std::string csv_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct SymbolConfig {
    std::string kind = "jump";  // identity | jump | dm | dd | expcos
    double alpha = 0.0;
    double xr = pi;
    std::optional<double> xr_frac;  // x/L convenience; overrides --xr
    double t = 0.5;                 // strength of the e^{t cos x} test symbol

    double resolved_xr() const { return xr_frac ? two_pi * *xr_frac : xr; }

    FHSymbol build() const {
        const std::string k = kind == "custom" ? "expcos" : kind;
        if (k == "identity") return identity_symbol();
        if (k == "jump") return jump_symbol(alpha, resolved_xr());
        if (k == "dm") return density_matrix_symbol(alpha, resolved_xr());
        if (k == "dd") return density_density_symbol(resolved_xr());
        if (k == "expcos") return exp_cos_symbol(t);
        throw usage_error("unknown symbol kind: " + kind);
    }
};

inline void add_symbol_options(CLI::App* cmd, SymbolConfig& sc) {
    cmd->add_option("--symbol", sc.kind, "identity|jump|dm|dd|expcos (custom = expcos)");
    cmd->add_option("--alpha", sc.alpha, "jump phase alpha (radians)");
    cmd->add_option("--xr", sc.xr, "singularity position x_r in (0, 2pi)");
    cmd->add_option("--xr-frac", sc.xr_frac, "x/L fraction; sets x_r = 2pi x/L");
    cmd->add_option("--t", sc.t, "strength t of the e^{t cos x} smooth symbol");
}

inline json representation_json(const Representation& rep) {
    json betas = json::array();
    for (const auto& s : rep.singularities) betas.push_back(to_json(s.beta));
    json j{{"betas", betas}, {"Q", to_json(rep.exponent_q)}};
    j["shifts"] = rep.shifts;
    return j;
}

// ---- subcommand bodies ----------------------------------------------------

inline void run_barnes(Complex z, std::ostream& out) {
    const json j{{"z", to_json(z)}, {"G", to_json(barnes_g(z))}, {"logG", to_json(log_barnes_g(z))}};
    out << j.dump() << '\n';
}

inline void run_reps(const SymbolConfig& sc, int bound, std::ostream& out) {
    const FHSymbol symbol = sc.build();
    const auto reps = enumerate_representations(symbol, bound);
    const auto minimal = minimal_representations(reps);
    auto is_minimal = [&](const Representation& r) {
        for (const auto& m : minimal)
            if (m.shifts == r.shifts) return true;
        return false;
    };
    json arr = json::array();
    for (const auto& r : reps) {
        json j = representation_json(r);
        j["minimal"] = is_minimal(r);
        arr.push_back(j);
    }
    out << arr.dump() << '\n';
}

inline void run_exact(const SymbolConfig& sc, int n, std::size_t grid, std::ostream& out) {
    const DeterminantResult res = toeplitz_determinant_with_error(sc.build(), n, grid);
    const json j{{"N", n},
                 {"det", to_json(res.det)},
                 {"log_modulus", res.log_det.log_modulus},
                 {"quad_err", res.quad_err}};
    out << j.dump() << '\n';
}

inline void run_asymptote(const SymbolConfig& sc, int n, int bound, std::ostream& out) {
    const FHSymbol symbol = sc.build();
    const AsymptoticExpansion ex = build_expansion(symbol, bound);
    json reps = json::array();
    for (const auto& t : ex.terms) {
        json r = representation_json(t.rep);
        r["E"] = to_json(t.e);
        reps.push_back(r);
    }
    const json j{{"l0", to_json(ex.l0)},
                 {"representations", reps},
                 {"N", n},
                 {"D", to_json(ex.evaluate(n))}};
    out << j.dump() << '\n';
}

inline void run_compare(const SymbolConfig& sc, const std::vector<int>& ns, std::size_t grid,
                        int bound, std::ostream& out) {
    const FHSymbol symbol = sc.build();
    const AsymptoticExpansion ex = build_expansion(symbol, bound);
    out << "# fh-toeplitz v1\n";
    out << "# compare: N,exact_re,exact_im,asym_re,asym_im,rel_err,quad_err\n";
    for (int n : ns) {
        const DeterminantResult res = toeplitz_determinant_with_error(symbol, n, grid);
        const Complex asym = ex.evaluate(n);
        const double scale = std::abs(res.det);
        const double rel = scale > 0 ? std::abs(res.det - asym) / scale : std::abs(res.det - asym);
        out << n << ',' << csv_num(res.det.real()) << ',' << csv_num(res.det.imag()) << ','
            << csv_num(asym.real()) << ',' << csv_num(asym.imag()) << ',' << csv_num(rel) << ','
            << csv_num(res.quad_err) << '\n';
    }
}

struct CorrelatorValues {
    Complex exact;
    Complex asym;
    bool have_exact = false;
    bool have_asym = false;
};

inline CorrelatorValues correlator_values(const std::string& kind, const GasParameters& p,
                                          std::size_t grid, bool want_exact, bool want_asym) {
    CorrelatorValues v;
    if (kind == "galpha") {
        if (want_exact) v.exact = g_alpha_exact(p, grid);
        // at b = 1/2 the asymptote is the free-fermion kernel itself
        if (want_asym) v.asym = p.degenerate() ? free_fermion_green(p) : g_alpha_asymptotic(p);
    } else if (kind == "green") {
        GasParameters q(p.particles, p.length, p.separation, pi);
        if (want_exact) v.exact = g_alpha_exact(q, grid);
        if (want_asym) v.asym = free_fermion_green(q);
    } else if (kind == "counting") {
        if (want_exact) v.exact = exp_counting_exact(p, grid);
        if (want_asym) v.asym = exp_counting_asymptotic(p);
    } else if (kind == "dd") {
        const DensityDensity dd = density_density(p, grid);
        if (want_exact) v.exact = Complex(dd.exact);
        if (want_asym) v.asym = Complex(dd.leading);
    } else {
        throw usage_error("unknown correlator kind: " + kind);
    }
    v.have_exact = want_exact;
    v.have_asym = want_asym;
    return v;
}

inline void run_correlator(const std::string& kind, const GasParameters& p, std::size_t grid,
                           bool want_exact, bool want_asym, std::ostream& out) {
    json j{{"kind", kind},
           {"m", p.particles},
           {"l", p.length},
           {"x", p.separation},
           {"alpha", p.alpha}};
    if (kind == "dd") {
        const DensityDensity dd = density_density(p, grid);
        j["exact"] = dd.exact;
        j["det_identity"] = dd.det_identity;
        j["leading"] = dd.leading;
    } else {
        const CorrelatorValues v = correlator_values(kind, p, grid, want_exact, want_asym);
        if (v.have_exact) j["exact"] = to_json(v.exact);
        if (v.have_asym) j["asym"] = to_json(v.asym);
        if (v.have_exact && v.have_asym) j["rel_err"] = rel_diff(v.exact, v.asym);
    }
    out << j.dump() << '\n';
}

inline void run_sweep(const std::string& kind, const std::vector<int>& ms,
                      const std::vector<double>& xs, const std::vector<double>& alphas, double l,
                      std::size_t grid, std::ostream& out) {
    out << "# fh-toeplitz v1\n";
    out << "# sweep: M,x,alpha,exact_re,exact_im,asym_re,asym_im,rel_err\n";
    for (int m : ms)
        for (double x : xs)
            for (double a : alphas) {
                const GasParameters p(m, l, x, a);
                const CorrelatorValues v = correlator_values(kind, p, grid, true, true);
                out << m << ',' << csv_num(x) << ',' << csv_num(a) << ','
                    << csv_num(v.exact.real()) << ',' << csv_num(v.exact.imag()) << ','
                    << csv_num(v.asym.real()) << ',' << csv_num(v.asym.imag()) << ','
                    << csv_num(rel_diff(v.exact, v.asym)) << '\n';
            }
}

// ---- argument plumbing ------------------------------------------------------

inline Complex parse_complex(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) return Complex(std::stod(s), 0.0);
    return Complex(std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1)));
}

template <typename T>
std::vector<T> parse_list(const std::string& s) {
    std::vector<T> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        if constexpr (std::is_same_v<T, int>) out.push_back(std::stoi(item));
        else out.push_back(std::stod(item));
    }
    if (out.empty()) throw usage_error("empty list argument");
    return out;
}

// Returns 0 on success, 1 on numerical failure (JSON error object emitted),
// 2 on usage errors.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Toeplitz determinants of piecewise-singular symbols: exact finite-N "
                 "evaluation vs generalized Fisher-Hartwig asymptotics"};
    app.require_subcommand(1);
    app.fallthrough();
    long seed = 0;
    app.add_option("--seed", seed, "reserved; the pipeline is deterministic");

    SymbolConfig sc;
    std::string z_arg = "1,0";
    int bound = 2;
    int n = 8;
    std::string n_list = "8";
    std::size_t grid = 0;
    std::string kind = "counting";
    int m = 10;
    double l = 1.0;
    double x = 0.3;
    double alpha_corr = 0.0;
    std::string m_list = "10";
    std::string x_list = "0.3";
    std::string alpha_list = "0";
    bool only_exact = false, only_asym = false, both = false;
    std::string out_path;
    app.add_option("--out", out_path, "write output to a file instead of stdout");

    CLI::App* c_barnes = app.add_subcommand("barnes", "Barnes G at a complex point");
    c_barnes->add_option("--z", z_arg, "argument as re,im")->required();

    CLI::App* c_reps = app.add_subcommand("reps", "enumerate symbol representations");
    add_symbol_options(c_reps, sc);
    c_reps->add_option("--bound", bound, "max |integer shift| per point");

    CLI::App* c_exact = app.add_subcommand("exact", "exact Toeplitz determinant");
    add_symbol_options(c_exact, sc);
    c_exact->add_option("--n", n, "matrix size N")->required();
    c_exact->add_option("--grid", grid, "quadrature grid (power of two >= 8N; 0 = auto)");

    CLI::App* c_asym = app.add_subcommand("asymptote", "determinant asymptote at N");
    add_symbol_options(c_asym, sc);
    c_asym->add_option("--n", n, "evaluation size N")->required();
    c_asym->add_option("--bound", bound, "representation search bound");

    CLI::App* c_compare = app.add_subcommand("compare", "exact vs asymptote over an N sweep (CSV)");
    add_symbol_options(c_compare, sc);
    c_compare->add_option("--n", n_list, "comma list of N values")->required();
    c_compare->add_option("--grid", grid, "quadrature grid (0 = auto)");
    c_compare->add_option("--bound", bound, "representation search bound");

    CLI::App* c_corr = app.add_subcommand("correlator", "gas correlators, exact and/or asymptotic");
    c_corr->add_option("--kind", kind, "galpha|green|counting|dd")->required();
    c_corr->add_option("--m", m, "particle count M")->required();
    c_corr->add_option("--l", l, "system length L");
    c_corr->add_option("--x", x, "separation x in (0, L)")->required();
    c_corr->add_option("--alpha", alpha_corr, "counting phase alpha");
    c_corr->add_option("--grid", grid, "quadrature grid (0 = auto)");
    c_corr->add_flag("--exact", only_exact, "exact determinant value only");
    c_corr->add_flag("--asym", only_asym, "asymptotic value only");
    c_corr->add_flag("--both", both, "both values plus relative error (default)");

    CLI::App* c_sweep = app.add_subcommand("sweep", "correlator sweep over M/x/alpha lists (CSV)");
    c_sweep->add_option("--kind", kind, "galpha|green|counting|dd")->required();
    c_sweep->add_option("--m", m_list, "comma list of M values")->required();
    c_sweep->add_option("--l", l, "system length L");
    c_sweep->add_option("--x", x_list, "comma list of separations")->required();
    c_sweep->add_option("--alpha", alpha_list, "comma list of alpha values");
    c_sweep->add_option("--grid", grid, "quadrature grid (0 = auto)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            err << "usage error: cannot open output path " << out_path << '\n';
            return 2;
        }
        sink = &file;
    }

    try {
        if (c_barnes->parsed()) run_barnes(parse_complex(z_arg), *sink);
        else if (c_reps->parsed()) run_reps(sc, bound, *sink);
        else if (c_exact->parsed()) run_exact(sc, n, grid, *sink);
        else if (c_asym->parsed()) run_asymptote(sc, n, bound, *sink);
        else if (c_compare->parsed()) run_compare(sc, parse_list<int>(n_list), grid, bound, *sink);
        else if (c_corr->parsed()) {
            const bool w_exact = only_exact || both || (!only_exact && !only_asym);
            const bool w_asym = only_asym || both || (!only_exact && !only_asym);
            run_correlator(kind, GasParameters(m, l, x, alpha_corr), grid, w_exact, w_asym, *sink);
        } else if (c_sweep->parsed()) {
            run_sweep(kind, parse_list<int>(m_list), parse_list<double>(x_list),
                      parse_list<double>(alpha_list), l, grid, *sink);
        }
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        *sink << json{{"error", e.what()}}.dump() << '\n';
        return 1;
    }
    return 0;
}

} // namespace fht::cli
