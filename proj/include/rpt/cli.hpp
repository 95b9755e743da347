#ifndef RPT_CLI_HPP
#define RPT_CLI_HPP

// Command-line front end: series, renormalize, table1, solve, quasi-exact.
// run() is the whole program; tools/rpt.cpp only forwards argv to it.
//
// Exit codes: 0 success, 2 validation, 3 engine, 4 optimization failure.
// Defaults can be overridden through RPT_* environment variables (see
// add_common()).

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "errors.hpp"
#include "io.hpp"
#include "numeric.hpp"
#include "numerov.hpp"
#include "potential.hpp"
#include "quasi_exact.hpp"
#include "renormalization.hpp"
#include "series.hpp"
#include "table1.hpp"
#include "version.hpp"

namespace rpt::cli
{

enum ExitCode : int { ok = 0, validation = 2, engine = 3, optimization = 4 };

struct Common {
    std::string output;
    std::string format;
    unsigned precision = 64;
    std::string mode = "float";
};

struct PotentialFlags {
    std::string sextic_lambda;
    std::string potential_file;
};

struct Context {
    std::ostream& out;
    std::ostream& err;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

inline void add_common(CLI::App& sub, Common& c, const std::string& default_format)
{
    c.format = default_format;
    sub.add_option("--output,-o", c.output, "Output file (default: standard output)")->envname("RPT_OUTPUT");
    sub.add_option("--format", c.format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->envname("RPT_FORMAT");
    sub.add_option("--precision", c.precision, "Significant decimal digits in float mode")->envname("RPT_PRECISION");
    sub.add_option("--mode", c.mode, "Arithmetic: rational or float")
        ->check(CLI::IsMember({"rational", "float"}))
        ->envname("RPT_MODE");
}

inline void add_potential(CLI::App& sub, PotentialFlags& p)
{
    sub.add_option("--sextic-lambda", p.sextic_lambda, "V = (x^2 + lambda x^6)/2 with m = omega = hbar = 1");
    sub.add_option("--potential", p.potential_file, "Potential specification file (JSON)");
}

inline PotentialSpec<Rational> load_potential(const PotentialFlags& flags)
{
    const bool sextic = !flags.sextic_lambda.empty();
    const bool file = !flags.potential_file.empty();
    if (sextic == file) {
        throw ValidationError("exactly one of --sextic-lambda and --potential is required");
    }
    if (file) {
        return read_potential_file(flags.potential_file);
    }
    Rational lambda;
    try {
        lambda = parse_rational(flags.sextic_lambda);
    } catch (const ValidationError& e) {
        throw ValidationError(std::string("--sextic-lambda: ") + e.what());
    }
    if (lambda < 0) {
        throw ValidationError("--sextic-lambda must be non-negative");
    }
    return sextic_potential(lambda);
}

inline json potential_inputs(const PotentialFlags& flags, const PotentialSpec<Rational>& p)
{
    json in = potential_to_json(p);
    if (!flags.sextic_lambda.empty()) {
        in["sextic_lambda"] = flags.sextic_lambda;
    } else {
        in["potential_file"] = flags.potential_file;
    }
    return in;
}

inline NumericContext numeric_context(const Common& c)
{
    if (c.precision == 0) {
        throw ValidationError("--precision must be a positive number of digits");
    }
    return c.mode == "rational" ? NumericContext::exact() : NumericContext::floating(c.precision);
}

// Writes the payload and exactly one manifest: next to the output file, or
// on the error stream when the payload goes to standard output.
inline void emit(Context& ctx, const Common& c, const std::string& command, json inputs, const std::string& payload)
{
    std::vector<std::string> outputs;
    if (c.output.empty()) {
        ctx.out << payload;
    } else {
        std::ofstream file(c.output, std::ios::binary);
        if (!file) {
            throw ValidationError("--output: cannot write '" + c.output + "'");
        }
        file << payload;
        outputs.push_back(c.output);
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - ctx.start).count();
    json manifest{{"command", command},
                  {"inputs", std::move(inputs)},
                  {"outputs", outputs},
                  {"versions", json{{"rpt", version}}},
                  {"timing", seconds}};
    if (c.output.empty()) {
        ctx.err << manifest.dump() << '\n';
    } else {
        const std::string path = c.output + ".manifest.json";
        std::ofstream file(path, std::ios::binary);
        if (!file) {
            throw ValidationError("--output: cannot write '" + path + "'");
        }
        file << manifest.dump(2) << '\n';
        outputs.push_back(path);
    }
}

inline void warn(Context& ctx, const std::string& message) { ctx.err << "warning: " << message << '\n'; }

// ---------------------------------------------------------------- series

struct SeriesArgs {
    Common common;
    PotentialFlags potential;
    int n = 0;
    int K = 0;
};

inline int cmd_series(Context& ctx, const SeriesArgs& a)
{
    if (a.K < 1) {
        throw ValidationError("--K must be >= 1");
    }
    if (a.n < 0) {
        throw ValidationError("--n must be >= 0");
    }
    const auto format = parse_series_format(a.common.format);
    const auto potential = load_potential(a.potential);
    NumericContext nctx = numeric_context(a.common);
    if (!nctx.is_exact() && static_cast<unsigned>(a.K) > nctx.precision_digits / 2) {
        warn(ctx, "K = " + std::to_string(a.K) + " exceeds half the working precision (" +
                      std::to_string(nctx.precision_digits) + " digits); high orders may have lost accuracy");
    }

    auto compute = [&](auto tag) {
        using T = typename decltype(tag)::type;
        const auto series = compute_series(convert_potential<T>(potential), a.n, a.K).series;
        return std::pair{format_series(series, format), to_string(partial_sum(series, a.K))};
    };
    std::pair<std::string, std::string> produced;
    try {
        produced = dispatch(nctx, compute);
    } catch (const IrrationalInExactMode& e) {
        warn(ctx, std::string(e.what()) + "; falling back to float mode");
        nctx = NumericContext::floating(a.common.precision);
        produced = dispatch(nctx, compute);
    }

    json inputs = potential_inputs(a.potential, potential);
    inputs["n"] = a.n;
    inputs["K"] = a.K;
    inputs["mode"] = nctx.is_exact() ? "rational" : "float";
    inputs["precision"] = nctx.is_exact() ? 0 : nctx.precision_digits;
    inputs["format"] = a.common.format;
    emit(ctx, a.common, "series", inputs, produced.first);
    (a.common.output.empty() ? ctx.err : ctx.out)
        << "partial sum S_" << a.K << " = " << produced.second << " (hbar = " << potential.hbar.str() << ")\n";
    return ok;
}

// ------------------------------------------------------------ renormalize

struct RenormalizeArgs {
    Common common;
    PotentialFlags potential;
    int n = 0;
    std::optional<int> corrections;
    std::optional<int> order;
    std::string scheme;
    std::string root;
    std::vector<std::string> interval;
    std::optional<int> grid;
    std::string tolerance;
    std::string config_file;
    bool check_numeric = false;
    std::string omega0;
};

inline SchemeConfig scheme_config(const RenormalizeArgs& a)
{
    SchemeConfig cfg;
    if (!a.config_file.empty()) {
        std::ifstream in(a.config_file);
        if (!in) {
            throw ValidationError("--config: cannot open '" + a.config_file + "'");
        }
        std::stringstream buffer;
        buffer << in.rdbuf();
        cfg = parse_scheme_config(buffer.str());
    }
    if (!a.scheme.empty()) {
        cfg.kind = parse_scheme(a.scheme);
    }
    if (!a.root.empty()) {
        cfg.root = parse_root_selection(a.root);
    }
    if (a.corrections) {
        if (*a.corrections < 1) {
            throw ValidationError("--N must be >= 1");
        }
        cfg.corrections = a.corrections;
        cfg.order.reset();
    }
    if (a.order) {
        if (*a.order < 1) {
            throw ValidationError("--order must be >= 1");
        }
        cfg.order = a.order;
    }
    if (!a.interval.empty()) {
        if (a.interval.size() != 2) {
            throw ValidationError("--interval takes two values");
        }
        cfg.interval = std::pair{parse_rational(a.interval[0]), parse_rational(a.interval[1])};
        if (!(cfg.interval->first > 0) || !(cfg.interval->first < cfg.interval->second)) {
            throw ValidationError("--interval must satisfy 0 < a < b");
        }
    }
    if (a.grid) {
        if (*a.grid < 16) {
            throw ValidationError("--grid must be >= 16");
        }
        cfg.grid_points = *a.grid;
    }
    if (!a.tolerance.empty()) {
        cfg.tolerance = parse_rational(a.tolerance);
        if (!(*cfg.tolerance > 0)) {
            throw ValidationError("--tol must be positive");
        }
    }
    return cfg;
}

template <FloatScalar T>
std::string series_table_csv(const EnergySeries<T>& series)
{
    std::string out = "k,E_k,S_k\n";
    const auto sums = partial_sums(series);
    for (int k = 1; k <= series.max_order(); ++k) {
        out += std::to_string(k) + "," + to_string(series[k]) + "," + to_string(sums[static_cast<std::size_t>(k - 1)]) +
               "\n";
    }
    return out;
}

inline int cmd_renormalize(Context& ctx, const RenormalizeArgs& a)
{
    if (a.n < 0) {
        throw ValidationError("--n must be >= 0");
    }
    const auto potential = load_potential(a.potential);
    const SchemeConfig cfg = scheme_config(a);
    Common common = a.common;
    if (common.mode == "rational") {
        warn(ctx, "renormalize differentiates numerically; falling back to float mode");
        common.mode = "float";
    }
    const NumericContext nctx = numeric_context(common);

    json inputs = potential_inputs(a.potential, potential);
    inputs["n"] = a.n;
    inputs["scheme"] = scheme_name(cfg.kind);
    inputs["precision"] = nctx.precision_digits;

    auto run = [&](auto tag) -> std::pair<json, std::string> {
        using T = typename decltype(tag)::type;
        const auto p = convert_potential<T>(potential);
        const int closure = closure_order(p);
        const int order = cfg.order.value_or(1 + closure * cfg.corrections.value_or(1));
        if (static_cast<unsigned>(order) > nctx.precision_digits / 2) {
            warn(ctx, "truncation order " + std::to_string(order) + " exceeds half the working precision (" +
                          std::to_string(nctx.precision_digits) + " digits)");
        }
        json report;
        EnergySeries<T> series;
        std::string csv;
        if (cfg.kind == SchemeKind::ZeroCorrections) {
            const T omega0 = a.omega0.empty() ? p.omega : from_rational<T>(parse_rational(a.omega0));
            const T tol = cfg.tolerance ? from_rational<T>(*cfg.tolerance)
                                        : ipow(T(10), -std::max(static_cast<int>(nctx.precision_digits) - 10, 4));
            const auto expansion = zero_corrections(p, a.n, order, omega0, tol);
            series = renormalized_series(p, a.n, order, expansion);
            json corrections = json::object();
            for (const auto& [k, w] : expansion.corrections) {
                corrections[std::to_string(k)] = to_string(w);
            }
            json sums = json::array();
            for (const auto& s : partial_sums(series)) {
                sums.push_back(to_string(s));
            }
            report = json{{"omega0", to_string(omega0)}, {"omega_corrections", corrections}, {"partial_sums", sums}};
        } else {
            SchemeSpec<T> spec = to_scheme_spec(cfg, p, a.n);
            spec.order = order;
            const auto result = find_omega0(p, a.n, spec);
            series = result.series;
            report = optimization_to_json(result);
            report["interval"] = json::array({to_string(spec.omega0_min), to_string(spec.omega0_max)});
            report["grid"] = spec.grid_points;
            report["tol"] = to_string(spec.tolerance);
        }
        report["order"] = order;
        const T sum = partial_sum(series, order);
        report["S"] = to_string(sum);
        if (a.check_numeric) {
            const auto eig = solve_eigenvalue(convert_potential<double>(p), a.n);
            report["numeric"] = eigen_result_to_json(eig);
            report["relative_difference"] = std::abs(to_double(sum) - eig.energy) / std::abs(eig.energy);
        }
        csv = series_table_csv(series);
        return {report, common.format == "csv" ? csv : report.dump(2) + "\n"};
    };

    const auto [report, payload] = dispatch_float(nctx, run);
    inputs["order"] = report["order"];
    inputs["check_numeric"] = a.check_numeric;
    emit(ctx, common, "renormalize", inputs, payload);
    auto& stream = common.output.empty() ? ctx.err : ctx.out;
    if (report.contains("omega0")) {
        stream << "omega0 = " << report["omega0"].get<std::string>() << '\n';
    }
    stream << "S_" << report["order"].get<int>() << " = " << report["S"].get<std::string>() << '\n';
    if (report.contains("numeric")) {
        const auto flags = stream.flags();
        const auto digits = stream.precision();
        stream << std::setprecision(12) << "E_num = " << report["numeric"]["energy"].get<double>()
               << ", relative difference = " << std::setprecision(3) << report["relative_difference"].get<double>()
               << '\n';
        stream.flags(flags);
        stream.precision(digits);
    }
    return ok;
}

// ----------------------------------------------------------------- table1

struct Table1Args {
    Common common;
    std::vector<int> Ns;
    int grid = 256;
    double tolerance = 1e-10;
};

inline int cmd_table1(Context& ctx, const Table1Args& a)
{
    table1::Options opt;
    if (!a.Ns.empty()) {
        opt.Ns = a.Ns;
    }
    for (int N : opt.Ns) {
        if (N < 1) {
            throw ValidationError("--N values must be >= 1");
        }
    }
    if (a.grid < 16) {
        throw ValidationError("--grid must be >= 16");
    }
    if (!(a.tolerance > 0)) {
        throw ValidationError("--tol must be positive");
    }
    opt.grid_points = a.grid;
    opt.tolerance = a.tolerance;
    Common common = a.common;
    if (common.mode == "rational") {
        warn(ctx, "table1 runs in float mode");
        common.mode = "float";
    }
    const NumericContext nctx = numeric_context(common);

    auto run = [&](auto tag) -> std::string {
        using T = typename decltype(tag)::type;
        const auto cells = table1::run<T>(opt);
        if (common.format != "json") {
            return table1::report(cells, opt);
        }
        json doc = json::array();
        for (const auto& cell : cells) {
            json entries = json::array();
            for (const auto& e : cell.entries) {
                json j{{"N", e.N}, {"order", e.order}};
                if (e.value) {
                    j["S"] = to_string(*e.value);
                    j["omega0"] = to_string(*e.omega0);
                    j["candidates"] = e.candidates;
                } else {
                    j["error"] = e.error;
                }
                entries.push_back(j);
            }
            json c{{"n", cell.column.n}, {"lambda", cell.column.lambda}, {"rows", entries}};
            if (cell.numeric) {
                c["numeric"] = eigen_result_to_json(*cell.numeric);
            } else if (opt.numeric) {
                c["numeric_error"] = cell.numeric_error;
            }
            doc.push_back(c);
        }
        return doc.dump(2) + "\n";
    };
    const std::string payload = dispatch_float(nctx, run);
    json inputs{{"N", opt.Ns}, {"grid", opt.grid_points}, {"tol", opt.tolerance}, {"precision", nctx.precision_digits}};
    emit(ctx, common, "table1", inputs, payload);
    return ok;
}

// ------------------------------------------------------------------ solve

struct SolveArgs {
    Common common;
    PotentialFlags potential;
    int n = 0;
    double tolerance = 1e-11;
    double L = 0;
    double h = 0;
};

inline int cmd_solve(Context& ctx, const SolveArgs& a)
{
    if (a.n < 0) {
        throw ValidationError("--n must be >= 0");
    }
    if (!(a.tolerance > 0)) {
        throw ValidationError("--tol must be positive");
    }
    if (a.L < 0 || a.h < 0) {
        throw ValidationError("--L and --step must be positive");
    }
    const auto potential = load_potential(a.potential);
    const auto p = convert_potential<double>(potential);
    EigenResult r;
    if (a.L > 0) {
        const double h = a.h > 0 ? a.h : a.L / 4096;
        if (!(h < a.L / 100)) {
            throw ValidationError("--step must be below L/100");
        }
        r = solve_eigenvalue(p, a.n, Grid{a.L, h}, a.tolerance);
    } else {
        r = solve_eigenvalue(p, a.n, a.tolerance);
    }
    std::string payload;
    if (a.common.format == "csv") {
        char buf[160];
        std::snprintf(buf, sizeof buf, "energy,nodes,mismatch,L,h\n%.17g,%d,%.17g,%.17g,%.17g\n", r.energy, r.nodes,
                      r.log_derivative_mismatch, r.L, r.h);
        payload = buf;
    } else {
        payload = eigen_result_to_json(r).dump(2) + "\n";
    }
    json inputs = potential_inputs(a.potential, potential);
    inputs["n"] = a.n;
    inputs["tol"] = a.tolerance;
    emit(ctx, a.common, "solve", inputs, payload);
    return ok;
}

// ------------------------------------------------------------ quasi-exact

struct QuasiExactArgs {
    Common common;
    std::string v4;
    std::string v6;
    int K = 6;
};

inline int cmd_quasi_exact(Context& ctx, const QuasiExactArgs& a)
{
    if (a.v4.empty() || a.v6.empty()) {
        throw ValidationError("--v4 and --v6 are required");
    }
    if (a.K < 1 || a.K > 6) {
        throw ValidationError("--K must be between 1 and 6");
    }
    Rational v4;
    Rational v6;
    try {
        v4 = parse_rational(a.v4);
    } catch (const ValidationError& e) {
        throw ValidationError(std::string("--v4: ") + e.what());
    }
    try {
        v6 = parse_rational(a.v6);
    } catch (const ValidationError& e) {
        throw ValidationError(std::string("--v6: ") + e.what());
    }
    if (!(v6 > 0)) {
        throw ValidationError("--v6 must be positive");
    }
    NumericContext nctx = numeric_context(a.common);

    auto run = [&](auto tag) -> json {
        using T = typename decltype(tag)::type;
        const auto cfg = quasi_exact_config<T>(from_rational<T>(v4), from_rational<T>(v6));
        const auto engine = compute_series(cfg.potential, 0, a.K).series;
        const auto doubled = compute_series(coupling_doubled_potential(cfg.potential), 0, a.K).series;
        const auto closed = quasi_exact_corrections(cfg.v2, cfg.v4, cfg.v6, a.K);
        const auto eig = solve_eigenvalue(convert_potential<double>(cfg.potential), 0);
        json e = json::array();
        json d = json::array();
        json c = json::array();
        for (int k = 1; k <= a.K; ++k) {
            e.push_back(to_string(engine[k]));
            d.push_back(to_string(doubled[k]));
            c.push_back(to_string(closed[static_cast<std::size_t>(k - 1)]));
        }
        const double diff = std::abs(eig.energy - to_double(cfg.energy));
        return json{{"V2", to_string(cfg.v2)},
                    {"V4", to_string(cfg.v4)},
                    {"V6", to_string(cfg.v6)},
                    {"predicted_energy", to_string(cfg.energy)},
                    {"wavefunction", json{{"gaussian", to_string(cfg.gaussian_coefficient)},
                                          {"quartic", to_string(cfg.quartic_coefficient)}}},
                    {"engine_E", e},
                    {"closed_form_E", c},
                    {"engine_E_doubled_couplings", d},
                    {"numeric", eigen_result_to_json(eig)},
                    {"numeric_difference", diff},
                    {"agreement", diff <= 1e-8}};
    };
    json report;
    try {
        report = dispatch(nctx, run);
    } catch (const IrrationalInExactMode& e) {
        warn(ctx, std::string(e.what()) + "; falling back to float mode");
        nctx = NumericContext::floating(a.common.precision);
        report = dispatch(nctx, run);
    }

    std::string payload;
    if (a.common.format == "csv") {
        payload = "k,engine_E_k,closed_form_E_k,engine_E_k_doubled_couplings\n";
        for (int k = 1; k <= a.K; ++k) {
            const auto i = static_cast<std::size_t>(k - 1);
            payload += std::to_string(k) + "," + report["engine_E"][i].get<std::string>() + "," +
                       report["closed_form_E"][i].get<std::string>() + "," +
                       report["engine_E_doubled_couplings"][i].get<std::string>() + "\n";
        }
    } else {
        payload = report.dump(2) + "\n";
    }
    json inputs{{"v4", a.v4}, {"v6", a.v6}, {"K", a.K}, {"mode", nctx.is_exact() ? "rational" : "float"}};
    emit(ctx, a.common, "quasi-exact", inputs, payload);
    auto& stream = a.common.output.empty() ? ctx.err : ctx.out;
    stream << "V2 = " << report["V2"].get<std::string>() << ", predicted E = "
           << report["predicted_energy"].get<std::string>() << ", numeric E = " << std::fixed << std::setprecision(9)
           << report["numeric"]["energy"].get<double>() << std::defaultfloat
           << (report["agreement"].get<bool>() ? " (agree to 1e-8)" : " (DISAGREE at 1e-8)") << '\n';
    return ok;
}

// -------------------------------------------------------------------- run

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Renormalized perturbation series for anharmonic oscillators", "rpt"};
    app.require_subcommand(1);
    app.set_version_flag("--version", version);

    SeriesArgs series;
    auto* s = app.add_subcommand("series", "Compute E_1..E_K");
    add_common(*s, series.common, "csv");
    add_potential(*s, series.potential);
    s->add_option("--n", series.n, "Quantum number (node count)");
    s->add_option("--K", series.K, "Highest order")->required();

    RenormalizeArgs renorm;
    auto* r = app.add_subcommand("renormalize", "Fix the trial frequency and sum the renormalized series");
    add_common(*r, renorm.common, "json");
    add_potential(*r, renorm.potential);
    r->add_option("--n", renorm.n, "Quantum number");
    r->add_option("--N", renorm.corrections, "Corrections beyond the leading term (order 1 + s N)");
    r->add_option("--order", renorm.order, "Truncation order K (overrides --N)");
    r->add_option("--scheme", renorm.scheme,
                  "minimal-difference | minimal-sensitivity-last | minimal-sensitivity-sum | zero-corrections")
        ->envname("RPT_SCHEME");
    r->add_option("--root", renorm.root, "flattest | smallest | all");
    r->add_option("--interval", renorm.interval, "Search interval a b for omega0")->expected(2);
    r->add_option("--grid", renorm.grid, "Scan grid points")->envname("RPT_GRID");
    r->add_option("--tol", renorm.tolerance, "Root tolerance");
    r->add_option("--config", renorm.config_file, "Scheme configuration file (JSON)");
    r->add_flag("--check-numeric", renorm.check_numeric, "Compare against the shooting eigenvalue");
    r->add_option("--omega0", renorm.omega0, "Trial frequency for zero-corrections");

    Table1Args table;
    auto* t = app.add_subcommand("table1", "Reproduce the sextic partial-sum table");
    add_common(*t, table.common, "csv");
    table.common.precision = 15;
    t->add_option("--N", table.Ns, "Rows (comma separated)")->delimiter(',');
    t->add_option("--grid", table.grid, "Scan grid points")->envname("RPT_GRID");
    t->add_option("--tol", table.tolerance, "Root tolerance");

    SolveArgs solve;
    auto* v = app.add_subcommand("solve", "Shooting eigenvalue");
    add_common(*v, solve.common, "json");
    add_potential(*v, solve.potential);
    v->add_option("--n", solve.n, "Node count");
    v->add_option("--tol", solve.tolerance, "Energy tolerance");
    v->add_option("--L", solve.L, "Domain half-width (default: automatic)");
    v->add_option("--step", solve.h, "Grid step h (default: L/4096)");

    QuasiExactArgs quasi;
    auto* q = app.add_subcommand("quasi-exact", "Quasi-exactly solvable sextic check");
    add_common(*q, quasi.common, "json");
    q->add_option("--v4", quasi.v4, "V4")->required();
    q->add_option("--v6", quasi.v6, "V6")->required();
    q->add_option("--K", quasi.K, "Orders to compare (<= 6)");

    Context ctx{out, err};
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return ok;
        }
        if (dynamic_cast<const CLI::CallForVersion*>(&e) != nullptr) {
            out << version << '\n';
            return ok;
        }
        err << "error: " << e.what() << '\n';
        return validation;
    }

    try {
        if (s->parsed()) {
            return cmd_series(ctx, series);
        }
        if (r->parsed()) {
            return cmd_renormalize(ctx, renorm);
        }
        if (t->parsed()) {
            return cmd_table1(ctx, table);
        }
        if (v->parsed()) {
            return cmd_solve(ctx, solve);
        }
        if (q->parsed()) {
            return cmd_quasi_exact(ctx, quasi);
        }
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return validation;
    } catch (const OptimizationError& e) {
        err << "error: " << e.what() << '\n';
        return optimization;
    } catch (const EngineError& e) {
        err << "error: " << e.what() << '\n';
        return engine;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return engine;
    }
    return validation;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr)
{
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        args.emplace_back(argv[i]);
    }
    return run(args, out, err);
}

} // namespace rpt::cli

#endif
