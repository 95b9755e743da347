// Acceptance harness: one PASS/FAIL line per criterion.
//
//   acceptance                 run every criterion
//   acceptance --criterion N   run criterion N only

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <future>
#include <random>
#include <string>
#include <vector>

#include <rpt/rpt.hpp>

using namespace rpt;
using Q = Rational;

namespace
{

struct Verdict {
    bool pass = true;
    std::string detail;
    std::vector<std::string> notes;
};

std::string fmt(const char* format, double value)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, format, value);
    return buf;
}

template <class T>
double relative(const T& computed, const T& reference)
{
    return to_double(abs_of(T(computed - reference))) / to_double(abs_of(reference));
}

// ---- 1: unrenormalized sextic series in exact arithmetic

std::array<Q, 4> sextic_polynomials(int n, const Q& l)
{
    const Q x(n);
    const Q odd = 1 + 2 * x;
    return {x + Q(1, 2), Q(5, 16) * l * odd * (3 + 2 * x + 2 * x * x),
            -Q(1, 256) * l * l * odd * (3495 + 4538 * x + 5324 * x * x + 1572 * ipow(x, 3) + 786 * ipow(x, 4)),
            Q(5, 2048) * ipow(l, 3) * odd *
                (247935 + 444014 * x + 600050 * x * x + 323868 * ipow(x, 3) + 191424 * ipow(x, 4) +
                 35388 * ipow(x, 5) + 11796 * ipow(x, 6))};
}

Verdict criterion1()
{
    Verdict v;
    int compared = 0;
    for (const Q& lambda : {Q(1), Q(1, 2)}) {
        for (int n : {0, 1, 2, 3, 5}) {
            const auto e = compute_series(sextic_potential(lambda), n, 7).series;
            const auto ref = sextic_polynomials(n, lambda);
            for (int j = 0; j < 4; ++j) {
                ++compared;
                if (e[2 * j + 1] != ref[static_cast<std::size_t>(j)]) {
                    v.pass = false;
                    v.notes.push_back("n=" + std::to_string(n) + " lambda=" + lambda.str() + " E_" +
                                      std::to_string(2 * j + 1) + " = " + e[2 * j + 1].str() + ", expected " +
                                      ref[static_cast<std::size_t>(j)].str());
                }
            }
        }
    }
    v.detail = std::to_string(compared) + " exact comparisons";
    return v;
}

// ---- 2: renormalized sextic series against the closed form, 64 digits

Verdict criterion2()
{
    PrecisionScope scope(64);
    Verdict v;
    double worst = 0;
    const std::vector<Real> omegas{Real(8) / 10, Real(1), Real(3) / 2, Real(3)};
    const std::vector<Real> lambdas{Real(1) / 100, Real(1), Real(10)};
    for (const Real& omega0 : omegas) {
        for (const Real& lambda : lambdas) {
            for (int n : {0, 1, 5}) {
                const auto p = sextic_potential(lambda);
                const auto e = renormalized_series(p, n, 7, one_parameter_expansion(p, omega0, 2));
                const auto ref = sextic_closed_form(n, lambda, omega0);
                for (int j = 0; j < 4; ++j) {
                    worst = std::max(worst, relative(e[2 * j + 1], ref[static_cast<std::size_t>(j)]));
                }
            }
        }
    }
    v.pass = worst <= 1e-30;
    v.detail = "36 (n, lambda, omega0) points, max relative difference " + fmt("%.2e", worst) + " (limit 1e-30)";
    return v;
}

// ---- 3: shooting eigenvalues against the printed reference column

Verdict criterion3()
{
    Verdict v;
    int matched = 0;
    for (std::size_t c = 0; c < table1::columns.size(); ++c) {
        const auto& col = table1::columns[c];
        const auto r = solve_eigenvalue(table1::column_potential<double>(col), col.n);
        const std::string printed = table1::printed_numeric[c];
        const bool ok = table1::matches_printed(r.energy, printed);
        matched += ok ? 1 : 0;
        v.notes.push_back(std::string(ok ? "match   " : "differs ") + "n=" + std::to_string(col.n) + " lambda=" +
                          col.lambda + " printed " + printed + " computed " +
                          table1::round_to(r.energy, table1::decimals_of(printed)));
    }
    v.pass = matched == 6;
    v.detail = std::to_string(matched) + " of 6 printed values reproduced";
    return v;
}

// ---- 4: converged partial sums at N = 50

Verdict criterion4()
{
    Verdict v;
    table1::Options opt;
    opt.Ns = {50};
    opt.grid_points = 256;
    const auto cells = table1::run<double>(opt);
    int passed = 0;
    for (const auto& cell : cells) {
        const bool weak = std::string(cell.column.lambda) == "0.01";
        const double limit = weak ? 1e-7 : 1e-4;
        const auto& e = cell.entries.front();
        std::string line = "n=" + std::to_string(cell.column.n) + " lambda=" + cell.column.lambda + ": ";
        if (!e.value || !cell.numeric) {
            v.notes.push_back(line + "error: " + (e.value ? cell.numeric_error : e.error));
            continue;
        }
        const double rel = std::abs(*e.value - cell.numeric->energy) / cell.numeric->energy;
        const bool ok = rel <= limit;
        passed += ok ? 1 : 0;
        v.notes.push_back(std::string(ok ? "pass " : "FAIL ") + line + "S_101 = " + fmt("%.10f", *e.value) +
                          " at omega0 = " + fmt("%.4f", *e.omega0) + ", E_num = " + fmt("%.10f", cell.numeric->energy) +
                          ", relative " + fmt("%.2e", rel) + " (limit " + fmt("%.0e", limit) + ")");
    }
    v.pass = passed == 6;
    v.detail = std::to_string(passed) + " of 6 cells within tolerance (minimal-sensitivity-sum, flattest root, K = 101)";
    return v;
}

// ---- 5: quasi-exactly solvable sextic

Verdict criterion5()
{
    PrecisionScope scope(64);
    Verdict v;
    bool energies = true;
    double worst_literal = 0;
    double worst_doubled = 0;
    for (auto [v4, v6] : {std::pair{6, 1}, std::pair{16, 4}}) {
        const auto cfg = quasi_exact_config(Real(v4), Real(v6));
        const double numeric = solve_eigenvalue(convert_potential<double>(cfg.potential), 0).energy;
        const double diff = std::abs(numeric - to_double(cfg.energy));
        energies = energies && diff <= 1e-8;
        v.notes.push_back("V4=" + std::to_string(v4) + " V6=" + std::to_string(v6) + ": predicted E = " +
                          to_string(cfg.energy) + ", numeric " + fmt("%.10f", numeric) + ", |diff| " +
                          fmt("%.1e", diff));

        const auto closed = quasi_exact_corrections(cfg.v2, cfg.v4, cfg.v6, 6);
        const auto engine = compute_series(cfg.potential, 0, 6).series;
        const auto doubled = compute_series(coupling_doubled_potential(cfg.potential), 0, 6).series;
        for (int k = 1; k <= 6; ++k) {
            const auto& ref = closed[static_cast<std::size_t>(k - 1)];
            worst_literal = std::max(worst_literal, relative(engine[k], ref));
            worst_doubled = std::max(worst_doubled, relative(doubled[k], ref));
        }
        const Real textbook = 3 * cfg.v4 / (4 * cfg.v2);
        v.notes.push_back("  E_2: engine " + to_string(engine[2]).substr(0, 20) + ", printed form " +
                          to_string(closed[1]).substr(0, 20) + ", 3 V4/(4 V2) = " + to_string(textbook).substr(0, 20));
    }
    const bool orders = worst_literal <= 1e-25;
    v.pass = energies && orders;
    v.detail = std::string("eigenvalues ") + (energies ? "agree to 1e-8" : "DISAGREE") +
               "; E_1..E_6 vs printed forms max relative " + fmt("%.2e", worst_literal) + " (limit 1e-25)";
    v.notes.push_back("with anharmonic couplings doubled the printed forms are matched to " +
                      fmt("%.2e", worst_doubled));
    return v;
}

// ---- 6: second-order coefficient for cubic plus quartic terms

Verdict criterion6()
{
    PrecisionScope scope(64);
    Verdict v;
    double worst = 0;
    for (auto [f1, f2] : {std::pair{Q(1, 10), Q(1, 20)}, std::pair{Q(3, 10), Q(0)}}) {
        PotentialSpec<Real> p;
        if (f1 != 0) {
            p.couplings[1] = from_rational<Real>(f1);
        }
        if (f2 != 0) {
            p.couplings[2] = from_rational<Real>(f2);
        }
        for (int n : {0, 1, 2}) {
            const Real x(n);
            const Real a = from_rational<Real>(f1);
            const Real b = from_rational<Real>(f2);
            // m = omega = 1
            const Real expected = -Real(15) / 4 * a * a * (x * x + x + Real(11) / 30) + Real(3) / 2 * b * (x * x + x + Real(1) / 2);
            worst = std::max(worst, relative(compute_series(p, n, 2).series[2], expected));
        }
    }
    v.pass = worst <= 1e-30;
    v.detail = "6 cases, max relative difference " + fmt("%.2e", worst) + " (limit 1e-30)";
    return v;
}

// ---- 7: property suites

Verdict criterion7()
{
    Verdict v;
    auto check = [&v](bool ok, const std::string& what) {
        v.notes.push_back(std::string(ok ? "pass " : "FAIL ") + what);
        v.pass = v.pass && ok;
    };

    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> pos(1, 9);
    std::uniform_int_distribution<int> index(1, 6);
    auto random_potential = [&] {
        PotentialSpec<Q> p;
        p.mass = Q(pos(rng), pos(rng));
        p.omega = Q(pos(rng), pos(rng));
        for (int j = 0; j < 3; ++j) {
            const Q f(num(rng), pos(rng));
            if (f != 0) {
                p.couplings[index(rng)] = f;
            }
        }
        return p;
    };

    bool quantization = true;
    for (int trial = 0; trial < 20; ++trial) {
        const auto r = compute_series(random_potential(), trial % 4, 6);
        for (int k = 1; k <= 6; ++k) {
            quantization = quantization && r.table.at(k, 2 * k - 2) == (k == 1 ? Q(trial % 4) : Q(0));
        }
    }
    check(quantization, "quantization entries C^k_{2k-2} = n delta_{k1} on 20 random potentials");

    {
        PrecisionScope scope(60);
        const auto p = sextic_potential(Real(1) / 10);
        const auto r = compute_series(p, 2, 4, static_cast<const OmegaExpansion<Real>*>(nullptr), 200);
        const Real x = Real(7) / 10;
        const Real coarse = riccati_residual(p, r.table, r.series, x, Real(1) / 100);
        const Real fine = riccati_residual(p, r.table, r.series, x, Real(1) / 200);
        const double ratio = to_double(Real(coarse / fine));
        check(std::abs(ratio / 32 - 1) <= 0.1,
              "Riccati residual ratio " + fmt("%.3f", ratio) + " per hbar halving (expected 32 within 10%)");
    }

    bool harmonic = true;
    for (int n : {0, 1, 2, 5, 10}) {
        PotentialSpec<Q> p;
        p.mass = Q(pos(rng), pos(rng));
        p.omega = Q(pos(rng), pos(rng));
        const auto e = compute_series(p, n, 10).series;
        harmonic = harmonic && e[1] == p.omega * (Q(n) + Q(1, 2));
        for (int k = 2; k <= 10; ++k) {
            harmonic = harmonic && e[k] == 0;
        }
    }
    check(harmonic, "harmonic series exact at first order for n in {0, 1, 2, 5, 10}");

    bool parity = true;
    for (int n : {0, 1, 4}) {
        const auto e = compute_series(sextic_potential(Q(pos(rng), pos(rng))), n, 12).series;
        for (int k = 2; k <= 12; k += 2) {
            parity = parity && e[k] == 0;
        }
    }
    check(parity, "sextic even orders vanish through K = 12");

    double backend = 0;
    {
        PrecisionScope scope(64);
        for (int trial = 0; trial < 6; ++trial) {
            const auto p = random_potential();
            const auto exact = compute_series(p, trial % 3, 10).series;
            const auto approx = compute_series(convert_potential<Real>(p), trial % 3, 10).series;
            for (int k = 1; k <= 10; ++k) {
                if (exact[k] != 0) {
                    backend = std::max(backend, relative(approx[k], from_rational<Real>(exact[k])));
                }
            }
        }
    }
    check(backend <= 1e-55, "rational and 64-digit float agree to " + fmt("%.1e", backend));

    {
        const auto p = sextic_potential(1.0);
        auto solve = [&](double h) {
            ShootingConfig cfg;
            cfg.L = 3;
            cfg.h = h;
            cfg.target_nodes = 1;
            cfg.energy_lo = 0;
            cfg.energy_hi = 20;
            cfg.tolerance = 1e-14;
            cfg.refine_grid = false;
            return solve_eigenvalue(p, cfg).energy;
        };
        const double reference = solve(0.025 / 32);
        const double e1 = std::abs(solve(0.025) - reference);
        const double e2 = std::abs(solve(0.0125) - reference);
        const double e3 = std::abs(solve(0.00625) - reference);
        const double o1 = std::log2(e1 / e2);
        const double o2 = std::log2(e2 / e3);
        check(std::abs(o1 - 4) <= 0.3 && std::abs(o2 - 4) <= 0.3,
              "shooting convergence orders " + fmt("%.2f", o1) + ", " + fmt("%.2f", o2) + " over h, h/2, h/4");
    }
    v.detail = "quantization, Riccati scaling, harmonic, parity, backends, step order";
    return v;
}

struct Criterion {
    const char* title;
    double limit_seconds; // 0: no runtime limit
    std::function<Verdict()> run;
};

const std::vector<Criterion>& criteria()
{
    static const std::vector<Criterion> all{
        {"closed-form sextic series, exact arithmetic", 1, criterion1},
        {"renormalized sextic closed forms, 64 digits", 5, criterion2},
        {"shooting eigenvalues, printed reference column", 30, criterion3},
        {"converged partial sums at N = 50", 120, criterion4},
        {"quasi-exactly solvable sextic", 10, criterion5},
        {"second-order coefficient, cubic plus quartic", 0, criterion6},
        {"property suites", 0, criterion7},
    };
    return all;
}

bool report(int index)
{
    const auto& c = criteria()[static_cast<std::size_t>(index - 1)];
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
        v = c.run();
    } catch (const std::exception& e) {
        v.pass = false;
        v.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_seconds <= 0 || seconds < c.limit_seconds;
    const bool pass = v.pass && in_time;
    std::string timing = fmt("%.2f s", seconds);
    if (c.limit_seconds > 0) {
        timing += " (limit " + fmt("%.0f", c.limit_seconds) + " s)";
    }
    std::printf("criterion %d: %s  %s: %s; %s\n", index, pass ? "PASS" : "FAIL", c.title, v.detail.c_str(),
                timing.c_str());
    for (const auto& note : v.notes) {
        std::printf("    %s\n", note.c_str());
    }
    std::fflush(stdout);
    return pass;
}

} // namespace

int main(int argc, char** argv)
{
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc) {
            selected.push_back(std::atoi(argv[++i]));
        } else {
            std::fprintf(stderr, "usage: %s [--criterion N]...\n", argv[0]);
            return 2;
        }
    }
    if (selected.empty()) {
        for (int i = 1; i <= static_cast<int>(criteria().size()); ++i) {
            selected.push_back(i);
        }
    }
    bool all = true;
    for (int i : selected) {
        if (i < 1 || i > static_cast<int>(criteria().size())) {
            std::fprintf(stderr, "no criterion %d\n", i);
            return 2;
        }
        all = report(i) && all;
    }
    return all ? 0 : 1;
}
