#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include <rpt/numerov.hpp>
#include <rpt/series.hpp>

using namespace rpt;
using Q = Rational;

namespace
{

// Small random rationals p/q with p in [-9, 9], q in [1, 9].
Q random_rational(std::mt19937& rng, bool positive = false)
{
    std::uniform_int_distribution<int> num(positive ? 1 : -9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    return Q(num(rng), den(rng));
}

PotentialSpec<Q> random_potential(std::mt19937& rng)
{
    PotentialSpec<Q> p;
    p.mass = random_rational(rng, true);
    p.omega = random_rational(rng, true);
    std::uniform_int_distribution<int> index(1, 6);
    for (int j = 0; j < 3; ++j) {
        const Q f = random_rational(rng);
        if (f != 0) {
            p.couplings[index(rng)] = f;
        }
    }
    return p;
}

} // namespace

TEST_CASE("quantization entries hold for random potentials")
{
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 25; ++trial) {
        const auto p = random_potential(rng);
        const int n = trial % 4;
        const auto r = compute_series(p, n, 6);
        for (int k = 1; k <= 6; ++k) {
            CHECK(r.table.at(k, 2 * k - 2) == (k == 1 ? Q(n) : Q(0)));
        }
        CHECK(r.series[1] == p.omega * (Q(n) + Q(1, 2)));
    }
}

TEST_CASE("Riccati residual scales as hbar^(K+1)")
{
    PrecisionScope scope(60);
    const auto p = sextic_potential(Real(1) / 10);
    // At K = 2 the hbar^3 and hbar^4 terms nearly cancel for this state
    // (r changes sign near hbar = 4e-3), so that order is not probed here.
    for (int K : {1, 3, 4, 5}) {
        const auto r = compute_series(p, 2, K, static_cast<const OmegaExpansion<Real>*>(nullptr), 200);
        const Real x = Real(7) / 10;
        const Real h = Real(1) / 100;
        const Real coarse = riccati_residual(p, r.table, r.series, x, h);
        const Real fine = riccati_residual(p, r.table, r.series, x, Real(h / 2));
        const double ratio = to_double(Real(coarse / fine));
        INFO("K = " << K << " ratio " << ratio);
        CHECK(std::abs(ratio / std::pow(2.0, K + 1) - 1) < 0.1);
    }
}

TEST_CASE("harmonic series has no corrections")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        PotentialSpec<Q> p;
        p.mass = random_rational(rng, true);
        p.omega = random_rational(rng, true);
        for (int n : {0, 1, 2, 5, 10}) {
            const auto e = compute_series(p, n, 10).series;
            CHECK(e[1] == p.omega * (Q(n) + Q(1, 2)));
            for (int k = 2; k <= 10; ++k) {
                CHECK(e[k] == 0);
            }
        }
    }
}

TEST_CASE("even orders of the sextic series vanish")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const Q lambda = abs_of(random_rational(rng)) + Q(1, 7);
        const int n = trial;
        const auto e = compute_series(sextic_potential(lambda), n, 12).series;
        for (int k = 2; k <= 12; k += 2) {
            CHECK(e[k] == 0);
        }
        for (int k = 1; k <= 11; k += 2) {
            CHECK(e[k] != 0);
        }
    }
}

TEST_CASE("rational and float backends agree")
{
    std::mt19937 rng(3);
    PrecisionScope scope(64);
    for (int trial = 0; trial < 8; ++trial) {
        const auto p = random_potential(rng);
        const auto exact = compute_series(p, trial % 3, 10).series;
        const auto approx = compute_series(convert_potential<Real>(p), trial % 3, 10).series;
        const auto hardware = compute_series(convert_potential<double>(p), trial % 3, 10).series;
        for (int k = 1; k <= 10; ++k) {
            const Real reference = from_rational<Real>(exact[k]);
            if (is_zero(reference)) {
                CHECK(abs_of(approx[k]) < ipow(Real(10), -55));
                continue;
            }
            CHECK(to_double(abs_of(Real((approx[k] - reference) / reference))) < 1e-55);
            CHECK(std::abs(hardware[k] / to_double(reference) - 1) < 1e-9);
        }
    }
}

TEST_CASE("shooting eigenvalue converges at fourth order in the step")
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
    INFO(e1 << " " << e2 << " " << e3);
    CHECK(std::log2(e1 / e2) == Catch::Approx(4).margin(0.3));
    CHECK(std::log2(e2 / e3) == Catch::Approx(4).margin(0.3));
}
