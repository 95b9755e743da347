#include <catch_amalgamated.hpp>

#include <cmath>

#include <rpt/numerov.hpp>
#include <rpt/quasi_exact.hpp>

using namespace rpt;
using Catch::Approx;

namespace
{

PotentialSpec<double> harmonic() { return PotentialSpec<double>{}; }

PotentialSpec<double> sextic(double lambda) { return sextic_potential(lambda); }

} // namespace

TEST_CASE("propagation at the harmonic ground energy follows the Gaussian")
{
    const Grid grid{8, 8.0 / 4096};
    const auto y = numerov_propagate(harmonic(), 0.5, grid, Direction::LeftToRight);
    const std::size_t mid = grid.intervals() / 2;
    REQUIRE(grid.x(mid) == Approx(0).margin(1e-15));
    for (std::size_t i = mid / 2; i <= mid; i += 64) {
        const double x = grid.x(i);
        INFO("x = " << x);
        CHECK(y[i] / y[mid] == Approx(std::exp(-x * x / 2)).epsilon(1e-6));
    }
    const auto back = numerov_propagate(harmonic(), 0.5, grid, Direction::RightToLeft);
    for (std::size_t i = mid; i <= mid + mid / 2; i += 64) {
        const double x = grid.x(i);
        CHECK(back[i] / back[mid] == Approx(std::exp(-x * x / 2)).epsilon(1e-6));
    }
}

TEST_CASE("matching mismatch changes sign across the eigenvalue")
{
    const Grid grid{8, 8.0 / 4096};
    const double below = detail::matched_solution(harmonic(), 0.4999, grid).correction;
    const double above = detail::matched_solution(harmonic(), 0.5001, grid).correction;
    CHECK(below > 0);
    CHECK(above < 0);
    CHECK(below == Approx(1e-4).epsilon(1e-3));
    CHECK(above == Approx(-1e-4).epsilon(1e-3));
}

TEST_CASE("node counts")
{
    CHECK(count_nodes({0.0, 1.0, 2.0, 0.5, 0.0}) == 0);
    CHECK(count_nodes({0.0, 1.0, -1.0, 0.0, -2.0, 3.0, 0.0}) == 2);
    CHECK(count_nodes({}) == 0);
    for (int n : {0, 5}) {
        const auto r = solve_eigenvalue(harmonic(), n);
        const Grid grid{r.L, r.h};
        CHECK(count_nodes(detail::matched_solution(harmonic(), r.energy, grid).y) == n);
        CHECK(r.nodes == n);
    }
    const auto excited = solve_eigenvalue(sextic(10), 1);
    CHECK(excited.energy == Approx(4.057).epsilon(1e-3));
    CHECK(excited.nodes == 1);
}

TEST_CASE("harmonic spectrum")
{
    for (int n = 0; n <= 10; ++n) {
        const auto r = solve_eigenvalue(harmonic(), n);
        INFO("n = " << n);
        CHECK(std::abs(r.energy - (n + 0.5)) <= 1e-9 * (n + 0.5));
        CHECK(r.nodes == n);
        CHECK(std::abs(r.log_derivative_mismatch) <= 1e-11);
    }
    PotentialSpec<double> scaled;
    scaled.mass = 2;
    scaled.omega = 1.5;
    scaled.hbar = 0.5;
    CHECK(solve_eigenvalue(scaled, 3).energy == Approx(0.5 * 1.5 * 3.5).epsilon(1e-10));
}

TEST_CASE("sextic eigenvalues")
{
    CHECK(std::round(solve_eigenvalue(sextic(0.01), 5).energy * 1e8) / 1e8 == 6.61763908);
    CHECK(solve_eigenvalue(sextic(10), 0).energy == Approx(1.102862).epsilon(1e-6));
}

TEST_CASE("quasi-exact ground state")
{
    const auto cfg = quasi_exact_config(6.0, 1.0);
    const auto r = solve_eigenvalue(cfg.potential, 0);
    CHECK(std::abs(r.energy - 3.0) <= 1e-8);
}

TEST_CASE("eigenvalue error falls as the fourth power of the step")
{
    for (int n : {0, 2}) {
        std::vector<double> errors;
        for (double h : {0.08, 0.04, 0.02}) {
            ShootingConfig cfg;
            cfg.L = 10;
            cfg.h = h;
            cfg.target_nodes = n;
            cfg.energy_lo = 0;
            cfg.energy_hi = 10;
            cfg.tolerance = 1e-14;
            cfg.refine_grid = false;
            errors.push_back(std::abs(solve_eigenvalue(harmonic(), cfg).energy - (n + 0.5)));
        }
        for (std::size_t i = 1; i < errors.size(); ++i) {
            const double order = std::log2(errors[i - 1] / errors[i]);
            INFO("n = " << n << " errors " << errors[i - 1] << " -> " << errors[i]);
            CHECK(order == Approx(4).margin(0.3));
        }
    }
}

TEST_CASE("automatic domain")
{
    const Grid g = auto_domain(harmonic(), 0.5);
    CHECK(g.L == Approx(std::sqrt(61.0)).epsilon(1e-10));
    CHECK(g.h == Approx(g.L / 4096));
    CHECK(auto_domain(sextic(10), 26).L == Approx(1.4907983477243945).epsilon(1e-10));
    for (double lambda : {1e3, 1e6, 1e9, 1e12}) {
        const double scaled = auto_domain(sextic(lambda), 1).L * std::pow(lambda, 1.0 / 6);
        CHECK(scaled > 1.5);
        CHECK(scaled < 2.5);
    }
    CHECK_THROWS_AS(auto_domain(harmonic(), std::nan("")), ValidationError);
}

TEST_CASE("bracket and configuration errors")
{
    ShootingConfig cfg;
    cfg.energy_lo = 0.6;
    cfg.energy_hi = 1.4;
    CHECK_THROWS_AS(solve_eigenvalue(harmonic(), cfg), BracketFailure);
    cfg.energy_lo = 0;
    cfg.h = cfg.L / 50;
    CHECK_THROWS_AS(solve_eigenvalue(harmonic(), cfg), ValidationError);
    cfg = ShootingConfig{};
    cfg.energy_lo = 2;
    cfg.energy_hi = 1;
    CHECK_THROWS_AS(solve_eigenvalue(harmonic(), cfg), ValidationError);

    // Steep walls on a coarse grid violate the Numerov stability bound.
    ShootingConfig steep;
    steep.L = 5;
    steep.h = 0.04;
    steep.energy_hi = 20;
    CHECK_THROWS_AS(solve_eigenvalue(sextic(1), steep), ValidationError);

    // A cubic well has no bound states: the walls never rise.
    PotentialSpec<double> cubic;
    cubic.couplings = {{1, 1.0}};
    CHECK_THROWS_AS(solve_eigenvalue(cubic, 0), BracketFailure);
    CHECK_THROWS_AS(solve_eigenvalue(harmonic(), -1), ValidationError);
}

TEST_CASE("eigenvalue records are reproducible")
{
    const auto a = solve_eigenvalue(sextic(1), 2);
    const auto b = solve_eigenvalue(sextic(1), 2);
    CHECK(a.energy == b.energy);
    CHECK(a.L == b.L);
    CHECK(a.h == b.h);
}
