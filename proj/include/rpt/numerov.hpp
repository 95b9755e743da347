#ifndef RPT_NUMEROV_HPP
#define RPT_NUMEROV_HPP

// Bound states of  -hbar^2/(2m) U'' + V U = E U  on [-L, L] by shooting with
// the three-term Numerov recurrence. Double precision only.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "potential.hpp"

namespace rpt
{

struct Grid {
    double L = 0;
    double h = 0;

    std::size_t intervals() const { return static_cast<std::size_t>(std::llround(2 * L / h)); }
    double x(std::size_t i) const { return -L + static_cast<double>(i) * (2 * L / static_cast<double>(intervals())); }
};

struct ShootingConfig {
    double L = 8;
    double h = 8.0 / 4096;
    double energy_lo = 0;
    double energy_hi = 1;
    int target_nodes = 0;
    double tolerance = 1e-11;
    // Left and right integrations meet at the outermost classical turning point.
    bool refine_grid = true;
    int max_iterations = 400;
    int max_refinements = 6;

    void validate() const
    {
        if (!(L > 0) || !(h > 0) || !(h < L / 100)) {
            throw ValidationError("shooting grid needs L > 0 and 0 < h < L/100");
        }
        if (!(energy_lo < energy_hi)) {
            throw ValidationError("energy bracket needs E_lo < E_hi");
        }
        if (target_nodes < 0) {
            throw ValidationError("target node count must be non-negative");
        }
        if (!(tolerance > 0)) {
            throw ValidationError("tolerance must be positive");
        }
    }
};

struct EigenResult {
    double energy = 0;
    int nodes = 0;
    // Energy correction implied by the derivative jump at the matching point,
    // -hbar^2 U_m [U'] / (2m int U^2); zero for an exact discrete eigenstate.
    double log_derivative_mismatch = 0;
    double L = 0;
    double h = 0;
};

enum class Direction { LeftToRight, RightToLeft };

namespace detail
{

inline constexpr double rescale_threshold = 1e100;

// g_i = h^2 q_i with U'' = q U, q = 2m (V - E) / hbar^2. The Numerov weight
// is f_i = 1 - g_i / 12.
inline std::vector<double> numerov_weights(const PotentialSpec<double>& potential, double energy, const Grid& grid)
{
    const std::size_t n = grid.intervals();
    const double step = 2 * grid.L / static_cast<double>(n);
    const double c = 2 * potential.mass / (potential.hbar * potential.hbar) * step * step;
    std::vector<double> g(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        g[i] = c * (potential(grid.x(i)) - energy);
    }
    return g;
}

// Runs the recurrence from index `from` to `to` (either direction), seeding
// 0 and 1e-20 at the start. The summed form
//   w = f y,  d_{i+1} = d_i + g_i y_i,  w_{i+1} = w_i + d_{i+1}
// keeps the round-off growth linear in the number of steps. Values already
// written are rescaled together with the running solution.
inline void propagate(const std::vector<double>& g, std::vector<double>& y, std::size_t from, std::size_t to)
{
    const bool forward = from < to;
    const auto next = [forward](std::size_t i) { return forward ? i + 1 : i - 1; };
    const auto weight = [&g](std::size_t i) { return 1 - g[i] / 12; };
    y[from] = 0;
    std::size_t cur = next(from);
    y[cur] = 1e-20;
    double w = weight(cur) * y[cur];
    double d = w; // w_from = 0
    while (cur != to) {
        const std::size_t nxt = next(cur);
        d += g[cur] * y[cur];
        w += d;
        y[nxt] = w / weight(nxt);
        if (!std::isfinite(y[nxt])) {
            throw NumericOverflow("Numerov propagation overflowed");
        }
        if (std::abs(y[nxt]) > rescale_threshold) {
            const double s = 1 / rescale_threshold;
            w *= s;
            d *= s;
            for (std::size_t j = from;; j = next(j)) {
                y[j] *= s;
                if (j == nxt) {
                    break;
                }
            }
        }
        cur = nxt;
    }
}

inline int sign_changes(const std::vector<double>& y, std::size_t from, std::size_t to)
{
    int count = 0;
    int last = 0;
    for (std::size_t i = from; i <= to; ++i) {
        const int s = (y[i] > 0) - (y[i] < 0);
        if (s == 0) {
            continue;
        }
        if (last != 0 && s != last) {
            ++count;
        }
        last = s;
    }
    return count;
}

// Index of the last classically allowed grid point, kept away from the edges.
inline std::size_t matching_index(const PotentialSpec<double>& potential, double energy, const Grid& grid)
{
    const std::size_t n = grid.intervals();
    std::size_t m = n / 2;
    for (std::size_t i = n - 2; i >= 2; --i) {
        if (potential(grid.x(i)) <= energy) {
            m = i;
            break;
        }
    }
    return std::clamp<std::size_t>(m, 2, n - 2);
}

// Sturm count: sign changes of the solution started at the left wall,
// equal to the number of discrete eigenvalues below `energy`.
inline int sturm_count(const PotentialSpec<double>& potential, double energy, const Grid& grid)
{
    const auto f = numerov_weights(potential, energy, grid);
    std::vector<double> y(f.size());
    propagate(f, y, 0, f.size() - 1);
    return sign_changes(y, 0, f.size() - 1);
}

struct Matched {
    std::vector<double> y;
    std::size_t match = 0;
    double correction = 0; // estimated E* - E
};

inline Matched matched_solution(const PotentialSpec<double>& potential, double energy, const Grid& grid)
{
    const auto f = numerov_weights(potential, energy, grid);
    const std::size_t n = f.size() - 1;
    Matched out;
    out.match = matching_index(potential, energy, grid);
    const std::size_t m = out.match;

    std::vector<double> left(n + 1, 0.0);
    std::vector<double> right(n + 1, 0.0);
    propagate(f, left, 0, m + 1);
    propagate(f, right, n, m - 1);
    if (left[m] == 0 || right[m] == 0) {
        out.y = std::move(left);
        out.correction = std::numeric_limits<double>::quiet_NaN();
        return out;
    }
    const double scale = left[m] / right[m];
    out.y.assign(n + 1, 0.0);
    for (std::size_t i = 0; i <= m; ++i) {
        out.y[i] = left[i];
    }
    for (std::size_t i = m + 1; i <= n; ++i) {
        out.y[i] = right[i] * scale;
    }
    // Jump of the first difference of w = f y across the matching point,
    // less the local source term, per unit step.
    const double step = 2 * grid.L / static_cast<double>(n);
    const auto weight = [&f](std::size_t i) { return 1 - f[i] / 12; };
    const double d_right = (weight(m + 1) * right[m + 1] - weight(m) * right[m]) * scale;
    const double d_left = weight(m) * left[m] - weight(m - 1) * left[m - 1];
    const double jump = (d_right - d_left - f[m] * left[m]) / step;
    double norm = 0;
    for (double v : out.y) {
        norm += v * v;
    }
    norm *= step;
    out.correction = -potential.hbar * potential.hbar * out.y[m] * jump / (2 * potential.mass * norm);
    return out;
}

} // namespace detail

// Samples of U on the grid x_i = -L + i h, propagated from the wall on the
// given side with seeds 0 and 1e-20.
inline std::vector<double> numerov_propagate(const PotentialSpec<double>& potential, double energy, const Grid& grid,
                                             Direction direction)
{
    potential.validate();
    if (!(grid.L > 0) || !(grid.h > 0) || grid.intervals() < 4) {
        throw ValidationError("Numerov grid needs L > 0 and at least 4 intervals");
    }
    const auto f = detail::numerov_weights(potential, energy, grid);
    std::vector<double> y(f.size(), 0.0);
    if (direction == Direction::LeftToRight) {
        detail::propagate(f, y, 0, f.size() - 1);
    } else {
        detail::propagate(f, y, f.size() - 1, 0);
    }
    return y;
}

// Strict sign changes; exact zeros (the clamped walls) are skipped.
inline int count_nodes(const std::vector<double>& samples)
{
    return samples.empty() ? 0 : detail::sign_changes(samples, 0, samples.size() - 1);
}

namespace detail
{

inline EigenResult solve_on_grid(const PotentialSpec<double>& potential, const ShootingConfig& cfg, const Grid& grid)
{
    const int n = cfg.target_nodes;
    double lo = cfg.energy_lo;
    double hi = cfg.energy_hi;
    // The weights f = 1 - g/12 must stay positive over the bracket, or the
    // recurrence oscillates and the node count is meaningless.
    for (double g : numerov_weights(potential, lo, grid)) {
        if (!(g < 12)) {
            throw ValidationError("grid step " + std::to_string(2 * grid.L / static_cast<double>(grid.intervals())) +
                                  " is too coarse for the potential near the walls (h^2 2m(V - E)/hbar^2 >= 12)");
        }
    }
    if (sturm_count(potential, lo, grid) > n) {
        throw BracketFailure("lower energy " + std::to_string(lo) + " already has more than " + std::to_string(n) +
                             " nodes");
    }
    if (sturm_count(potential, hi, grid) <= n) {
        throw BracketFailure("upper energy " + std::to_string(hi) + " has at most " + std::to_string(n) +
                             " nodes; no node-count transition in the bracket");
    }

    // Node-count bisection: the n -> n+1 transition sits at the eigenvalue.
    int it = 0;
    const double coarse = std::max(cfg.tolerance, 1e-6 * std::max(1.0, std::abs(hi)));
    for (; hi - lo > coarse; ++it) {
        if (it >= cfg.max_iterations) {
            throw NoConvergence("node-count bisection did not converge");
        }
        const double mid = (lo + hi) / 2;
        (sturm_count(potential, mid, grid) <= n ? lo : hi) = mid;
    }

    // Mismatch bisection on the sign of the energy correction. Falls back to
    // the node count when the correction is unusable.
    for (; hi - lo > cfg.tolerance; ++it) {
        if (it >= cfg.max_iterations) {
            throw NoConvergence("mismatch bisection did not converge");
        }
        const double mid = (lo + hi) / 2;
        const auto m = matched_solution(potential, mid, grid);
        if (std::isfinite(m.correction) && m.correction != 0) {
            (m.correction > 0 ? lo : hi) = mid;
        } else if (m.correction == 0) {
            lo = hi = mid;
        } else {
            (sturm_count(potential, mid, grid) <= n ? lo : hi) = mid;
        }
    }

    EigenResult r;
    r.energy = (lo + hi) / 2;
    const auto m = matched_solution(potential, r.energy, grid);
    r.nodes = count_nodes(m.y);
    r.log_derivative_mismatch = m.correction;
    r.L = grid.L;
    r.h = 2 * grid.L / static_cast<double>(grid.intervals());
    if (r.nodes != n) {
        throw NoConvergence("converged state has " + std::to_string(r.nodes) + " nodes, expected " +
                            std::to_string(n));
    }
    return r;
}

} // namespace detail

// Eigenvalue with n nodes inside the configured bracket. With refine_grid,
// h is halved until the eigenvalue moves by less than 10 * tolerance.
inline EigenResult solve_eigenvalue(const PotentialSpec<double>& potential, const ShootingConfig& cfg)
{
    potential.validate();
    cfg.validate();
    Grid grid{cfg.L, cfg.h};
    EigenResult result = detail::solve_on_grid(potential, cfg, grid);
    if (!cfg.refine_grid) {
        return result;
    }
    for (int r = 0; r < cfg.max_refinements; ++r) {
        grid.h /= 2;
        EigenResult finer = detail::solve_on_grid(potential, cfg, grid);
        const double change = std::abs(finer.energy - result.energy);
        result = finer;
        if (change < 10 * cfg.tolerance) {
            return result;
        }
    }
    throw NoConvergence("eigenvalue not grid-converged after " + std::to_string(cfg.max_refinements) +
                        " step halvings");
}

// Smallest L with V(+-L) >= E + 30 hbar omega, h = L / 4096.
inline Grid auto_domain(const PotentialSpec<double>& potential, double energy_estimate)
{
    if (!std::isfinite(energy_estimate)) {
        throw ValidationError("energy estimate must be finite");
    }
    const double target = energy_estimate + 30 * potential.hbar * potential.omega;
    auto high_enough = [&](double L) { return potential(L) >= target && potential(-L) >= target; };
    double hi = 1;
    while (!high_enough(hi)) {
        hi *= 2;
        if (hi > 1e8) {
            throw BracketFailure("potential does not rise above " + std::to_string(target));
        }
    }
    double lo = 0;
    for (int i = 0; i < 100 && hi - lo > 1e-12 * hi; ++i) {
        const double mid = (lo + hi) / 2;
        (high_enough(mid) ? hi : lo) = mid;
    }
    return Grid{hi, hi / 4096};
}

// Auto-bracketed solve: the bracket grows from the harmonic estimate until it
// holds the n-th level and the domain starts from auto_domain() at the
// bracket's top. The wall criterion of auto_domain() is too short for steep
// potentials, so L then grows by 1.25 until the level moves by less than
// 10 * tolerance.
inline EigenResult solve_eigenvalue(const PotentialSpec<double>& potential, int n, double tolerance = 1e-11)
{
    potential.validate();
    if (n < 0) {
        throw ValidationError("target node count must be non-negative");
    }
    const double quantum = potential.hbar * potential.omega;
    double hi = quantum * (n + 1);
    Grid grid;
    for (int attempt = 0;; ++attempt) {
        grid = auto_domain(potential, hi);
        if (detail::sturm_count(potential, hi, grid) > n) {
            break;
        }
        if (attempt > 60) {
            throw BracketFailure("no upper bound found for level " + std::to_string(n));
        }
        hi *= 2;
    }
    double lo = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i <= grid.intervals(); ++i) {
        lo = std::min(lo, potential(grid.x(i)));
    }

    ShootingConfig cfg;
    cfg.target_nodes = n;
    cfg.tolerance = tolerance;
    cfg.energy_lo = lo;
    cfg.energy_hi = hi;
    cfg.L = grid.L;
    cfg.h = grid.h;
    EigenResult result = solve_eigenvalue(potential, cfg);
    for (int grow = 0; grow < 40; ++grow) {
        cfg.L *= 1.25;
        cfg.h *= 1.25;
        const EigenResult wider = solve_eigenvalue(potential, cfg);
        const double change = std::abs(wider.energy - result.energy);
        result = wider;
        if (change < 10 * tolerance) {
            return result;
        }
    }
    throw NoConvergence("eigenvalue not converged in the domain size");
}

inline EigenResult solve_eigenvalue(const PotentialSpec<double>& potential, int n, const Grid& grid,
                                    double tolerance)
{
    ShootingConfig cfg;
    cfg.L = grid.L;
    cfg.h = grid.h;
    cfg.target_nodes = n;
    cfg.tolerance = tolerance;
    cfg.energy_lo = 0;
    cfg.energy_hi = potential(grid.L);
    return solve_eigenvalue(potential, cfg);
}

} // namespace rpt

#endif
