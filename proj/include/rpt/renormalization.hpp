#ifndef RPT_RENORMALIZATION_HPP
#define RPT_RENORMALIZATION_HPP

// Frequency renormalization: the harmonic frequency is split as
// omega^2 = omega0^2 + sum_k omega_k^2 hbar^k, the recursion runs around the
// trial frequency omega0, and omega0 is fixed afterwards by a scheme
// condition on the truncated series.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"
#include "potential.hpp"
#include "series.hpp"

namespace rpt
{

enum class SchemeKind { MinimalDifference, MinimalSensitivityLast, MinimalSensitivitySum, ZeroCorrections };

enum class RootSelection { FlattestExtremum, Smallest, All };

inline const char* scheme_name(SchemeKind kind)
{
    switch (kind) {
    case SchemeKind::MinimalDifference:
        return "minimal-difference";
    case SchemeKind::MinimalSensitivityLast:
        return "minimal-sensitivity-last";
    case SchemeKind::MinimalSensitivitySum:
        return "minimal-sensitivity-sum";
    case SchemeKind::ZeroCorrections:
        return "zero-corrections";
    }
    return "unknown";
}

inline SchemeKind parse_scheme(const std::string& name)
{
    for (auto kind : {SchemeKind::MinimalDifference, SchemeKind::MinimalSensitivityLast,
                      SchemeKind::MinimalSensitivitySum, SchemeKind::ZeroCorrections}) {
        if (name == scheme_name(kind)) {
            return kind;
        }
    }
    throw ValidationError("unknown scheme '" + name + "'");
}

inline const char* root_selection_name(RootSelection r)
{
    switch (r) {
    case RootSelection::FlattestExtremum:
        return "flattest";
    case RootSelection::Smallest:
        return "smallest";
    case RootSelection::All:
        return "all";
    }
    return "unknown";
}

inline RootSelection parse_root_selection(const std::string& name)
{
    for (auto r : {RootSelection::FlattestExtremum, RootSelection::Smallest, RootSelection::All}) {
        if (name == root_selection_name(r)) {
            return r;
        }
    }
    throw ValidationError("unknown root selection '" + name + "'");
}

// Power of hbar carried by the leading anharmonic correction: an f_i x^(i+2)
// term enters at hbar^(i/2) for even i and, squared, at hbar^i for odd i.
// The one-parameter closure puts its single correction at this order.
template <Scalar T>
int closure_order(const PotentialSpec<T>& potential)
{
    int s = 0;
    for (const auto& [i, f] : potential.couplings) {
        if (!is_zero(f)) {
            s = std::gcd(s, i % 2 == 0 ? i / 2 : i);
        }
    }
    return s == 0 ? 2 : s;
}

// omega^2 = omega0^2 + omega_s^2 hbar^s with omega_s^2 eliminated through the
// physical frequency.
template <Scalar T>
OmegaExpansion<T> one_parameter_expansion(const PotentialSpec<T>& potential, const T& omega0, int s)
{
    if (!(omega0 > 0)) {
        throw ValidationError("trial frequency omega0 must be positive");
    }
    if (s < 1) {
        throw ValidationError("closure order must be >= 1");
    }
    OmegaExpansion<T> w;
    w.omega0 = omega0;
    w.corrections.emplace(s, (potential.omega * potential.omega - omega0 * omega0) / ipow(potential.hbar, s));
    return w;
}

template <Scalar T>
EnergySeries<T> renormalized_series(const PotentialSpec<T>& potential, int n, int max_order,
                                    const OmegaExpansion<T>& omega)
{
    if (!(omega.omega0 > 0)) {
        throw DegenerateMinimum("trial frequency omega0 must be positive");
    }
    return compute_series(potential, n, max_order, &omega).series;
}

// S_N = sum_{k=1}^{N} E_k hbar^k
template <Scalar T>
T partial_sum(const EnergySeries<T>& series, int order)
{
    if (order < 0 || order > series.max_order()) {
        throw OrderOutOfRange("partial sum of order " + std::to_string(order) + " requested from a series of order " +
                              std::to_string(series.max_order()));
    }
    T sum(0);
    T hbar_k(series.hbar);
    for (int k = 1; k <= order; ++k) {
        sum += series[k] * hbar_k;
        hbar_k *= series.hbar;
    }
    return sum;
}

template <Scalar T>
std::vector<T> partial_sums(const EnergySeries<T>& series)
{
    std::vector<T> sums;
    sums.reserve(static_cast<std::size_t>(series.max_order()));
    T sum(0);
    T hbar_k(series.hbar);
    for (int k = 1; k <= series.max_order(); ++k) {
        sum += series[k] * hbar_k;
        hbar_k *= series.hbar;
        sums.push_back(sum);
    }
    return sums;
}

// Default omega0 search interval, scaled with the strong-coupling growth of
// the effective frequency: (0.1, 20) * omega * max(1, (g (2n+1)^2)^(1/4)),
// g = max_i 2|f_i| / (m omega^2) (g = lambda for the sextic family).
template <FloatScalar T>
std::pair<T, T> default_search_interval(const PotentialSpec<T>& potential, int n)
{
    T g(0);
    for (const auto& [i, f] : potential.couplings) {
        g = std::max<T>(g, 2 * abs_of(f) / (potential.mass * potential.omega * potential.omega));
    }
    const double growth = std::pow(to_double(g) * (2.0 * n + 1) * (2.0 * n + 1), 0.25);
    const T scale = potential.omega * T(std::max(1.0, growth));
    return {T(1) / 10 * scale, 20 * scale};
}

template <FloatScalar T>
struct SchemeSpec {
    SchemeKind kind = SchemeKind::MinimalSensitivitySum;
    int order = 3; // N: the series is truncated after E_N
    RootSelection root_selection = RootSelection::FlattestExtremum;
    T omega0_min{T(1) / 10};
    T omega0_max{20};
    int grid_points = 512;
    T tolerance{T(1) / 10000000000};
    int closure_order = 0; // 0: derived from the potential

    void validate() const
    {
        if (order < 1) {
            throw ValidationError("scheme order N must be >= 1");
        }
        if (!(omega0_min > 0) || !(omega0_min < omega0_max)) {
            throw ValidationError("search interval must satisfy 0 < omega0_min < omega0_max");
        }
        if (grid_points < 16) {
            throw ValidationError("grid_points must be >= 16");
        }
        if (!(tolerance > 0)) {
            throw ValidationError("tolerance must be positive");
        }
        if (closure_order < 0) {
            throw ValidationError("closure order must be >= 0");
        }
    }
};

template <FloatScalar T>
struct Candidate {
    T omega0;
    T objective;   // g(omega0) after refinement
    T flatness;    // |S_N''(omega0)| by second central difference
    T partial_sum; // S_N(omega0)
};

template <FloatScalar T>
struct OptimizationResult {
    T omega0;
    std::vector<Candidate<T>> candidates;
    std::size_t chosen = 0;
    std::vector<T> partial_sums; // S_1..S_N at omega0
    EnergySeries<T> series;
    int closure_order = 2;
};

// Truncated series as a function of the trial frequency under the
// one-parameter closure.
template <FloatScalar T>
class TrialFrequencyObjective
{
  public:
    TrialFrequencyObjective(PotentialSpec<T> potential, int n, int order, int closure)
        : potential_(std::move(potential)), n_(n), order_(order), closure_(closure)
    {
    }

    EnergySeries<T> series(const T& omega0) const
    {
        const auto w = one_parameter_expansion(potential_, omega0, closure_);
        return renormalized_series(potential_, n_, order_, w);
    }

    T sum(const T& omega0) const { return partial_sum(series(omega0), order_); }
    T last(const T& omega0) const { return series(omega0)[order_]; }

    // Central-difference step h = omega0 * 10^(-digits/3).
    static T derivative_step(const T& omega0)
    {
        return omega0 * step_scale(3);
    }
    static T curvature_step(const T& omega0) { return omega0 * step_scale(4); }

    T objective(SchemeKind kind, const T& omega0) const
    {
        switch (kind) {
        case SchemeKind::MinimalDifference:
            return last(omega0);
        case SchemeKind::MinimalSensitivityLast: {
            const T h = derivative_step(omega0);
            return (last(omega0 + h) - last(omega0 - h)) / (2 * h);
        }
        case SchemeKind::MinimalSensitivitySum: {
            const T h = derivative_step(omega0);
            return (sum(omega0 + h) - sum(omega0 - h)) / (2 * h);
        }
        case SchemeKind::ZeroCorrections:
            break;
        }
        throw ValidationError("zero-corrections does not define an omega0 objective; use zero_corrections()");
    }

    T flatness(const T& omega0) const
    {
        const T h = curvature_step(omega0);
        return abs_of((sum(omega0 + h) - 2 * sum(omega0) + sum(omega0 - h)) / (h * h));
    }

    int order() const noexcept { return order_; }
    int closure() const noexcept { return closure_; }

  private:
    static T step_scale(int divisor)
    {
        const int exponent = static_cast<int>(scalar_traits<T>::digits()) / divisor;
        return ipow(T(10), -exponent);
    }

    PotentialSpec<T> potential_;
    int n_;
    int order_;
    int closure_;
};

namespace detail
{

inline int sign_of(int x) { return (x > 0) - (x < 0); }

template <FloatScalar T>
int sign_of(const T& x)
{
    return (x > 0) - (x < 0);
}

// Bisection on a sign-changing bracket. Stops when |g| <= tolerance, when the
// bracket shrinks below the resolution of T, or after max_iterations.
template <FloatScalar T, class G>
std::pair<T, T> bisect(const G& g, T lo, T hi, T g_lo, const T& tolerance, int max_iterations = 400)
{
    const T resolution = 16 * scalar_traits<T>::epsilon();
    T mid = (lo + hi) / 2;
    T g_mid = g(mid);
    for (int it = 0; it < max_iterations; ++it) {
        if (abs_of(g_mid) <= tolerance) {
            break;
        }
        if (hi - lo <= resolution * std::max<T>(abs_of(mid), T(1))) {
            break;
        }
        if (sign_of(g_mid) == sign_of(g_lo)) {
            lo = mid;
            g_lo = g_mid;
        } else {
            hi = mid;
        }
        mid = (lo + hi) / 2;
        g_mid = g(mid);
    }
    return {mid, g_mid};
}

} // namespace detail

// Locates omega0 for the given scheme: uniform scan of g over the interval,
// bisection inside every sign change, flatness at each root, selection.
template <FloatScalar T>
OptimizationResult<T> find_omega0(const PotentialSpec<T>& potential, int n, const SchemeSpec<T>& scheme)
{
    potential.validate();
    scheme.validate();
    if (scheme.kind == SchemeKind::ZeroCorrections) {
        throw ValidationError("zero-corrections fixes the omega_k^2 at given omega0; use zero_corrections()");
    }
    const int closure = scheme.closure_order > 0 ? scheme.closure_order : closure_order(potential);
    const TrialFrequencyObjective<T> objective(potential, n, scheme.order, closure);
    auto g = [&](const T& w) { return objective.objective(scheme.kind, w); };

    const int points = scheme.grid_points;
    std::vector<T> grid;
    std::vector<T> values;
    std::vector<bool> valid;
    grid.reserve(static_cast<std::size_t>(points + 1));
    for (int j = 0; j <= points; ++j) {
        grid.push_back(scheme.omega0_min + (scheme.omega0_max - scheme.omega0_min) * j / points);
    }
    bool any_valid = false;
    bool all_flat = true;
    std::optional<T> g_min, g_max;
    for (const T& w : grid) {
        T v = g(w);
        const bool ok = is_finite(v);
        valid.push_back(ok);
        values.push_back(v);
        if (ok) {
            any_valid = true;
            if (abs_of(v) > scheme.tolerance) {
                all_flat = false;
            }
            g_min = g_min ? std::min<T>(*g_min, v) : v;
            g_max = g_max ? std::max<T>(*g_max, v) : v;
        }
    }
    if (!any_valid) {
        throw NoRootFound("objective is not finite anywhere on [" + to_string(scheme.omega0_min) + ", " +
                          to_string(scheme.omega0_max) + "]");
    }
    if (all_flat) {
        throw DegenerateObjective("objective " + std::string(scheme_name(scheme.kind)) + " vanishes identically on [" +
                                  to_string(scheme.omega0_min) + ", " + to_string(scheme.omega0_max) + "]");
    }

    std::vector<Candidate<T>> candidates;
    auto add_candidate = [&](const T& w, const T& gw) {
        candidates.push_back(Candidate<T>{w, gw, objective.flatness(w), objective.sum(w)});
    };
    for (int j = 0; j <= points; ++j) {
        const auto jj = static_cast<std::size_t>(j);
        if (!valid[jj]) {
            continue;
        }
        if (is_zero(values[jj])) {
            add_candidate(grid[jj], values[jj]);
            continue;
        }
        if (j == points || !valid[jj + 1] || is_zero(values[jj + 1])) {
            continue;
        }
        if (detail::sign_of(values[jj]) != detail::sign_of(values[jj + 1])) {
            auto [root, g_root] = detail::bisect(g, grid[jj], grid[jj + 1], values[jj], scheme.tolerance);
            add_candidate(root, g_root);
        }
    }
    if (candidates.empty()) {
        throw NoRootFound("no sign change of " + std::string(scheme_name(scheme.kind)) + " objective on [" +
                          to_string(scheme.omega0_min) + ", " + to_string(scheme.omega0_max) + "] (" +
                          std::to_string(points) + " intervals); objective range [" + to_string(*g_min) + ", " +
                          to_string(*g_max) + "]");
    }

    std::size_t chosen = 0;
    if (scheme.root_selection == RootSelection::Smallest) {
        chosen = 0; // candidates are in ascending omega0
    } else {
        for (std::size_t c = 1; c < candidates.size(); ++c) {
            if (candidates[c].flatness < candidates[chosen].flatness) {
                chosen = c;
            }
        }
    }

    OptimizationResult<T> result;
    result.omega0 = candidates[chosen].omega0;
    result.candidates = std::move(candidates);
    result.chosen = chosen;
    result.series = objective.series(result.omega0);
    result.partial_sums = partial_sums(result.series);
    result.closure_order = closure;
    return result;
}

// Sequentially fixes omega_k^2, k = 1..N-1, so that E_{k+1} = 0 with omega0
// held at the supplied value. E_{k+1} is the first coefficient that sees
// omega_k^2 (it enters row k at index 2k > 2k-2).
template <FloatScalar T>
OmegaExpansion<T> zero_corrections(const PotentialSpec<T>& potential, int n, int order, const T& omega0,
                                   const T& tolerance, int grid_points = 16)
{
    potential.validate();
    if (order < 2) {
        throw ValidationError("zero-corrections needs N >= 2");
    }
    if (!(omega0 > 0)) {
        throw ValidationError("trial frequency omega0 must be positive");
    }
    if (!(tolerance > 0)) {
        throw ValidationError("tolerance must be positive");
    }
    if (grid_points < 2) {
        throw ValidationError("grid_points must be >= 2");
    }

    OmegaExpansion<T> w;
    w.omega0 = omega0;
    for (int k = 1; k < order; ++k) {
        auto g = [&](const T& value) {
            OmegaExpansion<T> trial = w;
            trial.corrections[k] = value;
            return compute_series(potential, n, k + 1, &trial).series[k + 1];
        };
        const T at_zero = g(T(0));
        if (abs_of(at_zero) <= tolerance) {
            w.corrections[k] = T(0);
            continue;
        }

        // Widen a symmetric scan until the objective changes sign.
        T radius = std::max<T>(T(1), omega0 * omega0);
        bool found = false;
        for (int widen = 0; widen < 40 && !found; ++widen, radius *= 8) {
            T prev_x = -radius;
            T prev_g = g(prev_x);
            for (int j = 1; j <= grid_points && !found; ++j) {
                const T x = -radius + 2 * radius * j / grid_points;
                const T gx = g(x);
                if (!is_finite(prev_g) || !is_finite(gx)) {
                    prev_x = x;
                    prev_g = gx;
                    continue;
                }
                if (is_zero(gx)) {
                    w.corrections[k] = x;
                    found = true;
                } else if (detail::sign_of(prev_g) != detail::sign_of(gx)) {
                    w.corrections[k] = detail::bisect(g, prev_x, x, prev_g, tolerance).first;
                    found = true;
                }
                prev_x = x;
                prev_g = gx;
            }
        }
        if (!found) {
            throw NoRootFound("zero-corrections: no omega_" + std::to_string(k) + "^2 makes E_" +
                              std::to_string(k + 1) + " vanish");
        }
    }
    return w;
}

} // namespace rpt

#endif
