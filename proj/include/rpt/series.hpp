#ifndef RPT_SERIES_HPP
#define RPT_SERIES_HPP

// hbar-expansion of the Riccati equation  hbar C' + C^2 = 2m [V(x) - E]
// for the logarithmic derivative C = hbar U'/U. Each order C_k is a Laurent
// series around the origin; the coefficient at the residue position is fixed
// by the node count n, which is what lets ground and excited states share the
// same recursion.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "laurent_table.hpp"
#include "numeric.hpp"
#include "potential.hpp"

namespace rpt
{

// omega^2 = omega0^2 + sum_k corrections[k] hbar^k. Corrections are formal
// coefficients and may be negative.
template <Scalar T>
struct OmegaExpansion {
    T omega0{1};
    std::map<int, T> corrections;

    T correction(int k) const
    {
        auto it = corrections.find(k);
        return it == corrections.end() ? T(0) : it->second;
    }
};

// Coefficients E_1..E_K of E = sum_k E_k hbar^k.
template <Scalar T>
struct EnergySeries {
    int quantum_number = 0;
    std::vector<T> orders;
    T hbar{1};

    int max_order() const noexcept { return static_cast<int>(orders.size()); }

    const T& operator[](int k) const
    {
        if (k < 1 || k > max_order()) {
            throw OrderOutOfRange("energy order " + std::to_string(k) + " outside 1.." + std::to_string(max_order()));
        }
        return orders[static_cast<std::size_t>(k - 1)];
    }
};

template <Scalar T>
struct SeriesResult {
    LaurentTable<T> table;
    EnergySeries<T> series;
};

// Taylor coefficients of C_0(x) = -sqrt(2 m V(x)) = x * sum_i c_i x^i.
template <Scalar T>
std::vector<T> build_c0(const PotentialSpec<T>& potential, const T& omega_eff, int max_index)
{
    if (max_index < 0) {
        throw ValidationError("max_index must be non-negative");
    }
    if (!(omega_eff > 0)) {
        throw DegenerateMinimum("effective frequency must be positive, got " + to_string(omega_eff));
    }
    const T m_omega = potential.mass * omega_eff;
    const T two_m = 2 * potential.mass;
    const T two_m_omega = 2 * m_omega;

    std::vector<T> c;
    c.reserve(static_cast<std::size_t>(max_index + 1));
    c.push_back(-m_omega);
    for (int i = 1; i <= max_index; ++i) {
        T acc(0);
        for (int p = 1; p < i; ++p) {
            if (!is_zero(c[static_cast<std::size_t>(p)]) && !is_zero(c[static_cast<std::size_t>(i - p)])) {
                acc += c[static_cast<std::size_t>(p)] * c[static_cast<std::size_t>(i - p)];
            }
        }
        auto f = potential.couplings.find(i);
        if (f != potential.couplings.end()) {
            acc -= two_m * f->second;
        }
        c.push_back(acc / two_m_omega);
    }
    return c;
}

// Fills row k of the table. Rows 0..k-1 must be complete and row k empty.
// The entry at i = 2k-2 is the quantization condition n * delta_{1,k}; all
// others follow from the order-k equation, including the -m^2 omega_k^2 term
// at i = 2k when the frequency is renormalized.
template <Scalar T>
void extend_laurent(LaurentTable<T>& table, int k, const T& mass, const OmegaExpansion<T>* expansion, int n)
{
    if (k < 1 || k > table.max_order()) {
        throw OrderOutOfRange("cannot extend order " + std::to_string(k));
    }
    for (int j = 0; j < k; ++j) {
        if (!table.row_complete(j)) {
            throw OrderingViolation("row " + std::to_string(j) + " must be complete before row " + std::to_string(k));
        }
    }
    if (table.filled(k) != 0) {
        throw OrderingViolation("row " + std::to_string(k) + " has already been started");
    }

    const int max_index = table.max_index();
    const T& c00 = table.at(0, 0);
    if (is_zero(c00)) {
        throw DegenerateMinimum("C^0_0 vanishes");
    }
    const T scale = T(-1) / (2 * c00);

    std::optional<T> omega_term;
    if (expansion != nullptr) {
        T wk = expansion->correction(k);
        if (!is_zero(wk)) {
            omega_term = mass * mass * wk;
        }
    }

    const auto prev = table.row(k - 1);
    const auto row0 = table.row(0);
    const auto nz0 = table.nonzeros(0);
    const auto current = table.row(k);
    const auto current_mask = table.nonzero_mask(k);

    T acc(0);
    T cross(0);
    for (int i = 0; i <= max_index; ++i) {
        if (i == 2 * k - 2) {
            table.push(k, T(k == 1 ? n : 0));
            continue;
        }

        acc = T(3 - 2 * k + i) * prev[static_cast<std::size_t>(i)];
        if (omega_term && i == 2 * k) {
            acc -= *omega_term;
        }

        // sum_{j=1}^{k-1} C^j * C^{k-j}: pairs (j, k-j) with j < k-j appear
        // twice, the middle row (k even) once.
        cross = 0;
        for (int j = 1; 2 * j < k; ++j) {
            const auto lhs = table.row(j);
            const auto rhs = table.row(k - j);
            const auto rhs_mask = table.nonzero_mask(k - j);
            for (int p : table.nonzeros(j)) {
                if (p > i) {
                    break;
                }
                if (rhs_mask[static_cast<std::size_t>(i - p)]) {
                    cross += lhs[static_cast<std::size_t>(p)] * rhs[static_cast<std::size_t>(i - p)];
                }
            }
        }
        acc += 2 * cross;
        if (k % 2 == 0) {
            const int j = k / 2;
            const auto mid = table.row(j);
            const auto mid_mask = table.nonzero_mask(j);
            for (int p : table.nonzeros(j)) {
                if (p > i) {
                    break;
                }
                if (mid_mask[static_cast<std::size_t>(i - p)]) {
                    acc += mid[static_cast<std::size_t>(p)] * mid[static_cast<std::size_t>(i - p)];
                }
            }
        }

        // 2 sum_{p>=1} C^0_p C^k_{i-p}; entries of row k below i are final.
        cross = 0;
        for (int p : nz0) {
            if (p == 0) {
                continue;
            }
            if (p > i) {
                break;
            }
            if (current_mask[static_cast<std::size_t>(i - p)]) {
                cross += row0[static_cast<std::size_t>(p)] * current[static_cast<std::size_t>(i - p)];
            }
        }
        acc += 2 * cross;

        table.push(k, scale * acc);
    }
}

// E_k from the order-k equation at the constant term (i = 2k-2).
template <Scalar T>
T energy_coefficient(const LaurentTable<T>& table, int k, const T& mass)
{
    if (k < 1 || k > table.max_order()) {
        throw OrderOutOfRange("energy order " + std::to_string(k) + " outside the table");
    }
    const int top = 2 * k - 2;
    if (top > table.max_index()) {
        throw OrderingViolation("E_" + std::to_string(k) + " needs Laurent index " + std::to_string(top) +
                                " but the table stops at " + std::to_string(table.max_index()));
    }
    for (int j = 0; j <= k; ++j) {
        if (table.filled(j) <= top) {
            throw OrderingViolation("E_" + std::to_string(k) + " needs row " + std::to_string(j) + " up to index " +
                                    std::to_string(top));
        }
    }

    T acc = table.at(k - 1, top);
    for (int j = 0; j <= k; ++j) {
        const auto lhs = table.row(j);
        const auto rhs = table.row(k - j);
        const auto rhs_mask = table.nonzero_mask(k - j);
        for (int p : table.nonzeros(j)) {
            if (p > top) {
                break;
            }
            if (rhs_mask[static_cast<std::size_t>(top - p)]) {
                acc += lhs[static_cast<std::size_t>(p)] * rhs[static_cast<std::size_t>(top - p)];
            }
        }
    }
    return -acc / (2 * mass);
}

template <Scalar T>
T energy_coefficient(const LaurentTable<T>& table, int k, const PotentialSpec<T>& potential)
{
    return energy_coefficient(table, k, potential.mass);
}

// Smallest Laurent index range that determines E_1..E_K.
inline int default_max_index(int max_order) { return max_order >= 1 ? 2 * max_order - 2 : 0; }

// Runs the recursion for orders 1..K. With an OmegaExpansion the zeroth order
// uses omega0 and each order k picks up its omega_k^2 term; without one the
// physical omega is used throughout.
template <Scalar T>
SeriesResult<T> compute_series(const PotentialSpec<T>& potential, int n, int max_order,
                               const OmegaExpansion<T>* expansion = nullptr,
                               std::optional<int> max_index = std::nullopt)
{
    potential.validate();
    if (n < 0) {
        throw ValidationError("quantum number must be non-negative");
    }
    if (max_order < 1) {
        throw ValidationError("max order K must be >= 1");
    }
    const int index = max_index.value_or(default_max_index(max_order));
    if (index < default_max_index(max_order)) {
        throw ValidationError("max_index " + std::to_string(index) + " is below 2K-2 = " +
                              std::to_string(default_max_index(max_order)));
    }
    const T& omega_eff = expansion != nullptr ? expansion->omega0 : potential.omega;

    SeriesResult<T> result{LaurentTable<T>(max_order, index), EnergySeries<T>{}};
    for (T& c : build_c0(potential, omega_eff, index)) {
        result.table.push(0, std::move(c));
    }
    result.series.quantum_number = n;
    result.series.hbar = potential.hbar;
    result.series.orders.reserve(static_cast<std::size_t>(max_order));
    for (int k = 1; k <= max_order; ++k) {
        extend_laurent(result.table, k, potential.mass, expansion, n);
        result.series.orders.push_back(energy_coefficient(result.table, k, potential.mass));
    }
    return result;
}

namespace detail
{

// C(x) and C'(x) of the truncated expansion.
template <Scalar T>
std::pair<T, T> log_derivative_with_slope(const LaurentTable<T>& table, const T& x, const T& hbar)
{
    if (is_zero(x)) {
        throw PoleAtOrigin("the logarithmic derivative has a pole at x = 0");
    }
    T value(0);
    T slope(0);
    T hbar_k(1);
    for (int k = 0; k <= table.max_order(); ++k) {
        // Row k carries x^(e + i) with e = 1 for k = 0 and e = 1 - 2k otherwise.
        const int e = k == 0 ? 1 : 1 - 2 * k;
        T row_value(0);
        T row_slope(0);
        const auto row = table.row(k);
        const int filled = table.filled(k);
        for (int i = filled - 1; i >= 0; --i) {
            const T& c = row[static_cast<std::size_t>(i)];
            row_value = row_value * x + c;
            row_slope = row_slope * x + T(e + i) * c;
        }
        // row_value = sum c_i x^i, row_slope = sum (e+i) c_i x^i
        value += hbar_k * ipow(x, e) * row_value;
        slope += hbar_k * ipow(x, e - 1) * row_slope;
        hbar_k *= hbar;
    }
    return {value, slope};
}

} // namespace detail

// C(x) = sum_k hbar^k C_k(x), truncated at the table's order and index.
template <Scalar T>
T eval_log_derivative(const LaurentTable<T>& table, const T& x, const T& hbar)
{
    return detail::log_derivative_with_slope(table, x, hbar).first;
}

// r(x) = hbar C'(x) + C(x)^2 - 2m [V(x) - E] for the truncated C and E.
template <Scalar T>
T riccati_residual(const PotentialSpec<T>& potential, const LaurentTable<T>& table, const EnergySeries<T>& series,
                   const T& x, const T& hbar)
{
    if (series.max_order() != table.max_order()) {
        throw ValidationError("series and table were computed to different orders");
    }
    auto [c, dc] = detail::log_derivative_with_slope(table, x, hbar);
    T energy(0);
    T hbar_k(hbar);
    for (int k = 1; k <= series.max_order(); ++k) {
        energy += series[k] * hbar_k;
        hbar_k *= hbar;
    }
    return hbar * dc + c * c - 2 * potential.mass * (potential(x) - energy);
}

} // namespace rpt

#endif
