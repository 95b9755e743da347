#ifndef RPT_QUASI_EXACT_HPP
#define RPT_QUASI_EXACT_HPP

// Quasi-exactly solvable sextic oscillator in units hbar = 2m = 1:
//
//   -U'' + (V2 x^2 + V4 x^4 + V6 x^6) U = E U
//
// With V2 = V4^2/(4 V6) - 3 sqrt(V6) the ground state is
// exp(-V4 x^2/(4 sqrt(V6)) - sqrt(V6) x^4/4) with E = V4/(2 sqrt(V6)).

#include <string>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"
#include "potential.hpp"

namespace rpt
{

template <Scalar T>
struct QuasiExactConfig {
    T v2;
    T v4;
    T v6;
    PotentialSpec<T> potential; // m = 1/2, hbar = 1, m omega^2 / 2 = V2
    T energy;                   // exact ground-state energy
    T gaussian_coefficient;     // a in exp(-a x^2 - b x^4)
    T quartic_coefficient;      // b
};

template <Scalar T>
QuasiExactConfig<T> quasi_exact_config(const T& v4, const T& v6)
{
    if (!(v6 > 0)) {
        throw ValidationError("V6 must be positive");
    }
    const T root_v6 = sqrt_of(v6);
    const T v2 = v4 * v4 / (4 * v6) - 3 * root_v6;
    if (!(v2 > 0)) {
        throw NoMinimum("V2 = V4^2/(4 V6) - 3 sqrt(V6) = " + to_string(v2) + " is not positive; no simple minimum");
    }

    QuasiExactConfig<T> cfg{v2, v4, v6, PotentialSpec<T>{}, v4 / (2 * root_v6), v4 / (4 * root_v6), root_v6 / 4};
    cfg.potential.mass = T(1) / 2;
    cfg.potential.hbar = T(1);
    // m omega^2 / 2 = V2 with m = 1/2  =>  omega = 2 sqrt(V2)
    cfg.potential.omega = 2 * sqrt_of(v2);
    if (v4 != 0) {
        cfg.potential.couplings.emplace(2, v4);
    }
    cfg.potential.couplings.emplace(4, v6);
    return cfg;
}

// Closed forms of the first six ground-state coefficients E_1..E_K (K <= 6)
// of the sextic V2 x^2 + V4 x^4 + V6 x^6, as printed for units hbar = 2m = 1.
//
// Note: these forms correspond to anharmonic couplings (2 V4, 2 V6) in the
// recursion; see coupling_doubled_potential().
template <Scalar T>
std::vector<T> quasi_exact_corrections(const T& v2, const T& v4, const T& v6, int max_order)
{
    if (!(v2 > 0)) {
        throw ValidationError("V2 must be positive");
    }
    if (max_order < 1 || max_order > 6) {
        throw ValidationError("closed forms are available for orders 1..6, got " + std::to_string(max_order));
    }
    const T r = sqrt_of(v2);
    const T v2_2 = v2 * v2;
    const T v4_2 = v4 * v4;
    const T v4_3 = v4_2 * v4;
    const T v6_2 = v6 * v6;

    std::vector<T> e;
    e.push_back(r);
    e.push_back(3 * v4 / (2 * v2));
    e.push_back(3 * (-7 * v4_2 + 5 * v2 * v6) / (4 * v2_2 * r));
    e.push_back(-9 * (-37 * v4_3 + 40 * v2 * v4 * v6) / (8 * v2_2 * v2_2));
    e.push_back(-15 * (2059 * v4_2 * v4_2 - 2992 * v2 * v4_2 * v6 + 466 * v2_2 * v6_2) /
                (64 * v2_2 * v2_2 * v2 * r));
    e.push_back(9 * (101859 * v4_3 * v4_2 - 186380 * v2 * v4_3 * v6 + 61420 * v2_2 * v4 * v6_2) /
                (128 * v2_2 * v2_2 * v2_2 * v2));
    e.resize(static_cast<std::size_t>(max_order));
    return e;
}

// The potential whose recursion reproduces quasi_exact_corrections(): same
// mass, hbar and V2, anharmonic couplings doubled.
template <Scalar T>
PotentialSpec<T> coupling_doubled_potential(const PotentialSpec<T>& p)
{
    PotentialSpec<T> out = p;
    for (auto& [i, f] : out.couplings) {
        f *= 2;
    }
    return out;
}

} // namespace rpt

#endif
