#ifndef RPT_POTENTIAL_HPP
#define RPT_POTENTIAL_HPP

#include <map>
#include <string>

#include "errors.hpp"
#include "numeric.hpp"

namespace rpt
{

// V(x) = 1/2 m omega^2 x^2 + sum_i f_i x^(i+2), a single simple minimum at
// the origin. `couplings` maps i >= 1 to f_i; missing indices are zero.
template <Scalar T>
struct PotentialSpec {
    T mass{1};
    T omega{1};
    T hbar{1};
    std::map<int, T> couplings;

    T coupling(int i) const
    {
        auto it = couplings.find(i);
        return it == couplings.end() ? T(0) : it->second;
    }

    int max_coupling_index() const { return couplings.empty() ? 0 : couplings.rbegin()->first; }

    T operator()(const T& x) const
    {
        // Horner over the anharmonic part, then the harmonic term.
        T poly(0);
        for (int i = max_coupling_index(); i >= 1; --i) {
            poly = (poly + coupling(i)) * x;
        }
        return x * x * (mass * omega * omega / 2 + poly);
    }

    // V'(x)
    T derivative(const T& x) const
    {
        T poly(0);
        for (int i = max_coupling_index(); i >= 1; --i) {
            poly = (poly + T(i + 2) * coupling(i)) * x;
        }
        return x * (mass * omega * omega + poly);
    }

    void validate() const
    {
        if (!(mass > 0)) {
            throw ValidationError("mass must be positive");
        }
        if (!(omega > 0)) {
            throw ValidationError("omega must be positive");
        }
        if (!(hbar > 0)) {
            throw ValidationError("hbar must be positive");
        }
        for (const auto& [i, f] : couplings) {
            if (i < 1) {
                throw ValidationError("coupling index " + std::to_string(i) + " must be >= 1");
            }
            if (!is_finite(f)) {
                throw ValidationError("coupling f_" + std::to_string(i) + " is not finite");
            }
        }
    }

    bool operator==(const PotentialSpec&) const = default;
};

template <Scalar To, Scalar From>
PotentialSpec<To> convert_potential(const PotentialSpec<From>& p)
{
    PotentialSpec<To> out;
    out.mass = scalar_cast<To>(p.mass);
    out.omega = scalar_cast<To>(p.omega);
    out.hbar = scalar_cast<To>(p.hbar);
    for (const auto& [i, f] : p.couplings) {
        out.couplings.emplace(i, scalar_cast<To>(f));
    }
    return out;
}

// V(x) = (x^2 + lambda x^6) / 2 with m = omega = hbar = 1.
template <Scalar T>
PotentialSpec<T> sextic_potential(const T& lambda)
{
    PotentialSpec<T> p;
    if (lambda != 0) {
        p.couplings.emplace(4, lambda / 2);
    }
    return p;
}

inline PotentialSpec<Rational> harmonic_potential(const Rational& mass = 1, const Rational& omega = 1,
                                                  const Rational& hbar = 1)
{
    PotentialSpec<Rational> p;
    p.mass = mass;
    p.omega = omega;
    p.hbar = hbar;
    return p;
}

} // namespace rpt

#endif
