#ifndef RPT_SEXTIC_CLOSED_FORM_HPP
#define RPT_SEXTIC_CLOSED_FORM_HPP

#include <array>

#include "numeric.hpp"

namespace rpt
{

// [E_1, E_3, E_5, E_7] of the renormalized sextic series for
// V = (x^2 + lambda x^6)/2, m = omega = hbar = 1, with
// omega^2 = omega0^2 + omega_2^2 hbar^2 closed at hbar = 1. At omega0 = 1
// these reduce to the plain perturbation series. Used as a test oracle.
template <Scalar T>
std::array<T, 4> sextic_closed_form(int n, const T& lambda, const T& omega0)
{
    const T nn(n);
    const T n2 = nn * nn;
    const T n3 = n2 * nn;
    const T odd = 1 + 2 * nn;
    const T w2 = omega0 * omega0;
    const T shift = w2 * (1 - w2); // omega0^2 (1 - omega0^2)
    const T l2 = lambda * lambda;

    const T p1 = 3 + 2 * nn + 2 * n2;
    const T p2 = 3495 + 4538 * nn + 5324 * n2 + 1572 * n3 + 786 * n2 * n2;
    const T p3 = 247935 + 444014 * nn + 600050 * n2 + 323868 * n3 + 191424 * n2 * n2 + 35388 * n2 * n3 +
                 11796 * n3 * n3;

    const T e1 = omega0 * (nn + T(1) / 2);
    const T e3 = odd * (5 * lambda * p1 + 4 * shift) / (16 * ipow(omega0, 3));
    const T e5 = -odd * (l2 * p2 + 120 * lambda * shift * p1 + 16 * shift * shift) / (256 * ipow(omega0, 7));
    const T e7 = odd *
                 (5 * l2 * lambda * p3 + 28 * l2 * shift * p2 + 1200 * lambda * shift * shift * p1 +
                  64 * shift * shift * shift) /
                 (2048 * ipow(omega0, 11));
    return {e1, e3, e5, e7};
}

} // namespace rpt

#endif
