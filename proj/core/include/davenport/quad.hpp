#pragma once

#include <functional>
#include <vector>

#include "davenport/errors.hpp"

namespace davenport {

/*
 * Breakpoint-aware composite Gauss-Legendre quadrature. The integrands here
 * are piecewise smooth with known discontinuity locations (multiples of 1/N
 * for {yN}), so a fixed-order rule on panels split at the breakpoints is both
 * deterministic and accurate; no adaptivity. Gauss nodes are interior, so a
 * sample never lands on a discontinuity.
 */

// Composite Gauss-Legendre (order 16): panels split at the breakpoints and at
// a fixed subdivision of length <= 1/64. tol is the absolute target the panel
// layout is sized for (default 1e-12); the layout does not adapt to it.
double integrate(const std::function<double(double)>& g, double a, double b,
                 const std::vector<double>& breakpoints, double tol = 1e-12);

// sin(pi n y) cos(pi n y) sin(pi m y) cos(pi m y); integral over [0,1] is 1/8
// if n = m, 0 otherwise.
std::function<double(double)> orthogonality_integrand(int n, int m);
double orthogonality_integral(int n, int m);

// ({y N} - 1/2) sin(pi y m) cos(pi y m); integral over [0,1] is -N/(4 pi m)
// if N | m, 0 otherwise. Breakpoints at multiples of 1/N.
std::function<double(double)> frac_sincos_integrand(int N, int m);
double frac_sincos_integral(int N, int m);

// Built-in phi for the summation-by-parts residual: square y^2, sine sin y,
// cubic c3 y^3 + c2 y^2 + c1 y + c0.
struct PhiSpec {
    enum class Kind { square, sine, cubic };
    Kind kind = Kind::square;
    double c3 = 1.0, c2 = 0.0, c1 = 0.0, c0 = 0.0; // cubic coefficients

    static PhiSpec square() { return PhiSpec{Kind::square, 0, 0, 0, 0}; }
    static PhiSpec sine() { return PhiSpec{Kind::sine, 0, 0, 0, 0}; }
    static PhiSpec cubic(double a3 = 1.0, double a2 = 0.0, double a1 = 0.0, double a0 = 0.0) {
        return PhiSpec{Kind::cubic, a3, a2, a1, a0};
    }
};

double phi_value(const PhiSpec& phi, double y);
double phi_deriv(const PhiSpec& phi, double y);

// Residual of the summation formula
//   sum_{a < n <= b} phi(n) = int_a^b phi + int_a^b ({y} - 1/2) phi'(y) dy
//                             + ({a} - 1/2) phi(a) - ({b} - 1/2) phi(b),
// with both integrals split at the integer breakpoints of {y}.
double euler_maclaurin_residual(const PhiSpec& phi, double a, double b);

} // namespace davenport
