#pragma once

#include <functional>

namespace fpcutoff {

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    int subdivisions = 0;
};

using Integrand = std::function<double(double)>;

// Adaptive Gauss-Kronrod (7-15) on a finite interval. Splits the worst
// interval until the summed error estimate drops below
// max(abs_tol, rel_tol * |value|, machine floor). Deterministic.
// Throws ConvergenceError (carrying the best estimate) after max_subdivisions.
QuadratureResult adaptive_integrate(const Integrand& f, double a, double b,
                                    double abs_tol, double rel_tol = 0.0,
                                    int max_subdivisions = 10000);

// Integral of f over (0, inf) through the substitution s = r/(1+r),
// which compactifies heavy tails onto (0, 1).
QuadratureResult integrate_half_line(const Integrand& f, double abs_tol,
                                     double rel_tol = 0.0,
                                     int max_subdivisions = 10000);

// Integral of f over (0, R) for a compactly supported integrand whose
// derivative may blow up at r = R (profile exponents p < 1): the outer half
// is integrated in the variable w = sqrt(R^2 - r^2), which absorbs the
// boundary singularity.
QuadratureResult integrate_compact_radial(const Integrand& f, double R,
                                          double abs_tol, double rel_tol = 0.0,
                                          int max_subdivisions = 10000);

// Full-space radial reduction: S_{d-1} * integral of f(r) r^{d-1} dr over
// (0, support_radius), with support_radius = inf for full-space profiles.
// f is the profile value at radius r (no volume weight of its own).
QuadratureResult radial_integral(const Integrand& f, int d, double support_radius,
                                 double abs_tol, double rel_tol = 0.0,
                                 int max_subdivisions = 10000);

// Surface measure of the unit sphere S^{d-1} in R^d: 2 pi^{d/2} / Gamma(d/2).
// d = 1 returns 2 (two half-lines).
double sphere_surface(int d);

}  // namespace fpcutoff
