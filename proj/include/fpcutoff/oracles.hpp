#pragma once

#include "fpcutoff/barenblatt.hpp"
#include "fpcutoff/quadrature.hpp"

namespace fpcutoff {

// Numerical cross-checks for the closed forms. Everything here evaluates the
// profile densities pointwise and integrates them with adaptive
// Gauss-Kronrod panels; no closed-form moment or divergence algebra is
// reused on this side.

// Integrate a radial profile integrand f(r) against r^{d-1} dS over the
// stationary support (the full half-line in the heavy-tail and gaussian
// regimes).
QuadratureResult radial_quadrature(const Integrand& radial_integrand,
                                   const ModelParams& params, double tolerance);

// \int |x|^a v_inf(|x|) dx by quadrature.
double moment_quadrature(const ModelParams& params, double a);

// \int v_inf(|x|)^m dx by quadrature.
double lm_norm_quadrature(const ModelParams& params);

// \int profile dx, for normalization checks.
double normalization_quadrature(const ModelParams& params, Profile which);

// Free-energy gap between the evolving solution at time t (started from a
// point mass at x0_norm * e_1) and the stationary profile, by quadrature.
double entropy_quadrature(const ModelParams& params, double t, double x0_norm);

// Production functional of the evolving solution at time t, by quadrature.
double fisher_quadrature(const ModelParams& params, double t, double x0_norm);

// Centered difference of the closed-form entropy along the flow against the
// closed-form production term.
struct EntropyProductionCheck {
    double dh_dt = 0.0;
    double minus_fisher = 0.0;
    double rel_gap = 0.0;
};

EntropyProductionCheck entropy_production_check(const ModelParams& params, double t,
                                                double x0_norm, double step);

}  // namespace fpcutoff
