#pragma once

#include "fpcutoff/barenblatt.hpp"

namespace fpcutoff {

// Closed-form solution from a Dirac at x0, reduced to scale and shift:
// v(t, x) = a(t)^{-d} v_inf((x - h(t)) / a(t)), a = (1 - e^{-t/alpha})^alpha,
// h = e^{-t} x0.
struct FlowState {
    ModelParams params;
    double t = 0.0;
    double x0_norm = 0.0;
    double a = 0.0;
    double h_norm = 0.0;
};

// a(t) = (1 - e^{-t/alpha})^alpha, evaluated as exp(alpha log1p(-e^{-t/alpha}));
// the naive form loses all precision once t/alpha > 40.
double scale_factor(double t, double alpha);

FlowState flow_state(const ModelParams& params, double t, double x0_norm);

// Density of v(t, .) at distance radius from the moving center h(t).
double solution_density(const FlowState& state, double radius_from_center);

// Self-similar source solution u(t, x) = t^{-alpha d} B((x - x0)/t^alpha),
// evaluated at |x - x0| = radius_from_x0.
double self_similar_density(const ModelParams& params, double t,
                            double radius_from_x0);

// Relative residual of the algebraic identity u(t, x) = R(t)^{-d} v(tau(t), x/R(t))
// with R(t) = (1 + t/alpha)^alpha and tau(t) = alpha log(1 + t/alpha).
// Points are taken on the axis through x0: x = (x0_norm + radius) * e_1.
// Contract: <= 1e-10 for all tested inputs.
double change_of_variables_residual(const ModelParams& params, double t,
                                    double radius, double x0_norm);

// tau(t) = alpha log(1 + t/alpha) and its inverse alpha (e^{t/alpha} - 1).
double time_rescaling(double t, double alpha);
double time_rescaling_inverse(double tau, double alpha);

}  // namespace fpcutoff
