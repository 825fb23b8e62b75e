#include "fpcutoff/dynamics.hpp"

#include <cmath>

#include "fpcutoff/errors.hpp"

namespace fpcutoff {

double scale_factor(double t, double alpha) {
    if (!(t > 0.0)) throw DomainError("scale_factor: t must be positive");
    if (!(alpha > 0.0)) throw DomainError("scale_factor: alpha must be positive");
    return std::exp(alpha * std::log1p(-std::exp(-t / alpha)));
}

FlowState flow_state(const ModelParams& params, double t, double x0_norm) {
    if (!(x0_norm >= 0.0)) throw DomainError("flow_state: x0_norm must be >= 0");
    FlowState s;
    s.params = params;
    s.t = t;
    s.x0_norm = x0_norm;
    s.a = scale_factor(t, params.alpha);
    s.h_norm = std::exp(-t) * x0_norm;
    return s;
}

double solution_density(const FlowState& state, double radius_from_center) {
    if (!(radius_from_center >= 0.0)) {
        throw DomainError("solution_density: radius must be >= 0");
    }
    const double a = state.a;
    return std::pow(a, -state.params.d) *
           density_at(state.params, radius_from_center / a, Profile::StationaryVinf);
}

double self_similar_density(const ModelParams& params, double t,
                            double radius_from_x0) {
    if (!(t > 0.0)) throw DomainError("self_similar_density: t must be positive");
    if (!(radius_from_x0 >= 0.0)) {
        throw DomainError("self_similar_density: radius must be >= 0");
    }
    const double ta = std::pow(t, params.alpha);
    return std::pow(t, -params.alpha * params.d) *
           density_at(params, radius_from_x0 / ta, Profile::UnitTimeB);
}

double time_rescaling(double t, double alpha) {
    if (!(t > 0.0)) throw DomainError("time_rescaling: t must be positive");
    return alpha * std::log1p(t / alpha);
}

double time_rescaling_inverse(double tau, double alpha) {
    if (!(tau > 0.0)) throw DomainError("time_rescaling_inverse: tau must be positive");
    return alpha * std::expm1(tau / alpha);
}

double change_of_variables_residual(const ModelParams& params, double t,
                                    double radius, double x0_norm) {
    if (!(t > 0.0)) throw DomainError("change_of_variables_residual: t must be positive");
    if (!(radius >= 0.0) || !(x0_norm >= 0.0)) {
        throw DomainError("change_of_variables_residual: radius and x0_norm must be >= 0");
    }
    // Both sides evaluated at x = (x0_norm + radius) e_1, so |x - x0| = radius.
    const double lhs = self_similar_density(params, t, radius);

    const double alpha = params.alpha;
    const double R = std::pow(1.0 + t / alpha, alpha);
    const double tau = time_rescaling(t, alpha);
    const FlowState vstate = flow_state(params, tau, x0_norm);
    const double y = (x0_norm + radius) / R;                // |x| / R along the axis
    const double dist = std::fabs(y - vstate.h_norm);        // to the moving center
    const double rhs = std::pow(R, -params.d) * solution_density(vstate, dist);

    const double scale = std::max(std::fabs(lhs), std::fabs(rhs));
    if (scale == 0.0) return 0.0;
    return std::fabs(lhs - rhs) / scale;
}

}  // namespace fpcutoff
