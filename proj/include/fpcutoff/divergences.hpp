#pragma once

#include <functional>

#include "fpcutoff/barenblatt.hpp"

namespace fpcutoff {

enum class ReportSource { ClosedForm, QuadratureOracle, DiscreteOt };

// The triple (W2^2, H_m, I_m) at one (d, t, |x0|). A fast-regime profile
// without a finite second moment makes all three +inf (tagged value, not an
// error, so sweeps can record it and continue).
struct DivergenceReport {
    double w2_sq = 0.0;
    double entropy = 0.0;
    double fisher = 0.0;
    int d = 0;
    double t = 0.0;
    double x0_norm = 0.0;
    double m = 0.0;
    ReportSource source = ReportSource::ClosedForm;
};

// W2^2(v(t), v_inf) = (a - 1)^2 M_2 + x0^2 e^{-2t}.
double w2_sq_flow(const ModelParams& params, double t, double x0_norm);

// H_m(v(t) | v_inf): non-Gaussian regimes use
//   -(d/q) expm1(q ln a) N_m + (a^2 - 1)/2 M_2 + e^{-2t} x0^2 / 2,
// q = (2 alpha - 1)/alpha, switching to a three-term series in q ln a when
// |2 alpha - 1| < 1e-8; the Gaussian regime uses the normal-law relative entropy.
double entropy_flow(const ModelParams& params, double t, double x0_norm);

// I_m(v(t) | v_inf) = h^2 + a^2 (1 - a^{-1/alpha})^2 M_2.
double fisher_flow(const ModelParams& params, double t, double x0_norm);

DivergenceReport distances_closed_form(const ModelParams& params, double t,
                                       double x0_norm);

// A radial probability density about the origin, for oracle-style integrals.
struct RadialDensity {
    std::function<double(double)> value;  // density at radius r
    double support_radius = 0.0;          // +inf for full-space densities
};

// Bregman form of the relative entropy:
//   1/(m-1) * integral( f^m - g^m - m g^{m-1} (f - g) ),  g = v_inf.
// Valid for m < 1 always, and for m > 1 only when supp f is contained in
// supp v_inf (otherwise the cross term is lost and a PreconditionError is
// thrown). Agrees with entropy_flow when f = v(t, .) centered at the origin.
double entropy_bregman_form(const ModelParams& params, const RadialDensity& f);

}  // namespace fpcutoff
