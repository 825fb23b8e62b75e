#pragma once

#include <functional>

#include "fpcutoff/barenblatt.hpp"
#include "fpcutoff/sampling.hpp"

namespace fpcutoff {

// One-dimensional law described by its CDF and a bracket that contains all of
// its mass. For heavy-tailed laws the bracket is expanded internally until it
// encloses the requested quantile.
struct Cdf1D {
    std::function<double(double)> cdf;
    double lo = -1.0;
    double hi = 1.0;
};

// Closed-form CDF of the one-dimensional evolving solution at time t started
// from a point mass at x0 (d must be 1).
Cdf1D flow_cdf_1d(const ModelParams& params, double t, double x0);

// Closed-form CDF of the one-dimensional stationary profile centered at x0.
Cdf1D stationary_cdf_1d(const ModelParams& params, double x0);

// Quantile of a Cdf1D by bisection; exposed for tests.
double quantile_by_bisection(const Cdf1D& law, double q);

// Squared-distance transport cost between two one-dimensional laws via the
// quantile coupling: a midpoint Riemann sum of (F^{-1}(q) - G^{-1}(q))^2 over
// q in (0,1). The partition is graded toward the endpoints (edges
// sin^2(pi j / (2 n))) so heavy-tailed quantiles are resolved without wasting
// nodes in the bulk.
double ot_1d_quantile(const Cdf1D& mu, const Cdf1D& nu, int n_quantiles);

// Empirical squared-distance transport cost between two equal-size clouds:
// exact optimal assignment (Jonker-Volgenant shortest augmenting paths),
// mean of the squared matching costs. Throws UnsupportedSizeError above 2048
// points.
double ot_assignment(const SampleCloud& a, const SampleCloud& b);

}  // namespace fpcutoff
