#pragma once

#include <cstdint>
#include <vector>

#include "fpcutoff/barenblatt.hpp"

namespace fpcutoff {

// Row-major point cloud: point i lives at points[i*d .. i*d+d-1].
struct SampleCloud {
    int n = 0;
    int d = 0;
    std::uint64_t seed = 0;
    ModelParams params;
    std::vector<double> points;

    double coord(int i, int j) const { return points[static_cast<std::size_t>(i) * d + j]; }
};

// Exact sampler for the radial profile laws.
//
// Radial law of |X - x0|^2 under the chosen profile (C, b_eff) pair:
//   heavy tail:  (C/b_eff) * BetaPrime(d/2, p - d/2)
//   compact:     (C/b_eff) * Beta(d/2, p + 1)
//   gaussian:    coordinatewise normal (variance 1 stationary, 2 unit-time)
// Direction: normalized standard Gaussian vector.
//
// Work is split over fixed logical streams derived from (seed, block index),
// so the cloud is bit-identical for every thread count.
SampleCloud sample_barenblatt(const ModelParams& params, int n,
                              const std::vector<double>& x0, std::uint64_t seed,
                              Profile which = Profile::StationaryVinf,
                              int threads = 1);

// Sampler for the evolving solution at time t with initial center norm
// x0_norm * e_1: draws from the stationary profile and applies the exact
// pushforward x -> a(t) x + e^{-t} x0.
SampleCloud sample_flow(const ModelParams& params, double t,
                        const std::vector<double>& x0, int n, std::uint64_t seed,
                        int threads = 1);

}  // namespace fpcutoff
