#include "fpcutoff/sampling.hpp"

#include <cmath>
#include <cstddef>

#include "fpcutoff/dynamics.hpp"
#include "fpcutoff/errors.hpp"
#include "fpcutoff/rng.hpp"
#include "fpcutoff/threading.hpp"

namespace fpcutoff {

namespace {

constexpr std::size_t kBlock = 4096;  // fixed logical stream granularity

// Squared radius draw for one point.
double draw_r2(Rng& rng, const ModelParams& params, double norm_c, double b_eff) {
    const double hd = 0.5 * params.d;
    switch (params.regime) {
        case Regime::FastDiffusion: {
            if (!(params.p > hd)) {
                throw DomainError("radial law needs p > d/2 for the heavy-tail profile");
            }
            const double y = rng.beta_prime(hd, params.p - hd);
            return (norm_c / b_eff) * y;
        }
        case Regime::PorousMedium: {
            const double z = rng.beta(hd, params.p + 1.0);
            return (norm_c / b_eff) * z;
        }
        case Regime::Gaussian:
            break;
    }
    throw DomainError("gaussian regime samples coordinatewise");
}

void fill_block(double* out, std::size_t lo, std::size_t hi, const ModelParams& params,
                const std::vector<double>& center, double scale, Rng rng, double norm_c,
                double b_eff) {
    const int d = params.d;
    std::vector<double> dir(d);
    for (std::size_t i = lo; i < hi; ++i) {
        double* row = out + i * d;
        if (params.regime == Regime::Gaussian) {
            const double sigma = std::sqrt(norm_c) * scale;  // norm_c carries the variance here
            for (int j = 0; j < d; ++j) row[j] = sigma * rng.gaussian();
        } else {
            const double r = std::sqrt(draw_r2(rng, params, norm_c, b_eff)) * scale;
            double nrm2 = 0.0;
            do {
                nrm2 = 0.0;
                for (int j = 0; j < d; ++j) {
                    dir[j] = rng.gaussian();
                    nrm2 += dir[j] * dir[j];
                }
            } while (!(nrm2 > 0.0));
            const double inv = r / std::sqrt(nrm2);
            for (int j = 0; j < d; ++j) row[j] = dir[j] * inv;
        }
        for (int j = 0; j < d; ++j) row[j] += center[j];
    }
}

SampleCloud sample_impl(const ModelParams& params, int n, const std::vector<double>& center,
                        std::uint64_t seed, Profile which, int threads, double scale) {
    if (n <= 0) throw DomainError("sample count must be positive");
    if (static_cast<int>(center.size()) != params.d) {
        throw DomainError("center dimension does not match d");
    }
    SampleCloud cloud;
    cloud.n = n;
    cloud.d = params.d;
    cloud.seed = seed;
    cloud.params = params;
    cloud.points.assign(static_cast<std::size_t>(n) * params.d, 0.0);

    double norm_c = 0.0;
    double b_eff = 1.0;
    if (params.regime == Regime::Gaussian) {
        norm_c = which == Profile::StationaryVinf ? 1.0 : 2.0;  // per-coordinate variance
    } else if (which == Profile::StationaryVinf) {
        norm_c = params.C_stat;
        b_eff = params.b;
    } else {
        norm_c = params.c;
        b_eff = params.alpha * params.b;
    }

    parallel_for_blocks(static_cast<std::size_t>(n), resolve_threads(threads), kBlock,
                        [&](std::size_t bi, std::size_t lo, std::size_t hi) {
                            fill_block(cloud.points.data(), lo, hi, params, center, scale,
                                       Rng::derive_stream(seed, bi), norm_c, b_eff);
                        });
    return cloud;
}

}  // namespace

SampleCloud sample_barenblatt(const ModelParams& params, int n, const std::vector<double>& x0,
                              std::uint64_t seed, Profile which, int threads) {
    std::vector<double> center = x0.empty() ? std::vector<double>(params.d, 0.0) : x0;
    return sample_impl(params, n, center, seed, which, threads, 1.0);
}

SampleCloud sample_flow(const ModelParams& params, double t, const std::vector<double>& x0,
                        int n, std::uint64_t seed, int threads) {
    if (!(t > 0.0)) throw DomainError("flow sampler needs t > 0");
    if (!x0.empty() && static_cast<int>(x0.size()) != params.d) {
        throw DomainError("center dimension does not match d");
    }
    // Draw from the centered stationary law, scale by a(t), translate by the
    // contracted center h = e^{-t} x0.
    const double a = scale_factor(t, params.alpha);
    const double decay = std::exp(-t);
    std::vector<double> h(params.d, 0.0);
    for (std::size_t j = 0; j < x0.size(); ++j) h[j] = decay * x0[j];
    return sample_impl(params, n, h, seed, Profile::StationaryVinf, threads, a);
}

}  // namespace fpcutoff
