#pragma once

#include <cstdint>

namespace fpcutoff {

// SplitMix64: seedable, counter-based, trivially splittable. Every random
// quantity in the library flows through this generator so that identical
// seeds give bit-identical results on any platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    // Independent stream for a worker index, derived from (seed, worker).
    static Rng derive_stream(std::uint64_t seed, std::uint64_t worker);

    std::uint64_t next_u64();

    // Uniform on (0, 1): 53 random bits, offset away from exact 0.
    double uniform01();

    // Standard normal via the Marsaglia polar method (deterministic rejection).
    double gaussian();

    // Gamma(shape, 1) via Marsaglia-Tsang squeeze; shape < 1 boosted through
    // Gamma(shape + 1) * U^{1/shape}.
    double gamma(double shape);

    double chi_squared(double dof) { return 2.0 * gamma(0.5 * dof); }

    // Beta(a, b) = G_a / (G_a + G_b).
    double beta(double a, double b);

    // Beta-prime(a, b) = G_a / G_b.
    double beta_prime(double a, double b);

  private:
    std::uint64_t state_;
    bool has_cached_gaussian_ = false;
    double cached_gaussian_ = 0.0;
};

}  // namespace fpcutoff
