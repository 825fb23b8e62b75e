#pragma once

#include <optional>

namespace fpcutoff {

enum class Regime { FastDiffusion, Gaussian, PorousMedium };

// Everything derived from one (d, m) pair. Immutable after construction;
// the single source of truth for every downstream formula.
//
// Profile conventions (radius r = |x|):
//   stationary state   v_inf(r) = (C_stat + s*b*r^2)^(-s*p)
//   unit-time profile  B(r)     = (c + s*alpha*b*r^2)^(-s*p)
// with s = +1 in the fast regime (m < 1) and s = -1 in the porous regime
// (m > 1, positive part). The two are linked by v_inf(x) = alpha^{-alpha d}
// B(x / alpha^alpha), which forces b_B = alpha*b and C_stat = alpha^{2 alpha - 1} c.
// The Gaussian regime (|m - 1| <= 1e-12) uses exact normal-law forms and
// stores p = inf, b = 0, c = C_stat = 1 (their m -> 1 limits).
struct ModelParams {
    int d = 0;
    double m = 0.0;
    double alpha = 0.0;   // 1 / (2 - d(1-m))
    double p = 0.0;       // 1 / |1 - m|
    double b = 0.0;       // |1 - m| / (2m), scale of the stationary profile
    double c = 0.0;       // normalization of the unit-time profile B
    double C_stat = 0.0;  // normalization of the stationary profile v_inf
    double beta = 0.0;    // |2 alpha - 1|
    Regime regime = Regime::Gaussian;
    bool second_moment_finite = true;  // fast regime: m > d/(d+2)

    // Cached logs of the normalization constants (log-domain formulas).
    double log_c = 0.0;
    double log_C_stat = 0.0;
};

ModelParams params_from_m(int d, double m);

// m = ((d-2) alpha + 1) / (d alpha); alpha = 1/2 gives the Gaussian regime.
ModelParams params_from_alpha(int d, double alpha);

// Normalization constant of the profile (k + s b r^2)^(-s p) as a probability
// density on R^d. Full space (fast) requires p > d/2.
double normalization_constant(int d, double p, double b, Regime regime);
double log_normalization_constant(int d, double p, double b, Regime regime);

// M_a = integral of |x|^a against the *stationary* profile, in log domain.
// Throws InfiniteMomentError in the fast regime when p <= (d+a)/2.
double moment(const ModelParams& params, double a);

// N_m = integral of v_inf^m. Finite in the fast regime iff p > d/(2m).
double lm_norm(const ModelParams& params);

enum class Profile { UnitTimeB, StationaryVinf };

// Pointwise profile value at |x| = radius.
double density_at(const ModelParams& params, double radius, Profile which);

// Support radius of the chosen profile; +inf outside the porous regime.
double support_radius(const ModelParams& params, Profile which);

enum class AsymptoticMode { FixedAlpha, FixedM };

struct AsymptoticTargets {
    double m2_over_d = 0.0;                 // lim M_2 / d
    double nm = 0.0;                        // lim N_m
    std::optional<double> c_stat_over_bd;   // lim C_stat / (b d), fixed-m only
};

// d -> infinity limits: fixed alpha gives (2 pi e)^{2 alpha - 1} for both;
// fixed m > 1 gives 1/(2 pi e) for both and for C_stat/(b d).
AsymptoticTargets asymptotic_targets(AsymptoticMode mode, double value);

}  // namespace fpcutoff
