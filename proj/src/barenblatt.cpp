#include "fpcutoff/barenblatt.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "fpcutoff/errors.hpp"
#include "fpcutoff/special_functions.hpp"

namespace fpcutoff {

namespace {

constexpr double kGaussianWindow = 1e-12;  // |m - 1| below this is the Gaussian regime
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLogPi = 1.1447298858494001741434273513531;
constexpr double kTwoPiE = 17.079468445347134130927601958598;

ModelParams make_params(int d, double m, double alpha) {
    ModelParams q;
    q.d = d;
    q.m = m;
    q.alpha = alpha;
    if (std::fabs(m - 1.0) <= kGaussianWindow) {
        q.regime = Regime::Gaussian;
        q.p = kInf;
        q.b = 0.0;
        q.beta = std::fabs(2.0 * alpha - 1.0);
        q.c = q.C_stat = 1.0;
        q.log_c = q.log_C_stat = 0.0;
        q.second_moment_finite = true;
        return q;
    }
    q.regime = m < 1.0 ? Regime::FastDiffusion : Regime::PorousMedium;
    q.p = 1.0 / std::fabs(1.0 - m);
    q.b = std::fabs(1.0 - m) / (2.0 * m);
    q.beta = std::fabs(2.0 * alpha - 1.0);
    q.log_C_stat = log_normalization_constant(d, q.p, q.b, q.regime);
    q.log_c = log_normalization_constant(d, q.p, alpha * q.b, q.regime);
    q.C_stat = std::exp(q.log_C_stat);
    q.c = std::exp(q.log_c);
    q.second_moment_finite =
        q.regime == Regime::PorousMedium || q.p > 0.5 * (d + 2);
    return q;
}

void check_dimension(int d) {
    if (d < 1) throw DomainError("dimension d must be >= 1");
}

}  // namespace

ModelParams params_from_m(int d, double m) {
    check_dimension(d);
    if (!(m > 0.0) || !std::isfinite(m)) {
        throw DomainError("params_from_m: m must be positive and finite");
    }
    const double existence = static_cast<double>(d - 2) / d;
    if (!(m > existence)) {
        std::ostringstream os;
        os << "params_from_m: existence requires m > (d-2)/d = " << existence
           << ", got m = " << m;
        throw ConstraintError(os.str());
    }
    const double alpha = 1.0 / (2.0 - d * (1.0 - m));
    return make_params(d, m, alpha);
}

ModelParams params_from_alpha(int d, double alpha) {
    check_dimension(d);
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw DomainError("params_from_alpha: alpha must be positive and finite");
    }
    const double m = (static_cast<double>(d - 2) * alpha + 1.0) / (d * alpha);
    const double existence = static_cast<double>(d - 2) / d;
    if (!(m > existence)) {
        std::ostringstream os;
        os << "params_from_alpha: derived m = " << m
           << " violates existence m > (d-2)/d = " << existence;
        throw ConstraintError(os.str());
    }
    return make_params(d, m, alpha);
}

double log_normalization_constant(int d, double p, double b, Regime regime) {
    check_dimension(d);
    if (!(b > 0.0)) throw DomainError("normalization_constant: b must be positive");
    if (!(p > 0.0)) throw DomainError("normalization_constant: p must be positive");
    const double hd = 0.5 * d;
    if (regime == Regime::FastDiffusion) {
        if (!(p > hd)) {
            std::ostringstream os;
            os << "normalization_constant: full-space profile requires p > d/2 = "
               << hd << ", got p = " << p;
            throw ConstraintError(os.str());
        }
        return (hd * kLogPi - hd * std::log(b) + log_gamma(p - hd) - log_gamma(p)) /
               (p - hd);
    }
    if (regime == Regime::PorousMedium) {
        return (hd * std::log(b) - hd * kLogPi + log_gamma(p + 1.0 + hd) -
                log_gamma(p + 1.0)) /
               (p + hd);
    }
    throw DomainError("normalization_constant: Gaussian regime has no (p, b) profile");
}

double normalization_constant(int d, double p, double b, Regime regime) {
    return std::exp(log_normalization_constant(d, p, b, regime));
}

double moment(const ModelParams& params, double a) {
    if (!(a >= 0.0) || !std::isfinite(a)) {
        throw DomainError("moment: order a must be nonnegative and finite");
    }
    const double hd = 0.5 * params.d;
    const double ha = 0.5 * a;
    if (params.regime == Regime::Gaussian) {
        return std::exp(ha * std::log(2.0) + log_gamma(hd + ha) - log_gamma(hd));
    }
    const double p = params.p;
    const double log_scale = ha * (params.log_C_stat - std::log(params.b));
    if (params.regime == Regime::FastDiffusion) {
        if (!(p > hd + ha)) {
            std::ostringstream os;
            os << "moment: order-" << a << " moment diverges; requires p > (d+a)/2 = "
               << hd + ha << ", got p = " << p;
            throw InfiniteMomentError(os.str());
        }
        return std::exp(log_scale + log_gamma(hd + ha) + log_gamma(p - hd - ha) -
                        log_gamma(hd) - log_gamma(p - hd));
    }
    return std::exp(log_scale + log_gamma(hd + ha) + log_gamma(p + 1.0 + hd) -
                    log_gamma(hd) - log_gamma(p + 1.0 + hd + ha));
}

double lm_norm(const ModelParams& params) {
    if (params.regime == Regime::Gaussian) return 1.0;
    const double hd = 0.5 * params.d;
    const double pm = params.p * params.m;
    const double log_b = std::log(params.b);
    if (params.regime == Regime::FastDiffusion) {
        if (!(pm > hd)) {
            std::ostringstream os;
            os << "lm_norm: requires p > d/(2m), i.e. p*m > d/2 = " << hd
               << ", got p*m = " << pm;
            throw ConstraintError(os.str());
        }
        return std::exp((hd - pm) * params.log_C_stat - hd * log_b + hd * kLogPi +
                        log_gamma(pm - hd) - log_gamma(pm));
    }
    return std::exp((pm + hd) * params.log_C_stat - hd * log_b + hd * kLogPi +
                    log_gamma(pm + 1.0) - log_gamma(pm + 1.0 + hd));
}

double density_at(const ModelParams& params, double radius, Profile which) {
    if (!(radius >= 0.0)) throw DomainError("density_at: radius must be >= 0");
    const double r2 = radius * radius;
    if (params.regime == Regime::Gaussian) {
        const double hd = 0.5 * params.d;
        if (which == Profile::StationaryVinf) {
            return std::exp(-hd * std::log(2.0 * M_PI) - 0.5 * r2);
        }
        return std::exp(-hd * std::log(4.0 * M_PI) - 0.25 * r2);
    }
    const double scale = which == Profile::StationaryVinf ? params.b : params.alpha * params.b;
    const double log_norm = which == Profile::StationaryVinf ? params.log_C_stat : params.log_c;
    const double norm = which == Profile::StationaryVinf ? params.C_stat : params.c;
    if (params.regime == Regime::FastDiffusion) {
        // (norm + scale r^2)^(-p), evaluated via log1p about the cached log-norm.
        return std::exp(-params.p * (log_norm + std::log1p(scale * r2 / norm)));
    }
    const double arg = norm - scale * r2;
    if (arg <= 0.0) return 0.0;
    return std::exp(params.p * std::log(arg));
}

double support_radius(const ModelParams& params, Profile which) {
    if (params.regime != Regime::PorousMedium) return kInf;
    if (which == Profile::StationaryVinf) return std::sqrt(params.C_stat / params.b);
    return std::sqrt(params.c / (params.alpha * params.b));
}

AsymptoticTargets asymptotic_targets(AsymptoticMode mode, double value) {
    AsymptoticTargets t;
    if (mode == AsymptoticMode::FixedAlpha) {
        if (!(value > 0.0)) throw DomainError("asymptotic_targets: alpha must be positive");
        const double limit = std::pow(kTwoPiE, 2.0 * value - 1.0);
        t.m2_over_d = limit;
        t.nm = limit;
        return t;
    }
    if (!(value > 1.0)) {
        throw DomainError("asymptotic_targets: fixed-m mode requires m > 1");
    }
    t.m2_over_d = 1.0 / kTwoPiE;
    t.nm = 1.0 / kTwoPiE;
    t.c_stat_over_bd = 1.0 / kTwoPiE;
    return t;
}

}  // namespace fpcutoff
