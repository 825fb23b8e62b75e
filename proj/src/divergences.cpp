#include "fpcutoff/divergences.hpp"

#include <cmath>
#include <limits>

#include "fpcutoff/dynamics.hpp"
#include "fpcutoff/errors.hpp"
#include "fpcutoff/quadrature.hpp"

namespace fpcutoff {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSeriesWindow = 1e-8;  // |2 alpha - 1| below this: series branch

bool diverges(const ModelParams& params) {
    return params.regime == Regime::FastDiffusion && !params.second_moment_finite;
}

void check_time(double t) {
    if (!(t > 0.0)) throw DomainError("flow divergence: t must be positive");
}

}  // namespace

double w2_sq_flow(const ModelParams& params, double t, double x0_norm) {
    check_time(t);
    if (diverges(params)) return kInf;
    const double u = std::exp(-t / params.alpha);
    const double a_minus_1 = std::expm1(params.alpha * std::log1p(-u));
    const double h = std::exp(-t) * x0_norm;
    return a_minus_1 * a_minus_1 * moment(params, 2.0) + h * h;
}

double entropy_flow(const ModelParams& params, double t, double x0_norm) {
    check_time(t);
    const double h2 = std::exp(-2.0 * t) * x0_norm * x0_norm;
    if (params.regime == Regime::Gaussian) {
        const double a2 = -std::expm1(-2.0 * t);  // variance 1 - e^{-2t}
        return 0.5 * (params.d * a2 + h2 - params.d - params.d * std::log(a2));
    }
    if (diverges(params)) return kInf;
    const double alpha = params.alpha;
    const double L = alpha * std::log1p(-std::exp(-t / alpha));  // ln a < 0
    const double q = (2.0 * alpha - 1.0) / alpha;
    const double nm = lm_norm(params);
    double profile_term;
    if (std::fabs(2.0 * alpha - 1.0) >= kSeriesWindow) {
        profile_term = -(params.d / q) * std::expm1(q * L) * nm;
    } else {
        const double qL = q * L;
        profile_term = -params.d * L * (1.0 + 0.5 * qL + qL * qL / 6.0) * nm;
    }
    const double scale_term = 0.5 * std::expm1(2.0 * L) * moment(params, 2.0);
    return profile_term + scale_term + 0.5 * h2;
}

double fisher_flow(const ModelParams& params, double t, double x0_norm) {
    check_time(t);
    if (diverges(params)) return kInf;
    const double alpha = params.alpha;
    const double u = std::exp(-t / alpha);
    const double a = std::exp(alpha * std::log1p(-u));
    const double drift = a * u / (1.0 - u);  // a (1 - a^{-1/alpha}), sign dropped
    const double h = std::exp(-t) * x0_norm;
    return h * h + drift * drift * moment(params, 2.0);
}

DivergenceReport distances_closed_form(const ModelParams& params, double t,
                                       double x0_norm) {
    DivergenceReport r;
    r.w2_sq = w2_sq_flow(params, t, x0_norm);
    r.entropy = entropy_flow(params, t, x0_norm);
    r.fisher = fisher_flow(params, t, x0_norm);
    r.d = params.d;
    r.t = t;
    r.x0_norm = x0_norm;
    r.m = params.m;
    r.source = ReportSource::ClosedForm;
    return r;
}

double entropy_bregman_form(const ModelParams& params, const RadialDensity& f) {
    const double g_support = support_radius(params, Profile::StationaryVinf);
    if (params.regime == Regime::PorousMedium &&
        f.support_radius > g_support * (1.0 + 1e-12)) {
        throw PreconditionError(
            "entropy_bregman_form: porous regime requires supp f inside supp v_inf");
    }
    const double m = params.m;
    const bool gaussian = params.regime == Regime::Gaussian;
    const double C = params.C_stat;
    const double b = params.b;
    const double sign = params.regime == Regime::PorousMedium ? -1.0 : 1.0;

    auto cell = [&](double r) {
        const double fv = f.value(r);
        const double gv = density_at(params, r, Profile::StationaryVinf);
        if (gaussian) {
            // m -> 1 limit: f ln(f/g) - (f - g), with 0 ln 0 = 0.
            double termf = fv > 0.0 ? fv * std::log(fv) : 0.0;
            double termg = gv > 0.0 ? fv * std::log(gv) : 0.0;
            return termf - termg - (fv - gv);
        }
        // g^{m-1} collapses to the polynomial C +/- b r^2 on supp g.
        const double gm1 = std::max(C + sign * b * r * r, 0.0);
        const double fm = fv > 0.0 ? std::exp(m * std::log(fv)) : 0.0;
        const double gm = gv > 0.0 ? std::exp(m * std::log(gv)) : 0.0;
        return (fm - gm - m * gm1 * (fv - gv)) / (m - 1.0);
    };

    double domain = std::max(f.support_radius, g_support);
    QuadratureResult qr = radial_integral(cell, params.d, domain, 1e-11, 1e-9);
    return qr.value;
}

}  // namespace fpcutoff
