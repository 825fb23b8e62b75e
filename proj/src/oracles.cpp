#include "fpcutoff/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "fpcutoff/divergences.hpp"
#include "fpcutoff/dynamics.hpp"
#include "fpcutoff/errors.hpp"

namespace fpcutoff {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double stationary_support_or_inf(const ModelParams& params) {
    return params.regime == Regime::PorousMedium
               ? support_radius(params, Profile::StationaryVinf)
               : kInf;
}

// Run a pilot pass to learn the magnitude, then re-integrate with an
// absolute tolerance tied to it.
double two_pass(const std::function<QuadratureResult(double, double)>& run, double rel_goal) {
    const QuadratureResult pilot = run(1e-10, 1e-6);
    const double abs_tol = std::max(1e-14, rel_goal * std::fabs(pilot.value));
    return run(abs_tol, rel_goal).value;
}

// Pointwise free-energy gap between densities f and g at squared radius r2.
double entropy_cell(double f, double g, double r2, const ModelParams& params) {
    double internal = 0.0;
    if (params.regime == Regime::Gaussian) {
        const double fl = f > 0.0 ? f * std::log(f) : 0.0;
        const double gl = g > 0.0 ? g * std::log(g) : 0.0;
        internal = fl - gl;
    } else {
        const double fm = f > 0.0 ? std::pow(f, params.m) : 0.0;
        const double gm = g > 0.0 ? std::pow(g, params.m) : 0.0;
        internal = (fm - gm) / (params.m - 1.0);
    }
    return internal + 0.5 * r2 * (f - g);
}

// Piecewise adaptive integral over consecutive breakpoints.
QuadratureResult integrate_pieces(const Integrand& f, std::vector<double> breaks,
                                  double abs_tol, double rel_tol) {
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end(),
                             [](double x, double y) {
                                 return std::fabs(x - y) <=
                                        1e-14 * std::max(1.0, std::max(std::fabs(x), std::fabs(y)));
                             }),
                 breaks.end());
    QuadratureResult total;
    const std::size_t npieces = breaks.size() > 1 ? breaks.size() - 1 : 1;
    for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
        const QuadratureResult piece = adaptive_integrate(
            f, breaks[k], breaks[k + 1], abs_tol / static_cast<double>(npieces), rel_tol);
        total.value += piece.value;
        total.abs_error_estimate += piece.abs_error_estimate;
        total.subdivisions += piece.subdivisions;
    }
    return total;
}

// Inner angular integral: weight sin^{d-2} theta over (0, pi), optionally
// split where the evolving support boundary crosses the sphere of radius r.
double inner_angle_integral(const std::function<double(double)>& g_of_theta, int d,
                            double split_cos, bool do_split) {
    const auto weighted = [&](double theta) {
        const double w = d == 2 ? 1.0 : std::pow(std::sin(theta), d - 2);
        return w * g_of_theta(theta);
    };
    constexpr double kPiLocal = 3.14159265358979323846264338327950288;
    double total = 0.0;
    if (do_split && split_cos > -1.0 && split_cos < 1.0) {
        const double theta_star = std::acos(split_cos);
        total += adaptive_integrate(weighted, 0.0, theta_star, 1e-16, 1e-10).value;
        total += adaptive_integrate(weighted, theta_star, kPiLocal, 1e-16, 1e-10).value;
    } else {
        total = adaptive_integrate(weighted, 0.0, kPiLocal, 1e-16, 1e-10).value;
    }
    return total;
}

}  // namespace

QuadratureResult radial_quadrature(const Integrand& radial_integrand, const ModelParams& params,
                                   double tolerance) {
    return radial_integral(radial_integrand, params.d, stationary_support_or_inf(params),
                           tolerance, 0.0);
}

double moment_quadrature(const ModelParams& params, double a) {
    if (!(a >= 0.0)) throw DomainError("moment order must be non-negative");
    const auto run = [&](double abs_tol, double rel_tol) {
        return radial_integral(
            [&](double r) {
                return std::pow(r, a) * density_at(params, r, Profile::StationaryVinf);
            },
            params.d, stationary_support_or_inf(params), abs_tol, rel_tol);
    };
    return two_pass(run, 1e-10);
}

double lm_norm_quadrature(const ModelParams& params) {
    const auto run = [&](double abs_tol, double rel_tol) {
        return radial_integral(
            [&](double r) {
                const double v = density_at(params, r, Profile::StationaryVinf);
                return v > 0.0 ? std::pow(v, params.m) : 0.0;
            },
            params.d, stationary_support_or_inf(params), abs_tol, rel_tol);
    };
    return two_pass(run, 1e-10);
}

double normalization_quadrature(const ModelParams& params, Profile which) {
    const double support = params.regime == Regime::PorousMedium
                               ? support_radius(params, which)
                               : kInf;
    const auto run = [&](double abs_tol, double rel_tol) {
        return radial_integral([&](double r) { return density_at(params, r, which); },
                               params.d, support, abs_tol, rel_tol);
    };
    return two_pass(run, 1e-10);
}

double entropy_quadrature(const ModelParams& params, double t, double x0_norm) {
    const FlowState state = flow_state(params, t, x0_norm);
    const double h = state.h_norm;
    const double a = state.a;
    const bool compact = params.regime == Regime::PorousMedium;
    const double R = compact ? support_radius(params, Profile::StationaryVinf) : kInf;
    const double aR = compact ? a * R : kInf;

    const auto f_at = [&](double s) { return solution_density(state, s); };
    const auto g_at = [&](double r) { return density_at(params, r, Profile::StationaryVinf); };

    if (params.d == 1) {
        const auto cell_at = [&](double x) {
            return entropy_cell(f_at(std::fabs(x - h)), g_at(std::fabs(x)), x * x, params);
        };
        if (!compact) {
            const auto run = [&](double abs_tol, double rel_tol) {
                return integrate_half_line([&](double r) { return cell_at(r) + cell_at(-r); },
                                           abs_tol, rel_tol);
            };
            return two_pass(run, 1e-9);
        }
        const double upper = std::max(R, h + aR);
        std::vector<double> breaks = {-upper, -R, h - aR, h + aR, R, upper};
        for (auto& x : breaks) x = std::clamp(x, -upper, upper);
        const auto run = [&](double abs_tol, double rel_tol) {
            return integrate_pieces(cell_at, breaks, abs_tol, rel_tol);
        };
        return two_pass(run, 1e-9);
    }

    if (x0_norm == 0.0) {
        const auto cell = [&](double r) {
            return entropy_cell(f_at(r), g_at(r), r * r, params);
        };
        const double upper = compact ? std::max(R, aR) : kInf;
        const auto run = [&](double abs_tol, double rel_tol) {
            return radial_integral(cell, params.d, upper, abs_tol, rel_tol);
        };
        return two_pass(run, 1e-9);
    }

    // d >= 2 with an off-center start: polar coordinates about the origin,
    // theta measured against the line through both centers.
    const double s_inner = sphere_surface(params.d - 1);
    const auto outer = [&](double r) {
        const double gr = g_at(r);
        const auto g_of_theta = [&](double theta) {
            const double s2 = r * r + h * h - 2.0 * r * h * std::cos(theta);
            const double s = s2 > 0.0 ? std::sqrt(s2) : 0.0;
            return entropy_cell(f_at(s), gr, r * r, params);
        };
        double split_cos = 0.0;
        bool do_split = false;
        if (compact) {
            split_cos = (r * r + h * h - aR * aR) / (2.0 * r * h);
            do_split = true;
        }
        const double inner = inner_angle_integral(g_of_theta, params.d, split_cos, do_split);
        return s_inner * std::pow(r, params.d - 1) * inner;
    };

    if (!compact) {
        const auto run = [&](double abs_tol, double rel_tol) {
            return integrate_half_line(outer, abs_tol, rel_tol);
        };
        return two_pass(run, 1e-9);
    }
    const double upper = std::max(R, h + aR);
    std::vector<double> breaks = {0.0, std::fabs(h - aR), h + aR, R, upper};
    for (auto& x : breaks) x = std::clamp(x, 0.0, upper);
    const auto run = [&](double abs_tol, double rel_tol) {
        return integrate_pieces(outer, breaks, abs_tol, rel_tol);
    };
    return two_pass(run, 1e-9);
}

double fisher_quadrature(const ModelParams& params, double t, double x0_norm) {
    const FlowState state = flow_state(params, t, x0_norm);
    const double h = state.h_norm;
    const double a = state.a;
    const bool compact = params.regime == Regime::PorousMedium;
    const double aR = compact ? a * support_radius(params, Profile::StationaryVinf) : kInf;

    // Velocity field of the flow at displacement y from the moving center:
    // (1 - kappa) y + h e_1 with kappa = a^{-1/alpha} = 1 / (1 - e^{-t/alpha}).
    const double kappa = 1.0 / (-std::expm1(-t / params.alpha));
    const double c1 = 1.0 - kappa;

    const auto f_at = [&](double s) { return solution_density(state, s); };

    if (params.d == 1) {
        const auto line = [&](double s) {
            const double plus = c1 * s + h;
            const double minus = -c1 * s + h;
            return f_at(s) * (plus * plus + minus * minus);
        };
        const auto run = [&](double abs_tol, double rel_tol) {
            return compact ? adaptive_integrate(line, 0.0, aR, abs_tol, rel_tol)
                           : integrate_half_line(line, abs_tol, rel_tol);
        };
        return two_pass(run, 1e-9);
    }

    if (x0_norm == 0.0) {
        const auto cell = [&](double s) { return f_at(s) * c1 * c1 * s * s; };
        const auto run = [&](double abs_tol, double rel_tol) {
            return radial_integral(cell, params.d, aR, abs_tol, rel_tol);
        };
        return two_pass(run, 1e-9);
    }

    // d >= 2 off-center: polar coordinates about the moving center.
    const double s_inner = sphere_surface(params.d - 1);
    const auto outer = [&](double s) {
        const auto g_of_theta = [&](double theta) {
            return c1 * c1 * s * s + 2.0 * c1 * s * h * std::cos(theta) + h * h;
        };
        const double inner = inner_angle_integral(g_of_theta, params.d, 0.0, false);
        return s_inner * std::pow(s, params.d - 1) * f_at(s) * inner;
    };
    const auto run = [&](double abs_tol, double rel_tol) {
        return compact ? adaptive_integrate(outer, 0.0, aR, abs_tol, rel_tol)
                       : integrate_half_line(outer, abs_tol, rel_tol);
    };
    return two_pass(run, 1e-9);
}

EntropyProductionCheck entropy_production_check(const ModelParams& params, double t,
                                                double x0_norm, double step) {
    if (!(step > 0.0)) throw DomainError("step must be positive");
    if (!(t - step > 0.0)) throw DomainError("need t - step > 0");
    const double h_plus = entropy_flow(params, t + step, x0_norm);
    const double h_minus = entropy_flow(params, t - step, x0_norm);
    const double fisher = fisher_flow(params, t, x0_norm);
    if (!std::isfinite(h_plus) || !std::isfinite(h_minus) || !std::isfinite(fisher)) {
        throw InfiniteMomentError("production check needs finite functionals");
    }
    EntropyProductionCheck out;
    out.dh_dt = (h_plus - h_minus) / (2.0 * step);
    out.minus_fisher = -fisher;
    const double denom = std::max({std::fabs(out.dh_dt), std::fabs(fisher), 1e-300});
    out.rel_gap = std::fabs(out.dh_dt + fisher) / denom;
    return out;
}

}  // namespace fpcutoff
