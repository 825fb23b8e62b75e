#include "verify_suites.hpp"

#include <cmath>
#include <sstream>

#include "fpcutoff/barenblatt.hpp"
#include "fpcutoff/divergences.hpp"
#include "fpcutoff/dynamics.hpp"
#include "fpcutoff/errors.hpp"
#include "fpcutoff/matrix_transport.hpp"
#include "fpcutoff/oracles.hpp"
#include "fpcutoff/ot.hpp"
#include "fpcutoff/pde.hpp"
#include "fpcutoff/sampling.hpp"

namespace fpcutoff::cli {

namespace {

double rel_err(double got, double want) {
    const double denom = std::max(std::fabs(want), 1e-300);
    return std::fabs(got - want) / denom;
}

void add_check(std::vector<CheckResult>& out, const std::string& id,
               const std::string& description, double value, double tolerance) {
    CheckResult check;
    check.id = id;
    check.description = description;
    check.value = value;
    check.tolerance = tolerance;
    check.pass = std::isfinite(value) && value <= tolerance;
    out.push_back(check);
}

std::string tag(int d, double m) {
    std::ostringstream s;
    s << "d" << d << "-m" << m;
    return s.str();
}

void suite_moments(std::vector<CheckResult>& out) {
    const struct {
        int d;
        double m;
    } cases[] = {{3, 0.9}, {3, 1.5}, {5, 1.0}, {2, 2.5}, {6, 0.95}};
    for (const auto& c : cases) {
        const ModelParams params = params_from_m(c.d, c.m);
        const std::string suffix = tag(c.d, c.m);
        add_check(out, "moments/normalization/" + suffix,
                  "stationary profile integrates to one",
                  std::fabs(normalization_quadrature(params, Profile::StationaryVinf) - 1.0),
                  1e-9);
        add_check(out, "moments/second-moment/" + suffix,
                  "closed-form second moment matches quadrature",
                  rel_err(moment(params, 2.0), moment_quadrature(params, 2.0)), 1e-8);
        add_check(out, "moments/profile-lm-norm/" + suffix,
                  "closed-form L^m integral matches quadrature",
                  rel_err(lm_norm(params), lm_norm_quadrature(params)), 1e-8);
    }
}

void suite_transport(std::vector<CheckResult>& out, std::uint64_t seed, int threads) {
    // quantile coupling against the closed form, heavy-tail profile
    {
        const ModelParams params = params_from_m(1, 0.7);
        const double t = 0.8, x0 = 2.0;
        const double closed = w2_sq_flow(params, t, x0);
        const double discrete =
            ot_1d_quantile(flow_cdf_1d(params, t, x0), stationary_cdf_1d(params, 0.0), 5000);
        add_check(out, "transport/quantile-1d/heavy-tail",
                  "quantile coupling matches the closed form (m=0.7)", rel_err(discrete, closed),
                  2e-5);
    }
    // quantile coupling, compact profile
    {
        const ModelParams params = params_from_m(1, 1.5);
        const double t = 0.8, x0 = 1.0;
        const double closed = w2_sq_flow(params, t, x0);
        const double discrete =
            ot_1d_quantile(flow_cdf_1d(params, t, x0), stationary_cdf_1d(params, 0.0), 5000);
        add_check(out, "transport/quantile-1d/compact",
                  "quantile coupling matches the closed form (m=1.5)", rel_err(discrete, closed),
                  1e-8);
    }
    // matrix form against the flow form on the gaussian family
    {
        const ModelParams params = params_from_m(3, 1.0);
        const double t = 1.0, x0 = 2.0;
        const FlowState state = flow_state(params, t, x0);
        EllipticMoments mu;
        mu.mean = Vec(3, 0.0);
        mu.covariance = Mat::identity(3);
        EllipticMoments nu;
        nu.mean = Vec(3, 0.0);
        nu.mean[0] = state.h_norm;
        nu.covariance = Mat::identity(3);
        for (int i = 0; i < 3; ++i) nu.covariance.at(i, i) = state.a * state.a;
        const double matrix_form = w2_sq_elliptic(mu, nu);
        const double flow_form = w2_sq_flow(params, t, x0);
        add_check(out, "transport/matrix-consistency",
                  "elliptic matrix form agrees with the scalar flow form",
                  rel_err(matrix_form, flow_form), 1e-12);
    }
    // empirical assignment cost against the closed form (debiased)
    {
        const ModelParams params = params_from_m(3, 1.0);
        const double t = 1.0, x0 = 2.0;
        const double closed = w2_sq_flow(params, t, x0);
        const int n = 256;
        const int n_seeds = 5;
        std::vector<double> x0_vec = {x0, 0.0, 0.0};
        std::vector<double> origin(3, 0.0);
        std::vector<double> stats;
        for (int k = 0; k < n_seeds; ++k) {
            const std::uint64_t base = seed + 1000003ull * static_cast<std::uint64_t>(k);
            const SampleCloud a = sample_flow(params, t, x0_vec, n, base, threads);
            const SampleCloud a2 = sample_flow(params, t, x0_vec, n, base + 101, threads);
            const SampleCloud b =
                sample_barenblatt(params, n, origin, base + 202, Profile::StationaryVinf, threads);
            const SampleCloud b2 =
                sample_barenblatt(params, n, origin, base + 303, Profile::StationaryVinf, threads);
            const double w_ab = ot_assignment(a, b);
            const double w_aa = ot_assignment(a, a2);
            const double w_bb = ot_assignment(b, b2);
            stats.push_back(w_ab - 0.5 * w_aa - 0.5 * w_bb);
        }
        double mean = 0.0;
        for (const double s : stats) mean += s;
        mean /= stats.size();
        double var = 0.0;
        for (const double s : stats) var += (s - mean) * (s - mean);
        var /= (stats.size() - 1);
        const double se = std::sqrt(var / stats.size());
        add_check(out, "transport/assignment/debiased",
                  "debiased empirical assignment cost brackets the closed form",
                  std::fabs(mean - closed), 4.0 * se + 1e-3 * closed);
    }
}

void suite_entropy_production(std::vector<CheckResult>& out) {
    const struct {
        const char* name;
        double m;
    } families[] = {{"heavy-tail", 0.9}, {"compact", 1.5}};
    for (const auto& fam : families) {
        const ModelParams params = params_from_m(3, fam.m);
        for (const double t : {0.5, 1.5}) {
            for (const double x0 : {0.0, 2.0}) {
                const EntropyProductionCheck check =
                    entropy_production_check(params, t, x0, 1e-5);
                std::ostringstream id;
                id << "entropy-production/" << fam.name << "/t" << t << "-x" << x0;
                add_check(out, id.str(),
                          "entropy decay rate matches the production term", check.rel_gap, 1e-6);
            }
        }
    }
    // quadrature cross-checks of the closed-form functionals
    {
        const ModelParams params = params_from_m(3, 0.9);
        const double t = 1.0, x0 = 1.5;
        add_check(out, "entropy/quadrature/heavy-tail",
                  "closed-form entropy gap matches quadrature",
                  rel_err(entropy_flow(params, t, x0), entropy_quadrature(params, t, x0)), 1e-6);
    }
    {
        const ModelParams params = params_from_m(3, 1.5);
        const double t = 1.0, x0 = 0.8;
        add_check(out, "fisher/quadrature/compact",
                  "closed-form production term matches quadrature",
                  rel_err(fisher_flow(params, t, x0), fisher_quadrature(params, t, x0)), 1e-6);
    }
}

void suite_pde(std::vector<CheckResult>& out) {
    // line solver against the closed form
    {
        const ModelParams params = params_from_m(1, 0.7);
        GridSpec grid;
        grid.d = 1;
        grid.n_cells = 512;
        grid.length = 10.0;
        GridDensity state = init_from_closed_form(params, grid, 0.1, 1.0);
        const double h0 = discrete_entropy(state);
        evolve(state, 0.3);
        const double h1 = discrete_entropy(state);
        evolve(state, 0.5);
        const double h2 = discrete_entropy(state);
        add_check(out, "pde/line/l1-error", "line solver tracks the closed form",
                  l1_error_vs_closed_form(state), 5e-3);
        add_check(out, "pde/line/mass-drift", "line solver conserves mass",
                  std::fabs(grid_mass(state) - 1.0), 1e-9);
        add_check(out, "pde/line/entropy-monotone", "discrete free energy decays",
                  std::max(h1 - h0, h2 - h1), 1e-12);
    }
    // radial solver: compact front position
    {
        const ModelParams params = params_from_m(3, 2.0);
        GridSpec grid;
        grid.d = 3;
        grid.n_cells = 256;
        grid.length = 2.0;
        GridDensity state = init_from_closed_form(params, grid, 0.1, 0.0);
        evolve(state, 0.5);
        const double a = scale_factor(0.5, params.alpha);
        const double predicted = a * support_radius(params, Profile::StationaryVinf);
        add_check(out, "pde/radial/front-position",
                  "radial solver tracks the compact support front",
                  std::fabs(front_radius(state) - predicted), 3.0 * state.dx);
        add_check(out, "pde/radial/mass-drift", "radial solver conserves mass",
                  std::fabs(grid_mass(state) - 1.0), 1e-9);
    }
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed, int threads) {
    std::vector<CheckResult> out;
    const bool all = suite == "all";
    if (suite == "moments" || all) suite_moments(out);
    if (suite == "transport" || all) suite_transport(out, seed, threads);
    if (suite == "entropy_production" || all) suite_entropy_production(out);
    if (suite == "pde" || all) suite_pde(out);
    if (out.empty()) {
        throw DomainError("unknown suite '" + suite +
                          "' (expected moments, transport, entropy_production, pde or all)");
    }
    return out;
}

}  // namespace fpcutoff::cli
