#include "fpcutoff/pde.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fpcutoff/dynamics.hpp"
#include "fpcutoff/errors.hpp"
#include "fpcutoff/quadrature.hpp"
#include "pde_kernel.hpp"

namespace fpcutoff {

namespace {

// 5-point Gauss-Legendre rule on [-1, 1]
constexpr double kGlNode[5] = {-0.90617984593866399279762687829939, -0.53846931010568309103631442070021,
                               0.0, 0.53846931010568309103631442070021,
                               0.90617984593866399279762687829939};
constexpr double kGlWeight[5] = {0.23692688505618908751426404071992, 0.47862867049936646804129151483564,
                                 0.56888888888888888888888888888889, 0.47862867049936646804129151483564,
                                 0.23692688505618908751426404071992};

constexpr double kClipBudget = 1e-6;   // cumulative positivity-clip tolerance
constexpr double kFrontFraction = 1e-10;

void validate_grid(const GridSpec& grid) {
    if (grid.d < 1) throw DomainError("grid dimension must be positive");
    if (grid.n_cells < 8) throw DomainError("grid needs at least 8 cells");
    if (!(grid.length > 0.0)) throw DomainError("grid length must be positive");
}

// geometry shared by init and the closed-form averages
struct Geometry {
    double dx;
    double lo;  // left edge of the first cell
    double surface;
};

Geometry make_geometry(const GridSpec& grid) {
    Geometry geo;
    if (grid.d == 1) {
        geo.dx = 2.0 * grid.length / grid.n_cells;
        geo.lo = -grid.length;
        geo.surface = 1.0;
    } else {
        geo.dx = grid.length / grid.n_cells;
        geo.lo = 0.0;
        geo.surface = sphere_surface(grid.d);
    }
    return geo;
}

double core_scale(const ModelParams& params) {
    if (params.regime == Regime::Gaussian) return std::sqrt(2.0);
    return std::sqrt(params.C_stat / params.b);
}

}  // namespace

std::vector<double> closed_form_cell_averages(const ModelParams& params, const GridSpec& grid,
                                              double t, double x0_norm) {
    validate_grid(grid);
    if (grid.d != params.d) throw DomainError("grid dimension must match the profile dimension");
    if (grid.d >= 2 && x0_norm != 0.0) {
        throw DomainError("the radial geometry needs a centered start (x0 = 0)");
    }
    const FlowState state = flow_state(params, t, x0_norm);
    const Geometry geo = make_geometry(grid);

    std::vector<double> avg(grid.n_cells, 0.0);
    for (int i = 0; i < grid.n_cells; ++i) {
        const double a = geo.lo + i * geo.dx;
        const double mid = a + 0.5 * geo.dx;
        double acc = 0.0;
        double vol = 0.0;
        for (int q = 0; q < 5; ++q) {
            const double x = mid + 0.5 * geo.dx * kGlNode[q];
            const double weight =
                grid.d == 1 ? kGlWeight[q]
                            : kGlWeight[q] * std::pow(x, grid.d - 1);
            const double r_from_center = grid.d == 1 ? std::fabs(x - state.h_norm) : x;
            acc += weight * solution_density(state, r_from_center);
            vol += weight;
        }
        // volume-weighted cell average (the weight factors cancel the shell volume)
        avg[i] = acc / vol;
    }
    return avg;
}

GridDensity init_from_closed_form(const ModelParams& params, const GridSpec& grid, double t0,
                                  double x0_norm) {
    validate_grid(grid);
    if (!(t0 > 0.0)) throw DomainError("initial time must be positive");
    GridDensity g;
    g.params = params;
    g.d = grid.d;
    g.n = grid.n_cells;
    g.length = grid.length;
    g.time = t0;
    g.x0_norm = x0_norm;

    const Geometry geo = make_geometry(grid);
    g.dx = geo.dx;

    g.centers.resize(g.n);
    g.volumes.resize(g.n);
    g.interfaces.resize(g.n + 1);
    g.areas.resize(g.n + 1);
    g.inv_volumes.resize(g.n);
    g.w.resize(g.n);
    g.slopes.resize(g.n);
    g.fluxes.resize(g.n + 1);

    for (int k = 0; k <= g.n; ++k) {
        const double x = geo.lo + k * geo.dx;
        g.interfaces[k] = x;
        g.areas[k] = grid.d == 1 ? 1.0 : geo.surface * std::pow(x, grid.d - 1);
    }
    for (int i = 0; i < g.n; ++i) {
        g.centers[i] = geo.lo + (i + 0.5) * geo.dx;
        if (grid.d == 1) {
            g.volumes[i] = geo.dx;
        } else {
            const double r0 = g.interfaces[i];
            const double r1 = g.interfaces[i + 1];
            g.volumes[i] = geo.surface * (std::pow(r1, grid.d) - std::pow(r0, grid.d)) / grid.d;
        }
        g.inv_volumes[i] = 1.0 / g.volumes[i];
    }

    const FlowState state = flow_state(params, t0, x0_norm);
    const double core_cells = 2.0 * state.a * core_scale(params) / g.dx;
    if (core_cells < 16.0) {
        throw ResolutionError("profile core spans fewer than 16 cells; refine the grid");
    }

    g.v = closed_form_cell_averages(params, grid, t0, x0_norm);

    double mass = 0.0;
    for (int i = 0; i < g.n; ++i) mass += g.v[i] * g.volumes[i];
    if (!(mass > 0.0)) throw DomainError("initial mass vanished on the grid");
    const double inv_mass = 1.0 / mass;
    g.v_max = 0.0;
    for (int i = 0; i < g.n; ++i) {
        g.v[i] *= inv_mass;
        g.v_max = std::max(g.v_max, g.v[i]);
    }
    return g;
}

double cfl_dt(const GridDensity& g) {
    const double m = g.params.m;
    const double v_eff = m < 1.0 ? 1e-4 * g.v_max : g.v_max;
    const double diffusivity =
        g.params.regime == Regime::Gaussian ? 1.0 : m * std::pow(v_eff, m - 1.0);
    const double x_max = std::max(std::fabs(g.interfaces.front()), std::fabs(g.interfaces.back()));
    const double rate = std::max(2.0 * diffusivity, g.dx * x_max);
    return 0.4 * g.dx * g.dx / rate;
}

void step(GridDensity& g, double dt) {
    if (!(dt > 0.0)) throw DomainError("step size must be positive");
    const double m = g.params.regime == Regime::Gaussian ? 1.0 : g.params.m;
    kernel::power_profile(g.v.data(), g.w.data(), g.n, m);
    kernel::limited_slopes(g.v.data(), g.slopes.data(), g.n);
    const double cap =
        m < 1.0 ? m * std::pow(1e-4 * g.v_max, m - 1.0) : 1e300;
    kernel::interface_fluxes(g.v.data(), g.w.data(), g.slopes.data(), g.interfaces.data(),
                             g.fluxes.data(), g.n, 1.0 / g.dx, cap);
    const kernel::UpdateResult res =
        kernel::conservative_update(g.v.data(), g.fluxes.data(), g.areas.data(),
                                    g.inv_volumes.data(), g.volumes.data(), g.n, dt);
    g.clipped_mass += res.clipped;
    g.v_max = res.v_max;
    g.time += dt;
    ++g.steps_taken;
    if (!std::isfinite(g.v_max)) {
        throw StabilityError("grid state became non-finite");
    }
    // The kernel is compiled with fast-math, so its max-reduction may drop a
    // NaN; audit the full state here (strict math) at a harmless cadence.
    if ((g.steps_taken & 1023) == 0) {
        for (int i = 0; i < g.n; ++i) {
            if (!std::isfinite(g.v[i])) {
                throw StabilityError("grid state became non-finite");
            }
        }
    }
    if (g.clipped_mass > kClipBudget) {
        throw StabilityError("cumulative positivity clipping exceeded 1e-6");
    }
}

EvolveReport evolve(GridDensity& g, double t_end) {
    if (!(t_end >= g.time)) throw DomainError("target time precedes the grid state");
    EvolveReport report;
    constexpr long long kMaxSteps = 100000000;
    while (g.time < t_end - 1e-15) {
        const double dt = std::min(cfl_dt(g), t_end - g.time);
        step(g, dt);
        ++report.n_steps;
        if (report.n_steps > kMaxSteps) {
            throw StabilityError("step budget exhausted before reaching the target time");
        }
    }
    report.clipped_mass = g.clipped_mass;
    report.final_time = g.time;
    return report;
}

double grid_mass(const GridDensity& g) {
    double mass = 0.0;
    for (int i = 0; i < g.n; ++i) mass += g.v[i] * g.volumes[i];
    return mass;
}

double discrete_entropy(const GridDensity& g) {
    const bool gaussian = g.params.regime == Regime::Gaussian;
    const double m = g.params.m;
    double total = 0.0;
    for (int i = 0; i < g.n; ++i) {
        const double v = g.v[i];
        const double c = g.centers[i];
        double internal = 0.0;
        if (gaussian) {
            internal = v > 0.0 ? v * std::log(v) : 0.0;
        } else {
            internal = (v > 0.0 ? std::pow(v, m) : 0.0) / (m - 1.0);
        }
        total += g.volumes[i] * (internal + 0.5 * c * c * v);
    }
    return total;
}

double front_radius(const GridDensity& g) {
    const double threshold = kFrontFraction * g.v_max;
    double front = 0.0;
    for (int i = 0; i < g.n; ++i) {
        if (g.v[i] > threshold) {
            front = std::max(front, std::fabs(g.centers[i]));
        }
    }
    return front;
}

double l1_error_vs_closed_form(const GridDensity& g) {
    GridSpec grid;
    grid.d = g.d;
    grid.n_cells = g.n;
    grid.length = g.length;
    const std::vector<double> exact =
        closed_form_cell_averages(g.params, grid, g.time, g.x0_norm);
    double err = 0.0;
    for (int i = 0; i < g.n; ++i) {
        err += std::fabs(g.v[i] - exact[i]) * g.volumes[i];
    }
    return err;
}

}  // namespace fpcutoff
