#pragma once

#include <vector>

#include "fpcutoff/barenblatt.hpp"

namespace fpcutoff {

// Finite-volume grid: d = 1 covers the symmetric interval (-length, length);
// d >= 2 is radial on (0, length) with zero-flux boundaries at both ends.
struct GridSpec {
    int d = 1;
    int n_cells = 0;
    double length = 0.0;
};

struct GridDensity {
    ModelParams params;
    int d = 1;
    int n = 0;
    double length = 0.0;
    double dx = 0.0;
    double time = 0.0;
    double x0_norm = 0.0;
    double clipped_mass = 0.0;  // cumulative positivity-clip audit
    double v_max = 0.0;
    long long steps_taken = 0;

    std::vector<double> v;        // cell averages
    std::vector<double> centers;  // cell centers (signed in 1-D, radii otherwise)
    std::vector<double> volumes;  // true cell volumes (shell volumes for d >= 2)

    // geometry and scratch reused across steps
    std::vector<double> interfaces;
    std::vector<double> areas;
    std::vector<double> inv_volumes;
    std::vector<double> w;
    std::vector<double> slopes;
    std::vector<double> fluxes;
};

// Cell averages (5-point Gauss-Legendre) of the evolving closed-form
// solution at time t, started from a point mass at x0_norm * e_1
// (x0_norm must be 0 in the radial geometry).
std::vector<double> closed_form_cell_averages(const ModelParams& params, const GridSpec& grid,
                                              double t, double x0_norm);

// Initialize the grid from the closed-form solution at t0, renormalized to
// unit mass. Throws ResolutionError when the profile core spans fewer than
// 16 cells.
GridDensity init_from_closed_form(const ModelParams& params, const GridSpec& grid, double t0,
                                  double x0_norm);

// Stable explicit step size for the current state.
double cfl_dt(const GridDensity& g);

// One conservative explicit step (MUSCL-limited drift, centered degenerate
// diffusion with a secant diffusivity capped in the fast regime).
void step(GridDensity& g, double dt);

struct EvolveReport {
    long long n_steps = 0;
    double clipped_mass = 0.0;
    double final_time = 0.0;
};

// March the solution to t_end with CFL-limited steps.
EvolveReport evolve(GridDensity& g, double t_end);

double grid_mass(const GridDensity& g);

// Free energy of the grid state (internal term plus confinement term).
double discrete_entropy(const GridDensity& g);

// Outermost cell center whose value exceeds 1e-10 * max.
double front_radius(const GridDensity& g);

// L1 distance between the grid state and the closed-form solution at the
// grid's current time.
double l1_error_vs_closed_form(const GridDensity& g);

}  // namespace fpcutoff
