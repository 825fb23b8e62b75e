#pragma once

// Hot loops of the finite-volume scheme, kept in their own translation unit
// so they can be compiled with aggressive vectorization flags.

namespace fpcutoff::kernel {

// w[i] = v[i]^m
void power_profile(const double* v, double* w, int n, double m);

// minmod-limited cell slopes, zero in the outermost cells
void limited_slopes(const double* v, double* s, int n);

// Interface fluxes f[0..n] (f[0] = f[n] = 0):
//   f[k] = clamp(w[k]-w[k-1], +-cap*|v[k]-v[k-1]|) / dx + xi[k] * v_face
// where v_face is the MUSCL value from the upwind side of the drift -xi.
void interface_fluxes(const double* v, const double* w, const double* s, const double* xi,
                      double* f, int n, double inv_dx, double cap);

struct UpdateResult {
    double clipped = 0.0;
    double v_max = 0.0;
};

// v[i] += dt * (areas[i+1] f[i+1] - areas[i] f[i]) * inv_volumes[i], clipped
// at zero; returns the clipped mass and the new maximum.
UpdateResult conservative_update(double* v, const double* f, const double* areas,
                                 const double* inv_volumes, const double* volumes, int n,
                                 double dt);

}  // namespace fpcutoff::kernel
