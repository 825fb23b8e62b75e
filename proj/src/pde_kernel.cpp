#include "pde_kernel.hpp"

#include <cmath>

namespace fpcutoff::kernel {

void power_profile(const double* v, double* w, int n, double m) {
#pragma omp simd
    for (int i = 0; i < n; ++i) {
        w[i] = std::pow(v[i], m);
    }
}

void limited_slopes(const double* v, double* s, int n) {
    s[0] = 0.0;
    s[n - 1] = 0.0;
#pragma omp simd
    for (int i = 1; i < n - 1; ++i) {
        const double dl = v[i] - v[i - 1];
        const double dr = v[i + 1] - v[i];
        const double sg = 0.5 * (std::copysign(1.0, dl) + std::copysign(1.0, dr));
        s[i] = sg * std::fmin(std::fabs(dl), std::fabs(dr));
    }
}

void interface_fluxes(const double* v, const double* w, const double* s, const double* xi,
                      double* f, int n, double inv_dx, double cap) {
    f[0] = 0.0;
    f[n] = 0.0;
#pragma omp simd
    for (int k = 1; k < n; ++k) {
        const double dv = v[k] - v[k - 1];
        const double dw = w[k] - w[k - 1];
        const double lim = cap * std::fabs(dv);
        const double fd = std::fmin(std::fmax(dw, -lim), lim) * inv_dx;
        const double x = xi[k];
        // drift velocity is -x: x >= 0 means the upwind cell is the right one
        const double v_face = x >= 0.0 ? v[k] - 0.5 * s[k] : v[k - 1] + 0.5 * s[k - 1];
        f[k] = fd + x * v_face;
    }
}

UpdateResult conservative_update(double* v, const double* f, const double* areas,
                                 const double* inv_volumes, const double* volumes, int n,
                                 double dt) {
    double clipped = 0.0;
    double vmax = 0.0;
#pragma omp simd reduction(+ : clipped) reduction(max : vmax)
    for (int i = 0; i < n; ++i) {
        const double next = v[i] + dt * (areas[i + 1] * f[i + 1] - areas[i] * f[i]) * inv_volumes[i];
        const double kept = std::fmax(next, 0.0);
        clipped += (kept - next) * volumes[i];
        v[i] = kept;
        vmax = std::fmax(vmax, kept);
    }
    return {clipped, vmax};
}

}  // namespace fpcutoff::kernel
