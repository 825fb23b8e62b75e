#include "fpcutoff/ot.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "fpcutoff/dynamics.hpp"
#include "fpcutoff/errors.hpp"
#include "fpcutoff/incomplete_beta.hpp"

namespace fpcutoff {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// P(|Y| <= r) for the centered stationary profile.
double radial_interior_prob(const ModelParams& params, double r) {
    if (r <= 0.0) return 0.0;
    switch (params.regime) {
        case Regime::FastDiffusion: {
            const double br2 = params.b * r * r;
            const double s = br2 / (params.C_stat + br2);
            return regularized_incomplete_beta(0.5, params.p - 0.5, s);
        }
        case Regime::PorousMedium: {
            const double r2_max = params.C_stat / params.b;
            if (r * r >= r2_max) return 1.0;
            const double s = params.b * r * r / params.C_stat;
            return regularized_incomplete_beta(0.5, params.p + 1.0, s);
        }
        case Regime::Gaussian:
            return std::erf(r / std::sqrt(2.0));
    }
    throw DomainError("unknown regime");
}

Cdf1D make_affine_cdf(const ModelParams& params, double shift, double scale) {
    Cdf1D law;
    law.cdf = [params, shift, scale](double x) {
        const double y = (x - shift) / scale;
        const double p_in = radial_interior_prob(params, std::fabs(y));
        return 0.5 * (1.0 + (y < 0.0 ? -p_in : p_in));
    };
    double half_width = 0.0;
    if (params.regime == Regime::PorousMedium) {
        half_width = std::sqrt(params.C_stat / params.b);
    } else if (params.regime == Regime::Gaussian) {
        half_width = 10.0;
    } else {
        half_width = 1.0 + std::sqrt(params.C_stat / params.b);
    }
    law.lo = shift - scale * half_width;
    law.hi = shift + scale * half_width;
    return law;
}

}  // namespace

Cdf1D flow_cdf_1d(const ModelParams& params, double t, double x0) {
    if (params.d != 1) throw DomainError("flow_cdf_1d needs d = 1");
    if (!(t > 0.0)) throw DomainError("flow_cdf_1d needs t > 0");
    const double a = scale_factor(t, params.alpha);
    const double h = std::exp(-t) * x0;
    return make_affine_cdf(params, h, a);
}

Cdf1D stationary_cdf_1d(const ModelParams& params, double x0) {
    if (params.d != 1) throw DomainError("stationary_cdf_1d needs d = 1");
    return make_affine_cdf(params, x0, 1.0);
}

double quantile_by_bisection(const Cdf1D& law, double q) {
    if (!(q > 0.0) || !(q < 1.0)) throw DomainError("quantile level must lie in (0,1)");
    double lo = law.lo;
    double hi = law.hi;
    if (!(lo < hi)) throw DomainError("empty CDF bracket");

    double flo = law.cdf(lo);
    double fhi = law.cdf(hi);
    // Expand the bracket geometrically until it encloses the level.
    for (int k = 0; k < 600 && flo > q; ++k) {
        const double width = hi - lo;
        lo -= width;
        flo = law.cdf(lo);
    }
    for (int k = 0; k < 600 && fhi < q; ++k) {
        const double width = hi - lo;
        hi += width;
        fhi = law.cdf(hi);
    }
    if (flo > q || fhi < q) throw DomainError("CDF bracket could not enclose the level");
    if (flo > fhi + 1e-12) throw DomainError("non-monotone CDF");

    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi)) break;
        const double scale = std::max({1.0, std::fabs(lo), std::fabs(hi)});
        if (hi - lo <= 1e-13 * scale) break;
        const double fm = law.cdf(mid);
        if (fm < flo - 1e-12 || fm > fhi + 1e-12) throw DomainError("non-monotone CDF");
        if (fm < q) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
    }
    return 0.5 * (lo + hi);
}

double ot_1d_quantile(const Cdf1D& mu, const Cdf1D& nu, int n_quantiles) {
    if (n_quantiles < 1000) throw DomainError("need at least 1000 quantile cells");
    const int n = n_quantiles;
    // Graded partition of (0,1): edges sin^2(pi j / (2 n)) cluster nodes near
    // both endpoints where heavy-tailed quantiles vary fastest.
    double total = 0.0;
    double q_prev = 0.0;
    for (int j = 1; j <= n; ++j) {
        const double sj = std::sin(kPi * j / (2.0 * n));
        const double q_next = j == n ? 1.0 : sj * sj;
        const double w = q_next - q_prev;
        const double qm = 0.5 * (q_prev + q_next);
        const double dq = quantile_by_bisection(mu, qm) - quantile_by_bisection(nu, qm);
        total += w * dq * dq;
        q_prev = q_next;
    }
    return total;
}

namespace {

// Dense linear assignment via shortest augmenting paths with dual updates
// (Jonker-Volgenant). Returns the optimal total cost; rowsol[i] is the
// column matched to row i.
double lap_jv(int n, const std::vector<double>& cost, std::vector<int>& rowsol) {
    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<int> colsol(n, -1);
    std::vector<double> v(n, 0.0);
    rowsol.assign(n, -1);

    // column reduction, reverse order
    std::vector<int> matches(n, 0);
    for (int j = n - 1; j >= 0; --j) {
        double mn = cost[static_cast<std::size_t>(0) * n + j];
        int imin = 0;
        for (int i = 1; i < n; ++i) {
            const double c = cost[static_cast<std::size_t>(i) * n + j];
            if (c < mn) {
                mn = c;
                imin = i;
            }
        }
        v[j] = mn;
        if (++matches[imin] == 1) {
            rowsol[imin] = j;
            colsol[j] = imin;
        } else {
            colsol[j] = -1;
        }
    }

    // reduction transfer from rows assigned exactly once
    std::vector<int> freerows;
    freerows.reserve(n);
    for (int i = 0; i < n; ++i) {
        if (matches[i] == 0) {
            freerows.push_back(i);
        } else if (matches[i] == 1) {
            const int j1 = rowsol[i];
            double mn = kInf;
            for (int j = 0; j < n; ++j) {
                if (j != j1) mn = std::min(mn, cost[static_cast<std::size_t>(i) * n + j] - v[j]);
            }
            v[j1] -= mn;
        }
    }

    // shortest augmenting path for every remaining free row
    std::vector<double> dist(n);
    std::vector<int> pred(n), collist(n);
    for (const int f : freerows) {
        for (int j = 0; j < n; ++j) {
            dist[j] = cost[static_cast<std::size_t>(f) * n + j] - v[j];
            pred[j] = f;
            collist[j] = j;
        }
        int low = 0, up = 0, last = 0;
        int endofpath = -1;
        double mind = 0.0;
        bool found = false;
        do {
            if (up == low) {
                // refill the frontier with the columns of minimal distance
                last = low - 1;
                mind = dist[collist[up]];
                ++up;
                for (int k = up; k < n; ++k) {
                    const int j = collist[k];
                    const double h = dist[j];
                    if (h <= mind) {
                        if (h < mind) {
                            up = low;
                            mind = h;
                        }
                        collist[k] = collist[up];
                        collist[up] = j;
                        ++up;
                    }
                }
                for (int k = low; k < up; ++k) {
                    if (colsol[collist[k]] < 0) {
                        endofpath = collist[k];
                        found = true;
                        break;
                    }
                }
            }
            if (!found) {
                const int j1 = collist[low];
                ++low;
                const int i = colsol[j1];
                const double h1 = cost[static_cast<std::size_t>(i) * n + j1] - v[j1] - mind;
                for (int k = up; k < n; ++k) {
                    const int j = collist[k];
                    const double h = cost[static_cast<std::size_t>(i) * n + j] - v[j] - h1;
                    if (h < dist[j]) {
                        dist[j] = h;
                        pred[j] = i;
                        if (h == mind) {
                            if (colsol[j] < 0) {
                                endofpath = j;
                                found = true;
                                break;
                            }
                            collist[k] = collist[up];
                            collist[up] = j;
                            ++up;
                        }
                    }
                }
            }
        } while (!found);

        for (int k = 0; k <= last; ++k) {
            const int j = collist[k];
            v[j] += dist[j] - mind;
        }

        int j = endofpath;
        int i = -1;
        do {
            i = pred[j];
            colsol[j] = i;
            const int j0 = rowsol[i];
            rowsol[i] = j;
            j = j0;
        } while (i != f);
    }

    double total = 0.0;
    for (int i = 0; i < n; ++i) total += cost[static_cast<std::size_t>(i) * n + rowsol[i]];
    return total;
}

}  // namespace

double ot_assignment(const SampleCloud& a, const SampleCloud& b) {
    if (a.n != b.n) throw DomainError("clouds must have equal size");
    if (a.d != b.d) throw DomainError("clouds must have equal dimension");
    if (a.n <= 0) throw DomainError("clouds must be non-empty");
    if (a.n > 2048) throw UnsupportedSizeError("assignment solver capped at 2048 points");

    const int n = a.n;
    const int d = a.d;
    std::vector<double> cost(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        const double* pa = a.points.data() + static_cast<std::size_t>(i) * d;
        for (int j = 0; j < n; ++j) {
            const double* pb = b.points.data() + static_cast<std::size_t>(j) * d;
            double s = 0.0;
            for (int k = 0; k < d; ++k) {
                const double diff = pa[k] - pb[k];
                s += diff * diff;
            }
            cost[static_cast<std::size_t>(i) * n + j] = s;
        }
    }
    std::vector<int> rowsol;
    const double total = lap_jv(n, cost, rowsol);
    return total / n;
}

}  // namespace fpcutoff
