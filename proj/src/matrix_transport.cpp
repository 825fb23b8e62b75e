#include "fpcutoff/matrix_transport.hpp"

#include <cmath>

#include "fpcutoff/errors.hpp"

namespace fpcutoff {

namespace {

constexpr int kMaxDim = 64;

void check_square(const Mat& x, const char* who) {
    if (x.n < 1 || x.a.size() != static_cast<std::size_t>(x.n) * x.n) {
        throw DomainError(std::string(who) + ": malformed matrix");
    }
}

void check_symmetric(const Mat& x, const char* who) {
    check_square(x, who);
    double scale = 1e-300;
    for (double v : x.a) scale = std::max(scale, std::fabs(v));
    for (int i = 0; i < x.n; ++i) {
        for (int j = i + 1; j < x.n; ++j) {
            if (std::fabs(x.at(i, j) - x.at(j, i)) > 1e-12 * scale) {
                throw DomainError(std::string(who) + ": matrix is not symmetric");
            }
        }
    }
}

void check_psd_spectrum(const std::vector<double>& w, const char* who) {
    double scale = 1e-300;
    for (double v : w) scale = std::max(scale, std::fabs(v));
    for (double v : w) {
        if (v < -1e-10 * scale) {
            throw DomainError(std::string(who) + ": matrix is not positive semidefinite");
        }
    }
}

Mat from_eigen(const Mat& vectors, const std::vector<double>& w) {
    const int n = vectors.n;
    Mat out(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) {
                s += vectors.at(i, k) * w[k] * vectors.at(j, k);
            }
            out.at(i, j) = s;
        }
    }
    return out;
}

bool commute(const Mat& x, const Mat& y) {
    Mat xy = mat_mul(x, y);
    Mat yx = mat_mul(y, x);
    double scale = 1e-300, diff = 0.0;
    for (std::size_t i = 0; i < xy.a.size(); ++i) {
        scale = std::max(scale, std::fabs(xy.a[i]));
        diff = std::max(diff, std::fabs(xy.a[i] - yx.a[i]));
    }
    return diff <= 1e-12 * scale;
}

}  // namespace

Mat Mat::identity(int n) {
    Mat m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

Mat mat_mul(const Mat& x, const Mat& y) {
    if (x.n != y.n) throw DomainError("mat_mul: dimension mismatch");
    const int n = x.n;
    Mat out(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const double xv = x.at(i, k);
            if (xv == 0.0) continue;
            for (int j = 0; j < n; ++j) {
                out.at(i, j) += xv * y.at(k, j);
            }
        }
    }
    return out;
}

double trace(const Mat& x) {
    check_square(x, "trace");
    double s = 0.0;
    for (int i = 0; i < x.n; ++i) s += x.at(i, i);
    return s;
}

std::vector<double> jacobi_eigensym(const Mat& x, Mat& eigenvectors) {
    check_symmetric(x, "jacobi_eigensym");
    const int n = x.n;
    if (n > kMaxDim) {
        throw UnsupportedSizeError("jacobi_eigensym: dense path capped at d <= 64");
    }
    Mat a = x;
    eigenvectors = Mat::identity(n);

    double scale = 1e-300;
    for (int i = 0; i < n; ++i) scale = std::max(scale, std::fabs(a.at(i, i)));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) scale = std::max(scale, std::fabs(a.at(i, j)));
    }

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) off += a.at(i, j) * a.at(i, j);
        }
        if (std::sqrt(off) <= 1e-12 * scale) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a.at(p, q);
                if (std::fabs(apq) <= 1e-300) continue;
                const double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a.at(k, p);
                    const double akq = a.at(k, q);
                    a.at(k, p) = c * akp - s * akq;
                    a.at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a.at(p, k);
                    const double aqk = a.at(q, k);
                    a.at(p, k) = c * apk - s * aqk;
                    a.at(q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = eigenvectors.at(k, p);
                    const double vkq = eigenvectors.at(k, q);
                    eigenvectors.at(k, p) = c * vkp - s * vkq;
                    eigenvectors.at(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    std::vector<double> w(n);
    for (int i = 0; i < n; ++i) w[i] = a.at(i, i);
    return w;
}

Mat sqrt_psd(const Mat& x) {
    Mat vectors;
    std::vector<double> w = jacobi_eigensym(x, vectors);
    check_psd_spectrum(w, "sqrt_psd");
    for (double& v : w) v = std::sqrt(std::max(v, 0.0));
    return from_eigen(vectors, w);
}

double w2_sq_position_scale(const EllipticMoments& mu, const Mat& A, const Vec& h) {
    const int n = A.n;
    if (static_cast<int>(mu.mean.size()) != n || mu.covariance.n != n ||
        static_cast<int>(h.size()) != n) {
        throw DomainError("w2_sq_position_scale: dimension mismatch");
    }
    check_symmetric(A, "w2_sq_position_scale");
    {
        Mat vectors;
        check_psd_spectrum(jacobi_eigensym(A, vectors), "w2_sq_position_scale");
    }
    // M = Sigma + m m^T
    Mat M = mu.covariance;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) M.at(i, j) += mu.mean[i] * mu.mean[j];
    }
    Mat AmI = A;
    for (int i = 0; i < n; ++i) AmI.at(i, i) -= 1.0;
    const double quad = trace(mat_mul(mat_mul(AmI, AmI), M));
    double cross = 0.0, hh = 0.0;
    for (int i = 0; i < n; ++i) {
        double Am = 0.0;
        for (int j = 0; j < n; ++j) Am += AmI.at(i, j) * mu.mean[j];
        cross += Am * h[i];
        hh += h[i] * h[i];
    }
    return quad + 2.0 * cross + hh;
}

double w2_sq_position_scale_cov(const EllipticMoments& mu, const Mat& A, const Vec& h) {
    const int n = A.n;
    if (static_cast<int>(mu.mean.size()) != n || mu.covariance.n != n ||
        static_cast<int>(h.size()) != n) {
        throw DomainError("w2_sq_position_scale_cov: dimension mismatch");
    }
    check_symmetric(A, "w2_sq_position_scale_cov");
    // nu = (A x + h)_# mu: Sigma_nu = A Sigma A, m_nu = A m + h.
    const Mat ASigma = mat_mul(A, mu.covariance);
    const Mat SigmaNu = mat_mul(ASigma, A);
    double mean_sq = 0.0;
    for (int i = 0; i < n; ++i) {
        double mnu = h[i];
        for (int j = 0; j < n; ++j) mnu += A.at(i, j) * mu.mean[j];
        const double diff = mu.mean[i] - mnu;
        mean_sq += diff * diff;
    }
    return trace(mu.covariance) + trace(SigmaNu) - 2.0 * trace(ASigma) + mean_sq;
}

double w2_sq_elliptic(const EllipticMoments& mu, const EllipticMoments& nu) {
    const int n = mu.covariance.n;
    if (nu.covariance.n != n || static_cast<int>(mu.mean.size()) != n ||
        static_cast<int>(nu.mean.size()) != n) {
        throw DomainError("w2_sq_elliptic: dimension mismatch");
    }
    if (n > kMaxDim) {
        throw UnsupportedSizeError("w2_sq_elliptic: general matrix path capped at d <= 64");
    }
    check_symmetric(mu.covariance, "w2_sq_elliptic");
    check_symmetric(nu.covariance, "w2_sq_elliptic");

    double mean_sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double diff = mu.mean[i] - nu.mean[i];
        mean_sq += diff * diff;
    }

    const Mat s_mu = sqrt_psd(mu.covariance);
    const Mat s_nu = sqrt_psd(nu.covariance);
    if (commute(mu.covariance, nu.covariance)) {
        Mat diff = s_mu;
        for (std::size_t i = 0; i < diff.a.size(); ++i) diff.a[i] -= s_nu.a[i];
        return trace(mat_mul(diff, diff)) + mean_sq;
    }
    const Mat inner = mat_mul(mat_mul(s_mu, nu.covariance), s_mu);
    const Mat cross = sqrt_psd(inner);
    return trace(mu.covariance) + trace(nu.covariance) - 2.0 * trace(cross) + mean_sq;
}

Mat optimal_map_matrix(const Mat& sigma_mu, const Mat& sigma_nu) {
    check_symmetric(sigma_mu, "optimal_map_matrix");
    check_symmetric(sigma_nu, "optimal_map_matrix");
    Mat vectors;
    std::vector<double> w = jacobi_eigensym(sigma_mu, vectors);
    check_psd_spectrum(w, "optimal_map_matrix");
    double scale = 1e-300;
    for (double v : w) scale = std::max(scale, v);
    std::vector<double> inv_sqrt(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] <= 1e-14 * scale) {
            throw DomainError("optimal_map_matrix: Sigma_mu must be positive definite");
        }
        inv_sqrt[i] = 1.0 / std::sqrt(w[i]);
    }
    const Mat s_mu = sqrt_psd(sigma_mu);
    const Mat inv_s_mu = from_eigen(vectors, inv_sqrt);
    const Mat inner = sqrt_psd(mat_mul(mat_mul(s_mu, sigma_nu), s_mu));
    return mat_mul(mat_mul(inv_s_mu, inner), inv_s_mu);
}

}  // namespace fpcutoff
