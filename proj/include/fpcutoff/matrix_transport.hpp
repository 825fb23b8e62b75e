#pragma once

#include <vector>

namespace fpcutoff {

// Minimal dense symmetric-matrix toolkit for the transport formulas.
// Row-major square storage; validation-scale dimensions (d <= 64).
struct Mat {
    int n = 0;
    std::vector<double> a;  // n * n, row-major

    Mat() = default;
    explicit Mat(int n_) : n(n_), a(static_cast<std::size_t>(n_) * n_, 0.0) {}
    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
    static Mat identity(int n);
};

using Vec = std::vector<double>;

// First two moments of an elliptic-family law.
struct EllipticMoments {
    Vec mean;
    Mat covariance;
};

Mat mat_mul(const Mat& x, const Mat& y);
double trace(const Mat& x);

// Cyclic Jacobi eigendecomposition of a symmetric matrix; returns
// eigenvalues and fills eigenvectors column-wise (x = V diag(w) V^T).
// Off-diagonal Frobenius norm driven below 1e-12 * scale.
std::vector<double> jacobi_eigensym(const Mat& x, Mat& eigenvectors);

// Symmetric PSD square root (eigenvalues clamped at 0).
Mat sqrt_psd(const Mat& x);

// W2^2 between a law with moments mu and its image under x -> A x + h:
// Tr((A - I)^2 M) + 2 <(A - I) m, h> + |h|^2 with M = Sigma + m m^T.
// A must be symmetric PSD (Brenier optimality).
double w2_sq_position_scale(const EllipticMoments& mu, const Mat& A, const Vec& h);

// Equivalent covariance form: Tr(Sigma_mu + Sigma_nu - 2 A Sigma_mu) +
// |m_mu - m_nu|^2 where nu is the pushforward of mu by x -> A x + h.
double w2_sq_position_scale_cov(const EllipticMoments& mu, const Mat& A, const Vec& h);

// Gaussian/elliptic closed form:
// Tr(Sigma_mu + Sigma_nu - 2 sqrt(sqrt(Sigma_mu) Sigma_nu sqrt(Sigma_mu)))
// + |m_mu - m_nu|^2; commuting covariances reduce to Tr((sqrt S_mu - sqrt S_nu)^2).
// Capped at d <= 64.
double w2_sq_elliptic(const EllipticMoments& mu, const EllipticMoments& nu);

// Optimal map matrix between elliptic laws with the same generator:
// A = Sigma_mu^{-1/2} sqrt(Sigma_mu^{1/2} Sigma_nu Sigma_mu^{1/2}) Sigma_mu^{-1/2}.
Mat optimal_map_matrix(const Mat& sigma_mu, const Mat& sigma_nu);

}  // namespace fpcutoff
