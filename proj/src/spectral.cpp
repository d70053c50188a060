#include "kalliance/spectral.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace kalliance {

SpectralSummary laplacian_spectrum(const Graph& g) {
    const int n = g.n();
    if (n < 2) throw std::invalid_argument("laplacian_spectrum: n >= 2 required");
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
    for (int v = 0; v < n; ++v) L(v, v) = g.degree(v);
    for (auto [u, v] : g.edges()) {
        L(u, v) = -1.0;
        L(v, u) = -1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(L);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("laplacian_spectrum: eigensolver failed");

    SpectralSummary out;
    out.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    out.mu = out.eigenvalues[1];
    out.mu_star = out.eigenvalues[n - 1];
    out.tolerance = 0.0;
    for (int i = 0; i < n; ++i) {
        Eigen::VectorXd r = L * solver.eigenvectors().col(i) -
                            solver.eigenvalues()[i] * solver.eigenvectors().col(i);
        out.tolerance = std::max(out.tolerance, r.cwiseAbs().maxCoeff());
    }
    return out;
}

double snap_to_int(double x, double eps) {
    double r = std::round(x);
    return std::abs(x - r) <= eps ? r : x;
}

} // namespace kalliance
