#pragma once

#include <vector>

#include "kalliance/graph.hpp"

namespace kalliance {

struct SpectralSummary {
    double mu;        // algebraic connectivity: second-smallest Laplacian eigenvalue
    double mu_star;   // Laplacian spectral radius: largest eigenvalue
    double tolerance; // max residual ||L x - lambda x||_inf over computed pairs
    std::vector<double> eigenvalues; // ascending
};

// Dense symmetric eigendecomposition of the combinatorial Laplacian D - A.
// Requires n >= 2.
SpectralSummary laplacian_spectrum(const Graph& g);

// Reals within eps of an integer are snapped before entering floor/ceil in
// bound formulas (mu = n for K_n may compute as n - 1e-12).
double snap_to_int(double x, double eps = 1e-6);

} // namespace kalliance
