#pragma once

#include <vector>

#include "hypertree/hypergraph.hpp"

namespace hypertree {

// Dense symmetric matrix of pairwise loose-path distances. Entries are
// exact integers; the diagonal is zero.
struct DistanceMatrix {
    int n = 0;
    std::vector<int> entries;  // row-major, n*n

    int at(int u, int v) const { return entries[static_cast<size_t>(u) * n + v]; }
    long long row_sum(int u) const;
};

// Throws std::domain_error when g is disconnected.
DistanceMatrix distance_matrix(const Hypergraph& g);

// Dominant eigenpair of a distance matrix. The vector is the positive unit
// eigenvector; residual is max_u |rho*x_u - (Dx)_u| at return.
struct SpectralResult {
    double rho = 0.0;
    std::vector<double> perron;
    long iterations = 0;
    double residual = 0.0;
};

// Power iteration on the dense integer matrix, all-ones start vector, with
// the Rayleigh quotient as the eigenvalue estimate. Stops once the
// eigenequation residual drops below tol * rho (tol is relative) and throws
// std::runtime_error, reporting the last residual, if that does not happen
// within the iteration cap. Deterministic: fixed start and summation order.
SpectralResult spectral_radius(const DistanceMatrix& d, double tol = 1e-10);
SpectralResult spectral_radius(const Hypergraph& g, double tol = 1e-10);

// Status (transmission) of u: the row sum of the distance matrix at u.
long long status(const Hypergraph& g, int u);

// s(G) = min over vertices of the status. rho(G) >= s(G) always.
long long min_status(const Hypergraph& g);

// Sum of the entries of x over the given vertex set.
double sigma(const std::vector<double>& x, const std::vector<int>& vertex_set);

}  // namespace hypertree
