#include "hypertree/spectral.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hypertree {

long long DistanceMatrix::row_sum(int u) const {
    long long s = 0;
    for (int v = 0; v < n; ++v) s += at(u, v);
    return s;
}

DistanceMatrix distance_matrix(const Hypergraph& g) {
    DistanceMatrix d;
    d.n = g.n;
    d.entries.assign(static_cast<size_t>(g.n) * g.n, 0);
    for (int u = 0; u < g.n; ++u) {
        std::vector<int> row = distances_from(g, u);
        for (int v = 0; v < g.n; ++v) {
            if (row[v] < 0) throw std::domain_error("distance matrix needs a connected hypergraph");
            d.entries[static_cast<size_t>(u) * g.n + v] = row[v];
        }
    }
    return d;
}

SpectralResult spectral_radius(const DistanceMatrix& d, double tol) {
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    const int n = d.n;
    SpectralResult res;
    if (n == 0) return res;

    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> y(n, 0.0);
    const long cap = 1000000;
    for (long it = 1; it <= cap; ++it) {
        for (int u = 0; u < n; ++u) {
            double s = 0.0;
            const int* row = d.entries.data() + static_cast<size_t>(u) * n;
            for (int v = 0; v < n; ++v) s += row[v] * x[v];
            y[u] = s;
        }
        double rho = 0.0;  // Rayleigh quotient; x has unit norm
        for (int u = 0; u < n; ++u) rho += x[u] * y[u];
        double resid = 0.0;
        for (int u = 0; u < n; ++u) {
            double r = std::fabs(y[u] - rho * x[u]);
            if (r > resid) resid = r;
        }
        if (resid <= tol * rho || (rho == 0.0 && resid == 0.0)) {
            res.rho = rho;
            res.perron = x;
            res.iterations = it;
            res.residual = resid;
            return res;
        }
        double norm = 0.0;
        for (int u = 0; u < n; ++u) norm += y[u] * y[u];
        norm = std::sqrt(norm);
        for (int u = 0; u < n; ++u) x[u] = y[u] / norm;
        if (it == cap)
            throw std::runtime_error("power iteration did not converge; last residual " +
                                     std::to_string(resid));
    }
    return res;  // unreachable
}

SpectralResult spectral_radius(const Hypergraph& g, double tol) {
    return spectral_radius(distance_matrix(g), tol);
}

long long status(const Hypergraph& g, int u) {
    g.check_vertex(u);
    std::vector<int> row = distances_from(g, u);
    long long s = 0;
    for (int v = 0; v < g.n; ++v) {
        if (row[v] < 0) throw std::domain_error("status needs a connected hypergraph");
        s += row[v];
    }
    return s;
}

long long min_status(const Hypergraph& g) {
    long long best = -1;
    for (int u = 0; u < g.n; ++u) {
        long long s = status(g, u);
        if (best < 0 || s < best) best = s;
    }
    return best;
}

double sigma(const std::vector<double>& x, const std::vector<int>& vertex_set) {
    double s = 0.0;
    for (int v : vertex_set) {
        if (v < 0 || static_cast<size_t>(v) >= x.size())
            throw std::out_of_range("sigma: vertex out of range");
        s += x[v];
    }
    return s;
}

}  // namespace hypertree
