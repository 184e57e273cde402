#pragma once

#include "chordal/graph.hpp"

#include <cstdint>
#include <vector>

namespace chordal {

/// Laplacian spectrum from the dense solver: eigenvalues sorted descending
/// with their eigenvectors (columns of an accumulated rotation matrix).
struct Spectrum {
    std::vector<double> values;                 ///< mu_1 >= ... >= mu_n
    std::vector<std::vector<double>> vectors;   ///< vectors[i] pairs with values[i]
    double residual = 0.0;                      ///< max_i ||L v_i - lambda_i v_i||_inf

    int order() const { return static_cast<int>(values.size()); }
};

/// Grouped near-integer eigenvalues.
struct IntegerGroup {
    std::int64_t value;
    int multiplicity;
    bool operator==(const IntegerGroup&) const = default;
};

/// Dense symmetric cyclic Jacobi. Converges when the off-diagonal
/// Frobenius norm drops below 1e-12 * ||L||_F, capped at 100 sweeps;
/// the result is rejected unless every eigenpair satisfies
/// ||L v - lambda v||_inf <= 1e-8 * max(1, ||L||_inf).
Spectrum eigenvalues(const LaplacianMatrix& L);

/// a(G) = mu_{n-1}, the second-smallest eigenvalue. Requires n >= 2.
double algebraic_connectivity(const Spectrum& s);

/// Eigenvalues within tol of an integer, grouped by rounded value and
/// sorted ascending by value.
std::vector<IntegerGroup> integer_eigenvalues(const Spectrum& s, double tol);

/// a(G) <= kappa + 1e-7, the eigenvalue/connectivity bound for connected
/// non-complete graphs.
bool fiedler_check(const Graph& g, const Spectrum& s, int kappa);

} // namespace chordal
