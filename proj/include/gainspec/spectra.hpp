#pragma once

#include <vector>

#include "gainspec/core.hpp"

namespace gainspec {

/// Real eigenvalues of a Hermitian matrix, sorted ascending.
struct Spectrum {
    std::vector<double> eigenvalues;

    double lambda_max() const { return eigenvalues.back(); }
    double lambda_min() const { return eigenvalues.front(); }
    double spectral_radius() const;
};

/// Eigenvalues via the real-symmetric embedding [[X, -Y], [Y, X]] of
/// M = X + iY, diagonalized by cyclic Jacobi. Each eigenvalue of M appears
/// doubled in the embedding; the doubled pairs are averaged and returned
/// once. Throws NumericalError on non-Hermitian input (tolerance 1e-10) or
/// if the sweep fails to converge.
Spectrum eigenvalues_hermitian(const HermitianMatrix& m);

struct EigenDecomposition {
    Spectrum spectrum;
    // vectors[k] is a unit eigenvector for eigenvalues[k]; together unitary.
    std::vector<std::vector<Complex>> vectors;
};

/// Full eigendecomposition through the same embedding. Complex eigenvectors
/// are recovered from the embedding eigenvectors ([u; v] -> u + iv) with a
/// pivoted Gram-Schmidt pass inside each degenerate cluster.
EigenDecomposition eigen_hermitian(const HermitianMatrix& m);

/// Sorted eigenvalue vectors agree entrywise within tol.
bool cospectral(const HermitianMatrix& a, const HermitianMatrix& b, double tol = kSpectralTol);

/// lambda_max(A(Phi)) == lambda_max(A(G)); balance criterion.
bool balance_by_largest_eigenvalue(const GainGraph& g, double tol = kSpectralTol);

/// rho(A(Phi)) == rho(A(G)); holds iff Phi or -Phi is balanced.
bool balance_or_antibalance_by_radius(const GainGraph& g, double tol = kSpectralTol);

/// cospectral(D^max(Phi), D(G)); holds iff Phi is balanced. Requires an
/// order-independent graph so that D^max(Phi) is well defined, otherwise
/// throws PreconditionError.
bool distance_spectral_balance(const GainGraph& g, double tol = kSpectralTol);

/// The largest-eigenvalue-only variant of the same criterion.
bool distance_spectral_balance_largest(const GainGraph& g, double tol = kSpectralTol);

}  // namespace gainspec
