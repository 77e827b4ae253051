#pragma once

#include <vector>

#include "splitkit/complex_matrix.hpp"

namespace splitkit {

// Eigenvalues with algebraic multiplicity, canonically sorted
// (by real part, then imaginary part). Re-sorting is idempotent.
struct Spectrum {
    std::vector<cplx> values;

    int size() const { return static_cast<int>(values.size()); }
    void sort_canonical();
};

// exp(t*A) by Pade approximation with scaling and squaring.
// Accurate to near machine precision for ||t*A|| <= ~50.
ComplexMatrix expm(const ComplexMatrix& a, cplx t = 1.0);

// Complex Schur decomposition A = Z T Z^*, T upper triangular.
struct SchurResult {
    ComplexMatrix t;          // upper triangular factor
    ComplexMatrix z;          // unitary similarity
    double residual = 0.0;    // ||Z T Z^* - A||_F / max(1, ||A||_F)
};

SchurResult schur(const ComplexMatrix& a, bool want_z = true);

// Eigenvalues via Hessenberg reduction + shifted QR.
Spectrum eigvals(const ComplexMatrix& a);

// Principal matrix logarithm via Schur + inverse scaling and squaring.
// Throws BranchCutError if an eigenvalue is within branch_tol of the closed
// negative real axis.
ComplexMatrix logm_principal(const ComplexMatrix& s, double branch_tol = 1e-10);

// Solve A X = B with partial-pivot LU.
ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b);
CVector solve(const ComplexMatrix& a, const CVector& b);
ComplexMatrix inverse(const ComplexMatrix& a);

// Spectral projector onto the eigenvalue cluster near cluster_center,
// computed as a resolvent contour integral. Requires a clean split: every
// eigenvalue either within cluster_tol of the center or farther than
// 10*cluster_tol (otherwise ClusteringError).
ComplexMatrix spectral_projector(const ComplexMatrix& a, cplx cluster_center,
                                 double cluster_tol);

// Householder QR; returns the unitary factor (economy square case).
ComplexMatrix qr_unitary(const ComplexMatrix& a);

// Greedy nearest-neighbour pairing distance between two spectra of equal
// size (multiplicity-aware set comparison).
double spectra_paired_distance(const Spectrum& a, const Spectrum& b);

// Symmetric Hausdorff distance between two eigenvalue sets.
double spectra_hausdorff_distance(const Spectrum& a, const Spectrum& b);

// Least squares over matrices stacked as vectors: finds x minimizing
// sum_i w_i^2 || sum_k x_k B_ik - Y_i ||_F^2 over all grid points i.
// Returns the relative residual sqrt(misfit / total).
struct LsqFit {
    std::vector<cplx> coeffs;
    double rel_residual = 0.0;
};
LsqFit lsq_matrix_fit(const std::vector<std::vector<ComplexMatrix>>& basis_per_point,
                      const std::vector<ComplexMatrix>& targets,
                      const std::vector<double>& weights);

} // namespace splitkit
