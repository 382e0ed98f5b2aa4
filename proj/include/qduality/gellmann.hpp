#pragma once

#include <span>
#include <utility>
#include <vector>

#include "qduality/linalg.hpp"

namespace qduality {

// Generalized Gell-Mann generators for dimension d, all relative to the fixed
// computational basis:
//   diagonal    G_j   = sqrt(2/(j(j+1))) diag(1,...,1, -j, 0,...,0), j = 1..d-1
//   symmetric   G^s_{k,l} = |k><l| + |l><k|
//   antisymmetric G^a_{k,l} = -i(|k><l| - |l><k|)
// Off-diagonal generators are ordered by (k,l) lexicographic with k < l
// (0-based), symmetric paired with antisymmetric at the same (k,l). Distinct
// generators are HS-orthogonal; each non-identity generator has HS norm^2 = 2
// and the identity has norm^2 = d, so the d^2 elements span C^{dxd}.
struct GellMannBasis {
    int dim;
    ComplexMatrix identity;
    std::vector<ComplexMatrix> diagonal;       // index j-1 holds G_j
    std::vector<ComplexMatrix> symmetric;      // parallel to `pairs`
    std::vector<ComplexMatrix> antisymmetric;  // parallel to `pairs`
    std::vector<std::pair<int, int>> pairs;    // 0-based (k,l), k < l, lexicographic
};

GellMannBasis build_basis(int d);

// Real expansion coefficients of a Hermitian matrix in the basis above.
struct GmComponents {
    int dim;
    double trace_part;                  // Tr(X)
    std::vector<double> diag_coeffs;    // <G_j|X>, j = 1..d-1
    std::vector<double> sym_coeffs;     // <G^s_{k,l}|X>
    std::vector<double> antisym_coeffs; // <G^a_{k,l}|X>
};

GmComponents decompose(const ComplexMatrix& x, const GellMannBasis& basis,
                       const Tolerances& tol = {});
ComplexMatrix reconstruct(const GmComponents& c, const GellMannBasis& basis);

// Diagonal entry (m,m) of G_j in closed form; j in 1..d-1, m in 0..d-1.
double diagonal_generator_entry(int d, int j, int m);

// Diagonal Bloch components <G_j|rho> of the diagonal state with the given
// populations. Inverse pair: populations_from_bloch is exact by the
// orthogonality of the diagonal generators.
std::vector<double> bloch_from_populations(std::span<const double> pops,
                                           const Tolerances& tol = {});
std::vector<double> populations_from_bloch(std::span<const double> diag_coeffs,
                                           const Tolerances& tol = {});

}  // namespace qduality
