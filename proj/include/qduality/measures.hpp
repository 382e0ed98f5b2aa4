#pragma once

#include <span>
#include <string>

#include "qduality/gellmann.hpp"
#include "qduality/states.hpp"

namespace qduality {

// Every coherence and predictability measure exposes its independent formula
// variants; their agreement is itself a verified identity.
enum class ChsForm { element, basis };
enum class CwyForm { commutator, sqrt_offdiag, one_minus_diag };
enum class PopulationBoundKind { hs, wy };

double s_l_max(int d);   // (d-1)/d
double s_vn_max(int d);  // ln d

// Entropies. The diagonal overloads accept non-unit-trace inputs (needed for
// the diagonal of sqrt(rho)); no renormalization is performed.
double linear_entropy(const ComplexMatrix& x, const Tolerances& tol = {});
double linear_entropy(std::span<const double> diag);
double von_neumann_entropy(const ComplexMatrix& x, const Tolerances& tol = {});
double von_neumann_entropy(std::span<const double> diag);

// Hilbert-Schmidt coherence.
//   element: sum_{j != k} |rho_{jk}|^2
//   basis:   (1/2) sum over off-diagonal Gell-Mann components squared
double c_hs(const DensityMatrix& rho, ChsForm form = ChsForm::element);

// Wigner-Yanase coherence.
//   commutator:     -(1/2) sum_j Tr([sqrt(rho), |j><j|]^2)
//   sqrt_offdiag:   sum_{j != k} |(sqrt(rho))_{jk}|^2
//   one_minus_diag: 1 - sum_j (sqrt(rho))_{jj}^2
double c_wy(const DensityMatrix& rho, CwyForm form = CwyForm::sqrt_offdiag,
            const Tolerances& tol = {});
double c_wy_from_sqrt(const ComplexMatrix& sqrt_rho, CwyForm form = CwyForm::sqrt_offdiag);

// l1-norm coherence: sum_{j != k} |rho_{jk}|.
double c_l1(const DensityMatrix& rho);

// Predictability measures (closed forms in the populations).
double p_hs_linear(const DensityMatrix& rho);  // (d-1)/d - 2 sum_{m<n} rho_mm rho_nn
double p_hs_vn(const DensityMatrix& rho);      // ln d + sum_n rho_nn ln rho_nn
double p_l1(const DensityMatrix& rho);         // d-1 - 2 sum_{j<k} sqrt(rho_jj rho_kk)

// Upper bounds for the Wigner-Yanase coherence built from diag(sqrt(rho)):
//   upsilon = S_l(w) + (sum w)^2 - 1
//   omega   = S_vn(w) + (sum w)(sum w - 1)
struct WyBounds {
    double upsilon;
    double omega;
};
WyBounds wy_bounds(const DensityMatrix& rho, const Tolerances& tol = {});
WyBounds wy_bounds_from_diag(std::span<const double> sqrt_diag_entries);

// Coherence-populations bounds: 2 sum_{m<n} x_m x_n with x the populations of
// rho (hs) or the diagonal of sqrt(rho) (wy).
double population_bound(const DensityMatrix& rho, PopulationBoundKind kind,
                        const Tolerances& tol = {});
double population_bound_from_diag(std::span<const double> diag);

// Named scalar result; construction rejects non-finite or negative values
// beyond tolerance so bugs surface at the point of computation.
struct MeasureValue {
    std::string name;
    double value;
    std::string formula_variant;
};
MeasureValue make_measure(std::string name, double value, std::string formula_variant,
                          const Tolerances& tol = {});

}  // namespace qduality
