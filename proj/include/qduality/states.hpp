#pragma once

#include <vector>

#include "qduality/linalg.hpp"
#include "qduality/rng.hpp"

namespace qduality {

// A validated quantum state: Hermitian, unit trace, positive semi-definite
// within tolerance. Construct through validate(); unchecked() exists for
// callers that can prove validity themselves (and for failure-path tests).
class DensityMatrix {
public:
    const ComplexMatrix& matrix() const { return m_; }
    int dim() const { return m_.dim(); }
    std::vector<double> populations() const { return m_.real_diagonal(); }

    static DensityMatrix unchecked(ComplexMatrix m) { return DensityMatrix(std::move(m)); }

private:
    explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {}
    friend DensityMatrix validate(const ComplexMatrix&, const Tolerances&);
    ComplexMatrix m_;
};

// Checks every defining property and names the first one violated:
// NotHermitian, TraceNotOne, NotPositive, SubmatrixViolation.
DensityMatrix validate(const ComplexMatrix& m, const Tolerances& tol = {});

// Diagonal state in the reference basis.
struct IncoherentState {
    std::vector<double> populations;
};

// Ginibre-induced random state: rho = G G† / Tr(G G†) with G a d x rank matrix
// of independent standard complex Gaussian entries, filled row-major with the
// real part drawn before the imaginary part.
DensityMatrix random_state(int d, int rank, Rng& rng, const Tolerances& tol = {});

// Generalized Werner state of a ququart:
//   rho_{w,a} = (1-w) I_4/4 + w |psi><psi|,  |psi> = sqrt(a)|0> + sqrt(1-a)|1>.
DensityMatrix werner_ququart(double w, double a, const Tolerances& tol = {});

// Closest incoherent state under the Hilbert-Schmidt distance: diag(rho).
IncoherentState closest_incoherent(const DensityMatrix& rho);

// Diagonal of sqrt(rho). Unnormalized: the entries sum to Tr(sqrt(rho)) >= 1,
// and each entry dominates the matching population of rho.
std::vector<double> sqrt_diag(const DensityMatrix& rho, const Tolerances& tol = {});
std::vector<double> sqrt_diag(const EigenSystem& rho_eig, const Tolerances& tol = {});

}  // namespace qduality
