#pragma once

#include <complex>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "qduality/errors.hpp"
#include "qduality/tolerances.hpp"

namespace qduality {

using cplx = std::complex<double>;

// Dense d x d complex matrix, row-major, d >= 2.
class ComplexMatrix {
public:
    explicit ComplexMatrix(int dim);  // zero matrix

    static ComplexMatrix identity(int dim);
    static ComplexMatrix diagonal(std::span<const double> entries);
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);

    int dim() const { return dim_; }

    cplx& operator()(int r, int c) { return a_[static_cast<size_t>(r) * dim_ + c]; }
    const cplx& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * dim_ + c]; }

    ComplexMatrix adjoint() const;
    cplx trace() const;
    std::vector<double> real_diagonal() const;

    // max_{r,c} |a(r,c) - conj(a(c,r))|
    double hermiticity_defect() const;
    bool is_hermitian(double tol) const { return hermiticity_defect() <= tol; }

    double max_abs_diff(const ComplexMatrix& other) const;

    friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator*(cplx s, const ComplexMatrix& a);
    friend ComplexMatrix operator*(double s, const ComplexMatrix& a);

private:
    int dim_;
    std::vector<cplx> a_;
};

// Spectral decomposition of a Hermitian matrix. Eigenvalues are sorted
// descending; column m of `eigenvectors` pairs with eigenvalues[m].
struct EigenSystem {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

// Cyclic Jacobi eigensolver for Hermitian matrices. Converges when the
// off-diagonal Frobenius norm drops below tol.jacobi_off; d is small here so
// the O(d^3)-per-sweep cost is irrelevant.
EigenSystem hermitian_eig(const ComplexMatrix& m, const Tolerances& tol = {});

// Sum_m f(lambda_m) |v_m><v_m|. Eigenvalues in [-tol.validation, 0) are
// clamped to 0 before f is applied; if f is undefined at a (clamped)
// eigenvalue the result is non-finite and DomainError is raised.
ComplexMatrix spectral_apply(const ComplexMatrix& m, const std::function<double(double)>& f,
                             const Tolerances& tol = {});
ComplexMatrix spectral_apply(const EigenSystem& es, const std::function<double(double)>& f,
                             const Tolerances& tol = {});

// Principal square root of a positive semi-definite Hermitian matrix.
ComplexMatrix matrix_sqrt(const ComplexMatrix& m, const Tolerances& tol = {});
ComplexMatrix matrix_sqrt(const EigenSystem& es, const Tolerances& tol = {});

// Hilbert-Schmidt inner product Tr(A† B).
cplx hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

// Characteristic-polynomial coefficient c_{d-2} = ((Tr A)^2 - Tr(A^2)) / 2.
// Nonnegative for every positive semi-definite A.
double positivity_coefficient(const ComplexMatrix& a, const Tolerances& tol = {});

}  // namespace qduality
