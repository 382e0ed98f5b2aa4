#include "qduality/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qduality {

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim) {
    if (dim < 2) throw BadDimension("ComplexMatrix: dim must be >= 2");
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> entries) {
    ComplexMatrix m(static_cast<int>(entries.size()));
    for (int i = 0; i < m.dim(); ++i) m(i, i) = entries[static_cast<size_t>(i)];
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
    ComplexMatrix m(static_cast<int>(rows.size()));
    int r = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != m.dim())
            throw DimensionMismatch("from_rows: ragged row");
        int c = 0;
        for (cplx v : row) m(r, c++) = v;
        ++r;
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(dim_);
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) m(c, r) = std::conj((*this)(r, c));
    return m;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0.0;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

std::vector<double> ComplexMatrix::real_diagonal() const {
    std::vector<double> d(static_cast<size_t>(dim_));
    for (int i = 0; i < dim_; ++i) d[static_cast<size_t>(i)] = (*this)(i, i).real();
    return d;
}

double ComplexMatrix::hermiticity_defect() const {
    double worst = 0.0;
    for (int r = 0; r < dim_; ++r)
        for (int c = r; c < dim_; ++c)
            worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return worst;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    if (other.dim_ != dim_) throw DimensionMismatch("max_abs_diff: dims differ");
    double worst = 0.0;
    for (size_t i = 0; i < a_.size(); ++i) worst = std::max(worst, std::abs(a_[i] - other.a_[i]));
    return worst;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim_ != b.dim_) throw DimensionMismatch("operator+: dims differ");
    ComplexMatrix m(a.dim_);
    for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = a.a_[i] + b.a_[i];
    return m;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim_ != b.dim_) throw DimensionMismatch("operator-: dims differ");
    ComplexMatrix m(a.dim_);
    for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = a.a_[i] - b.a_[i];
    return m;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim_ != b.dim_) throw DimensionMismatch("operator*: dims differ");
    const int d = a.dim_;
    ComplexMatrix m(d);
    for (int r = 0; r < d; ++r)
        for (int k = 0; k < d; ++k) {
            const cplx ark = a(r, k);
            if (ark == 0.0) continue;
            for (int c = 0; c < d; ++c) m(r, c) += ark * b(k, c);
        }
    return m;
}

ComplexMatrix operator*(cplx s, const ComplexMatrix& a) {
    ComplexMatrix m(a.dim_);
    for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = s * a.a_[i];
    return m;
}

ComplexMatrix operator*(double s, const ComplexMatrix& a) { return cplx(s, 0.0) * a; }

namespace {

double offdiag_frobenius(const ComplexMatrix& a) {
    double sum = 0.0;
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c)
            if (r != c) sum += std::norm(a(r, c));
    return std::sqrt(sum);
}

}  // namespace

EigenSystem hermitian_eig(const ComplexMatrix& m, const Tolerances& tol) {
    if (m.hermiticity_defect() > tol.validation)
        throw NotHermitian("hermitian_eig: input is not Hermitian");

    const int d = m.dim();
    ComplexMatrix a = m;
    // Work on the exactly Hermitian average so rotations see a consistent matrix.
    for (int r = 0; r < d; ++r) {
        a(r, r) = a(r, r).real();
        for (int c = r + 1; c < d; ++c) {
            const cplx avg = 0.5 * (a(r, c) + std::conj(a(c, r)));
            a(r, c) = avg;
            a(c, r) = std::conj(avg);
        }
    }

    ComplexMatrix v = ComplexMatrix::identity(d);
    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (offdiag_frobenius(a) < tol.jacobi_off) break;
        for (int p = 0; p < d - 1; ++p) {
            for (int q = p + 1; q < d; ++q) {
                const cplx apq = a(p, q);
                const double r = std::abs(apq);
                if (r == 0.0) continue;
                const cplx phase = apq / r;  // e^{i phi}
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * r);
                const double t =
                    (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx pc = std::conj(phase);

                // A <- A R with R(p,p)=c, R(p,q)=s, R(q,p)=-s e^{-i phi}, R(q,q)=c e^{-i phi}.
                for (int i = 0; i < d; ++i) {
                    const cplx aip = a(i, p);
                    const cplx aiq = a(i, q);
                    a(i, p) = c * aip - s * pc * aiq;
                    a(i, q) = s * aip + c * pc * aiq;
                }
                // A <- R† A.
                for (int j = 0; j < d; ++j) {
                    const cplx apj = a(p, j);
                    const cplx aqj = a(q, j);
                    a(p, j) = c * apj - s * phase * aqj;
                    a(q, j) = s * apj + c * phase * aqj;
                }
                // V <- V R accumulates the eigenvector columns.
                for (int i = 0; i < d; ++i) {
                    const cplx vip = v(i, p);
                    const cplx viq = v(i, q);
                    v(i, p) = c * vip - s * pc * viq;
                    v(i, q) = s * vip + c * pc * viq;
                }
            }
        }
    }
    if (offdiag_frobenius(a) >= tol.jacobi_off)
        throw Error("hermitian_eig: Jacobi sweeps did not converge");

    std::vector<int> order(static_cast<size_t>(d));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });

    EigenSystem es{std::vector<double>(static_cast<size_t>(d)), ComplexMatrix(d)};
    for (int k = 0; k < d; ++k) {
        const int src = order[static_cast<size_t>(k)];
        es.eigenvalues[static_cast<size_t>(k)] = a(src, src).real();
        for (int i = 0; i < d; ++i) es.eigenvectors(i, k) = v(i, src);
    }
    return es;
}

ComplexMatrix spectral_apply(const EigenSystem& es, const std::function<double(double)>& f,
                             const Tolerances& tol) {
    const int d = es.eigenvectors.dim();
    std::vector<double> fv(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k) {
        double lam = es.eigenvalues[static_cast<size_t>(k)];
        // Eigenvalues inside the round-off band around zero are treated as
        // exact zeros; without this, f = sqrt amplifies O(eps) noise on
        // rank-deficient inputs to O(sqrt(eps)).
        if (lam < 0.0 && lam >= -tol.validation) lam = 0.0;
        if (lam > 0.0 && lam < tol.jacobi_off) lam = 0.0;
        const double y = f(lam);
        if (!std::isfinite(y))
            throw DomainError("spectral_apply: f undefined at eigenvalue " + std::to_string(lam));
        fv[static_cast<size_t>(k)] = y;
    }
    ComplexMatrix out(d);
    for (int k = 0; k < d; ++k) {
        if (fv[static_cast<size_t>(k)] == 0.0) continue;
        for (int r = 0; r < d; ++r) {
            const cplx vr = es.eigenvectors(r, k) * fv[static_cast<size_t>(k)];
            for (int c = 0; c < d; ++c) out(r, c) += vr * std::conj(es.eigenvectors(c, k));
        }
    }
    return out;
}

ComplexMatrix spectral_apply(const ComplexMatrix& m, const std::function<double(double)>& f,
                             const Tolerances& tol) {
    return spectral_apply(hermitian_eig(m, tol), f, tol);
}

ComplexMatrix matrix_sqrt(const EigenSystem& es, const Tolerances& tol) {
    return spectral_apply(es, [](double x) { return std::sqrt(x); }, tol);
}

ComplexMatrix matrix_sqrt(const ComplexMatrix& m, const Tolerances& tol) {
    return matrix_sqrt(hermitian_eig(m, tol), tol);
}

cplx hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("hs_inner: dims differ");
    cplx sum = 0.0;
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) sum += std::conj(a(r, c)) * b(r, c);
    return sum;
}

double positivity_coefficient(const ComplexMatrix& a, const Tolerances& tol) {
    if (a.hermiticity_defect() > tol.validation)
        throw NotHermitian("positivity_coefficient: input is not Hermitian");
    const double tr = a.trace().real();
    double tr2 = 0.0;  // Tr(A^2) = sum |a_rc|^2 for Hermitian A
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) tr2 += std::norm(a(r, c));
    return 0.5 * (tr * tr - tr2);
}

}  // namespace qduality
