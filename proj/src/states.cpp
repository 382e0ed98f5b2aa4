#include "qduality/states.hpp"

#include <cmath>
#include <string>

namespace qduality {

DensityMatrix validate(const ComplexMatrix& m, const Tolerances& tol) {
    if (m.hermiticity_defect() > tol.validation)
        throw NotHermitian("validate: hermiticity defect " +
                           std::to_string(m.hermiticity_defect()));

    const double tr = m.trace().real();
    if (std::abs(tr - 1.0) > tol.validation)
        throw TraceNotOne("validate: trace is " + std::to_string(tr));

    const EigenSystem es = hermitian_eig(m, tol);
    const double min_eig = es.eigenvalues.back();
    if (min_eig < -tol.validation)
        throw NotPositive("validate: smallest eigenvalue " + std::to_string(min_eig));

    for (int j = 0; j < m.dim(); ++j) {
        for (int k = j + 1; k < m.dim(); ++k) {
            const double lhs = std::norm(m(j, k));
            const double rhs = m(j, j).real() * m(k, k).real();
            if (lhs > rhs + tol.validation)
                throw SubmatrixViolation("validate: |rho_{" + std::to_string(j) + "," +
                                         std::to_string(k) + "}|^2 exceeds the population product");
        }
    }
    return DensityMatrix::unchecked(m);
}

DensityMatrix random_state(int d, int rank, Rng& rng, const Tolerances& tol) {
    if (d < 2) throw BadDimension("random_state: d must be >= 2");
    if (rank < 1 || rank > d) throw BadRank("random_state: rank must be in [1, d]");

    // G is d x rank; rho = G G† / Tr(G G†).
    std::vector<cplx> g(static_cast<size_t>(d) * rank);
    for (auto& e : g) e = rng.complex_gaussian();

    ComplexMatrix rho(d);
    double tr = 0.0;
    for (int r = 0; r < d; ++r) {
        for (int c = r; c < d; ++c) {
            cplx sum = 0.0;
            for (int k = 0; k < rank; ++k)
                sum += g[static_cast<size_t>(r) * rank + k] *
                       std::conj(g[static_cast<size_t>(c) * rank + k]);
            rho(r, c) = sum;
            rho(c, r) = std::conj(sum);
        }
        tr += rho(r, r).real();
    }
    const double inv = 1.0 / tr;
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) rho(r, c) *= inv;

    return validate(rho, tol);
}

DensityMatrix werner_ququart(double w, double a, const Tolerances& tol) {
    if (!(w >= 0.0 && w <= 1.0)) throw ParamOutOfRange("werner_ququart: w outside [0,1]");
    if (!(a >= 0.0 && a <= 1.0)) throw ParamOutOfRange("werner_ququart: a outside [0,1]");

    const double sa = std::sqrt(a);
    const double sb = std::sqrt(1.0 - a);
    ComplexMatrix rho(4);
    for (int i = 0; i < 4; ++i) rho(i, i) = (1.0 - w) * 0.25;
    rho(0, 0) += w * sa * sa;
    rho(1, 1) += w * sb * sb;
    rho(0, 1) += w * sa * sb;
    rho(1, 0) += w * sa * sb;
    return validate(rho, tol);
}

IncoherentState closest_incoherent(const DensityMatrix& rho) {
    return IncoherentState{rho.populations()};
}

std::vector<double> sqrt_diag(const EigenSystem& rho_eig, const Tolerances& tol) {
    const int d = rho_eig.eigenvectors.dim();
    std::vector<double> diag(static_cast<size_t>(d), 0.0);
    for (int k = 0; k < d; ++k) {
        double lam = rho_eig.eigenvalues[static_cast<size_t>(k)];
        if (lam < 0.0 && lam >= -tol.validation) lam = 0.0;
        if (lam > 0.0 && lam < tol.jacobi_off) lam = 0.0;  // round-off band, see spectral_apply
        if (lam < 0.0)
            throw DomainError("sqrt_diag: negative eigenvalue " + std::to_string(lam));
        const double s = std::sqrt(lam);
        if (s == 0.0) continue;
        for (int j = 0; j < d; ++j)
            diag[static_cast<size_t>(j)] += s * std::norm(rho_eig.eigenvectors(j, k));
    }
    return diag;
}

std::vector<double> sqrt_diag(const DensityMatrix& rho, const Tolerances& tol) {
    return sqrt_diag(hermitian_eig(rho.matrix(), tol), tol);
}

}  // namespace qduality
