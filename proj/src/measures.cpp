#include "qduality/measures.hpp"

#include <cmath>

namespace qduality {

namespace {

// Entropy convention 0 ln 0 = 0; eigenvalues inside the validation band are
// treated as exact zeros.
double xlnx(double x) {
    if (x <= 0.0) return 0.0;
    return x * std::log(x);
}

double clamp_nonneg(double x) { return x < 0.0 ? 0.0 : x; }

}  // namespace

double s_l_max(int d) { return static_cast<double>(d - 1) / d; }
double s_vn_max(int d) { return std::log(static_cast<double>(d)); }

double linear_entropy(const ComplexMatrix& x, const Tolerances& tol) {
    if (x.hermiticity_defect() > tol.validation)
        throw NotHermitian("linear_entropy: input is not Hermitian");
    double tr2 = 0.0;
    for (int r = 0; r < x.dim(); ++r)
        for (int c = 0; c < x.dim(); ++c) tr2 += std::norm(x(r, c));
    return 1.0 - tr2;
}

double linear_entropy(std::span<const double> diag) {
    double tr2 = 0.0;
    for (double v : diag) tr2 += v * v;
    return 1.0 - tr2;
}

double von_neumann_entropy(const ComplexMatrix& x, const Tolerances& tol) {
    const EigenSystem es = hermitian_eig(x, tol);
    double s = 0.0;
    for (double lam : es.eigenvalues) {
        if (lam < -tol.validation)
            throw NotPositive("von_neumann_entropy: negative eigenvalue");
        s -= xlnx(clamp_nonneg(lam));
    }
    return s;
}

double von_neumann_entropy(std::span<const double> diag) {
    double s = 0.0;
    for (double v : diag) s -= xlnx(clamp_nonneg(v));
    return s;
}

double c_hs(const DensityMatrix& rho, ChsForm form) {
    const ComplexMatrix& m = rho.matrix();
    const int d = rho.dim();
    if (form == ChsForm::element) {
        double sum = 0.0;
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                if (j != k) sum += std::norm(m(j, k));
        return sum;
    }
    const GellMannBasis basis = build_basis(d);
    const GmComponents c = decompose(m, basis);
    double sum = 0.0;
    for (double v : c.sym_coeffs) sum += v * v;
    for (double v : c.antisym_coeffs) sum += v * v;
    return 0.5 * sum;
}

double c_wy_from_sqrt(const ComplexMatrix& sqrt_rho, CwyForm form) {
    const int d = sqrt_rho.dim();
    switch (form) {
        case CwyForm::sqrt_offdiag: {
            double sum = 0.0;
            for (int j = 0; j < d; ++j)
                for (int k = 0; k < d; ++k)
                    if (j != k) sum += std::norm(sqrt_rho(j, k));
            return sum;
        }
        case CwyForm::one_minus_diag: {
            double sum = 0.0;
            for (int j = 0; j < d; ++j) {
                const double w = sqrt_rho(j, j).real();
                sum += w * w;
            }
            return 1.0 - sum;
        }
        case CwyForm::commutator: {
            double total = 0.0;
            for (int j = 0; j < d; ++j) {
                ComplexMatrix proj(d);
                proj(j, j) = 1.0;
                const ComplexMatrix comm = sqrt_rho * proj - proj * sqrt_rho;
                total += -0.5 * (comm * comm).trace().real();
            }
            return total;
        }
    }
    throw UnknownMeasure("c_wy_from_sqrt: bad form");
}

double c_wy(const DensityMatrix& rho, CwyForm form, const Tolerances& tol) {
    return c_wy_from_sqrt(matrix_sqrt(rho.matrix(), tol), form);
}

double c_l1(const DensityMatrix& rho) {
    const ComplexMatrix& m = rho.matrix();
    double sum = 0.0;
    for (int j = 0; j < rho.dim(); ++j)
        for (int k = 0; k < rho.dim(); ++k)
            if (j != k) sum += std::abs(m(j, k));
    return sum;
}

double population_bound_from_diag(std::span<const double> diag) {
    double sum = 0.0;
    for (size_t m = 0; m + 1 < diag.size(); ++m)
        for (size_t n = m + 1; n < diag.size(); ++n) sum += diag[m] * diag[n];
    return 2.0 * sum;
}

double p_hs_linear(const DensityMatrix& rho) {
    return s_l_max(rho.dim()) - population_bound_from_diag(rho.populations());
}

double p_hs_vn(const DensityMatrix& rho) {
    double acc = s_vn_max(rho.dim());
    for (double p : rho.populations()) acc += xlnx(clamp_nonneg(p));
    return acc;
}

double p_l1(const DensityMatrix& rho) {
    const std::vector<double> pops = rho.populations();
    const int d = rho.dim();
    double sum = 0.0;
    for (int j = 0; j < d - 1; ++j)
        for (int k = j + 1; k < d; ++k)
            sum += std::sqrt(clamp_nonneg(pops[static_cast<size_t>(j)]) *
                             clamp_nonneg(pops[static_cast<size_t>(k)]));
    return static_cast<double>(d - 1) - 2.0 * sum;
}

WyBounds wy_bounds_from_diag(std::span<const double> w) {
    double total = 0.0;
    for (double v : w) total += v;
    const double sl = linear_entropy(w);
    const double svn = von_neumann_entropy(w);
    return WyBounds{sl + total * total - 1.0, svn + total * (total - 1.0)};
}

WyBounds wy_bounds(const DensityMatrix& rho, const Tolerances& tol) {
    return wy_bounds_from_diag(sqrt_diag(rho, tol));
}

double population_bound(const DensityMatrix& rho, PopulationBoundKind kind,
                        const Tolerances& tol) {
    if (kind == PopulationBoundKind::hs) return population_bound_from_diag(rho.populations());
    return population_bound_from_diag(sqrt_diag(rho, tol));
}

MeasureValue make_measure(std::string name, double value, std::string formula_variant,
                          const Tolerances& tol) {
    if (!std::isfinite(value))
        throw Error("measure " + name + " is not finite");
    if (value < -tol.validation)
        throw Error("measure " + name + " is negative: " + std::to_string(value));
    return MeasureValue{std::move(name), value, std::move(formula_variant)};
}

}  // namespace qduality
