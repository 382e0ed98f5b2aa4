#include "qduality/gellmann.hpp"

#include <cmath>
#include <string>

namespace qduality {

double diagonal_generator_entry(int d, int j, int m) {
    if (j < 1 || j >= d) throw OutOfRange("diagonal_generator_entry: j out of range");
    if (m < 0 || m >= d) throw OutOfRange("diagonal_generator_entry: m out of range");
    const double scale = std::sqrt(2.0 / (static_cast<double>(j) * (j + 1)));
    if (m < j) return scale;
    if (m == j) return -scale * j;
    return 0.0;
}

GellMannBasis build_basis(int d) {
    if (d < 2) throw BadDimension("build_basis: d must be >= 2");
    GellMannBasis b{d, ComplexMatrix::identity(d), {}, {}, {}, {}};

    b.diagonal.reserve(static_cast<size_t>(d - 1));
    for (int j = 1; j < d; ++j) {
        ComplexMatrix g(d);
        for (int m = 0; m < d; ++m) g(m, m) = diagonal_generator_entry(d, j, m);
        b.diagonal.push_back(std::move(g));
    }

    b.pairs.reserve(static_cast<size_t>(d) * (d - 1) / 2);
    for (int k = 0; k < d - 1; ++k) {
        for (int l = k + 1; l < d; ++l) {
            b.pairs.emplace_back(k, l);
            ComplexMatrix s(d);
            s(k, l) = 1.0;
            s(l, k) = 1.0;
            b.symmetric.push_back(std::move(s));
            ComplexMatrix a(d);
            a(k, l) = cplx(0.0, -1.0);
            a(l, k) = cplx(0.0, 1.0);
            b.antisymmetric.push_back(std::move(a));
        }
    }
    return b;
}

namespace {

double real_coeff(const ComplexMatrix& g, const ComplexMatrix& x, double imag_tol) {
    const cplx v = hs_inner(g, x);
    if (std::abs(v.imag()) > imag_tol)
        throw Error("decompose: coefficient has imaginary residue " +
                    std::to_string(v.imag()));
    return v.real();
}

}  // namespace

GmComponents decompose(const ComplexMatrix& x, const GellMannBasis& basis,
                       const Tolerances& tol) {
    if (x.dim() != basis.dim) throw DimensionMismatch("decompose: dims differ");
    if (x.hermiticity_defect() > tol.validation)
        throw NotHermitian("decompose: input is not Hermitian");

    // The imaginary residue of each coefficient is bounded by the hermiticity
    // defect; allow it on top of the machine-level budget.
    const double imag_tol = tol.component_imag + x.hermiticity_defect() * basis.dim;

    GmComponents c{basis.dim, x.trace().real(), {}, {}, {}};
    c.diag_coeffs.reserve(basis.diagonal.size());
    for (const auto& g : basis.diagonal) c.diag_coeffs.push_back(real_coeff(g, x, imag_tol));
    c.sym_coeffs.reserve(basis.symmetric.size());
    for (const auto& g : basis.symmetric) c.sym_coeffs.push_back(real_coeff(g, x, imag_tol));
    c.antisym_coeffs.reserve(basis.antisymmetric.size());
    for (const auto& g : basis.antisymmetric)
        c.antisym_coeffs.push_back(real_coeff(g, x, imag_tol));
    return c;
}

ComplexMatrix reconstruct(const GmComponents& c, const GellMannBasis& basis) {
    if (c.dim != basis.dim) throw DimensionMismatch("reconstruct: dims differ");
    const int d = basis.dim;
    ComplexMatrix x(d);
    const double tr_scale = c.trace_part / d;
    for (int i = 0; i < d; ++i) x(i, i) = tr_scale;

    for (size_t j = 0; j < c.diag_coeffs.size(); ++j) {
        const double w = 0.5 * c.diag_coeffs[j];
        for (int m = 0; m < d; ++m) x(m, m) += w * basis.diagonal[j](m, m);
    }
    for (size_t i = 0; i < basis.pairs.size(); ++i) {
        const auto [k, l] = basis.pairs[i];
        // (s - i a)/2 fills the upper triangle; Hermiticity gives the lower.
        const cplx upper(0.5 * c.sym_coeffs[i], -0.5 * c.antisym_coeffs[i]);
        x(k, l) += upper;
        x(l, k) += std::conj(upper);
    }
    return x;
}

std::vector<double> bloch_from_populations(std::span<const double> pops, const Tolerances& tol) {
    const int d = static_cast<int>(pops.size());
    if (d < 2) throw BadDimension("bloch_from_populations: need at least 2 populations");
    double sum = 0.0;
    for (double p : pops) {
        if (p < -tol.validation || !std::isfinite(p))
            throw BadProbabilityVector("bloch_from_populations: negative population");
        sum += p;
    }
    if (std::abs(sum - 1.0) > tol.validation)
        throw BadProbabilityVector("bloch_from_populations: populations do not sum to 1");

    std::vector<double> coeffs(static_cast<size_t>(d - 1));
    for (int j = 1; j < d; ++j) {
        double c = 0.0;
        for (int m = 0; m <= j; ++m) c += diagonal_generator_entry(d, j, m) * pops[static_cast<size_t>(m)];
        coeffs[static_cast<size_t>(j - 1)] = c;
    }
    return coeffs;
}

std::vector<double> populations_from_bloch(std::span<const double> diag_coeffs,
                                           const Tolerances& tol) {
    const int d = static_cast<int>(diag_coeffs.size()) + 1;
    if (d < 2) throw BadDimension("populations_from_bloch: empty input");

    std::vector<double> pops(static_cast<size_t>(d), 1.0 / d);
    for (int j = 1; j < d; ++j) {
        const double w = 0.5 * diag_coeffs[static_cast<size_t>(j - 1)];
        for (int m = 0; m <= j; ++m) pops[static_cast<size_t>(m)] += w * diagonal_generator_entry(d, j, m);
    }
    for (double& p : pops) {
        if (p < -tol.validation || p > 1.0 + tol.validation)
            throw OutOfRange("populations_from_bloch: population outside [0,1]: " +
                             std::to_string(p));
        if (p < 0.0) p = 0.0;
        if (p > 1.0) p = 1.0;
    }
    return pops;
}

}  // namespace qduality
