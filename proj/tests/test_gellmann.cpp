#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "qduality/gellmann.hpp"
#include "test_support.hpp"

using namespace qduality;
using qdtest::random_hermitian;

namespace {

std::vector<const ComplexMatrix*> all_generators(const GellMannBasis& b) {
    std::vector<const ComplexMatrix*> gens;
    gens.push_back(&b.identity);
    for (const auto& g : b.diagonal) gens.push_back(&g);
    for (const auto& g : b.symmetric) gens.push_back(&g);
    for (const auto& g : b.antisymmetric) gens.push_back(&g);
    return gens;
}

std::vector<double> random_probability_vector(int d, Rng& rng) {
    std::vector<double> p(static_cast<size_t>(d));
    double sum = 0.0;
    for (double& v : p) {
        v = rng.uniform01() + 1e-12;
        sum += v;
    }
    for (double& v : p) v /= sum;
    return p;
}

}  // namespace

TEST_CASE("d=2 basis reduces to the Pauli matrices") {
    const GellMannBasis b = build_basis(2);
    REQUIRE(b.diagonal.size() == 1);
    REQUIRE(b.symmetric.size() == 1);
    REQUIRE(b.antisymmetric.size() == 1);
    CHECK(b.diagonal[0].max_abs_diff(ComplexMatrix::from_rows({{1, 0}, {0, -1}})) <= 1e-15);
    CHECK(b.symmetric[0].max_abs_diff(ComplexMatrix::from_rows({{0, 1}, {1, 0}})) <= 1e-15);
    CHECK(b.antisymmetric[0].max_abs_diff(ComplexMatrix::from_rows(
              {{0, cplx(0, -1)}, {cplx(0, 1), 0}})) <= 1e-15);
}

TEST_CASE("second diagonal generator for d=3") {
    const GellMannBasis b = build_basis(3);
    const double s = std::sqrt(1.0 / 3.0);
    const ComplexMatrix expected =
        ComplexMatrix::from_rows({{s, 0, 0}, {0, s, 0}, {0, 0, -2 * s}});
    CHECK(b.diagonal[1].max_abs_diff(expected) <= 1e-15);
}

TEST_CASE("basis counts, hermiticity, tracelessness and orthonormality") {
    for (int d = 2; d <= 8; ++d) {
        const GellMannBasis b = build_basis(d);
        const size_t ud = static_cast<size_t>(d);
        CHECK(b.diagonal.size() == ud - 1);
        CHECK(b.symmetric.size() == ud * (ud - 1) / 2);
        CHECK(b.antisymmetric.size() == ud * (ud - 1) / 2);
        const auto gens = all_generators(b);
        CHECK(gens.size() == ud * ud);

        CHECK(b.identity.trace().real() == doctest::Approx(static_cast<double>(d)));
        for (size_t i = 1; i < gens.size(); ++i) {
            CHECK(gens[i]->hermiticity_defect() <= 1e-15);
            CHECK(std::abs(gens[i]->trace()) <= 1e-12);
        }

        for (size_t i = 0; i < gens.size(); ++i) {
            for (size_t j = i; j < gens.size(); ++j) {
                const cplx ip = hs_inner(*gens[i], *gens[j]);
                if (i == j) {
                    const double expected = (i == 0) ? static_cast<double>(d) : 2.0;
                    CHECK(std::abs(ip - expected) <= 1e-12);
                } else {
                    CHECK(std::abs(ip) <= 1e-12);
                }
            }
        }
    }
}

TEST_CASE("build_basis rejects d < 2") { CHECK_THROWS_AS(build_basis(1), BadDimension); }

TEST_CASE("decompose: diagonal matrices have no off-diagonal components") {
    const GellMannBasis b = build_basis(4);
    const double e[] = {0.4, 0.3, 0.2, 0.1};
    const GmComponents c = decompose(ComplexMatrix::diagonal(e), b);
    for (double v : c.sym_coeffs) CHECK(std::abs(v) <= 1e-14);
    for (double v : c.antisym_coeffs) CHECK(std::abs(v) <= 1e-14);
    CHECK(c.trace_part == doctest::Approx(1.0));
}

TEST_CASE("decompose: a generator decomposes onto itself") {
    const GellMannBasis b = build_basis(5);
    const GmComponents c = decompose(b.diagonal[0], b);
    CHECK(c.trace_part == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(c.diag_coeffs[0] == doctest::Approx(2.0));
    for (size_t j = 1; j < c.diag_coeffs.size(); ++j)
        CHECK(std::abs(c.diag_coeffs[j]) <= 1e-14);
    for (double v : c.sym_coeffs) CHECK(std::abs(v) <= 1e-14);
}

TEST_CASE("decompose: worked qubit example") {
    const GellMannBasis b = build_basis(2);
    const ComplexMatrix x = ComplexMatrix::from_rows({{0.7, 0.3}, {0.3, 0.3}});
    const GmComponents c = decompose(x, b);
    // oracle: Tr = 1; <diag(1,-1)|X> = 0.7-0.3; <G^s|X> = 2*0.3; <G^a|X> = 0
    CHECK(c.trace_part == doctest::Approx(1.0));
    CHECK(c.diag_coeffs[0] == doctest::Approx(0.4));
    CHECK(c.sym_coeffs[0] == doctest::Approx(0.6));
    CHECK(std::abs(c.antisym_coeffs[0]) <= 1e-14);
}

TEST_CASE("reconstruct: zero components give the maximally mixed matrix") {
    const GellMannBasis b = build_basis(3);
    GmComponents c{3, 1.0, {0, 0}, {0, 0, 0}, {0, 0, 0}};
    const ComplexMatrix x = reconstruct(c, b);
    ComplexMatrix expected(3);
    for (int i = 0; i < 3; ++i) expected(i, i) = 1.0 / 3.0;
    CHECK(x.max_abs_diff(expected) <= 1e-15);
}

TEST_CASE("round-trip: reconstruct(decompose(X)) = X on random Hermitian matrices") {
    for (int d = 2; d <= 8; ++d) {
        const GellMannBasis b = build_basis(d);
        Rng rng(500 + static_cast<std::uint64_t>(d));
        for (int trial = 0; trial < 100; ++trial) {
            const ComplexMatrix x = random_hermitian(d, rng);
            const ComplexMatrix back = reconstruct(decompose(x, b), b);
            CHECK(back.max_abs_diff(x) <= 1e-10);
        }
    }
}

TEST_CASE("trace+diagonal components reconstruct the dephased state") {
    // keeping only the trace and diagonal parts of rho yields diag(populations)
    const GellMannBasis b = build_basis(4);
    Rng rng(17);
    const DensityMatrix rho = random_state(4, 4, rng);
    GmComponents c = decompose(rho.matrix(), b);
    std::fill(c.sym_coeffs.begin(), c.sym_coeffs.end(), 0.0);
    std::fill(c.antisym_coeffs.begin(), c.antisym_coeffs.end(), 0.0);
    const ComplexMatrix iota = reconstruct(c, b);
    const std::vector<double> pops = rho.populations();
    for (int i = 0; i < 4; ++i) {
        CHECK(iota(i, i).real() == doctest::Approx(pops[static_cast<size_t>(i)]).epsilon(1e-12));
        for (int j = 0; j < 4; ++j)
            if (i != j) CHECK(std::abs(iota(i, j)) <= 1e-14);
    }
}

TEST_CASE("bloch_from_populations matches the d=2 and d=3 closed forms") {
    {
        const double p[] = {0.3, 0.7};
        const auto c = bloch_from_populations(p);
        CHECK(c[0] == doctest::Approx(1.0 - 2.0 * 0.7).epsilon(1e-14));
    }
    {
        const double p[] = {0.5, 0.3, 0.2};
        const auto c = bloch_from_populations(p);
        CHECK(c[0] == doctest::Approx(1.0 - 0.2 - 2.0 * 0.3).epsilon(1e-13));
        CHECK(c[1] == doctest::Approx((1.0 - 3.0 * 0.2) / std::sqrt(3.0)).epsilon(1e-13));
    }
    {
        const double p[] = {0.25, 0.25, 0.25, 0.25};
        for (double c : bloch_from_populations(p)) CHECK(std::abs(c) <= 1e-14);
    }
}

TEST_CASE("bloch_from_populations validates its input") {
    const double bad_sum[] = {0.5, 0.4};
    CHECK_THROWS_AS(bloch_from_populations(bad_sum), BadProbabilityVector);
    const double negative[] = {1.2, -0.2};
    CHECK_THROWS_AS(bloch_from_populations(negative), BadProbabilityVector);
}

TEST_CASE("populations_from_bloch: fixed points and errors") {
    {
        const double zeros[] = {0.0, 0.0, 0.0};
        const auto p = populations_from_bloch(zeros);
        for (double v : p) CHECK(v == doctest::Approx(0.25).epsilon(1e-14));
    }
    {
        const double c[] = {1.0};
        const auto p = populations_from_bloch(c);
        CHECK(p[0] == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(p[1] == doctest::Approx(0.0).epsilon(1e-14));
    }
    const double nonphysical[] = {3.0};
    CHECK_THROWS_AS(populations_from_bloch(nonphysical), OutOfRange);
}

TEST_CASE("population <-> Bloch round trip on random probability vectors") {
    for (int d = 2; d <= 8; ++d) {
        Rng rng(900 + static_cast<std::uint64_t>(d));
        const GellMannBasis b = build_basis(d);
        for (int trial = 0; trial < 1000; ++trial) {
            const std::vector<double> p = random_probability_vector(d, rng);
            const std::vector<double> c = bloch_from_populations(p);
            const std::vector<double> back = populations_from_bloch(c);
            double sum = 0.0;
            for (size_t i = 0; i < p.size(); ++i) {
                CHECK(std::abs(back[i] - p[i]) <= 1e-12);
                sum += back[i];
            }
            CHECK(std::abs(sum - 1.0) <= 1e-12);

            // cross-validation against the inner-product definition
            if (trial < 50) {
                const GmComponents ref = decompose(ComplexMatrix::diagonal(p), b);
                for (size_t j = 0; j < c.size(); ++j)
                    CHECK(std::abs(c[j] - ref.diag_coeffs[j]) <= 1e-12);
            }
        }
    }
}
