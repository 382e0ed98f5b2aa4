#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "qduality/linalg.hpp"
#include "qduality/states.hpp"
#include "test_support.hpp"

using namespace qduality;

TEST_CASE("validate: maximally mixed state is accepted") {
    ComplexMatrix m(4);
    for (int i = 0; i < 4; ++i) m(i, i) = 0.25;
    CHECK_NOTHROW(validate(m));
}

TEST_CASE("validate: oversized coherence is rejected as NotPositive") {
    // eigenvalues of [[0.5,0.6],[0.6,0.5]] are 1.1 and -0.1
    const ComplexMatrix m = ComplexMatrix::from_rows({{0.5, 0.6}, {0.6, 0.5}});
    CHECK_THROWS_AS(validate(m), NotPositive);
}

TEST_CASE("validate: coherence within the population product is accepted") {
    // oracle: eigenvalues (1 +- sqrt(1 - 4*0.12))/2, both positive; 0.21 >= 0.09
    const ComplexMatrix m = ComplexMatrix::from_rows({{0.7, 0.3}, {0.3, 0.3}});
    CHECK_NOTHROW(validate(m));
}

TEST_CASE("validate: each defining property is reported by name") {
    ComplexMatrix nh(2);
    nh(0, 0) = 0.5;
    nh(1, 1) = 0.5;
    nh(0, 1) = 0.1;  // nh(1,0) = 0: not Hermitian
    CHECK_THROWS_AS(validate(nh), NotHermitian);

    const double half[] = {0.5, 0.4};
    CHECK_THROWS_AS(validate(ComplexMatrix::diagonal(half)), TraceNotOne);

    const double neg[] = {1.1, -0.1};
    CHECK_THROWS_AS(validate(ComplexMatrix::diagonal(neg)), NotPositive);

    // With a loosened eigenvalue gate the 2x2 principal-submatrix check is the
    // one that fires: min eigenvalue -0.1 passes at 0.105 but 0.36 > 0.25+0.105.
    Tolerances loose;
    loose.validation = 0.105;
    const ComplexMatrix sub = ComplexMatrix::from_rows({{0.5, 0.6}, {0.6, 0.5}});
    CHECK_THROWS_AS(validate(sub, loose), SubmatrixViolation);
}

TEST_CASE("validate: acceptance boundary sits at the eigenvalue floor") {
    // clearly inside the tolerance band
    const double ok[] = {1.0 + 5e-11, -5e-11};
    CHECK_NOTHROW(validate(ComplexMatrix::diagonal(ok)));
    // clearly beyond it
    const double bad[] = {1.0 + 2e-10, -2e-10};
    CHECK_THROWS_AS(validate(ComplexMatrix::diagonal(bad)), NotPositive);
}

TEST_CASE("validate agrees with the eigensolver oracle on perturbed candidates") {
    Rng rng(123);
    int accepted = 0, rejected = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        DensityMatrix rho = random_state(4, 4, rng);
        const EigenSystem es = hermitian_eig(rho.matrix());
        const double lam_min = es.eigenvalues.back();
        // shift the spectrum so the smallest eigenvalue lands both sides of 0,
        // well away from the tolerance razor edge
        const double delta = (rng.uniform01() - 0.5) * 0.02;
        const double s = lam_min - delta;
        ComplexMatrix cand = rho.matrix() - s * ComplexMatrix::identity(4);
        cand = (1.0 / (1.0 - 4.0 * s)) * cand;

        const double oracle_min = (lam_min - s) / (1.0 - 4.0 * s);
        if (std::abs(oracle_min) < 1e-6) continue;  // skip near-boundary draws
        const bool oracle_accepts = oracle_min >= -1e-10;
        bool accepted_now = true;
        try {
            validate(cand);
        } catch (const Error&) {
            accepted_now = false;
        }
        CHECK(accepted_now == oracle_accepts);
        (oracle_accepts ? accepted : rejected) += 1;
    }
    // both branches must actually be exercised
    CHECK(accepted > 100);
    CHECK(rejected > 100);
}

TEST_CASE("random_state: rank-1 draws are pure") {
    Rng rng(7);
    for (int d = 2; d <= 8; ++d) {
        const DensityMatrix rho = random_state(d, 1, rng);
        const ComplexMatrix sq = rho.matrix() * rho.matrix();
        CHECK(std::abs(sq.trace().real() - 1.0) <= 1e-10);
    }
}

TEST_CASE("random_state: full-rank ensembles validate across dimensions") {
    for (int d = 2; d <= 8; ++d) {
        Rng rng(derive_stream_seed(3, d, 0));
        for (int trial = 0; trial < 1000; ++trial) {
            const DensityMatrix rho = random_state(d, d, rng);
            CHECK(std::abs(rho.matrix().trace().real() - 1.0) <= 1e-12);
        }
    }
}

TEST_CASE("random_state: deterministic given the seed") {
    Rng a(99), b(99);
    const DensityMatrix x = random_state(5, 3, a);
    const DensityMatrix y = random_state(5, 3, b);
    CHECK(x.matrix().max_abs_diff(y.matrix()) == 0.0);
}

TEST_CASE("random_state: rank bounds") {
    Rng rng(1);
    CHECK_THROWS_AS(random_state(4, 0, rng), BadRank);
    CHECK_THROWS_AS(random_state(4, 5, rng), BadRank);
}

TEST_CASE("werner_ququart: w=0 is maximally mixed for any a") {
    const DensityMatrix rho = werner_ququart(0.0, 0.3);
    for (int i = 0; i < 4; ++i) {
        CHECK(rho.matrix()(i, i).real() == doctest::Approx(0.25).epsilon(1e-14));
        for (int j = 0; j < 4; ++j)
            if (i != j) CHECK(std::abs(rho.matrix()(i, j)) <= 1e-15);
    }
}

TEST_CASE("werner_ququart: pure limits and the balanced case") {
    const DensityMatrix b0 = werner_ququart(1.0, 1.0);
    CHECK(b0.matrix()(0, 0).real() == doctest::Approx(1.0));
    for (int i = 1; i < 4; ++i) CHECK(std::abs(b0.matrix()(i, i)) <= 1e-14);

    const DensityMatrix bal = werner_ququart(1.0, 0.5);
    CHECK(bal.matrix()(0, 1).real() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(bal.matrix()(0, 0).real() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(bal.matrix()(1, 1).real() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(std::abs(bal.matrix()(2, 2)) <= 1e-14);
    CHECK(std::abs(bal.matrix()(3, 3)) <= 1e-14);

    CHECK_THROWS_AS(werner_ququart(1.2, 0.5), ParamOutOfRange);
    CHECK_THROWS_AS(werner_ququart(0.5, -0.1), ParamOutOfRange);
}

TEST_CASE("closest_incoherent: reads the diagonal") {
    const double p[] = {0.4, 0.3, 0.2, 0.1};
    const DensityMatrix inc = DensityMatrix::unchecked(ComplexMatrix::diagonal(p));
    const IncoherentState i1 = closest_incoherent(inc);
    for (int i = 0; i < 4; ++i) CHECK(i1.populations[static_cast<size_t>(i)] == p[i]);

    const IncoherentState i2 = closest_incoherent(werner_ququart(1.0, 0.5));
    CHECK(i2.populations[0] == doctest::Approx(0.5));
    CHECK(i2.populations[1] == doctest::Approx(0.5));
    CHECK(std::abs(i2.populations[2]) <= 1e-14);

    const IncoherentState i3 = closest_incoherent(qdtest::maximally_mixed(5));
    for (double v : i3.populations) CHECK(v == doctest::Approx(0.2));
}

TEST_CASE("sqrt_diag: pure states reproduce their populations") {
    Rng rng(31);
    const DensityMatrix pure = random_state(4, 1, rng);
    const std::vector<double> sd = sqrt_diag(pure);
    const std::vector<double> pops = pure.populations();
    for (size_t i = 0; i < sd.size(); ++i) CHECK(std::abs(sd[i] - pops[i]) <= 1e-10);
}

TEST_CASE("sqrt_diag: maximally mixed ququart") {
    const std::vector<double> sd = sqrt_diag(qdtest::maximally_mixed(4));
    for (double v : sd) CHECK(v == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("sqrt_diag: Werner state against the analytic eigendecomposition") {
    // rho = (1/2) I/4 + (1/2)|psi><psi| has eigenvalues 5/8 (on psi) and 1/8;
    // sqrt(rho) = sqrt(1/8) I + (sqrt(5/8)-sqrt(1/8)) |psi><psi|, so the
    // diagonal is (s+t)/2, (s+t)/2, t, t with s = sqrt(5/8), t = sqrt(1/8).
    const double s = std::sqrt(5.0 / 8.0);
    const double t = std::sqrt(1.0 / 8.0);
    const DensityMatrix rho = werner_ququart(0.5, 0.5);
    const std::vector<double> sd = sqrt_diag(rho);
    CHECK(sd[0] == doctest::Approx(0.5 * (s + t)).epsilon(1e-10));
    CHECK(sd[1] == doctest::Approx(0.5 * (s + t)).epsilon(1e-10));
    CHECK(sd[2] == doctest::Approx(t).epsilon(1e-10));
    CHECK(sd[3] == doctest::Approx(t).epsilon(1e-10));
    const std::vector<double> pops = rho.populations();
    for (size_t i = 0; i < sd.size(); ++i) CHECK(sd[i] >= pops[i] - 1e-10);
}

TEST_CASE("sqrt_diag dominates the populations on random states") {
    for (int d = 2; d <= 8; ++d) {
        Rng rng(derive_stream_seed(8, d, 1));
        for (int trial = 0; trial < 1000; ++trial) {
            const DensityMatrix rho = random_state(d, d, rng);
            const std::vector<double> sd = sqrt_diag(rho);
            const std::vector<double> pops = rho.populations();
            for (size_t i = 0; i < sd.size(); ++i) CHECK(sd[i] >= pops[i] - 1e-10);
        }
    }
}

TEST_CASE("positivity coefficient of sqrt(rho) is nonnegative") {
    for (int d = 2; d <= 8; ++d) {
        Rng rng(derive_stream_seed(9, d, 2));
        for (int trial = 0; trial < 200; ++trial) {
            const DensityMatrix rho = random_state(d, d, rng);
            const ComplexMatrix sq = matrix_sqrt(rho.matrix());
            CHECK(positivity_coefficient(sq) >= -1e-10);
        }
    }
}
