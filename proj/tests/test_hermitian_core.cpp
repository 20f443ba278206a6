#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ghzcert/hermitian_eig.hpp"
#include "ghzcert/operators.hpp"
#include "ghzcert/states.hpp"
#include "helpers.hpp"

#include <cmath>
#include <random>

using namespace ghzcert;
namespace th = test_helpers;

namespace {

DichotomicObservable sigma_x() { return pauli({1.0, 0.0, 0.0}); }
DichotomicObservable sigma_y() { return pauli({0.0, 1.0, 0.0}); }
DichotomicObservable sigma_z() { return pauli({0.0, 0.0, 1.0}); }

ComplexMatrix triple(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c) {
    return kron(kron(a, b), c);
}

} // namespace

TEST_CASE("pauli matrices along the coordinate axes") {
    const auto z = sigma_z().matrix();
    CHECK(z(0, 0) == cplx(1.0, 0.0));
    CHECK(z(1, 1) == cplx(-1.0, 0.0));
    CHECK(z(0, 1) == cplx(0.0, 0.0));

    const auto x = sigma_x().matrix();
    CHECK(x(0, 1) == cplx(1.0, 0.0));
    CHECK(x(1, 0) == cplx(1.0, 0.0));
    CHECK(x(0, 0) == cplx(0.0, 0.0));

    const auto y = sigma_y().matrix();
    CHECK(y(0, 1) == cplx(0.0, -1.0));
    CHECK(y(1, 0) == cplx(0.0, 1.0));
    CHECK(y(1, 1) == cplx(0.0, 0.0));
}

TEST_CASE("pauli along a generic axis squares to identity") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        const auto axis = th::random_unit_axis(rng);
        CHECK_NOTHROW(pauli(axis));
    }
    CHECK_THROWS_AS(pauli({1.0, 1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(pauli({0.0, 0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("kron basics") {
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    CHECK(kron(i2, i2).max_abs_diff(ComplexMatrix::identity(4)) == 0.0);

    const ComplexMatrix zz = kron(sigma_z().matrix(), sigma_z().matrix());
    CHECK(zz(0, 0) == cplx(1.0, 0.0));
    CHECK(zz(1, 1) == cplx(-1.0, 0.0));
    CHECK(zz(2, 2) == cplx(-1.0, 0.0));
    CHECK(zz(3, 3) == cplx(1.0, 0.0));

    // sigma_x^{x3} maps |000> to |111>: column 0 is the last basis vector
    const ComplexMatrix xxx = triple(sigma_x().matrix(), sigma_x().matrix(), sigma_x().matrix());
    for (int r = 0; r < 8; ++r) CHECK(xxx(r, 0) == (r == 7 ? cplx(1.0, 0.0) : cplx(0.0, 0.0)));

    CHECK_THROWS_AS(kron(ComplexMatrix(8), ComplexMatrix(2)), std::invalid_argument);
    CHECK_THROWS_AS(kron(ComplexMatrix(4), ComplexMatrix(4)), std::invalid_argument);
}

TEST_CASE("kron mixed-product identity on random pairs") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 25; ++i) {
        const ComplexMatrix a = th::random_hermitian(rng, 2);
        const ComplexMatrix b = th::random_hermitian(rng, 2);
        const ComplexMatrix c = th::random_hermitian(rng, 2);
        const ComplexMatrix d = th::random_hermitian(rng, 2);
        CHECK((kron(a, b) * kron(c, d)).max_abs_diff(kron(a * c, b * d)) <= 1e-12);
    }
}

TEST_CASE("eigenvalues of small fixed operators") {
    const auto z_eig = hermitian_eigenvalues(sigma_z().matrix());
    CHECK(z_eig[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(z_eig[1] == doctest::Approx(-1.0).epsilon(1e-12));

    const auto ghz_eig = hermitian_eigenvalues(ghz_state().matrix());
    CHECK(std::abs(ghz_eig[0] - 1.0) <= 1e-10);
    for (int k = 1; k < 8; ++k) CHECK(std::abs(ghz_eig[k]) <= 1e-10);
}

TEST_CASE("eigenvalues of the white-noise difference operator at p = 0") {
    // I/8 - P_GHZ is diagonal off the {|000>,|111>} span; its corner block
    // diagonalizes analytically to {1/8, -7/8}.
    const ComplexMatrix diff =
        white_noise_state(0.0).matrix() - ghz_state().matrix();
    const auto block = th::block_eigenvalues(diff(0, 0).real(), diff(0, 7), diff(7, 7).real());
    CHECK(std::abs(block[0] - 1.0 / 8.0) <= 1e-15);
    CHECK(std::abs(block[1] + 7.0 / 8.0) <= 1e-15);

    const auto eig = hermitian_eigenvalues(diff);
    for (int k = 0; k < 7; ++k) CHECK(std::abs(eig[k] - 1.0 / 8.0) <= 1e-10);
    CHECK(std::abs(eig[7] + 7.0 / 8.0) <= 1e-10);
}

TEST_CASE("eigensolver agrees with the 2x2 analytic oracle") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 50; ++i) {
        const ComplexMatrix h = th::random_hermitian(rng, 2);
        const auto expected = th::block_eigenvalues(h(0, 0).real(), h(0, 1), h(1, 1).real());
        const auto got = hermitian_eigenvalues(h);
        CHECK(std::abs(got[0] - expected[0]) <= 1e-10);
        CHECK(std::abs(got[1] - expected[1]) <= 1e-10);
    }
}

TEST_CASE("eigensolver reconstructs trace moments") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 40; ++i) {
        const ComplexMatrix h = th::random_hermitian(rng, 8);
        const auto eig = hermitian_eigenvalues(h);
        double sum = 0.0;
        double sum_sq = 0.0;
        for (double lambda : eig) {
            sum += lambda;
            sum_sq += lambda * lambda;
        }
        CHECK(std::abs(sum - h.trace().real()) <= 1e-8);
        CHECK(std::abs(sum_sq - (h * h).trace().real()) <= 1e-8);
    }
}

TEST_CASE("eigensolver rejects non-Hermitian input") {
    ComplexMatrix m(2);
    m(0, 1) = cplx(1.0, 0.0);
    CHECK_THROWS_AS(hermitian_eigenvalues(m), std::invalid_argument);
}

TEST_CASE("density matrix invariants are enforced at construction") {
    ComplexMatrix bad_trace = ghz_state().matrix();
    bad_trace(0, 0) = cplx(0.6, 0.0);
    CHECK_THROWS_AS(DensityMatrix{bad_trace}, std::invalid_argument);

    ComplexMatrix not_hermitian = ghz_state().matrix();
    not_hermitian(0, 7) = cplx(0.5, 0.4);
    CHECK_THROWS_AS(DensityMatrix{not_hermitian}, std::invalid_argument);

    ComplexMatrix negative(8);
    negative(0, 0) = cplx(1.5, 0.0);
    negative(1, 1) = cplx(-0.5, 0.0);
    CHECK_THROWS_AS(DensityMatrix{negative}, std::invalid_argument);
}

TEST_CASE("dichotomic observable must square to identity") {
    ComplexMatrix m(2);
    m(0, 0) = cplx(0.5, 0.0);
    m(1, 1) = cplx(-0.5, 0.0);
    CHECK_THROWS_AS(DichotomicObservable{m}, std::invalid_argument);
}

TEST_CASE("trace distance on the noise families") {
    const DensityMatrix ghz = ghz_state();
    CHECK(trace_distance(ghz, ghz) == 0.0);

    for (double p : {0.0, 0.3, 0.6, 5.0 / 7.0, 0.9, 1.0}) {
        CHECK(std::abs(trace_distance(white_noise_state(p), ghz) - 7.0 * (1.0 - p) / 8.0) <=
              1e-9);
        CHECK(std::abs(trace_distance(colored_noise_state(p), ghz) - (1.0 - p) / 2.0) <= 1e-9);
    }
}

TEST_CASE("trace distance metric axioms on random states") {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 30; ++i) {
        const DensityMatrix a = random_density(rng());
        const DensityMatrix b = random_density(rng());
        const DensityMatrix c = random_density(rng());
        const double ab = trace_distance(a, b);
        const double ba = trace_distance(b, a);
        const double ac = trace_distance(a, c);
        const double cb = trace_distance(c, b);
        CHECK(ab >= 0.0);
        CHECK(ab <= 1.0);
        CHECK(std::abs(ab - ba) <= 1e-9);
        CHECK(ab <= ac + cb + 1e-9);
        CHECK(trace_distance(a, a) <= 1e-12);
    }
}

TEST_CASE("mixing toward GHZ scales the distance linearly") {
    std::mt19937_64 rng(23);
    const DensityMatrix ghz = ghz_state();
    for (int i = 0; i < 10; ++i) {
        const DensityMatrix rho = random_density(rng());
        const double full = trace_distance(rho, ghz);
        for (double t : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            const DensityMatrix mixed(cplx(t, 0.0) * rho.matrix() +
                                      cplx(1.0 - t, 0.0) * ghz.matrix());
            CHECK(std::abs(trace_distance(mixed, ghz) - t * full) <= 1e-9);
        }
    }
}

TEST_CASE("projector probabilities contract under the trace distance") {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 1000; ++i) {
        const DensityMatrix a = random_density(rng());
        const DensityMatrix b = random_density(rng());
        const int rank = 1 + static_cast<int>(rng() % 7);
        const ComplexMatrix p = th::random_projector(rng, 8, rank);
        const double pa = (p * a.matrix()).trace().real();
        const double pb = (p * b.matrix()).trace().real();
        CHECK(std::abs(pa - pb) <= trace_distance(a, b) + 1e-9);
    }
}

TEST_CASE("outcome probabilities of the GHZ events") {
    const DensityMatrix ghz = ghz_state();
    const DichotomicObservable xxx(
        triple(sigma_x().matrix(), sigma_x().matrix(), sigma_x().matrix()));
    const DichotomicObservable xyy(
        triple(sigma_x().matrix(), sigma_y().matrix(), sigma_y().matrix()));
    CHECK(std::abs(outcome_probability(ghz, xxx, +1) - 1.0) <= 1e-12);
    CHECK(std::abs(outcome_probability(ghz, xyy, -1) - 1.0) <= 1e-12);

    const DensityMatrix mixed = white_noise_state(0.0);
    CHECK(std::abs(outcome_probability(mixed, xxx, +1) - 0.5) <= 1e-12);
    CHECK(std::abs(outcome_probability(mixed, xyy, +1) - 0.5) <= 1e-12);
}

TEST_CASE("outcome probabilities of +1 and -1 sum to one") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 25; ++i) {
        const DensityMatrix rho = random_density(rng());
        const DichotomicObservable obs(
            triple(pauli(th::random_unit_axis(rng)).matrix(),
                   pauli(th::random_unit_axis(rng)).matrix(),
                   pauli(th::random_unit_axis(rng)).matrix()));
        const double plus = outcome_probability(rho, obs, +1);
        const double minus = outcome_probability(rho, obs, -1);
        CHECK(std::abs(plus + minus - 1.0) <= 1e-10);
    }
}

TEST_CASE("outcome probability input errors") {
    const DensityMatrix ghz = ghz_state();
    CHECK_THROWS_AS(outcome_probability(ghz, sigma_x(), +1), std::invalid_argument);
    const DichotomicObservable xxx(
        triple(sigma_x().matrix(), sigma_x().matrix(), sigma_x().matrix()));
    CHECK_THROWS_AS(outcome_probability(ghz, xxx, 0), std::invalid_argument);
    CHECK_THROWS_AS(outcome_probability(ghz, xxx, 2), std::invalid_argument);
}
