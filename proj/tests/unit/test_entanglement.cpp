#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <vector>

#include "bient/entanglement.hpp"
#include "bient/error.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace bient;

namespace {

// High-precision constants (30-digit evaluation, rounded to double).
constexpr double kTwoSqrt2Over3 = 0.942809041582063365867792482807;
constexpr double kH23 = 0.918295834054489514787072277281;  // h(2/3)
constexpr double kSqrt3Over2 = 0.866025403784438646763723170753;

PureState state3(std::initializer_list<Complex> amps) {
    std::vector<Complex> v(amps);
    return PureState::from_amplitudes(3, v);
}

PureState random_state(std::size_t db, std::mt19937_64& rng) {
    const auto v = testing::random_unit_vector(2 * db, rng);
    return PureState::from_amplitudes(db, std::span(v.data(), 2 * db));
}

const double r2 = 1.0 / std::sqrt(2.0);
const double r3 = 1.0 / std::sqrt(3.0);

// Independent Schmidt coefficients: singular values of the amplitude matrix.
std::array<double, 2> svd_oracle(const PureState& psi) {
    Eigen::MatrixXcd a(2, psi.dim_b());
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < psi.dim_b(); ++j) a(i, j) = psi(i, j);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
    return {svd.singularValues()[0], svd.singularValues()[1]};
}

template <std::size_t N>
Complex dot(const std::array<Complex, N>& a, const std::array<Complex, N>& b, std::size_t n) {
    Complex s = 0.0;
    for (std::size_t k = 0; k < n; ++k) s += std::conj(a[k]) * b[k];
    return s;
}

void check_schmidt_invariants(const PureState& psi, const SchmidtForm& s, double tol) {
    CHECK(s.k1 >= s.k2);
    CHECK(s.k2 >= 0.0);
    CHECK(std::abs(s.k1 * s.k1 + s.k2 * s.k2 - 1.0) <= tol);
    CHECK(std::abs(dot(s.x1, s.x2, 2)) <= tol);
    CHECK(std::abs(dot(s.y1, s.y2, s.dim_b)) <= tol);
    CHECK(std::abs(dot(s.x1, s.x1, 2) - 1.0) <= tol);
    CHECK(std::abs(dot(s.x2, s.x2, 2) - 1.0) <= tol);
    CHECK(std::abs(dot(s.y1, s.y1, s.dim_b) - 1.0) <= tol);
    CHECK(std::abs(dot(s.y2, s.y2, s.dim_b) - 1.0) <= tol);
    const auto rec = s.recombine();
    CHECK(phase_aligned_distance(psi.amplitudes(), std::span(rec.data(), psi.size())) <= tol);
}

} // namespace

TEST_CASE("PureState construction") {
    CHECK_THROWS_AS(PureState::from_amplitudes(4, std::vector<Complex>(8, 0.5)), ValidationError);
    CHECK_THROWS_AS(PureState::from_amplitudes(3, std::vector<Complex>(4, 0.5)), ValidationError);
    CHECK_THROWS_AS(state3({1.0, 1.0, 0, 0, 0, 0}), ValidationError);
    CHECK_THROWS_AS(state3({std::nan(""), 0, 0, 0, 0, 0}), ValidationError);
    // within 1e-9 is accepted and rescaled
    const PureState near = state3({1.0 + 2e-10, 0, 0, 0, 0, 0});
    CHECK(std::abs(near(0, 0)) == doctest::Approx(1.0).epsilon(1e-16));
    // five-digit input is too coarse
    CHECK_THROWS_AS(state3({0.57735, 0, 0, 0, 0.57735, 0.57735}), ValidationError);
    const PureState two = PureState::from_amplitudes(2, std::vector<Complex>{r2, 0, 0, r2});
    CHECK(two.embedded()(1, 1) == two(1, 1));
    CHECK(two.embedded()(1, 2) == Complex(0.0));
}

TEST_CASE("concurrence_amplitudes examples") {
    CHECK(concurrence_amplitudes(state3({1, 0, 0, 0, 0, 0})) == 0.0);
    CHECK(std::abs(concurrence_amplitudes(state3({r2, 0, 0, 0, r2, 0})) - 1.0) < 1e-15);
    CHECK(std::abs(concurrence_amplitudes(state3({r3, 0, 0, 0, r3, r3})) - kTwoSqrt2Over3) < 1e-15);
    const PureState bell2 = PureState::from_amplitudes(2, std::vector<Complex>{r2, 0, 0, r2});
    CHECK(std::abs(concurrence_amplitudes(bell2) - 1.0) < 1e-15);
}

TEST_CASE("concurrence_amplitudes uses |minor|^2 for complex amplitudes") {
    // (|00> + i|11>)/sqrt2 is maximally entangled; squaring the complex minor
    // instead of taking its modulus would give 2 sqrt(-1/4), not 1.
    const PureState psi = state3({r2, 0, 0, 0, Complex(0.0, r2), 0});
    CHECK(std::abs(concurrence_amplitudes(psi) - 1.0) < 1e-15);
    CHECK(std::abs(concurrence_bloch(psi) - 1.0) < 1e-15);
}

TEST_CASE("concurrence_bloch examples") {
    CHECK(concurrence_bloch(state3({1, 0, 0, 0, 0, 0})) == 0.0);
    CHECK(std::abs(concurrence_bloch(state3({r2, 0, 0, 0, r2, 0})) - 1.0) < 1e-15);
    CHECK(std::abs(concurrence_bloch(state3({r3, 0, 0, 0, r3, r3})) - kTwoSqrt2Over3) < 1e-15);
}

TEST_CASE("schmidt_decompose examples") {
    const SchmidtForm p = schmidt_decompose(state3({1, 0, 0, 0, 0, 0}));
    CHECK(p.k1 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(p.k2 == 0.0);
    check_schmidt_invariants(state3({1, 0, 0, 0, 0, 0}), p, 1e-14);

    const PureState bell = state3({r2, 0, 0, 0, r2, 0});
    const SchmidtForm b = schmidt_decompose(bell);
    CHECK(std::abs(b.k1 - r2) < 1e-15);
    CHECK(std::abs(b.k2 - r2) < 1e-15);
    // degenerate rho_A = I/2: standard basis
    CHECK(b.x1 == std::array<Complex, 2>{1.0, 0.0});
    CHECK(b.x2 == std::array<Complex, 2>{0.0, 1.0});
    check_schmidt_invariants(bell, b, 1e-14);

    const PureState split = state3({r3, 0, 0, 0, r3, r3});
    const SchmidtForm s = schmidt_decompose(split);
    CHECK(std::abs(s.k1 - std::sqrt(2.0 / 3.0)) < 1e-15);
    CHECK(std::abs(s.k2 - std::sqrt(1.0 / 3.0)) < 1e-15);
    CHECK(std::abs(s.x1[0]) < 1e-15);
    CHECK(std::abs(s.x1[1] - 1.0) < 1e-15);
    CHECK(std::abs(s.y1[0]) < 1e-15);
    CHECK(std::abs(s.y1[1] - r2) < 1e-15);
    CHECK(std::abs(s.y1[2] - r2) < 1e-15);
    check_schmidt_invariants(split, s, 1e-14);
}

TEST_CASE("schmidt phase convention: first nonzero component of x_i is real positive") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const SchmidtForm s = schmidt_decompose(random_state(3, rng));
        for (const auto* x : {&s.x1, &s.x2}) {
            const Complex lead = std::abs((*x)[0]) > 1e-12 ? (*x)[0] : (*x)[1];
            CHECK(lead.real() > 0.0);
            CHECK(lead.imag() == 0.0);
        }
    }
}

TEST_CASE("schmidt_decompose agrees with an SVD oracle and satisfies its invariants") {
    std::mt19937_64 rng(12);
    for (std::size_t db : {2u, 3u}) {
        for (int trial = 0; trial < 500; ++trial) {
            const PureState psi = random_state(db, rng);
            const SchmidtForm s = schmidt_decompose(psi);
            const auto sv = svd_oracle(psi);
            CHECK(std::abs(s.k1 - sv[0]) < 1e-12);
            CHECK(std::abs(s.k2 - sv[1]) < 1e-12);
            check_schmidt_invariants(psi, s, 1e-10);
            // quadratic lambda^2 - lambda + C^2/4 = 0 holds at both k_i^2
            const double c = concurrence_amplitudes(psi);
            for (double k : {s.k1, s.k2}) CHECK(std::abs(k * k * k * k - k * k + c * c / 4.0) < 1e-12);
            CHECK(std::abs(s.k1 * s.k1 * s.k2 * s.k2 - c * c / 4.0) < 1e-12);
            // and k_i^2 are the eigenvalues of A A^dagger
            const auto eig = hermitian_eig2(psi.qubit_gram(), 1e-10);
            CHECK(std::abs(s.k1 * s.k1 - eig[0]) < 1e-12);
            CHECK(std::abs(s.k2 * s.k2 - eig[1]) < 1e-12);
        }
    }
}

TEST_CASE("schmidt_decompose near the product and maximally entangled boundaries") {
    for (double k2 : {1e-3, 1e-6, 1e-9, 1e-12, 1e-14, 1e-16}) {
        const double k1 = std::sqrt(1.0 - k2 * k2);
        // rotate the Schmidt pair into a generic basis with fixed unitaries
        const Complex a = Complex(0.6, 0.0), b = Complex(0.0, 0.8);
        std::vector<Complex> amps(6);
        // x1 = (a, b), x2 = (-conj b, conj a); y1 = (1,1,1)/sqrt3, y2 = (1,-1,0)/sqrt2
        const std::array<Complex, 2> x1{a, b}, x2{-std::conj(b), std::conj(a)};
        const std::array<Complex, 3> y1{r3, r3, r3}, y2{r2, -r2, 0.0};
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 3; ++j) amps[3 * i + j] = k1 * x1[i] * y1[j] + k2 * x2[i] * y2[j];
        const PureState psi = PureState::from_amplitudes(3, amps);
        const SchmidtForm s = schmidt_decompose(psi);
        CHECK(std::abs(s.k2 - k2) < 1e-15);
        check_schmidt_invariants(psi, s, 1e-12);
        CHECK(std::abs(concurrence_schmidt(s) - concurrence_amplitudes(psi)) < 1e-15);
    }
    for (double eps : {1e-6, 1e-10, 1e-13}) {
        const double k1 = std::sqrt(0.5 + eps), k2 = std::sqrt(0.5 - eps);
        const PureState psi = state3({k1, 0, 0, 0, Complex(0, k2), 0});
        const SchmidtForm s = schmidt_decompose(psi);
        check_schmidt_invariants(psi, s, 1e-12);
        CHECK(std::abs(concurrence_schmidt(s) - 2.0 * k1 * k2) < 1e-14);
    }
}

TEST_CASE("concurrence_schmidt examples") {
    SchmidtForm s;
    s.k1 = 1.0;
    s.k2 = 0.0;
    CHECK(concurrence_schmidt(s) == 0.0);
    s.k1 = s.k2 = r2;
    CHECK(std::abs(concurrence_schmidt(s) - 1.0) < 1e-15);
    s.k1 = kSqrt3Over2;
    s.k2 = 0.5;
    CHECK(std::abs(concurrence_schmidt(s) - kSqrt3Over2) < 1e-15);
}

TEST_CASE("binary_entropy") {
    CHECK(binary_entropy(0.5) == 1.0);
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(!std::signbit(binary_entropy(1.0)));
    CHECK(std::abs(binary_entropy(2.0 / 3.0) - kH23) < 1e-15);
    CHECK(binary_entropy(-5e-13) == 0.0);
    CHECK_THROWS_AS(binary_entropy(-1e-11), DomainError);
    CHECK_THROWS_AS(binary_entropy(1.0 + 1e-11), DomainError);
    CHECK_THROWS_AS(binary_entropy(std::nan("")), DomainError);
    for (int k = 0; k <= 100; ++k) {
        const double x = k / 100.0;
        CHECK(std::abs(binary_entropy(x) - binary_entropy(1.0 - x)) < 1e-15);
    }
}

TEST_CASE("eof_from_concurrence") {
    CHECK(eof_from_concurrence(0.0) == 0.0);
    CHECK(eof_from_concurrence(1.0) == 1.0);
    CHECK(std::abs(eof_from_concurrence(kTwoSqrt2Over3) - kH23) < 1e-14);
    CHECK_THROWS_AS(eof_from_concurrence(1.1), DomainError);
    CHECK_THROWS_AS(eof_from_concurrence(-0.1), DomainError);
    double prev = -1.0;
    for (int k = 0; k < 1000; ++k) {
        const double e = eof_from_concurrence(k / 999.0);
        CHECK(e > prev);
        CHECK(e >= 0.0);
        CHECK(e <= 1.0);
        prev = e;
    }
}

TEST_CASE("von_neumann_entropy") {
    std::mt19937_64 rng(13);
    const auto v = testing::random_unit_vector(3, rng);
    CHECK(von_neumann_entropy(DensityMatrix::projector(std::span(v.data(), 3))) < 1e-13);
    CHECK(von_neumann_entropy(DensityMatrix::checked(SmallMatrix::identity(2) * 0.5)) == doctest::Approx(1.0));
    const double d[] = {2.0 / 3.0, 1.0 / 3.0};
    CHECK(std::abs(von_neumann_entropy(DensityMatrix::checked(SmallMatrix::diagonal(d))) - kH23) < 1e-15);
    CHECK(std::abs(von_neumann_entropy(DensityMatrix::checked(SmallMatrix::identity(3) * (1.0 / 3.0))) -
                   std::log2(3.0)) < 1e-14);
    CHECK_THROWS_AS(von_neumann_entropy(DensityMatrix::checked(SmallMatrix::identity(6) * (1.0 / 6.0))),
                    ValidationError);
}

TEST_CASE("full_report examples") {
    const EntanglementReport p = full_report(state3({1, 0, 0, 0, 0, 0}));
    CHECK(p.c_amplitude == 0.0);
    CHECK(p.c_bloch == 0.0);
    CHECK(p.c_schmidt == 0.0);
    CHECK(p.eof == 0.0);
    CHECK(p.vn_entropy_a == 0.0);
    CHECK(std::abs(p.u_norm - 1.0) < 1e-15);
    CHECK(std::abs(p.v_norm - 1.0) < 1e-15);
    CHECK(std::abs(p.k1 - 1.0) < 1e-15);
    CHECK(p.k2 == 0.0);

    const EntanglementReport b = full_report(state3({r2, 0, 0, 0, r2, 0}));
    for (double c : {b.c_amplitude, b.c_bloch, b.c_schmidt, b.eof, b.vn_entropy_a}) CHECK(std::abs(c - 1.0) < 1e-12);
    CHECK(b.u_norm < 1e-15);
    CHECK(std::abs(b.v_norm - 0.5) < 1e-15);

    const EntanglementReport s = full_report(state3({r3, 0, 0, 0, r3, r3}));
    for (double c : {s.c_amplitude, s.c_bloch, s.c_schmidt}) CHECK(std::abs(c - kTwoSqrt2Over3) < 1e-10);
    CHECK(std::abs(s.eof - kH23) < 1e-10);
    CHECK(std::abs(s.vn_entropy_a - kH23) < 1e-10);
}

TEST_CASE("three-way concordance and the EOF-entropy identity on random states") {
    std::mt19937_64 rng(14);
    for (std::size_t db : {2u, 3u}) {
        for (int trial = 0; trial < 1000; ++trial) {
            const PureState psi = random_state(db, rng);
            const EntanglementReport r = full_report(psi);
            CHECK(std::abs(r.c_amplitude - r.c_bloch) <= 1e-10);
            CHECK(std::abs(r.c_amplitude - r.c_schmidt) <= 1e-10);
            CHECK(std::abs(r.eof - r.vn_entropy_a) <= 1e-10);
            const DensityMatrix rho = psi.density();
            CHECK(std::abs(von_neumann_entropy(reduced_a(rho)) - von_neumann_entropy(reduced_b(rho))) <= 1e-10);
            const SmallMatrix g = psi.qubit_gram();
            const double det = (g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0)).real();
            CHECK(std::abs(4.0 * det - r.c_amplitude * r.c_amplitude) <= 1e-10);
            CHECK(r.c_amplitude >= 0.0);
            CHECK(r.c_amplitude <= 1.0);
        }
    }
}

TEST_CASE("embedding a 2x2 state leaves the amplitude concurrence unchanged") {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 500; ++trial) {
        const PureState psi = random_state(2, rng);
        CHECK(std::abs(concurrence_amplitudes(psi) - concurrence_amplitudes(psi.embedded())) <= 1e-12);
    }
}

TEST_CASE("phase_aligned_distance ignores a global phase") {
    const std::vector<Complex> a{r2, Complex(0, r2)};
    const Complex w = std::polar(1.0, 1.234);
    const std::vector<Complex> b{w * r2, w * Complex(0, r2)};
    CHECK(phase_aligned_distance(a, b) < 1e-15);
    const std::vector<Complex> c{r2, Complex(0, -r2)};
    CHECK(phase_aligned_distance(a, c) > 1.0);
}
