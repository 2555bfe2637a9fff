#include "bient/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bient/error.hpp"

namespace bient {

namespace {

constexpr double kDomainSlack = 1e-12;
constexpr double kPhaseThreshold = 1e-12;
constexpr double kDegenerateGap = 1e-12;
// Below this norm A^T conj(x2) carries no direction information.
constexpr double kSchmidtFloor = 1e-13;

template <std::size_t N>
double vector_norm(const std::array<Complex, N>& v, std::size_t n) {
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) s += std::norm(v[k]);
    return std::sqrt(s);
}

template <std::size_t N>
void scale(std::array<Complex, N>& v, std::size_t n, Complex f) {
    for (std::size_t k = 0; k < n; ++k) v[k] *= f;
}

template <std::size_t N>
void canonical_phase(std::array<Complex, N>& v, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
        const double mag = std::abs(v[k]);
        if (mag > kPhaseThreshold) {
            scale(v, n, std::conj(v[k]) / mag);
            v[k] = mag;
            return;
        }
    }
}

// <a|b>
template <std::size_t N>
Complex inner(const std::array<Complex, N>& a, const std::array<Complex, N>& b, std::size_t n) {
    Complex s = 0.0;
    for (std::size_t k = 0; k < n; ++k) s += std::conj(a[k]) * b[k];
    return s;
}

// A^T conj(x): the (unnormalized) B-side partner of qubit vector x.
std::array<Complex, 3> partner(const PureState& psi, const std::array<Complex, 2>& x) {
    std::array<Complex, 3> y{};
    for (std::size_t j = 0; j < psi.dim_b(); ++j) y[j] = std::conj(x[0]) * psi(0, j) + std::conj(x[1]) * psi(1, j);
    return y;
}

std::array<Complex, 3> orthonormal_completion(const std::array<Complex, 3>& y1, std::size_t n) {
    for (std::size_t m = 0; m < n; ++m) {
        std::array<Complex, 3> e{};
        e[m] = 1.0;
        const Complex overlap = std::conj(y1[m]);
        for (std::size_t k = 0; k < n; ++k) e[k] -= overlap * y1[k];
        const double nrm = vector_norm(e, n);
        if (nrm > 0.5) {
            scale(e, n, 1.0 / nrm);
            canonical_phase(e, n);
            return e;
        }
    }
    throw ConsistencyError("schmidt_decompose: failed to complete an orthonormal basis");
}

double clamp_unit(double x, const char* who) {
    if (!(x >= -kDomainSlack && x <= 1.0 + kDomainSlack)) {
        throw DomainError(std::string(who) + ": argument " + std::to_string(x) + " outside [0, 1]");
    }
    return std::clamp(x, 0.0, 1.0);
}

double plogp(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

} // namespace

PureState PureState::from_amplitudes(std::size_t dim_b, std::span<const Complex> amplitudes, double tol) {
    if (dim_b != 2 && dim_b != 3) {
        throw ValidationError("PureState: unsupported dimensions (2, " + std::to_string(dim_b) + ")");
    }
    if (amplitudes.size() != 2 * dim_b) {
        throw ValidationError("PureState: expected " + std::to_string(2 * dim_b) + " amplitudes, got " +
                              std::to_string(amplitudes.size()));
    }
    std::array<Complex, 6> amps{};
    double norm2 = 0.0;
    for (std::size_t k = 0; k < amplitudes.size(); ++k) {
        if (!is_finite(amplitudes[k])) throw ValidationError("PureState: non-finite amplitude");
        amps[k] = amplitudes[k];
        norm2 += std::norm(amplitudes[k]);
    }
    if (!(std::abs(norm2 - 1.0) <= tol)) {
        throw ValidationError("PureState: sum |a_ij|^2 = " + std::to_string(norm2) + " is not 1 within tolerance");
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& z : amps) z *= inv;
    return PureState(dim_b, amps);
}

PureState PureState::embedded() const {
    if (dim_b_ == 3) return *this;
    std::array<Complex, 6> amps{};
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) amps[3 * i + j] = (*this)(i, j);
    return PureState(3, amps);
}

DensityMatrix PureState::density() const {
    const PureState e = embedded();
    return DensityMatrix::projector(e.amplitudes());
}

SmallMatrix PureState::qubit_gram() const {
    SmallMatrix g(2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t ip = 0; ip < 2; ++ip)
            for (std::size_t j = 0; j < dim_b_; ++j) g(i, ip) += (*this)(i, j) * std::conj((*this)(ip, j));
    return g;
}

std::array<Complex, 6> SchmidtForm::recombine() const {
    std::array<Complex, 6> out{};
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < dim_b; ++j) out[dim_b * i + j] = k1 * x1[i] * y1[j] + k2 * x2[i] * y2[j];
    return out;
}

double concurrence_amplitudes(const PureState& psi) {
    auto minor = [&](std::size_t j, std::size_t jp) { return psi(0, j) * psi(1, jp) - psi(0, jp) * psi(1, j); };
    double sum = std::norm(minor(0, 1));
    if (psi.dim_b() == 3) sum += std::norm(minor(2, 0)) + std::norm(minor(1, 2));
    return std::min(1.0, 2.0 * std::sqrt(sum));
}

double concurrence_bloch(const PureState& psi) {
    const CoherenceDecomposition d = decompose(psi.density());
    const double u2 = d.u[0] * d.u[0] + d.u[1] * d.u[1] + d.u[2] * d.u[2];
    return std::sqrt(std::max(0.0, 1.0 - u2));
}

SchmidtForm schmidt_decompose(const PureState& psi) {
    const SmallMatrix rho_a = psi.qubit_gram();
    const double a = rho_a(0, 0).real();
    const double b = rho_a(1, 1).real();
    const Complex c = rho_a(0, 1);
    const double gap = std::hypot(a - b, 2.0 * std::abs(c));

    SchmidtForm s;
    s.dim_b = psi.dim_b();
    const std::size_t n = s.dim_b;

    if (gap < kDegenerateGap) {
        s.x1 = {1.0, 0.0};
        s.x2 = {0.0, 1.0};
    } else {
        // top eigenvector of [[a, c], [conj(c), b]]; lambda_1 - b and lambda_1 - a
        // are written via the gap so neither component suffers cancellation
        if (a >= b) {
            s.x1 = {0.5 * (a - b + gap), std::conj(c)};
        } else {
            s.x1 = {c, 0.5 * (b - a + gap)};
        }
        scale(s.x1, 2, 1.0 / vector_norm(s.x1, 2));
        canonical_phase(s.x1, 2);
        s.x2 = {-std::conj(s.x1[1]), std::conj(s.x1[0])};
        canonical_phase(s.x2, 2);
    }

    // k_i = |A^T conj(x_i)| equals sqrt(lambda_i) but keeps absolute accuracy
    // when lambda_2 is tiny.
    s.y1 = partner(psi, s.x1);
    s.k1 = vector_norm(s.y1, n);
    scale(s.y1, n, 1.0 / s.k1);

    std::array<Complex, 3> v2 = partner(psi, s.x2);
    s.k2 = vector_norm(v2, n);
    const Complex overlap = inner(s.y1, v2, n);
    for (std::size_t k = 0; k < n; ++k) v2[k] -= overlap * s.y1[k];
    const double residual = vector_norm(v2, n);
    if (residual > kSchmidtFloor) {
        scale(v2, n, 1.0 / residual);
        s.y2 = v2;
    } else {
        s.y2 = orthonormal_completion(s.y1, n);
    }

    if (s.k2 > s.k1) {
        std::swap(s.k1, s.k2);
        std::swap(s.x1, s.x2);
        std::swap(s.y1, s.y2);
    }
    return s;
}

double concurrence_schmidt(const SchmidtForm& s) { return std::min(1.0, 2.0 * s.k1 * s.k2); }

double binary_entropy(double x) {
    x = clamp_unit(x, "binary_entropy");
    return 0.0 - plogp(x) - plogp(1.0 - x);
}

double eof_from_concurrence(double c) {
    c = clamp_unit(c, "eof_from_concurrence");
    const double root = std::sqrt(std::max(0.0, 1.0 - c * c));
    // (1 - root) / 2 without the cancelling subtraction; h is symmetric
    const double minor_weight = c * c / (2.0 * (1.0 + root));
    return binary_entropy(minor_weight);
}

double von_neumann_entropy(const DensityMatrix& rho) {
    double s = 0.0;
    if (rho.dim() == 2) {
        for (double p : hermitian_eig2(rho.matrix(), kDensityTol)) s -= plogp(std::clamp(p, 0.0, 1.0));
    } else if (rho.dim() == 3) {
        for (double p : hermitian_eig3(rho.matrix(), kDensityTol)) s -= plogp(std::clamp(p, 0.0, 1.0));
    } else {
        throw ValidationError("von_neumann_entropy: expected a 2x2 or 3x3 density matrix");
    }
    return std::max(0.0, s);
}

double phase_aligned_distance(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) throw ValidationError("phase_aligned_distance: length mismatch");
    Complex overlap = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) overlap += std::conj(b[k]) * a[k];
    const double mag = std::abs(overlap);
    const Complex phase = mag > 0.0 ? overlap / mag : Complex(1.0);
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += std::norm(a[k] - phase * b[k]);
    return std::sqrt(s);
}

EntanglementReport full_report(const PureState& psi) {
    EntanglementReport r;
    r.c_amplitude = concurrence_amplitudes(psi);
    r.c_bloch = concurrence_bloch(psi);
    const SchmidtForm s = schmidt_decompose(psi);
    r.c_schmidt = concurrence_schmidt(s);
    r.k1 = s.k1;
    r.k2 = s.k2;
    r.eof = eof_from_concurrence(r.c_amplitude);

    const DensityMatrix rho = psi.density();
    r.vn_entropy_a = von_neumann_entropy(reduced_a(rho));
    const CoherenceDecomposition d = decompose(rho);
    r.u_norm = d.u_norm();
    r.v_norm = d.v_norm();
    return r;
}

} // namespace bient
