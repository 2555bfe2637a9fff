#include "bient/su_bases.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "bient/error.hpp"

namespace bient {

namespace {

constexpr Complex kI{0.0, 1.0};
const double kSqrt3 = std::sqrt(3.0);

SmallMatrix from_rows3(std::initializer_list<Complex> entries) {
    SmallMatrix m(3);
    std::size_t k = 0;
    for (const Complex& z : entries) {
        m(k / 3, k % 3) = z;
        ++k;
    }
    return m;
}

struct Tables {
    std::array<SmallMatrix, 3> sigma;
    std::array<SmallMatrix, 8> lambda;
    std::array<SmallMatrix, 3> sigma_id;                 // sigma_i (x) I3
    std::array<SmallMatrix, 8> id_lambda;                // I2 (x) lambda_j
    std::array<std::array<SmallMatrix, 8>, 3> sigma_lambda;
};

Tables build_tables() {
    SmallMatrix sx(2), sy(2), sz(2);
    sx(0, 1) = 1.0;
    sx(1, 0) = 1.0;
    sy(0, 1) = -kI;
    sy(1, 0) = kI;
    sz(0, 0) = 1.0;
    sz(1, 1) = -1.0;

    const double r = 1.0 / kSqrt3;
    std::array<SmallMatrix, 8> lambda{
        from_rows3({0, 1, 0, 1, 0, 0, 0, 0, 0}),
        from_rows3({0, -kI, 0, kI, 0, 0, 0, 0, 0}),
        from_rows3({1, 0, 0, 0, -1, 0, 0, 0, 0}),
        from_rows3({0, 0, 1, 0, 0, 0, 1, 0, 0}),
        from_rows3({0, 0, -kI, 0, 0, 0, kI, 0, 0}),
        from_rows3({0, 0, 0, 0, 0, 1, 0, 1, 0}),
        from_rows3({0, 0, 0, 0, 0, -kI, 0, kI, 0}),
        from_rows3({r, 0, 0, 0, r, 0, 0, 0, -2.0 * r}),
    };
    std::array<SmallMatrix, 3> sigma{sx, sy, sz};

    const SmallMatrix id2 = SmallMatrix::identity(2);
    const SmallMatrix id3 = SmallMatrix::identity(3);
    auto sigma_id = [&]<std::size_t... I>(std::index_sequence<I...>) {
        return std::array<SmallMatrix, 3>{kron(sigma[I], id3)...};
    }(std::make_index_sequence<3>{});
    auto id_lambda = [&]<std::size_t... J>(std::index_sequence<J...>) {
        return std::array<SmallMatrix, 8>{kron(id2, lambda[J])...};
    }(std::make_index_sequence<8>{});
    auto row = [&](const SmallMatrix& s) {
        return [&]<std::size_t... J>(std::index_sequence<J...>) {
            return std::array<SmallMatrix, 8>{kron(s, lambda[J])...};
        }(std::make_index_sequence<8>{});
    };
    std::array<std::array<SmallMatrix, 8>, 3> sigma_lambda{row(sx), row(sy), row(sz)};

    return Tables{sigma, lambda, sigma_id, id_lambda, sigma_lambda};
}

const Tables& tables() {
    static const Tables t = build_tables();
    return t;
}

void require_dim6(const DensityMatrix& rho, const char* who) {
    if (rho.dim() != 6) {
        throw ValidationError(std::string(who) + ": expected a 6x6 qubit-qutrit density matrix, got dim " +
                              std::to_string(rho.dim()));
    }
}

double real_trace(const SmallMatrix& rho, const SmallMatrix& op, double scale, const char* what) {
    const Complex t = trace_of_product(rho, op) * scale;
    if (std::abs(t.imag()) > kDensityTol) {
        throw ConsistencyError(std::string("decompose: imaginary part ") + std::to_string(t.imag()) +
                               " in " + what + "; input is not Hermitian");
    }
    return t.real();
}

} // namespace

std::span<const SmallMatrix, 3> pauli_matrices() { return tables().sigma; }

std::span<const SmallMatrix, 8> gell_mann_matrices() { return tables().lambda; }

DensityMatrix DensityMatrix::checked(const SmallMatrix& m, double tol) {
    if (!m.all_finite()) throw ValidationError("DensityMatrix: non-finite entry");
    const double defect = m.hermiticity_defect();
    if (defect > tol) {
        throw ValidationError("DensityMatrix: not Hermitian (defect " + std::to_string(defect) + ")");
    }
    const double tr = m.trace().real();
    if (std::abs(tr - 1.0) > tol) {
        throw ValidationError("DensityMatrix: trace " + std::to_string(tr) + " differs from 1");
    }
    if (!is_positive_semidefinite(m, tol)) {
        throw ValidationError("DensityMatrix: negative eigenvalue below -" + std::to_string(tol));
    }
    return DensityMatrix(m);
}

DensityMatrix DensityMatrix::projector(std::span<const Complex> psi) {
    SmallMatrix m(psi.size());
    double norm2 = 0.0;
    for (const Complex& z : psi) {
        if (!is_finite(z)) throw ValidationError("DensityMatrix::projector: non-finite amplitude");
        norm2 += std::norm(z);
    }
    if (std::abs(norm2 - 1.0) > kDensityTol) {
        throw ValidationError("DensityMatrix::projector: vector norm^2 " + std::to_string(norm2) +
                              " differs from 1");
    }
    for (std::size_t r = 0; r < psi.size(); ++r)
        for (std::size_t c = 0; c < psi.size(); ++c) m(r, c) = psi[r] * std::conj(psi[c]);
    return DensityMatrix(m);
}

bool DensityMatrix::is_physical(double tol) const {
    return matrix_.all_finite() && matrix_.hermiticity_defect() <= tol &&
           std::abs(matrix_.trace().real() - 1.0) <= tol && is_positive_semidefinite(matrix_, tol);
}

double DensityMatrix::purity() const { return trace_of_product(matrix_, matrix_).real(); }

double CoherenceDecomposition::u_norm() const noexcept {
    return std::sqrt(std::inner_product(u.begin(), u.end(), u.begin(), 0.0));
}

double CoherenceDecomposition::v_norm() const noexcept {
    return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
}

DensityMatrix reduced_a(const DensityMatrix& rho_ab) {
    require_dim6(rho_ab, "reduced_a");
    SmallMatrix out(2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t ip = 0; ip < 2; ++ip)
            for (std::size_t j = 0; j < 3; ++j) out(i, ip) += rho_ab(3 * i + j, 3 * ip + j);
    return DensityMatrix::unchecked(out);
}

DensityMatrix reduced_b(const DensityMatrix& rho_ab) {
    require_dim6(rho_ab, "reduced_b");
    SmallMatrix out(3);
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t jp = 0; jp < 3; ++jp)
            for (std::size_t i = 0; i < 2; ++i) out(j, jp) += rho_ab(3 * i + j, 3 * i + jp);
    return DensityMatrix::unchecked(out);
}

CoherenceDecomposition decompose(const DensityMatrix& rho_ab) {
    require_dim6(rho_ab, "decompose");
    const Tables& t = tables();
    const SmallMatrix& rho = rho_ab.matrix();

    CoherenceDecomposition d;
    for (std::size_t i = 0; i < 3; ++i) d.u[i] = real_trace(rho, t.sigma_id[i], 1.0, "u");
    for (std::size_t j = 0; j < 8; ++j) d.v[j] = real_trace(rho, t.id_lambda[j], 0.5 * kSqrt3, "v");
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 8; ++j) d.beta[i][j] = real_trace(rho, t.sigma_lambda[i][j], 1.5, "beta");
    return d;
}

DensityMatrix reconstruct(const CoherenceDecomposition& d) {
    const Tables& t = tables();
    SmallMatrix acc = SmallMatrix::identity(6);
    for (std::size_t i = 0; i < 3; ++i) acc += t.sigma_id[i] * d.u[i];
    for (std::size_t j = 0; j < 8; ++j) acc += t.id_lambda[j] * (kSqrt3 * d.v[j]);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 8; ++j) acc += t.sigma_lambda[i][j] * d.beta[i][j];
    acc *= 1.0 / 6.0;
    if (!acc.all_finite()) throw ValidationError("reconstruct: non-finite coefficient");
    return DensityMatrix::unchecked(acc);
}

SmallMatrix qubit_from_bloch(const std::array<double, 3>& u) {
    const Tables& t = tables();
    SmallMatrix m = SmallMatrix::identity(2);
    for (std::size_t i = 0; i < 3; ++i) m += t.sigma[i] * u[i];
    return m * 0.5;
}

SmallMatrix qutrit_from_coherence(const std::array<double, 8>& v) {
    const Tables& t = tables();
    SmallMatrix m = SmallMatrix::identity(3);
    for (std::size_t j = 0; j < 8; ++j) m += t.lambda[j] * (kSqrt3 * v[j]);
    return m * (1.0 / 3.0);
}

} // namespace bient
