#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "bient/num_core.hpp"

// Coherence-vector representation of qubit-qutrit density matrices.
//
// Composite index convention: basis state |i>|j> (qubit i in {0,1}, qutrit
// j in {0,1,2}) sits at row/column 3*i + j of every 6x6 matrix.
//
// Expansion used throughout:
//   rho_AB = (1/6) [ I(x)I + (sigma.u)(x)I + sqrt(3) I(x)(lambda.v)
//                    + sum_ij beta_ij sigma_i (x) lambda_j ]
// with
//   u_i    = tr(rho_AB sigma_i (x) I)
//   v_j    = (sqrt(3)/2) tr(rho_AB I (x) lambda_j)
//   beta_ij = (3/2) tr(rho_AB sigma_i (x) lambda_j)

namespace bient {

inline constexpr double kDensityTol = 1e-10;

/// sigma_x, sigma_y, sigma_z.
std::span<const SmallMatrix, 3> pauli_matrices();

/// Gell-Mann matrices lambda_1..lambda_8, normalized tr(l_i l_j) = 2 delta_ij:
///   l1 = [[0,1,0],[1,0,0],[0,0,0]]     l2 = [[0,-i,0],[i,0,0],[0,0,0]]
///   l3 = diag(1,-1,0)                  l4 = [[0,0,1],[0,0,0],[1,0,0]]
///   l5 = [[0,0,-i],[0,0,0],[i,0,0]]    l6 = [[0,0,0],[0,0,1],[0,1,0]]
///   l7 = [[0,0,0],[0,0,-i],[0,i,0]]    l8 = diag(1,1,-2)/sqrt(3)
std::span<const SmallMatrix, 8> gell_mann_matrices();

/// Hermitian, unit-trace, positive semidefinite matrix of dimension 2, 3 or 6.
class DensityMatrix {
  public:
    /// Validates Hermiticity, unit trace and positivity, each within `tol`.
    static DensityMatrix checked(const SmallMatrix& m, double tol = kDensityTol);

    /// Wraps `m` without validation. Used for affine reconstructions whose
    /// positivity is the caller's business.
    static DensityMatrix unchecked(const SmallMatrix& m) { return DensityMatrix(m); }

    /// |psi><psi| for a unit vector of length 2, 3 or 6.
    static DensityMatrix projector(std::span<const Complex> psi);

    std::size_t dim() const noexcept { return matrix_.dim(); }
    const SmallMatrix& matrix() const noexcept { return matrix_; }
    Complex operator()(std::size_t r, std::size_t c) const noexcept { return matrix_(r, c); }

    bool is_physical(double tol = kDensityTol) const;

    /// tr(rho^2)
    double purity() const;

  private:
    explicit DensityMatrix(const SmallMatrix& m) : matrix_(m) {}
    SmallMatrix matrix_;
};

struct CoherenceDecomposition {
    std::array<double, 3> u{};
    std::array<double, 8> v{};
    std::array<std::array<double, 8>, 3> beta{};

    double u_norm() const noexcept;
    double v_norm() const noexcept;
};

/// tr_B: (rho_A)_{ii'} = sum_j rho_{3i+j, 3i'+j}
DensityMatrix reduced_a(const DensityMatrix& rho_ab);

/// tr_A: (rho_B)_{jj'} = sum_i rho_{3i+j, 3i+j'}
DensityMatrix reduced_b(const DensityMatrix& rho_ab);

/// Extracts u, v, beta. Throws ConsistencyError when any defining trace has
/// an imaginary part above kDensityTol.
CoherenceDecomposition decompose(const DensityMatrix& rho_ab);

/// Inverse of decompose. The result is Hermitian with unit trace but is not
/// checked for positivity.
DensityMatrix reconstruct(const CoherenceDecomposition& d);

/// (1/2)(I + sigma.u)
SmallMatrix qubit_from_bloch(const std::array<double, 3>& u);

/// (1/3)(I + sqrt(3) lambda.v)
SmallMatrix qutrit_from_coherence(const std::array<double, 8>& v);

} // namespace bient
