#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "bient/num_core.hpp"
#include "bient/su_bases.hpp"

namespace bient {

inline constexpr double kNormTol = 1e-9;

/// Pure state of a qubit (A) and a d_B-level system (B), d_B in {2, 3}.
///
/// Amplitudes a_ij are stored row-major at index d_B*i + j. Construction
/// accepts any vector whose squared norm is within `tol` of one and then
/// rescales it to unit norm, so downstream identities hold to rounding.
class PureState {
  public:
    static PureState from_amplitudes(std::size_t dim_b, std::span<const Complex> amplitudes,
                                     double tol = kNormTol);

    std::size_t dim_b() const noexcept { return dim_b_; }
    std::size_t size() const noexcept { return 2 * dim_b_; }

    Complex operator()(std::size_t i, std::size_t j) const noexcept { return amps_[dim_b_ * i + j]; }
    std::span<const Complex> amplitudes() const noexcept { return {amps_.data(), size()}; }

    /// The same state in the 2x3 space (zero third column when d_B = 2).
    PureState embedded() const;

    /// |psi><psi| of the embedded 2x3 state, composite index 3i + j.
    DensityMatrix density() const;

    /// rho_A = A A^dagger, formed directly from the amplitude matrix.
    SmallMatrix qubit_gram() const;

  private:
    PureState(std::size_t dim_b, const std::array<Complex, 6>& amps) : dim_b_(dim_b), amps_(amps) {}

    std::size_t dim_b_;
    std::array<Complex, 6> amps_{};
};

/// psi = k1 |x1>|y1> + k2 |x2>|y2>, with k1 >= k2 >= 0.
struct SchmidtForm {
    double k1 = 1.0;
    double k2 = 0.0;
    std::array<Complex, 2> x1{};
    std::array<Complex, 2> x2{};
    std::size_t dim_b = 3;
    std::array<Complex, 3> y1{};
    std::array<Complex, 3> y2{};

    /// Amplitudes of k1 x1(x)y1 + k2 x2(x)y2, row-major d_B*i + j.
    std::array<Complex, 6> recombine() const;
};

struct EntanglementReport {
    double c_amplitude = 0.0;
    double c_bloch = 0.0;
    double c_schmidt = 0.0;
    double eof = 0.0;
    double vn_entropy_a = 0.0;
    double u_norm = 0.0;
    double v_norm = 0.0;
    double k1 = 0.0;
    double k2 = 0.0;
};

/// 2 |a00 a11 - a01 a10| for d_B = 2; for d_B = 3 the root-sum-square of all
/// three 2x2 minors of the amplitude matrix, times two.
double concurrence_amplitudes(const PureState& psi);

/// sqrt(1 - |u|^2) with u the qubit Bloch vector of |psi><psi|.
/// Loses accuracy like sqrt(eps) as C -> 0.
double concurrence_bloch(const PureState& psi);

/// Schmidt decomposition from the eigen-decomposition of rho_A = A A^dagger.
/// k1^2 and k2^2 are the roots of lambda^2 - lambda + C^2/4.
///
/// Conventions: x_i are rho_A eigenvectors (standard basis when rho_A is
/// proportional to I within 1e-12); x_i and any completed y_2 have their
/// first component above 1e-12 real and positive; y_i = A^T conj(x_i) / k_i.
SchmidtForm schmidt_decompose(const PureState& psi);

double concurrence_schmidt(const SchmidtForm& s);

/// h(x) = -x log2 x - (1-x) log2(1-x), with 0 log 0 = 0.
double binary_entropy(double x);

/// h((1 + sqrt(1 - c^2)) / 2)
double eof_from_concurrence(double c);

/// -sum p log2 p over the eigenvalues of a 2x2 or 3x3 density matrix.
double von_neumann_entropy(const DensityMatrix& rho);

/// min over phi of || a - e^{i phi} b ||.
double phase_aligned_distance(std::span<const Complex> a, std::span<const Complex> b);

/// Every field is computed by its own route; no value is copied from another.
EntanglementReport full_report(const PureState& psi);

} // namespace bient
