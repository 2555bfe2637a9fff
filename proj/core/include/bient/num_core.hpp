#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>

namespace bient {

using Complex = std::complex<double>;

/// Default tolerance for Hermiticity checks on eigensolver input.
inline constexpr double kHermitianTol = 1e-12;

bool is_finite(Complex z) noexcept;

/// Dense row-major complex matrix of fixed dimension 2, 3 or 6.
///
/// Storage is inline (no heap); the dimension is chosen at construction and
/// never changes. Entries start at zero.
class SmallMatrix {
  public:
    static constexpr std::size_t kMaxDim = 6;

    explicit SmallMatrix(std::size_t dim);

    static SmallMatrix identity(std::size_t dim);
    static SmallMatrix diagonal(std::span<const double> diag);

    std::size_t dim() const noexcept { return dim_; }

    Complex& operator()(std::size_t row, std::size_t col) noexcept {
        return data_[row * kMaxDim + col];
    }
    Complex operator()(std::size_t row, std::size_t col) const noexcept {
        return data_[row * kMaxDim + col];
    }

    Complex trace() const noexcept;
    SmallMatrix adjoint() const;

    /// max_{rc} |m_rc - conj(m_cr)|
    double hermiticity_defect() const noexcept;
    bool all_finite() const noexcept;

    SmallMatrix& operator+=(const SmallMatrix& other);
    SmallMatrix& operator-=(const SmallMatrix& other);
    SmallMatrix& operator*=(Complex scale) noexcept;

    friend SmallMatrix operator+(SmallMatrix a, const SmallMatrix& b) { return a += b; }
    friend SmallMatrix operator-(SmallMatrix a, const SmallMatrix& b) { return a -= b; }
    friend SmallMatrix operator*(SmallMatrix a, Complex s) { return a *= s; }
    friend SmallMatrix operator*(Complex s, SmallMatrix a) { return a *= s; }
    friend SmallMatrix operator*(const SmallMatrix& a, const SmallMatrix& b);

  private:
    std::size_t dim_;
    std::array<Complex, kMaxDim * kMaxDim> data_{};
};

/// Kronecker product; the result dimension must be 6 (2 x 3) or a valid
/// SmallMatrix dimension.
SmallMatrix kron(const SmallMatrix& a, const SmallMatrix& b);

/// tr(a * b) without forming the product.
Complex trace_of_product(const SmallMatrix& a, const SmallMatrix& b);

/// max_{rc} |a_rc - b_rc|; dimensions must match.
double max_abs_diff(const SmallMatrix& a, const SmallMatrix& b);

/// True when the Hermitian matrix `m` has no eigenvalue below -tol.
/// Decided by attempting a Cholesky factorization of m + tol*I, so it works
/// for every supported dimension without an eigensolve.
bool is_positive_semidefinite(const SmallMatrix& m, double tol);

/// Eigenvalues of a 2x2 Hermitian matrix, descending.
///
/// The larger-magnitude root of the characteristic quadratic is formed
/// first and the other is recovered from det/root, so a nearly singular
/// matrix keeps full relative accuracy in its small eigenvalue.
std::array<double, 2> hermitian_eig2(const SmallMatrix& m, double tol = kHermitianTol);

/// Eigenvalues of a 3x3 Hermitian matrix, descending, from the
/// trigonometric solution of the shifted characteristic cubic.
std::array<double, 3> hermitian_eig3(const SmallMatrix& m, double tol = kHermitianTol);

/// Counter-based uniform/normal generator.
///
/// Draw n of a stream with seed s is a pure function of (s, n):
///   word(s, n)  = splitmix64_mix(s + (n + 1) * 0x9E3779B97F4A7C15)
///   uniform     = ((word >> 11) + 1) * 2^-53            in (0, 1]
///   gaussian    = sqrt(-2 ln u1) * cos(2 pi u2)          (Box-Muller, cosine branch)
/// Each gaussian consumes two words. The integer part is bit-exact on every
/// platform; the normal variates depend only on IEEE log/cos/sqrt.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed, std::uint64_t counter = 0) noexcept
        : seed_(seed), counter_(counter) {}

    /// Independent stream for shard `index`: seed + index, counter 0.
    RandomStream derive(std::uint64_t index) const noexcept { return RandomStream(seed_ + index); }

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t counter() const noexcept { return counter_; }

    std::uint64_t next_u64() noexcept;
    double next_uniform() noexcept;
    double next_gaussian() noexcept;

    friend bool operator==(const RandomStream&, const RandomStream&) = default;

  private:
    std::uint64_t seed_;
    std::uint64_t counter_;
};

inline double next_gaussian(RandomStream& stream) noexcept { return stream.next_gaussian(); }

} // namespace bient
