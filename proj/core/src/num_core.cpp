#include "bient/num_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include "bient/error.hpp"

namespace bient {

namespace {

void require_dim(std::size_t dim) {
    if (dim != 2 && dim != 3 && dim != 6) {
        throw ValidationError("SmallMatrix: unsupported dimension " + std::to_string(dim));
    }
}

void require_hermitian(const SmallMatrix& m, double tol, const char* who) {
    if (!m.all_finite()) {
        throw ValidationError(std::string(who) + ": non-finite entry");
    }
    const double defect = m.hermiticity_defect();
    if (defect > tol) {
        throw ValidationError(std::string(who) + ": matrix is not Hermitian (defect " +
                              std::to_string(defect) + ")");
    }
}

using Vec3 = std::array<Complex, 3>;

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec3 conj(Vec3 a) {
    for (auto& z : a) z = std::conj(z);
    return a;
}

double norm3(const Vec3& a) { return std::sqrt(std::norm(a[0]) + std::norm(a[1]) + std::norm(a[2])); }

Vec3 normalized(Vec3 a) {
    const double n = norm3(a);
    for (auto& z : a) z /= n;
    return a;
}

// Unit vector spanning the kernel of m - lambda*I, taken as the largest
// cross product of two rows. Empty when lambda has multiplicity > 1 in
// practice (every cross product negligible).
std::optional<Vec3> null_vector3(const SmallMatrix& m, double lambda) {
    std::array<Vec3, 3> rows{};
    double scale = 0.0;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) {
            rows[r][c] = m(r, c) - (r == c ? lambda : 0.0);
            scale = std::max(scale, std::abs(rows[r][c]));
        }
    Vec3 best{};
    double best_norm = 0.0;
    for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
        const Vec3 c = cross(rows[i], rows[j]);
        const double n = norm3(c);
        if (n > best_norm) {
            best_norm = n;
            best = c;
        }
    }
    if (!(best_norm > 1e-8 * scale * scale)) return std::nullopt;
    return normalized(best);
}

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace

bool is_finite(Complex z) noexcept { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

SmallMatrix::SmallMatrix(std::size_t dim) : dim_(dim) { require_dim(dim); }

SmallMatrix SmallMatrix::identity(std::size_t dim) {
    SmallMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

SmallMatrix SmallMatrix::diagonal(std::span<const double> diag) {
    SmallMatrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

Complex SmallMatrix::trace() const noexcept {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

SmallMatrix SmallMatrix::adjoint() const {
    SmallMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

double SmallMatrix::hermiticity_defect() const noexcept {
    double worst = 0.0;
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = r; c < dim_; ++c)
            worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return worst;
}

bool SmallMatrix::all_finite() const noexcept {
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c)
            if (!is_finite((*this)(r, c))) return false;
    return true;
}

SmallMatrix& SmallMatrix::operator+=(const SmallMatrix& other) {
    if (other.dim_ != dim_) throw ValidationError("SmallMatrix: dimension mismatch in +");
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) (*this)(r, c) += other(r, c);
    return *this;
}

SmallMatrix& SmallMatrix::operator-=(const SmallMatrix& other) {
    if (other.dim_ != dim_) throw ValidationError("SmallMatrix: dimension mismatch in -");
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) (*this)(r, c) -= other(r, c);
    return *this;
}

SmallMatrix& SmallMatrix::operator*=(Complex scale) noexcept {
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) (*this)(r, c) *= scale;
    return *this;
}

SmallMatrix operator*(const SmallMatrix& a, const SmallMatrix& b) {
    if (a.dim() != b.dim()) throw ValidationError("SmallMatrix: dimension mismatch in *");
    const std::size_t n = a.dim();
    SmallMatrix out(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k) {
            const Complex ark = a(r, k);
            for (std::size_t c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
        }
    return out;
}

SmallMatrix kron(const SmallMatrix& a, const SmallMatrix& b) {
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    SmallMatrix out(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t ip = 0; ip < na; ++ip)
            for (std::size_t j = 0; j < nb; ++j)
                for (std::size_t jp = 0; jp < nb; ++jp)
                    out(i * nb + j, ip * nb + jp) = a(i, ip) * b(j, jp);
    return out;
}

Complex trace_of_product(const SmallMatrix& a, const SmallMatrix& b) {
    if (a.dim() != b.dim()) throw ValidationError("trace_of_product: dimension mismatch");
    Complex t = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c) t += a(r, c) * b(c, r);
    return t;
}

double max_abs_diff(const SmallMatrix& a, const SmallMatrix& b) {
    if (a.dim() != b.dim()) throw ValidationError("max_abs_diff: dimension mismatch");
    double worst = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c) worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
    return worst;
}

bool is_positive_semidefinite(const SmallMatrix& m, double tol) {
    const std::size_t n = m.dim();
    SmallMatrix l(n);
    for (std::size_t j = 0; j < n; ++j) {
        double pivot = m(j, j).real() + tol;
        for (std::size_t k = 0; k < j; ++k) pivot -= std::norm(l(j, k));
        if (!(pivot > 0.0)) return false;
        const double root = std::sqrt(pivot);
        l(j, j) = root;
        for (std::size_t i = j + 1; i < n; ++i) {
            Complex acc = m(i, j);
            for (std::size_t k = 0; k < j; ++k) acc -= l(i, k) * std::conj(l(j, k));
            l(i, j) = acc / root;
        }
    }
    return true;
}

std::array<double, 2> hermitian_eig2(const SmallMatrix& m, double tol) {
    if (m.dim() != 2) throw ValidationError("hermitian_eig2: expected a 2x2 matrix");
    require_hermitian(m, tol, "hermitian_eig2");

    const double a = m(0, 0).real();
    const double b = m(1, 1).real();
    const Complex c = m(0, 1);
    const double trace = a + b;
    const double det = a * b - std::norm(c);
    // sqrt(tr^2 - 4 det) written without the cancelling subtraction
    const double disc = std::hypot(a - b, 2.0 * std::abs(c));

    const double big = trace >= 0.0 ? 0.5 * (trace + disc) : 0.5 * (trace - disc);
    const double small = big != 0.0 ? det / big : 0.0;
    return big >= small ? std::array{big, small} : std::array{small, big};
}

std::array<double, 3> hermitian_eig3(const SmallMatrix& m, double tol) {
    if (m.dim() != 3) throw ValidationError("hermitian_eig3: expected a 3x3 matrix");
    require_hermitian(m, tol, "hermitian_eig3");

    const double shift = m.trace().real() / 3.0;
    SmallMatrix b = m;
    for (std::size_t i = 0; i < 3; ++i) b(i, i) = b(i, i).real() - shift;

    double frob2 = 0.0;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) frob2 += std::norm(b(r, c));
    const double p = std::sqrt(frob2 / 6.0);
    if (p == 0.0) return {shift, shift, shift};

    // det(b) is real for Hermitian b; expand along the first row
    const Complex det = b(0, 0) * (b(1, 1) * b(2, 2) - b(1, 2) * b(2, 1)) -
                        b(0, 1) * (b(1, 0) * b(2, 2) - b(1, 2) * b(2, 0)) +
                        b(0, 2) * (b(1, 0) * b(2, 1) - b(1, 1) * b(2, 0));
    const double half_det = std::clamp(det.real() / (2.0 * p * p * p), -1.0, 1.0);
    const double phi = std::acos(half_det) / 3.0;

    const double top = shift + 2.0 * p * std::cos(phi);
    const double bottom = shift + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);

    // The root at the flat end of the cosine (top when half_det >= 0, bottom
    // otherwise) is accurate to rounding; the other two can be off by
    // sqrt(eps) when they nearly coincide. Recover them from the 2x2 block of
    // m on the orthogonal complement of the isolated eigenvector.
    const double isolated = half_det >= 0.0 ? top : bottom;
    const auto eigvec = null_vector3(m, isolated);
    if (!eigvec) {
        const double middle = 3.0 * shift - top - bottom;
        std::array<double, 3> out{top, middle, bottom};
        std::sort(out.begin(), out.end(), std::greater<>());
        return out;
    }
    const auto& v = *eigvec;
    std::size_t pick = 0;
    for (std::size_t k = 1; k < 3; ++k)
        if (std::abs(v[k]) < std::abs(v[pick])) pick = k;
    Vec3 q1{};
    q1[pick] = 1.0;
    const Complex overlap = std::conj(v[pick]);
    for (std::size_t k = 0; k < 3; ++k) q1[k] -= overlap * v[k];
    q1 = normalized(q1);
    const Vec3 q2 = normalized(conj(cross(v, q1)));

    const std::array<const Vec3*, 2> basis{&q1, &q2};
    SmallMatrix block(2);
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) {
            Complex acc = 0.0;
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) acc += std::conj((*basis[r])[i]) * m(i, j) * (*basis[c])[j];
            block(r, c) = acc;
        }
    const Complex off = 0.5 * (block(0, 1) + std::conj(block(1, 0)));
    block(0, 1) = off;
    block(1, 0) = std::conj(off);
    block(0, 0) = block(0, 0).real();
    block(1, 1) = block(1, 1).real();
    const auto rest = hermitian_eig2(block, std::numeric_limits<double>::infinity());

    std::array<double, 3> out{isolated, rest[0], rest[1]};
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::uint64_t RandomStream::next_u64() noexcept {
    const std::uint64_t word = splitmix64_mix(seed_ + (counter_ + 1) * kGolden);
    ++counter_;
    return word;
}

double RandomStream::next_uniform() noexcept {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double RandomStream::next_gaussian() noexcept {
    const double radius_draw = next_uniform();
    const double angle_draw = next_uniform();
    return std::sqrt(-2.0 * std::log(radius_draw)) * std::cos(2.0 * std::numbers::pi * angle_draw);
}

} // namespace bient
