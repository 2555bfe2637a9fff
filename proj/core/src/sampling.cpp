#include "bient/sampling.hpp"

#include <cmath>
#include <string>

#include "bient/error.hpp"

namespace bient {

namespace {

Complex complex_gaussian(RandomStream& stream) {
    const double re = stream.next_gaussian();
    const double im = stream.next_gaussian();
    return {re, im};
}

void require_unit(std::span<const Complex> phi, const char* what) {
    double n2 = 0.0;
    for (const Complex& z : phi) {
        if (!is_finite(z)) throw ValidationError(std::string("product_state: non-finite entry in ") + what);
        n2 += std::norm(z);
    }
    if (std::abs(n2 - 1.0) > kNormTol) {
        throw ValidationError(std::string("product_state: ") + what + " is not normalized (norm^2 " +
                              std::to_string(n2) + ")");
    }
}

} // namespace

PureState haar_random(std::size_t dim_b, RandomStream& stream) {
    if (dim_b != 2 && dim_b != 3) throw ValidationError("haar_random: d_B must be 2 or 3");
    std::array<Complex, 6> amps{};
    double n2 = 0.0;
    for (std::size_t k = 0; k < 2 * dim_b; ++k) {
        amps[k] = complex_gaussian(stream);
        n2 += std::norm(amps[k]);
    }
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& z : amps) z *= inv;
    return PureState::from_amplitudes(dim_b, std::span(amps.data(), 2 * dim_b));
}

PureState product_state(std::span<const Complex> phi_a, std::span<const Complex> phi_b) {
    if (phi_a.size() != 2) throw ValidationError("product_state: qubit factor must have 2 entries");
    if (phi_b.size() != 2 && phi_b.size() != 3) throw ValidationError("product_state: second factor must have 2 or 3 entries");
    require_unit(phi_a, "phi_a");
    require_unit(phi_b, "phi_b");
    const std::size_t db = phi_b.size();
    std::array<Complex, 6> amps{};
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < db; ++j) amps[db * i + j] = phi_a[i] * phi_b[j];
    return PureState::from_amplitudes(db, std::span(amps.data(), 2 * db));
}

PureState schmidt_pair_state(double k1, std::size_t dim_b) {
    if (!(k1 >= 1.0 / std::sqrt(2.0) - 1e-15 && k1 <= 1.0)) {
        throw ValidationError("schmidt_pair_state: k1 = " + std::to_string(k1) + " outside [1/sqrt(2), 1]");
    }
    std::array<Complex, 6> amps{};
    amps[0] = k1;
    amps[dim_b + 1] = std::sqrt(std::max(0.0, 1.0 - k1 * k1));
    return PureState::from_amplitudes(dim_b, std::span(amps.data(), 2 * dim_b));
}

PureState maximally_entangled_state(std::size_t dim_b) {
    std::array<Complex, 6> amps{};
    amps[0] = 1.0 / std::sqrt(2.0);
    amps[dim_b + 1] = 1.0 / std::sqrt(2.0);
    return PureState::from_amplitudes(dim_b, std::span(amps.data(), 2 * dim_b));
}

PureState make_state(const StateFamilySpec& spec) {
    switch (spec.kind) {
        case StateFamily::haar: {
            RandomStream stream(spec.seed);
            return haar_random(spec.dim_b, stream);
        }
        case StateFamily::product: {
            RandomStream stream(spec.seed);
            const auto a = haar_vector(2, stream);
            const auto b = haar_vector(spec.dim_b, stream);
            return product_state(std::span(a.data(), 2), std::span(b.data(), spec.dim_b));
        }
        case StateFamily::maximally_entangled:
            return maximally_entangled_state(spec.dim_b);
        case StateFamily::schmidt_pair:
            return schmidt_pair_state(spec.k1, spec.dim_b);
    }
    throw ValidationError("make_state: unknown family");
}

std::array<Complex, 3> haar_vector(std::size_t dim, RandomStream& stream) {
    if (dim != 2 && dim != 3) throw ValidationError("haar_vector: dimension must be 2 or 3");
    std::array<Complex, 3> v{};
    double n2 = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
        v[k] = complex_gaussian(stream);
        n2 += std::norm(v[k]);
    }
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& z : v) z *= inv;
    return v;
}

SmallMatrix haar_unitary(std::size_t dim, RandomStream& stream) {
    if (dim != 2 && dim != 3) throw ValidationError("haar_unitary: dimension must be 2 or 3");
    SmallMatrix q(dim);
    for (std::size_t c = 0; c < dim; ++c) {
        for (std::size_t r = 0; r < dim; ++r) q(r, c) = complex_gaussian(stream);
        // two Gram-Schmidt passes keep the columns orthonormal to rounding
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t p = 0; p < c; ++p) {
                Complex overlap = 0.0;
                for (std::size_t r = 0; r < dim; ++r) overlap += std::conj(q(r, p)) * q(r, c);
                for (std::size_t r = 0; r < dim; ++r) q(r, c) -= overlap * q(r, p);
            }
        }
        double n2 = 0.0;
        for (std::size_t r = 0; r < dim; ++r) n2 += std::norm(q(r, c));
        const double inv = 1.0 / std::sqrt(n2);
        for (std::size_t r = 0; r < dim; ++r) q(r, c) *= inv;
    }
    return q;
}

PureState apply_local(const SmallMatrix& u_a, const SmallMatrix& u_b, const PureState& psi) {
    const std::size_t db = psi.dim_b();
    if (u_a.dim() != 2 || u_b.dim() != db) throw ValidationError("apply_local: unitary dimensions do not match the state");
    // a' = U_A a U_B^T
    std::array<Complex, 6> out{};
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < db; ++j) {
            Complex acc = 0.0;
            for (std::size_t ip = 0; ip < 2; ++ip)
                for (std::size_t jp = 0; jp < db; ++jp) acc += u_a(i, ip) * u_b(j, jp) * psi(ip, jp);
            out[db * i + j] = acc;
        }
    return PureState::from_amplitudes(db, std::span(out.data(), 2 * db));
}

} // namespace bient
