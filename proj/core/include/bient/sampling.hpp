#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "bient/entanglement.hpp"
#include "bient/num_core.hpp"

namespace bient {

enum class StateFamily { haar, product, maximally_entangled, schmidt_pair };

struct StateFamilySpec {
    StateFamily kind = StateFamily::haar;
    std::size_t dim_b = 3;
    std::uint64_t seed = 0;  // haar, product
    double k1 = 1.0;         // schmidt_pair, in [1/sqrt(2), 1]
};

/// Independent standard complex Gaussian per amplitude (real draw, then
/// imaginary draw), normalized. Distributed by the unitarily invariant
/// measure on the unit sphere.
PureState haar_random(std::size_t dim_b, RandomStream& stream);

/// a_ij = (phi_a)_i (phi_b)_j. Both factors must be unit vectors within 1e-9.
PureState product_state(std::span<const Complex> phi_a, std::span<const Complex> phi_b);

/// k1 |00> + sqrt(1 - k1^2) |11>.
PureState schmidt_pair_state(double k1, std::size_t dim_b = 3);

/// (|00> + |11>) / sqrt(2)
PureState maximally_entangled_state(std::size_t dim_b = 3);

PureState make_state(const StateFamilySpec& spec);

/// Haar-distributed unitary of dimension 2 or 3: Gram-Schmidt on complex
/// Gaussian columns (QR with positive diagonal R).
SmallMatrix haar_unitary(std::size_t dim, RandomStream& stream);

/// Unit vector of length `dim` drawn uniformly from the sphere.
std::array<Complex, 3> haar_vector(std::size_t dim, RandomStream& stream);

/// (U_A (x) U_B) psi
PureState apply_local(const SmallMatrix& u_a, const SmallMatrix& u_b, const PureState& psi);

} // namespace bient
