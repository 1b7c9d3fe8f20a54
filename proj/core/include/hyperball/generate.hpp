#pragma once

#include <optional>
#include <string_view>

#include "hyperball/ball.hpp"
#include "hyperball/group.hpp"

namespace hyperball {

// Seeded element families used by the corpus generator, the verification
// catalog and the tests.
enum class Family {
    Uniform,     // generic (θ, U, ξ)
    Normal,      // Uξ = ξ
    SelfAdjoint, // Uξ = ξ, U involutory, θ ∈ {0, π}
    Involutory,  // Uξ = −ξ, U involutory, θ ∈ {0, π}
    Reducing,    // Uξ = rξ, random |r| = 1
    Parabolic,   // Uξ = rξ with cos(arg r) = 2/a² − 1 (vanishing discriminant)
    Unitary,     // ξ = 0
};

std::optional<Family> family_from_string(std::string_view s);
const char* to_string(Family f);

// Extend a unit vector to a full orthonormal basis (greedy pivoting on the
// standard basis); the given vector becomes column 0.
CMatrix complete_to_unitary(const CVector& unit_dir);

// R·blockdiag(r, rest)·R* — unitary with dir as an eigenvector for r.
CMatrix unitary_with_eigenvector(const CVector& unit_dir, Complex r, const CMatrix& rest);

BallPoint random_ball_point(std::size_t dim, double max_norm, Rng& rng);

GElement random_element(Family f, std::size_t dim, Rng& rng);

} // namespace hyperball
