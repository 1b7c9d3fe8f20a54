#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperball/group.hpp"

namespace hyperball {

constexpr double kInteriorTol = 1e-8;  // ‖x‖ < 1 − kInteriorTol ⇒ interior
constexpr double kParabolicTol = 1e-9; // |disc| ≤ kParabolicTol·a² ⇒ double root

enum class Location { Interior, Boundary };
enum class Kind { Elliptic, Hyperbolic, Parabolic, Undetermined };
enum class Method { ClosedForm, Iteration };

const char* to_string(Location l);
const char* to_string(Kind k);
const char* to_string(Method m);

// Closed-form eigendata of T restricted to the reducing plane ⟨ξ⟩⊕ℂ when
// Uξ = rξ: eigenvalues λ₁,₂ = (a(r+1) ± √d)/2 with eigenvectors (k₁,₂·ξ, 1),
// k₁,₂ = (a(r−1) ± √d)/(2‖ξ‖²), d = a²(r+1)² − 4r. Same branch sign pairs
// λᵢ with kᵢ.
struct SpecialSpectrum {
    Complex r;
    Complex lambda1, lambda2;
    Complex k1, k2;
    Complex discriminant;
};

struct FixedPointRecord {
    CVector point;
    Location location = Location::Interior;
    Complex eigenvalue; // ⟨point, ξ⟩ + a on the phase-stripped element
};

struct Classification {
    Kind kind = Kind::Undetermined;
    std::vector<FixedPointRecord> fixed_points;
    Method method = Method::ClosedForm;
    std::optional<SpecialSpectrum> spectrum;
};

// Structural predicates (Uξ-criteria on the canonical triple).
bool is_unitary_elem(const GElement& t, double tol = kDefaultTol);
bool is_normal_elem(const GElement& t, double tol = kDefaultTol);
bool is_self_adjoint_elem(const GElement& t, double tol = kDefaultTol);
bool is_involutory_elem(const GElement& t, double tol = kDefaultTol);

// Commutator route ‖M*M − MM*‖_max ≤ tol; the cross-check for is_normal_elem.
bool is_normal_matrix(const CMatrix& m, double tol = kDefaultTol);

// r with Uξ = rξ (residual ≤ tol·‖ξ‖), extracted as ⟨Uξ,ξ⟩/‖ξ‖²; nullopt when
// ⟨ξ⟩ is not U-invariant or ξ = 0.
std::optional<Complex> reducing_eigenvalue(const GElement& t, double tol = kDefaultTol);

SpecialSpectrum reducing_spectrum(const GElement& t, double tol = kDefaultTol);

std::vector<FixedPointRecord> fixed_points(const GElement& t, double tol = kDefaultTol);

Classification dynamical_type(const GElement& t, double tol = kDefaultTol);

// Denjoy–Wolff-style orbit iteration; nullopt on non-convergence (period-2
// orbits are detected and abandoned early).
std::optional<FixedPointRecord> iterate_to_fixed_point(const GElement& t, const BallPoint& start,
                                                       double tol = kDefaultTol,
                                                       std::size_t maxit = 100000);

// true iff span(K_basis)⊕ℂ and its orthogonal complement are both invariant.
bool reduces(const GElement& t, const std::vector<CVector>& k_basis, double tol = kDefaultTol);

// Verifies (UA)* = V⁻¹(UA)V, Vξ = V⁻¹ξ = −Uξ, θ ≡ 0 (mod π), cross-checked by
// direct conjugation against matrix(inverse(t)).
bool check_unitary_equiv_inverse(const GElement& t, const CMatrix& v, double tol = kDefaultTol);

} // namespace hyperball
