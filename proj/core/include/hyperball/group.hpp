#pragma once

#include <utility>

#include "hyperball/ball.hpp"
#include "hyperball/linalg.hpp"

namespace hyperball {

// ---------------------------------------------------------------------------
// The group G of invertible operators on ℂⁿ⊕ℂ preserving the indefinite form
// 𝒜((x,λ),(y,μ)) = ⟨x,y⟩ − λμ̄. Storage is the canonical triple (θ, U, ξ):
// the full matrix e^{iθ}[[UA, Uξ],[⟨·,ξ⟩, a]] with a = √(1+‖ξ‖²) and
// A = I + ξξ*/(1+a) is materialized on demand.
// ---------------------------------------------------------------------------

class GElement {
  public:
    // Canonical constructor ("make"): any unitary U and any ξ are admissible.
    GElement(double theta, CMatrix U, CVector xi);

    double theta() const { return theta_; }
    const CMatrix& U() const { return u_; }
    const CVector& xi() const { return xi_; }
    double a() const { return a_; }
    std::size_t dim() const { return xi_.dim(); }

    CMatrix scaling() const;         // A = I + ξξ*/(1+a); A(ξ) = aξ, A = I on ⟨ξ⟩^⊥
    CMatrix scaling_inverse() const; // A⁻¹ = I − ξξ*/(a(1+a))
    CMatrix ua() const;              // U·A without the phase
    CMatrix matrix() const;          // e^{iθ}[[UA, Uξ],[conj(ξ) row, a]], size (n+1)²

    GElement phase_stripped() const; // θ := 0

  private:
    double theta_; // normalized to [0, 2π)
    CMatrix u_;
    CVector xi_;
    double a_;
};

struct FormMatrix {
    CMatrix M;
};

// A′ = diag(I_n, −1), the operator identified with the form 𝒜.
CMatrix form_signature(std::size_t n);

GElement identity_element(std::size_t n);
GElement center(std::size_t n, double theta); // e^{iθ}·I on ℂⁿ⊕ℂ

// Preimage of the Möbius translation f_{x0}: θ = 0, U = I, ξ = −a·x0.
GElement from_point(const BallPoint& x0);

// Preimage of a unitary: block-diag(U, 1).
GElement from_unitary(const CMatrix& U);

// Canonicalized matrix product; the homomorphism property φ(ST) = φ(S)∘φ(T)
// is what the tests pin down.
GElement compose(const GElement& s, const GElement& t);

// Closed form: e^{−iθ}[[(UA)*, −ξ],[−⟨·,Uξ⟩, a]] == triple (−θ, U*, −Uξ).
GElement inverse(const GElement& t);

// Closed form e^{−iθ}[[(UA)*, ξ],[⟨·,Uξ⟩, a]]; equals adjoint(matrix(t)).
FormMatrix adjoint_g(const GElement& t);

bool preserves_form(const CMatrix& m, double tol = kDefaultTol);
bool preserves_form(const FormMatrix& m, double tol = kDefaultTol);

// Recover the canonical triple from a raw form-preserving matrix.
GElement canonicalize(const CMatrix& m, double tol = kDefaultTol);
GElement canonicalize(const FormMatrix& m, double tol = kDefaultTol);

// φ(T) as U ∘ f_{x0} with x0 = −ξ/a.
MobiusMap to_mobius(const GElement& t);

// φ(T)(x) evaluated projectively: (UAx + Uξ)/(⟨x,ξ⟩ + a); phase cancels.
BallPoint apply(const GElement& t, const BallPoint& x);
CVector apply_raw(const GElement& t, const CVector& x); // no ball admission check

// T = V·T₁ with V = make(θ, U, 0) unitary and T₁ = make(0, I, ξ) self-adjoint.
std::pair<GElement, GElement> unitary_selfadjoint_split(const GElement& t);

} // namespace hyperball
