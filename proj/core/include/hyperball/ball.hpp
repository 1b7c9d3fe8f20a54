#pragma once

#include <cstdint>

#include "hyperball/linalg.hpp"

namespace hyperball {

constexpr double kBoundaryEps = 1e-12; // ball admission: ‖v‖ < 1 − kBoundaryEps

// A point of the open unit ball B ⊂ ℂⁿ.
class BallPoint {
  public:
    explicit BallPoint(CVector v);
    static BallPoint origin(std::size_t dim);

    const CVector& v() const { return v_; }
    std::size_t dim() const { return v_.dim(); }
    double norm() const { return hyperball::norm(v_); }

  private:
    CVector v_;
};

// U ∘ f_{x0}: the Möbius self-map of B with base point x0 followed by a unitary.
class MobiusMap {
  public:
    MobiusMap(CMatrix U, CVector x0);
    static MobiusMap translation(CVector x0); // U = I

    const CMatrix& U() const { return u_; }
    const CVector& x0() const { return x0_; }
    std::size_t dim() const { return x0_.dim(); }

  private:
    CMatrix u_;
    CVector x0_;
};

// Matrix of T_{x0}: x ↦ (⟨x,x0⟩/(1+√(1−‖x0‖²)))·x0 + √(1−‖x0‖²)·x.
CMatrix t_operator(const CVector& x0);

BallPoint mobius_apply(const MobiusMap& m, const BallPoint& x);

// Same map evaluated on the unit sphere (fixed points of boundary type live there).
CVector mobius_boundary_apply(const MobiusMap& m, const CVector& x);

// Poincaré metric on the unit disk Δ, curvature −4 convention:
// ρ(z,w) = atanh|(z−w)/(1−z·conj(w))|.
double poincare_distance(Complex z, Complex w);

// Carathéodory distance on B: atanh‖f_x(y)‖ (U = I translation to the origin).
double caratheodory_distance(const BallPoint& x, const BallPoint& y);

// Lower estimate of the defining supremum over Hol(B,Δ), restricted to the
// family z ↦ ⟨f_x(z), u⟩ with random unit u plus the aligned functional.
// Matches caratheodory_distance within 1e−9 and never exceeds it.
double caratheodory_lower_bound(const BallPoint& x, const BallPoint& y, std::size_t trials,
                                std::uint64_t seed);

} // namespace hyperball
