#include "hyperball/group.hpp"

#include <cmath>

namespace hyperball {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

double normalize_angle(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    if (t >= kTwoPi) t = 0.0;
    return t;
}

} // namespace

GElement::GElement(double theta, CMatrix U, CVector xi)
    : theta_(normalize_angle(theta)), u_(std::move(U)), xi_(std::move(xi)) {
    if (!std::isfinite(theta)) throw Error("GElement: theta must be finite");
    if (u_.rows() != xi_.dim() || u_.cols() != xi_.dim()) {
        throw DimError("GElement: U and xi dimensions disagree");
    }
    if (xi_.dim() == 0) throw DimError("GElement: dimension must be >= 1");
    if (!is_unitary(u_)) throw NotUnitary("GElement: U fails the 1e-12 unitarity gate");
    const double n2 = std::pow(norm(xi_), 2);
    a_ = std::sqrt(1.0 + n2);
}

CMatrix GElement::scaling() const {
    // coefficient (a−1)/‖ξ‖² collapses to 1/(1+a); no ξ = 0 special case
    return rank_one_update(Complex(1.0 / (1.0 + a_), 0.0), xi_);
}

CMatrix GElement::scaling_inverse() const {
    return rank_one_update(Complex(-1.0 / (a_ * (1.0 + a_)), 0.0), xi_);
}

CMatrix GElement::ua() const {
    const std::size_t n = dim();
    const CVector uxi = u_ * xi_;
    CMatrix m = u_;
    const double c = 1.0 / (1.0 + a_);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) += c * uxi[i] * std::conj(xi_[j]);
    return m;
}

CMatrix GElement::matrix() const {
    const std::size_t n = dim();
    const Complex phase = std::polar(1.0, theta_);
    const CMatrix top = ua();
    const CVector uxi = u_ * xi_;
    CMatrix m(n + 1, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = phase * top(i, j);
        m(i, n) = phase * uxi[i];
        m(n, i) = phase * std::conj(xi_[i]);
    }
    m(n, n) = phase * a_;
    return m;
}

GElement GElement::phase_stripped() const { return GElement(0.0, u_, xi_); }

CMatrix form_signature(std::size_t n) {
    CMatrix j = CMatrix::identity(n + 1);
    j(n, n) = -1.0;
    return j;
}

GElement identity_element(std::size_t n) {
    return GElement(0.0, CMatrix::identity(n), CVector(n));
}

GElement center(std::size_t n, double theta) {
    return GElement(theta, CMatrix::identity(n), CVector(n));
}

GElement from_point(const BallPoint& x0) {
    const double n0 = x0.norm();
    const double a = 1.0 / std::sqrt(1.0 - n0 * n0);
    CVector xi = x0.v();
    xi *= Complex(-a, 0.0);
    return GElement(0.0, CMatrix::identity(x0.dim()), std::move(xi));
}

GElement from_unitary(const CMatrix& U) {
    if (!U.square()) throw NotUnitary("from_unitary: matrix not square");
    if (!is_unitary(U)) throw NotUnitary("from_unitary: U fails the 1e-12 unitarity gate");
    return GElement(0.0, U, CVector(U.rows()));
}

GElement compose(const GElement& s, const GElement& t) {
    if (s.dim() != t.dim()) throw DimError("compose: dimensions disagree");
    return canonicalize(s.matrix() * t.matrix());
}

GElement inverse(const GElement& t) {
    // e^{−iθ}[[(UA)*, −ξ],[−⟨·,Uξ⟩, a]] in canonical coordinates
    CVector xi = t.U() * t.xi();
    xi *= Complex(-1.0, 0.0);
    return GElement(-t.theta(), adjoint(t.U()), std::move(xi));
}

FormMatrix adjoint_g(const GElement& t) {
    const std::size_t n = t.dim();
    const Complex phase = std::polar(1.0, -t.theta());
    const CMatrix ua_adj = adjoint(t.ua());
    const CVector uxi = t.U() * t.xi();
    CMatrix m(n + 1, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = phase * ua_adj(i, j);
        m(i, n) = phase * t.xi()[i];
        m(n, i) = phase * std::conj(uxi[i]);
    }
    m(n, n) = phase * t.a();
    return FormMatrix{std::move(m)};
}

bool preserves_form(const CMatrix& m, double tol) {
    if (!m.square() || m.rows() < 2) return false;
    const CMatrix j = form_signature(m.rows() - 1);
    return max_abs(adjoint(m) * j * m - j) <= tol;
}

bool preserves_form(const FormMatrix& m, double tol) { return preserves_form(m.M, tol); }

namespace {

// Two Newton–Schulz steps push a tol-level unitarity residual below 1e-12
// so the extracted U passes the GElement admission gate.
CMatrix reorthonormalize(const CMatrix& u) {
    CMatrix x = u;
    const CMatrix three_i = 3.0 * CMatrix::identity(u.rows());
    for (int it = 0; it < 2; ++it) {
        CMatrix g = three_i - adjoint(x) * x;
        g *= 0.5;
        x = x * g;
    }
    return x;
}

} // namespace

GElement canonicalize(const CMatrix& m, double tol) {
    if (!m.square() || m.rows() < 2) throw FormViolation("canonicalize: need size >= 2 square");
    if (!preserves_form(m, tol)) {
        throw FormViolation("canonicalize: ‖M*A′M − A′‖ exceeds tol");
    }
    const std::size_t n = m.rows() - 1;
    const double scale = std::max(1.0, max_abs(m));

    const Complex t = m(n, n);
    const double a = std::abs(t);
    if (a < 1.0 - tol) throw ReconstructionError("canonicalize: bottom-right magnitude < 1");
    const double theta = normalize_angle(std::arg(t));
    const Complex unphase = std::polar(1.0, -theta);

    CVector xi(n);
    for (std::size_t j = 0; j < n; ++j) xi[j] = std::conj(unphase * m(n, j));
    const double nxi = norm(xi);
    if (std::abs(a - std::sqrt(1.0 + nxi * nxi)) > 10.0 * tol * scale) {
        throw ReconstructionError("canonicalize: a² − 1 − ‖ξ‖² residual exceeds tol");
    }

    // U = e^{−iθ}·TL·A⁻¹ with the rank-one closed form of A⁻¹
    CMatrix tl(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) tl(i, j) = unphase * m(i, j);
    const CMatrix a_inv = rank_one_update(Complex(-1.0 / (a * (1.0 + a)), 0.0), xi);
    CMatrix u = tl * a_inv;
    if (!is_unitary(u, tol)) {
        throw ReconstructionError("canonicalize: extracted U is not unitary at tol");
    }
    u = reorthonormalize(u);

    // top-right block must be e^{iθ}·U·ξ
    const CVector uxi = u * xi;
    double col_resid = 0.0;
    for (std::size_t i = 0; i < n; ++i) col_resid = std::max(col_resid, std::abs(unphase * m(i, n) - uxi[i]));
    if (col_resid > 10.0 * tol * scale) {
        throw ReconstructionError("canonicalize: top-right block != e^{iθ}Uξ at tol");
    }

    GElement g(theta, std::move(u), std::move(xi));
    if (max_abs(g.matrix() - m) > 10.0 * tol * scale) {
        throw ReconstructionError("canonicalize: round-trip residual exceeds 10·tol");
    }
    return g;
}

GElement canonicalize(const FormMatrix& m, double tol) { return canonicalize(m.M, tol); }

MobiusMap to_mobius(const GElement& t) {
    CVector x0 = t.xi();
    x0 *= Complex(-1.0 / t.a(), 0.0);
    return MobiusMap(t.U(), std::move(x0));
}

CVector apply_raw(const GElement& t, const CVector& x) {
    if (x.dim() != t.dim()) throw DimError("apply: dimensions disagree");
    const Complex den = inner(x, t.xi()) + t.a();
    if (std::abs(den) < 1e-14) throw NearSingular("apply: denominator ⟨x,ξ⟩ + a collapsed");
    // numerator U(Ax + ξ) with Ax = x + (⟨x,ξ⟩/(1+a))ξ, so Ax + ξ = x + (c+1)ξ
    const Complex c = inner(x, t.xi()) / (1.0 + t.a());
    CVector ax = x;
    CVector xi_scaled = t.xi();
    xi_scaled *= c + 1.0;
    ax += xi_scaled;
    CVector num = t.U() * ax;
    num *= Complex(1.0, 0.0) / den;
    return num;
}

BallPoint apply(const GElement& t, const BallPoint& x) {
    return BallPoint(apply_raw(t, x.v()));
}

std::pair<GElement, GElement> unitary_selfadjoint_split(const GElement& t) {
    GElement v(t.theta(), t.U(), CVector(t.dim()));
    GElement t1(0.0, CMatrix::identity(t.dim()), t.xi());
    return {std::move(v), std::move(t1)};
}

} // namespace hyperball
