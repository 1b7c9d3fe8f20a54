#include "hyperball/ball.hpp"

#include <cmath>

namespace hyperball {

namespace {

// f_{x0}(x) = T_{x0}((x − x0)/(1 − ⟨x,x0⟩)), denominator guarded by the caller
CVector translate_raw(const CVector& x0, const CVector& x) {
    const Complex den = Complex(1.0, 0.0) - inner(x, x0);
    if (std::abs(den) < 1e-14) throw NearSingular("mobius: denominator 1 − ⟨x,x0⟩ collapsed");
    CVector y = x - x0;
    y *= Complex(1.0, 0.0) / den;

    // apply T_{x0} without materializing the matrix
    const double n0 = norm(x0);
    const double root = std::sqrt(1.0 - n0 * n0);
    const Complex coef = inner(y, x0) / (1.0 + root);
    CVector r = x0;
    r *= coef;
    CVector ys = y;
    ys *= Complex(root, 0.0);
    return r + ys;
}

} // namespace

BallPoint::BallPoint(CVector v) : v_(std::move(v)) {
    if (v_.dim() == 0) throw DimError("BallPoint: dimension must be >= 1");
    if (hyperball::norm(v_) >= 1.0 - kBoundaryEps) {
        throw OutOfBall("BallPoint: ‖v‖ must be < 1 − 1e-12");
    }
}

BallPoint BallPoint::origin(std::size_t dim) { return BallPoint(CVector(dim)); }

MobiusMap::MobiusMap(CMatrix U, CVector x0) : u_(std::move(U)), x0_(std::move(x0)) {
    if (u_.rows() != x0_.dim() || u_.cols() != x0_.dim()) {
        throw DimError("MobiusMap: U and x0 dimensions disagree");
    }
    if (!is_unitary(u_)) throw NotUnitary("MobiusMap: U fails the 1e-12 unitarity gate");
    if (norm(x0_) >= 1.0) throw OutOfBall("MobiusMap: base point must lie inside B");
}

MobiusMap MobiusMap::translation(CVector x0) {
    const std::size_t n = x0.dim();
    return MobiusMap(CMatrix::identity(n), std::move(x0));
}

CMatrix t_operator(const CVector& x0) {
    const double n0 = norm(x0);
    if (n0 >= 1.0) throw OutOfBall("t_operator: ‖x0‖ must be < 1");
    const std::size_t n = x0.dim();
    const double root = std::sqrt(1.0 - n0 * n0);
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = x0[i] * std::conj(x0[j]) / (1.0 + root);
            if (i == j) m(i, j) += root;
        }
    }
    return m;
}

BallPoint mobius_apply(const MobiusMap& m, const BallPoint& x) {
    return BallPoint(m.U() * translate_raw(m.x0(), x.v()));
}

CVector mobius_boundary_apply(const MobiusMap& m, const CVector& x) {
    if (std::abs(norm(x) - 1.0) > 1e-10) {
        throw OutOfBall("mobius_boundary_apply: ‖x‖ must be 1 ± 1e-10");
    }
    const Complex den = Complex(1.0, 0.0) - inner(x, m.x0());
    if (std::abs(den) < 1e-12) throw NearSingular("mobius_boundary_apply: denominator collapsed");
    return m.U() * translate_raw(m.x0(), x);
}

double poincare_distance(Complex z, Complex w) {
    if (std::abs(z) >= 1.0 || std::abs(w) >= 1.0) {
        throw OutOfBall("poincare_distance: arguments must lie in the open disk");
    }
    const Complex num = z - w;
    const Complex den = Complex(1.0, 0.0) - z * std::conj(w);
    return std::atanh(std::abs(num / den));
}

double caratheodory_distance(const BallPoint& x, const BallPoint& y) {
    const CVector img = translate_raw(x.v(), y.v());
    return std::atanh(norm(img));
}

double caratheodory_lower_bound(const BallPoint& x, const BallPoint& y, std::size_t trials,
                                std::uint64_t seed) {
    const CVector img = translate_raw(x.v(), y.v());
    const double nimg = norm(img);
    const std::size_t n = img.dim();

    Rng rng(seed);
    double best = 0.0;
    // ρ(f(x), f(y)) with f = ⟨f_x(·), u⟩: f(x) = 0, so the distance is atanh|⟨img, u⟩|
    for (std::size_t t = 0; t < trials; ++t) {
        CVector u = rng.gaussian_vector(n);
        const double nu = norm(u);
        if (nu <= 1e-300) continue;
        u *= Complex(1.0 / nu, 0.0);
        best = std::max(best, std::atanh(std::min(std::abs(inner(img, u)), 1.0 - 1e-16)));
    }
    if (nimg > 1e-300) {
        // the aligned functional attains the supremum
        CVector u = img;
        u *= Complex(1.0 / nimg, 0.0);
        best = std::max(best, std::atanh(std::abs(inner(img, u))));
    }
    return best;
}

} // namespace hyperball
