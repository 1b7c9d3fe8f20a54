#include "hyperball/generate.hpp"

#include <cmath>
#include <vector>

namespace hyperball {

std::optional<Family> family_from_string(std::string_view s) {
    if (s == "uniform") return Family::Uniform;
    if (s == "normal") return Family::Normal;
    if (s == "selfadjoint") return Family::SelfAdjoint;
    if (s == "involutory") return Family::Involutory;
    if (s == "reducing") return Family::Reducing;
    if (s == "parabolic") return Family::Parabolic;
    if (s == "unitary") return Family::Unitary;
    return std::nullopt;
}

const char* to_string(Family f) {
    switch (f) {
        case Family::Uniform: return "uniform";
        case Family::Normal: return "normal";
        case Family::SelfAdjoint: return "selfadjoint";
        case Family::Involutory: return "involutory";
        case Family::Reducing: return "reducing";
        case Family::Parabolic: return "parabolic";
        default: return "unitary";
    }
}

CMatrix complete_to_unitary(const CVector& unit_dir) {
    const std::size_t n = unit_dir.dim();
    CMatrix r(n, n);
    r.set_col(0, unit_dir);
    std::vector<bool> used(n, false);
    for (std::size_t col = 1; col < n; ++col) {
        // greedy pivot: the standard basis vector with the largest residual
        double best = -1.0;
        std::size_t pick = 0;
        CVector best_resid;
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j]) continue;
            CVector v(n);
            v[j] = 1.0;
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t i = 0; i < col; ++i) {
                    const CVector qi = r.col(i);
                    v -= inner(v, qi) * qi;
                }
            }
            const double nv = norm(v);
            if (nv > best) {
                best = nv;
                pick = j;
                best_resid = v;
            }
        }
        used[pick] = true;
        best_resid *= Complex(1.0 / best, 0.0);
        r.set_col(col, best_resid);
    }
    return r;
}

CMatrix unitary_with_eigenvector(const CVector& unit_dir, Complex r, const CMatrix& rest) {
    const std::size_t n = unit_dir.dim();
    if (rest.rows() + 1 != n || rest.cols() + 1 != n) {
        throw DimError("unitary_with_eigenvector: rest must be (n-1)x(n-1)");
    }
    const CMatrix basis = complete_to_unitary(unit_dir);
    CMatrix block(n, n);
    block(0, 0) = r;
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = 0; j + 1 < n; ++j) block(i + 1, j + 1) = rest(i, j);
    return basis * block * adjoint(basis);
}

BallPoint random_ball_point(std::size_t dim, double max_norm, Rng& rng) {
    CVector v = rng.gaussian_vector(dim);
    const double nv = norm(v);
    const double target = max_norm * rng.uniform();
    v *= Complex(nv > 0.0 ? target / nv : 0.0, 0.0);
    return BallPoint(std::move(v));
}

namespace {

CVector random_direction(std::size_t dim, Rng& rng) {
    CVector v = rng.gaussian_vector(dim);
    double nv = norm(v);
    while (nv <= 1e-12) {
        v = rng.gaussian_vector(dim);
        nv = norm(v);
    }
    v *= Complex(1.0 / nv, 0.0);
    return v;
}

// involutory unitary of the complement: W·diag(±1)·W*
CMatrix random_involutory(std::size_t m, Rng& rng, bool force_both_signs) {
    CMatrix d(m, m);
    bool saw_plus = false, saw_minus = false;
    for (std::size_t i = 0; i < m; ++i) {
        const bool plus = rng.uniform() < 0.5;
        d(i, i) = plus ? 1.0 : -1.0;
        (plus ? saw_plus : saw_minus) = true;
    }
    if (force_both_signs && m >= 2) {
        if (!saw_plus) d(0, 0) = 1.0;
        if (!saw_minus) d(m - 1, m - 1) = -1.0;
    }
    const CMatrix w = random_unitary(m, rng);
    return w * d * adjoint(w);
}

} // namespace

GElement random_element(Family f, std::size_t dim, Rng& rng) {
    if (dim < 2) throw DimError("random_element: dim must be >= 2");
    const double nxi = rng.uniform(0.25, 1.5);
    const CVector dir = random_direction(dim, rng);
    CVector xi = dir;
    xi *= Complex(nxi, 0.0);
    const double theta = rng.uniform(0.0, 2.0 * M_PI);
    const double half_turn = rng.uniform() < 0.5 ? 0.0 : M_PI;

    switch (f) {
        case Family::Uniform:
            return GElement(theta, random_unitary(dim, rng), std::move(xi));
        case Family::Unitary:
            return GElement(theta, random_unitary(dim, rng), CVector(dim));
        case Family::Normal:
            return GElement(theta,
                            unitary_with_eigenvector(dir, 1.0, random_unitary(dim - 1, rng)),
                            std::move(xi));
        case Family::SelfAdjoint:
            return GElement(half_turn,
                            unitary_with_eigenvector(dir, 1.0, random_involutory(dim - 1, rng, true)),
                            std::move(xi));
        case Family::Involutory:
            return GElement(half_turn,
                            unitary_with_eigenvector(dir, -1.0, random_involutory(dim - 1, rng, false)),
                            std::move(xi));
        case Family::Reducing: {
            const Complex r = std::polar(1.0, rng.uniform(0.0, 2.0 * M_PI));
            return GElement(theta, unitary_with_eigenvector(dir, r, random_unitary(dim - 1, rng)),
                            std::move(xi));
        }
        case Family::Parabolic: {
            const double a2 = 1.0 + nxi * nxi;
            const double c = 2.0 / a2 - 1.0;
            const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
            const Complex r(c, rng.uniform() < 0.5 ? s : -s);
            return GElement(theta, unitary_with_eigenvector(dir, r, random_unitary(dim - 1, rng)),
                            std::move(xi));
        }
    }
    throw Error("random_element: unreachable");
}

} // namespace hyperball
