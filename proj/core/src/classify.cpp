#include "hyperball/classify.hpp"

#include <cmath>

namespace hyperball {

const char* to_string(Location l) {
    return l == Location::Interior ? "Interior" : "Boundary";
}

const char* to_string(Kind k) {
    switch (k) {
        case Kind::Elliptic: return "Elliptic";
        case Kind::Hyperbolic: return "Hyperbolic";
        case Kind::Parabolic: return "Parabolic";
        default: return "Undetermined";
    }
}

const char* to_string(Method m) {
    return m == Method::ClosedForm ? "ClosedForm" : "Iteration";
}

bool is_unitary_elem(const GElement& t, double tol) { return norm(t.xi()) <= tol; }

bool is_normal_elem(const GElement& t, double tol) {
    const double nxi = norm(t.xi());
    if (nxi <= tol) return true;
    return norm(t.U() * t.xi() - t.xi()) <= tol * nxi;
}

bool is_normal_matrix(const CMatrix& m, double tol) {
    const CMatrix ms = adjoint(m);
    return max_abs(ms * m - m * ms) <= tol;
}

bool is_self_adjoint_elem(const GElement& t, double tol) {
    return max_abs(adjoint_g(t).M - t.matrix()) <= tol;
}

bool is_involutory_elem(const GElement& t, double tol) {
    const CMatrix m = t.matrix();
    return max_abs(m * m - CMatrix::identity(m.rows())) <= tol;
}

std::optional<Complex> reducing_eigenvalue(const GElement& t, double tol) {
    const double nxi = norm(t.xi());
    if (nxi <= tol) return std::nullopt;
    const CVector uxi = t.U() * t.xi();
    const Complex r = inner(uxi, t.xi()) / (nxi * nxi);
    if (norm(uxi - r * t.xi()) > tol * nxi) return std::nullopt;
    return r;
}

SpecialSpectrum reducing_spectrum(const GElement& t, double tol) {
    const double nxi = norm(t.xi());
    if (nxi <= tol) throw NotReducing("reducing_spectrum: ξ = 0 has no reducing plane");
    if (std::min(t.theta(), std::abs(t.theta() - 2.0 * M_PI)) > tol) {
        throw NotReducing("reducing_spectrum: strip the phase first (θ must be 0)");
    }
    const auto r = reducing_eigenvalue(t, tol);
    if (!r) throw NotReducing("reducing_spectrum: ⟨ξ⟩ is not U-invariant at tol");

    const double a = t.a();
    const Complex rp1 = *r + 1.0;
    const Complex disc = a * a * rp1 * rp1 - 4.0 * (*r);
    const Complex sq = std::sqrt(disc); // principal branch
    SpecialSpectrum s;
    s.r = *r;
    s.discriminant = disc;
    s.lambda1 = 0.5 * (a * rp1 + sq);
    s.lambda2 = 0.5 * (a * rp1 - sq);
    const double n2 = nxi * nxi;
    s.k1 = (a * (*r - 1.0) + sq) / (2.0 * n2);
    s.k2 = (a * (*r - 1.0) - sq) / (2.0 * n2);
    return s;
}

namespace {

FixedPointRecord record_from_k(const GElement& t, Complex k, Complex lambda) {
    CVector p = t.xi();
    p *= k;
    FixedPointRecord rec;
    rec.location = (norm(p) < 1.0 - kInteriorTol) ? Location::Interior : Location::Boundary;
    rec.point = std::move(p);
    rec.eigenvalue = lambda;
    return rec;
}

FixedPointRecord boundary_record(const GElement& t, CVector unit_point) {
    FixedPointRecord rec;
    rec.eigenvalue = inner(unit_point, t.xi()) + t.a();
    rec.location = Location::Boundary;
    rec.point = std::move(unit_point);
    return rec;
}

} // namespace

std::optional<FixedPointRecord> iterate_to_fixed_point(const GElement& t, const BallPoint& start,
                                                       double tol, std::size_t maxit) {
    const GElement ts = t.phase_stripped();
    CVector x = start.v();
    CVector prev = x;
    for (std::size_t it = 0; it < maxit; ++it) {
        CVector w = apply_raw(ts, x);
        const double step = norm(w - x);
        const double nw = norm(w);
        if (step <= tol && nw < 1.0 - 10.0 * tol) {
            FixedPointRecord rec;
            rec.point = w;
            rec.location = Location::Interior;
            rec.eigenvalue = inner(w, ts.xi()) + ts.a();
            return rec;
        }
        if (1.0 - nw <= 10.0 * tol && nw > 0.0) {
            CVector u = w;
            u *= Complex(1.0 / nw, 0.0);
            const double nx = norm(x);
            if (nx > 0.0) {
                CVector ux = x;
                ux *= Complex(1.0 / nx, 0.0);
                if (norm(u - ux) <= 100.0 * tol) return boundary_record(ts, std::move(u));
            }
        }
        // period-2 orbits (elliptic rotations) never settle; bail out early
        if (it >= 2 && norm(w - prev) <= tol && step > 10.0 * tol) return std::nullopt;
        prev = x;
        x = w;
    }
    return std::nullopt;
}

std::vector<FixedPointRecord> fixed_points(const GElement& t, double tol) {
    const GElement ts = t.phase_stripped();
    std::vector<FixedPointRecord> out;

    if (norm(ts.xi()) <= tol) {
        // unitary element: fixes the origin; eigen-route suppressed
        FixedPointRecord rec;
        rec.point = CVector(ts.dim());
        rec.location = Location::Interior;
        rec.eigenvalue = Complex(ts.a(), 0.0);
        out.push_back(std::move(rec));
        return out;
    }

    if (reducing_eigenvalue(ts, tol)) {
        const SpecialSpectrum s = reducing_spectrum(ts, tol);
        const double nxi = norm(ts.xi());
        const bool double_root = std::abs(s.discriminant) <= kParabolicTol * ts.a() * ts.a();
        if (double_root) {
            const Complex k = 0.5 * (s.k1 + s.k2);
            const Complex lambda = 0.5 * (s.lambda1 + s.lambda2);
            if (std::abs(k) * nxi <= 1.0 + kInteriorTol) out.push_back(record_from_k(ts, k, lambda));
            return out;
        }
        if (std::abs(s.k1) * nxi <= 1.0 + kInteriorTol)
            out.push_back(record_from_k(ts, s.k1, s.lambda1));
        if (std::abs(s.k2) * nxi <= 1.0 + kInteriorTol)
            out.push_back(record_from_k(ts, s.k2, s.lambda2));
        return out;
    }

    // general element: orbit iteration forward and backward
    auto fwd = iterate_to_fixed_point(ts, BallPoint::origin(ts.dim()), tol);
    if (fwd) out.push_back(*fwd);
    if (!fwd || fwd->location == Location::Boundary) {
        auto bwd = iterate_to_fixed_point(inverse(ts), BallPoint::origin(ts.dim()), tol);
        if (bwd) {
            const bool duplicate = fwd && norm(bwd->point - fwd->point) <= 1e-6;
            if (!duplicate) {
                bwd->eigenvalue = inner(bwd->point, ts.xi()) + ts.a();
                out.push_back(*bwd);
            }
        }
    }
    return out;
}

Classification dynamical_type(const GElement& t, double tol) {
    const GElement ts = t.phase_stripped();
    Classification c;

    if (norm(ts.xi()) <= tol) {
        c.kind = Kind::Elliptic;
        c.method = Method::ClosedForm;
        c.fixed_points = fixed_points(ts, tol);
        return c;
    }

    if (reducing_eigenvalue(ts, tol)) {
        const SpecialSpectrum s = reducing_spectrum(ts, tol);
        const double nxi = norm(ts.xi());
        c.method = Method::ClosedForm;
        c.spectrum = s;
        c.fixed_points = fixed_points(ts, tol);
        // a vanishing discriminant forces ‖kξ‖ = 1 exactly, but in floating
        // point √disc inflates rounding to ~1e-8, so the double-root test
        // must run before the interior-norm test
        const double nk = std::min(std::abs(s.k1), std::abs(s.k2)) * nxi;
        if (std::abs(s.discriminant) <= kParabolicTol * ts.a() * ts.a()) {
            c.kind = Kind::Parabolic;
        } else if (nk < 1.0 - kInteriorTol) {
            c.kind = Kind::Elliptic;
        } else {
            c.kind = Kind::Hyperbolic;
        }
        return c;
    }

    c.method = Method::Iteration;
    auto fwd = iterate_to_fixed_point(ts, BallPoint::origin(ts.dim()), tol);
    if (fwd && fwd->location == Location::Interior) {
        c.kind = Kind::Elliptic;
        c.fixed_points.push_back(*fwd);
        return c;
    }
    if (fwd && fwd->location == Location::Boundary) {
        auto bwd = iterate_to_fixed_point(inverse(ts), BallPoint::origin(ts.dim()), tol);
        if (bwd && bwd->location == Location::Boundary) {
            if (norm(bwd->point - fwd->point) <= 1e-6) {
                c.kind = Kind::Parabolic;
                c.fixed_points.push_back(*fwd);
            } else {
                c.kind = Kind::Hyperbolic;
                bwd->eigenvalue = inner(bwd->point, ts.xi()) + ts.a();
                c.fixed_points.push_back(*fwd);
                c.fixed_points.push_back(*bwd);
            }
            return c;
        }
        // cannot distinguish one from two boundary points
        c.kind = Kind::Undetermined;
        c.fixed_points.push_back(*fwd);
        return c;
    }
    c.kind = Kind::Undetermined;
    return c;
}

bool reduces(const GElement& t, const std::vector<CVector>& k_basis, double tol) {
    const std::size_t n = t.dim();
    if (k_basis.empty()) throw BadBasis("reduces: empty basis");
    for (std::size_t i = 0; i < k_basis.size(); ++i) {
        if (k_basis[i].dim() != n) throw BadBasis("reduces: basis dimension mismatch");
        for (std::size_t j = 0; j <= i; ++j) {
            const Complex g = inner(k_basis[i], k_basis[j]);
            const double want = (i == j) ? 1.0 : 0.0;
            if (std::abs(g - want) > tol) throw BadBasis("reduces: basis not orthonormal at tol");
        }
    }

    // projector onto span(K)⊕ℂ inside ℂⁿ⊕ℂ
    CMatrix p(n + 1, n + 1);
    for (const auto& b : k_basis)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) p(i, j) += b[i] * std::conj(b[j]);
    p(n, n) = 1.0;

    const CMatrix m = t.matrix();
    const CMatrix q = CMatrix::identity(n + 1) - p;
    return max_abs(q * (m * p)) <= tol && max_abs(p * (m * q)) <= tol;
}

bool check_unitary_equiv_inverse(const GElement& t, const CMatrix& v, double tol) {
    if (v.rows() != t.dim() || v.cols() != t.dim()) throw DimError("check: V dimension mismatch");
    if (!is_unitary(v, tol)) throw NotUnitary("check: V fails unitarity at tol");
    const CMatrix vadj = adjoint(v);

    const CMatrix ua = t.ua();
    const bool cond_conj = max_abs(adjoint(ua) - vadj * ua * v) <= tol;

    const CVector uxi = t.U() * t.xi();
    CVector minus_uxi = uxi;
    minus_uxi *= Complex(-1.0, 0.0);
    const bool cond_xi =
        max_abs(v * t.xi() - minus_uxi) <= tol && max_abs(vadj * t.xi() - minus_uxi) <= tol;

    const double th = t.theta();
    const bool cond_phase =
        std::min({th, std::abs(th - M_PI), std::abs(th - 2.0 * M_PI)}) <= tol;

    if (!(cond_conj && cond_xi && cond_phase)) return false;

    // direct conjugation cross-check on ℂⁿ⊕ℂ
    const std::size_t n = t.dim();
    CMatrix w = CMatrix::identity(n + 1);
    CMatrix wadj = CMatrix::identity(n + 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            w(i, j) = v(i, j);
            wadj(i, j) = vadj(i, j);
        }
    return max_abs(wadj * t.matrix() * w - inverse(t).matrix()) <= 10.0 * tol;
}

} // namespace hyperball
