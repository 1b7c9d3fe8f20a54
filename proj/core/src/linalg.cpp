#include "hyperball/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hyperball {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw DimError(std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs " +
                       std::to_string(b) + ")");
    }
}

} // namespace

// ---------------------------------------------------------------------------
// CVector / CMatrix
// ---------------------------------------------------------------------------

CVector& CVector::operator+=(const CVector& o) {
    require_same_dim(dim(), o.dim(), "vector add");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

CVector& CVector::operator-=(const CVector& o) {
    require_same_dim(dim(), o.dim(), "vector sub");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

CVector& CVector::operator*=(Complex c) {
    for (auto& z : e_) z *= c;
    return *this;
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_) throw DimError("matrix: entries length != rows*cols");
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CVector CMatrix::col(std::size_t j) const {
    CVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void CMatrix::set_col(std::size_t j, const CVector& v) {
    require_same_dim(v.dim(), rows_, "set_col");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
    require_same_dim(rows_, o.rows_, "matrix add rows");
    require_same_dim(cols_, o.cols_, "matrix add cols");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
    require_same_dim(rows_, o.rows_, "matrix sub rows");
    require_same_dim(cols_, o.cols_, "matrix sub cols");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

CMatrix& CMatrix::operator*=(Complex c) {
    for (auto& z : e_) z *= c;
    return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    require_same_dim(a.cols(), b.rows(), "matmul");
    CMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

CVector operator*(const CMatrix& m, const CVector& v) {
    require_same_dim(m.cols(), v.dim(), "matvec");
    CVector r(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Complex s{};
        for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

Complex inner(const CVector& x, const CVector& y) {
    require_same_dim(x.dim(), y.dim(), "inner");
    Complex s{};
    for (std::size_t i = 0; i < x.dim(); ++i) s += x[i] * std::conj(y[i]);
    return s;
}

double norm(const CVector& v) {
    double s = 0.0;
    for (std::size_t i = 0; i < v.dim(); ++i) s += std::norm(v[i]);
    return std::sqrt(s);
}

double max_abs(const CMatrix& m) {
    double r = 0.0;
    for (const auto& z : m.entries()) r = std::max(r, std::abs(z));
    return r;
}

double max_abs(const CVector& v) {
    double r = 0.0;
    for (const auto& z : v.entries()) r = std::max(r, std::abs(z));
    return r;
}

double frobenius(const CMatrix& m) {
    double s = 0.0;
    for (const auto& z : m.entries()) s += std::norm(z);
    return std::sqrt(s);
}

CMatrix adjoint(const CMatrix& m) {
    CMatrix r(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(j, i) = std::conj(m(i, j));
    return r;
}

CMatrix rank_one_update(Complex c, const CVector& xi) {
    const std::size_t n = xi.dim();
    CMatrix m = CMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) += c * xi[i] * std::conj(xi[j]);
    return m;
}

bool is_unitary(const CMatrix& m, double tol) {
    if (!m.square()) return false;
    return max_abs(adjoint(m) * m - CMatrix::identity(m.rows())) <= tol;
}

// ---------------------------------------------------------------------------
// Rng: splitmix64 stream + Box-Muller, fully deterministic per seed.
// ---------------------------------------------------------------------------

std::uint64_t Rng::next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // u1 in (0,1] keeps the log finite
    const double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

Complex Rng::gaussian_complex() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
}

CVector Rng::gaussian_vector(std::size_t n) {
    CVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = gaussian_complex();
    return v;
}

// ---------------------------------------------------------------------------
// random_unitary
// ---------------------------------------------------------------------------

CMatrix random_unitary(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    return random_unitary(n, rng);
}

CMatrix random_unitary(std::size_t n, Rng& rng) {
    CMatrix q(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        CVector v = rng.gaussian_vector(n);
        double nrm = 0.0;
        for (int attempt = 0; attempt < 8; ++attempt) {
            // two Gram-Schmidt passes keep orthogonality at machine precision
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t i = 0; i < j; ++i) {
                    const CVector qi = q.col(i);
                    v -= inner(v, qi) * qi;
                }
            }
            nrm = norm(v);
            if (nrm > 1e-8) break;
            v = rng.gaussian_vector(n); // essentially-dependent draw, retry
        }
        v *= Complex(1.0 / nrm, 0.0);
        q.set_col(j, v);
    }
    return q;
}

// ---------------------------------------------------------------------------
// hermitian_eig: cyclic complex Jacobi
// ---------------------------------------------------------------------------

EigenDecomposition hermitian_eig(const CMatrix& m, double tol) {
    if (!m.square()) throw NotHermitian("hermitian_eig: matrix not square");
    const std::size_t n = m.rows();
    const double scale = max_abs(m);
    if (max_abs(m - adjoint(m)) > tol * std::max(scale, 1e-300)) {
        throw NotHermitian("hermitian_eig: ‖M − M*‖ exceeds tol·‖M‖");
    }

    // symmetrize to kill rounding asymmetry, then rotate
    CMatrix a = m;
    {
        CMatrix at = adjoint(m);
        a += at;
        a *= 0.5;
    }
    CMatrix v = CMatrix::identity(n);

    const double stop = 1e-15 * std::max(scale, 1e-300);
    const int max_sweeps = 60;
    bool converged = (n < 2);
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
        if (off <= stop) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex beta = a(p, q);
                const double b = std::abs(beta);
                if (b <= stop * 1e-2) continue;
                const double alpha = a(p, p).real();
                const double gamma = a(q, q).real();
                const double tau = (alpha - gamma) / (2.0 * b);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex u = beta / b;

                // columns p,q of A and of the accumulated eigenvector matrix
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp * c + akq * (s * std::conj(u));
                    a(k, q) = akq * c - akp * (s * u);
                    const Complex vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = vkp * c + vkq * (s * std::conj(u));
                    v(k, q) = vkq * c - vkp * (s * u);
                }
                // rows p,q
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k), aqk = a(q, k);
                    a(p, k) = apk * c + aqk * (s * u);
                    a(q, k) = aqk * c - apk * (s * std::conj(u));
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = Complex(a(p, p).real(), 0.0);
                a(q, q) = Complex(a(q, q).real(), 0.0);
            }
        }
    }
    if (!converged) {
        double off = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
        if (off > 100.0 * tol * std::max(scale, 1e-300)) {
            throw NoConvergence("hermitian_eig: Jacobi sweep budget exhausted");
        }
    }

    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

    EigenDecomposition d;
    d.values.resize(n);
    d.vectors = CMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        d.values[j] = Complex(a(idx[j], idx[j]).real(), 0.0);
        d.vectors.set_col(j, v.col(idx[j]));
    }
    return d;
}

// ---------------------------------------------------------------------------
// eig_2x2
// ---------------------------------------------------------------------------

namespace {

CVector kernel_vector_2x2(const CMatrix& m, Complex lambda) {
    // rows of (M − λI); take the larger one
    const Complex r0[2] = {m(0, 0) - lambda, m(0, 1)};
    const Complex r1[2] = {m(1, 0), m(1, 1) - lambda};
    const double n0 = std::abs(r0[0]) + std::abs(r0[1]);
    const double n1 = std::abs(r1[0]) + std::abs(r1[1]);
    CVector v(2);
    if (n0 >= n1 && n0 > 0.0) {
        v[0] = -r0[1];
        v[1] = r0[0];
    } else if (n1 > 0.0) {
        v[0] = r1[1];
        v[1] = -r1[0];
    } else {
        v[0] = 1.0; // scalar matrix
        v[1] = 0.0;
    }
    const double nv = norm(v);
    if (nv > 0.0) v *= Complex(1.0 / nv, 0.0);
    return v;
}

} // namespace

EigenDecomposition eig_2x2(const CMatrix& m) {
    if (m.rows() != 2 || m.cols() != 2) throw DimError("eig_2x2: expected a 2x2 matrix");
    const Complex tr = m(0, 0) + m(1, 1);
    const Complex det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    const Complex sq = std::sqrt(tr * tr - 4.0 * det);
    const Complex l1 = 0.5 * (tr + sq);
    const Complex l2 = 0.5 * (tr - sq);

    const double scale = std::max(max_abs(m), 1e-300);
    EigenDecomposition d;
    d.values = {l1, l2};
    if (std::abs(l1 - l2) <= 1e-12 * scale) {
        const Complex l = 0.5 * (l1 + l2);
        CMatrix shifted = m;
        shifted(0, 0) -= l;
        shifted(1, 1) -= l;
        if (max_abs(shifted) <= 1e-12 * scale) {
            d.vectors = CMatrix::identity(2); // scalar: full eigenspace
        } else {
            d.defective = true; // Jordan block: one eigenvector only
            d.vectors = CMatrix(2, 1);
            d.vectors.set_col(0, kernel_vector_2x2(m, l));
        }
        d.values = {l, l};
        return d;
    }
    d.vectors = CMatrix(2, 2);
    d.vectors.set_col(0, kernel_vector_2x2(m, l1));
    d.vectors.set_col(1, kernel_vector_2x2(m, l2));
    return d;
}

// ---------------------------------------------------------------------------
// power_iteration
// ---------------------------------------------------------------------------

std::optional<EigenPair> power_iteration(const CMatrix& m, double tol, std::size_t maxit,
                                         std::uint64_t seed) {
    if (!m.square()) throw DimError("power_iteration: matrix not square");
    const std::size_t n = m.rows();
    const double scale = std::max(frobenius(m), 1e-300);

    Rng rng(seed);
    CVector v = rng.gaussian_vector(n);
    v *= Complex(1.0 / norm(v), 0.0);

    for (std::size_t it = 0; it < maxit; ++it) {
        CVector w = m * v;
        const Complex lambda = inner(w, v); // Rayleigh quotient, ‖v‖ = 1
        if (norm(w - lambda * v) <= tol * scale) return EigenPair{lambda, v};
        const double nw = norm(w);
        if (nw <= 1e-300) return EigenPair{Complex{}, v}; // v in the kernel
        v = w;
        v *= Complex(1.0 / nw, 0.0);
    }
    return std::nullopt;
}

} // namespace hyperball
