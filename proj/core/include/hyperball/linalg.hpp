#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hyperball/errors.hpp"

namespace hyperball {

using Complex = std::complex<double>;

constexpr double kDefaultTol = 1e-10;  // generic residual tolerance
constexpr double kUnitaryTol = 1e-12;  // ‖U*U − I‖_max admission gate

// ---------------------------------------------------------------------------
// Dense complex vector / matrix (row-major), desk scale (n <= 64).
// ---------------------------------------------------------------------------

class CVector {
  public:
    CVector() = default;
    explicit CVector(std::size_t dim) : e_(dim) {}
    explicit CVector(std::vector<Complex> entries) : e_(std::move(entries)) {}

    std::size_t dim() const { return e_.size(); }
    Complex& operator[](std::size_t i) { return e_[i]; }
    const Complex& operator[](std::size_t i) const { return e_[i]; }

    const std::vector<Complex>& entries() const { return e_; }

    CVector& operator+=(const CVector& o);
    CVector& operator-=(const CVector& o);
    CVector& operator*=(Complex c);

    friend CVector operator+(CVector a, const CVector& b) { return a += b; }
    friend CVector operator-(CVector a, const CVector& b) { return a -= b; }
    friend CVector operator*(Complex c, CVector v) { return v *= c; }

  private:
    std::vector<Complex> e_;
};

class CMatrix {
  public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static CMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    const std::vector<Complex>& entries() const { return e_; }

    CVector col(std::size_t j) const;
    void set_col(std::size_t j, const CVector& v);

    CMatrix& operator+=(const CMatrix& o);
    CMatrix& operator-=(const CMatrix& o);
    CMatrix& operator*=(Complex c);

    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
    friend CMatrix operator*(Complex c, CMatrix m) { return m *= c; }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Complex> e_;
};

CMatrix operator*(const CMatrix& a, const CMatrix& b);
CVector operator*(const CMatrix& m, const CVector& v);

// ⟨x,y⟩ = Σ x_i conj(y_i): linear in the first slot, conjugate-linear in the second.
Complex inner(const CVector& x, const CVector& y);

double norm(const CVector& v);
double max_abs(const CMatrix& m);
double max_abs(const CVector& v);
double frobenius(const CMatrix& m);

CMatrix adjoint(const CMatrix& m);

// Matrix of x ↦ x + c·⟨x,ξ⟩·ξ, i.e. I + c ξξ*.
CMatrix rank_one_update(Complex c, const CVector& xi);

bool is_unitary(const CMatrix& m, double tol = kUnitaryTol);

class Rng;

// Haar-like deterministic unitary: seeded complex Gaussian, Gram-Schmidt with
// positive-real diagonal phase convention. Bit-identical per (n, seed).
CMatrix random_unitary(std::size_t n, std::uint64_t seed);
CMatrix random_unitary(std::size_t n, Rng& rng);

struct EigenDecomposition {
    std::vector<Complex> values; // descending by real part
    CMatrix vectors;             // unit-norm column eigenvectors
    bool defective = false;      // set by eig_2x2 on Jordan blocks
};

// Cyclic complex Jacobi for Hermitian input. Residual ‖Mv − λv‖ <= 100·tol·‖M‖.
EigenDecomposition hermitian_eig(const CMatrix& m, double tol = kDefaultTol);

// Quadratic-formula eigensolve of a general complex 2x2. A defective input
// yields the repeated value twice and a single eigenvector column.
EigenDecomposition eig_2x2(const CMatrix& m);

struct EigenPair {
    Complex value;
    CVector vector;
};

// Dominant eigenpair; nullopt when the Rayleigh quotient never stabilizes
// (unit-modulus-dominated spectrum — callers fall back to closed forms).
std::optional<EigenPair> power_iteration(const CMatrix& m, double tol = kDefaultTol,
                                         std::size_t maxit = 10000, std::uint64_t seed = 1);

// Deterministic stream of N(0,1) pairs / uniforms on top of a 64-bit PRNG;
// avoids std::normal_distribution, whose output is implementation-defined.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next_u64();
    double uniform();                      // [0, 1)
    double uniform(double lo, double hi);  // [lo, hi)
    double gaussian();                     // N(0, 1)
    Complex gaussian_complex();            // independent N(0,1) re/im
    CVector gaussian_vector(std::size_t n);

  private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace hyperball
