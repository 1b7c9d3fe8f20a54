#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "hyperball/linalg.hpp"

using namespace hyperball;

namespace {

CVector vec(std::initializer_list<Complex> entries) { return CVector(std::vector<Complex>(entries)); }

CMatrix diag(std::initializer_list<Complex> entries) {
    const std::size_t n = entries.size();
    CMatrix m(n, n);
    std::size_t i = 0;
    for (const auto& z : entries) m(i, i) = z, ++i;
    return m;
}

} // namespace

TEST_CASE("inner product convention") {
    const CVector e1 = vec({1.0, 0.0});
    CHECK(std::abs(inner(e1, e1) - Complex(1.0, 0.0)) < 1e-15);

    // conjugate-linear in the second slot
    Rng rng(11);
    for (int i = 0; i < 50; ++i) {
        const CVector x = rng.gaussian_vector(5);
        CVector iy = rng.gaussian_vector(5);
        const Complex base = inner(x, iy);
        iy *= Complex(0.0, 1.0);
        CHECK(std::abs(inner(x, iy) - Complex(0.0, -1.0) * base) < 1e-13);
    }

    const CVector p = vec({0.6, 0.0});
    CHECK(std::abs(inner(p, p) - Complex(0.36, 0.0)) < 1e-15);

    CHECK_THROWS_AS(inner(vec({1.0}), vec({1.0, 2.0})), DimError);
}

TEST_CASE("inner conjugate symmetry (property)") {
    Rng rng(12);
    for (int i = 0; i < 200; ++i) {
        const CVector x = rng.gaussian_vector(8);
        const CVector y = rng.gaussian_vector(8);
        const Complex a = inner(x, y);
        CHECK(std::abs(a - std::conj(inner(y, x))) < 1e-13 * (1.0 + std::abs(a)));
    }
}

TEST_CASE("adjoint") {
    const CMatrix id = CMatrix::identity(4);
    CHECK(max_abs(adjoint(id) - id) == 0.0);

    Rng rng(13);
    CMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = rng.gaussian_complex();
    CHECK(max_abs(adjoint(adjoint(m)) - m) == 0.0);

    const CMatrix di = diag({Complex(0.0, 1.0)});
    CHECK(std::abs(adjoint(di)(0, 0) - Complex(0.0, -1.0)) == 0.0);
}

TEST_CASE("rank_one_update") {
    Rng rng(14);
    const CVector xi0 = rng.gaussian_vector(4);
    CHECK(max_abs(rank_one_update(0.0, xi0) - CMatrix::identity(4)) == 0.0);

    // S(ξ) = (1+‖ξ‖²)ξ and S = I on ⟨ξ⟩^⊥
    CVector xi = vec({0.75, 0.0, 0.0});
    const CMatrix s = rank_one_update(1.0, xi);
    CHECK(norm(s * xi - Complex(1.5625, 0.0) * xi) < 1e-15);
    const CVector perp = vec({0.0, 0.3, Complex(0.0, -0.4)});
    CHECK(norm(s * perp - perp) < 1e-15);

    // the update has rank one: every 2x2 minor of S − I vanishes
    for (int t = 0; t < 25; ++t) {
        const CVector z = rng.gaussian_vector(5);
        const Complex c = rng.gaussian_complex();
        const CMatrix d = rank_one_update(c, z) - CMatrix::identity(5);
        const double scale = std::max(max_abs(d) * max_abs(d), 1e-30);
        for (std::size_t p = 0; p < 5; ++p)
            for (std::size_t q = p + 1; q < 5; ++q)
                for (std::size_t a = 0; a < 5; ++a)
                    for (std::size_t b = a + 1; b < 5; ++b) {
                        const Complex minor = d(p, a) * d(q, b) - d(p, b) * d(q, a);
                        CHECK(std::abs(minor) <= 1e-12 * scale);
                    }
    }
}

TEST_CASE("random_unitary is deterministic and unitary") {
    const CMatrix a = random_unitary(4, 7);
    const CMatrix b = random_unitary(4, 7);
    CHECK(max_abs(a - b) == 0.0); // bit-identical

    for (std::size_t n : {2u, 8u, 32u}) {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const CMatrix u = random_unitary(n, seed);
            CHECK(max_abs(adjoint(u) * u - CMatrix::identity(n)) <= 1e-12);
        }
    }
}

TEST_CASE("hermitian_eig basics") {
    const auto d = hermitian_eig(diag({3.0, 1.0}));
    CHECK(std::abs(d.values[0] - Complex(3.0, 0.0)) < 1e-14);
    CHECK(std::abs(d.values[1] - Complex(1.0, 0.0)) < 1e-14);
    CHECK(std::abs(d.vectors(0, 0) - Complex(1.0, 0.0)) < 1e-14);
    CHECK(std::abs(d.vectors(1, 1) - Complex(1.0, 0.0)) < 1e-14);

    CMatrix non_herm(2, 2);
    non_herm(0, 1) = 1.0;
    CHECK_THROWS_AS(hermitian_eig(non_herm), NotHermitian);
}

TEST_CASE("hermitian_eig on the rank-one spectral family") {
    // σ(I + ξξ*) = {1+‖ξ‖², 1}
    Rng rng(15);
    for (std::size_t n : {2u, 8u, 32u}) {
        for (int t = 0; t < 10; ++t) {
            CVector xi = rng.gaussian_vector(n);
            const double target = rng.uniform(0.2, 1.5);
            xi *= Complex(target / norm(xi), 0.0);
            const auto d = hermitian_eig(rank_one_update(1.0, xi));
            CHECK(std::abs(d.values[0] - Complex(1.0 + target * target, 0.0)) <= 1e-10);
            std::size_t above_one = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (d.values[k].real() > 1.0 + 1e-10) ++above_one;
                if (k > 0) CHECK(std::abs(d.values[k] - Complex(1.0, 0.0)) <= 1e-10);
            }
            CHECK(above_one == 1);
        }
    }
    // ‖ξ‖ = 0.75 pins the top eigenvalue at 1.5625
    const auto d = hermitian_eig(rank_one_update(1.0, vec({0.75, 0.0, 0.0})));
    CHECK(std::abs(d.values[0] - Complex(1.5625, 0.0)) < 1e-12);
}

TEST_CASE("hermitian_eig reconstruction oracle") {
    Rng rng(16);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 8;
        CMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = rng.gaussian();
            for (std::size_t j = i + 1; j < n; ++j) {
                m(i, j) = rng.gaussian_complex();
                m(j, i) = std::conj(m(i, j));
            }
        }
        const auto d = hermitian_eig(m);
        CMatrix rebuilt(n, n);
        for (std::size_t k = 0; k < n; ++k) {
            const CVector v = d.vectors.col(k);
            CHECK(std::abs(norm(v) - 1.0) <= 1e-12);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    rebuilt(i, j) += d.values[k].real() * v[i] * std::conj(v[j]);
        }
        CHECK(max_abs(rebuilt - m) <= 1e-10 * std::max(1.0, max_abs(m)));
        for (std::size_t k = 0; k + 1 < n; ++k) CHECK(d.values[k].real() >= d.values[k + 1].real());
    }
}

TEST_CASE("generic square root of S matches the rank-one closed form") {
    // Jacobi route: S = VΛV* -> √S = V√ΛV*; closed form: I + ξξ*/(1+a)
    Rng rng(19);
    for (std::size_t n : {2u, 8u, 32u}) {
        for (int t = 0; t < 8; ++t) {
            CVector xi = rng.gaussian_vector(n);
            xi *= Complex(rng.uniform(0.2, 1.5) / norm(xi), 0.0);
            const double a = std::sqrt(1.0 + std::pow(norm(xi), 2));
            const auto d = hermitian_eig(rank_one_update(1.0, xi));
            CMatrix root(n, n);
            for (std::size_t k = 0; k < n; ++k) {
                const CVector v = d.vectors.col(k);
                const double sq = std::sqrt(std::max(0.0, d.values[k].real()));
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t c = 0; c < n; ++c) root(r, c) += sq * v[r] * std::conj(v[c]);
            }
            CHECK(max_abs(root - rank_one_update(Complex(1.0 / (1.0 + a), 0.0), xi)) <= 1e-10);
        }
    }
}

TEST_CASE("eig_2x2") {
    const auto plain = eig_2x2(diag({2.0, 0.5}));
    CHECK(std::abs(plain.values[0] - Complex(2.0, 0.0)) < 1e-14);
    CHECK(std::abs(plain.values[1] - Complex(0.5, 0.0)) < 1e-14);
    CHECK_FALSE(plain.defective);

    CMatrix jordan(2, 2);
    jordan(0, 0) = 1.0;
    jordan(0, 1) = 1.0;
    jordan(1, 1) = 1.0;
    const auto dj = eig_2x2(jordan);
    CHECK(dj.defective);
    CHECK(std::abs(dj.values[0] - Complex(1.0, 0.0)) < 1e-12);
    CHECK(std::abs(dj.values[1] - Complex(1.0, 0.0)) < 1e-12);
    CHECK(dj.vectors.cols() == 1);
    CHECK(norm(jordan * dj.vectors.col(0) - dj.vectors.col(0)) < 1e-12);

    // eigenpairs satisfy the defining relation on random inputs
    Rng rng(17);
    for (int t = 0; t < 100; ++t) {
        CMatrix m(2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) m(i, j) = rng.gaussian_complex();
        const auto d = eig_2x2(m);
        if (d.defective) continue;
        for (std::size_t k = 0; k < 2; ++k) {
            const CVector v = d.vectors.col(k);
            CHECK(norm(m * v - d.values[k] * v) <= 1e-11 * std::max(1.0, max_abs(m)));
        }
    }
}

TEST_CASE("power_iteration") {
    const auto top = power_iteration(diag({2.0, 0.5}), 1e-12, 1000, 3);
    REQUIRE(top.has_value());
    CHECK(std::abs(top->value - Complex(2.0, 0.0)) < 1e-10);

    // matrix of a normal isometry datum with a = 1.25, ‖ξ‖ = 0.75:
    // [[A, ξ],[conj(ξ) row, a]] with A = I + ξξ*/(1+a); dominant value a + ‖ξ‖
    const double a = 1.25;
    CMatrix m(3, 3);
    m(0, 0) = 1.0 + 0.75 * 0.75 / (1.0 + a);
    m(1, 1) = 1.0;
    m(0, 2) = 0.75;
    m(2, 0) = 0.75;
    m(2, 2) = a;
    const auto dom = power_iteration(m, 1e-11, 5000, 5);
    REQUIRE(dom.has_value());
    CHECK(std::abs(dom->value - Complex(2.0, 0.0)) <= 1e-9);

    // no strictly dominant eigenvalue on a generic unitary
    CHECK_FALSE(power_iteration(random_unitary(6, 21), 1e-12, 2000, 9).has_value());
}
