#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hyperball/generate.hpp"
#include "hyperball/group.hpp"

using namespace hyperball;

namespace {

CVector vec(std::initializer_list<Complex> entries) { return CVector(std::vector<Complex>(entries)); }

} // namespace

TEST_CASE("from_point") {
    const GElement id = from_point(BallPoint::origin(2));
    CHECK(norm(id.xi()) == 0.0);
    CHECK(id.a() == 1.0);
    CHECK(max_abs(id.matrix() - CMatrix::identity(3)) == 0.0);

    const GElement g = from_point(BallPoint(vec({0.6, 0.0})));
    CHECK(std::abs(g.a() - 1.25) < 1e-15);
    CHECK(norm(g.xi() - vec({-0.75, 0.0})) < 1e-15);
    CHECK(std::abs(g.a() * g.a() - 1.5625) < 1e-15); // a² = 1 + ‖ξ‖²

    // φ(from_point(x0)) = f_{x0} pointwise
    Rng rng(41);
    for (int t = 0; t < 100; ++t) {
        const BallPoint x0 = random_ball_point(4, 0.85, rng);
        const BallPoint x = random_ball_point(4, 0.85, rng);
        const GElement e = from_point(x0);
        const MobiusMap f = MobiusMap::translation(x0.v());
        CHECK(norm(apply(e, x).v() - mobius_apply(f, x).v()) <= 1e-10);
    }
}

TEST_CASE("from_unitary") {
    CHECK(max_abs(from_unitary(CMatrix::identity(3)).matrix() - CMatrix::identity(4)) == 0.0);

    Rng rng(42);
    const CMatrix u = random_unitary(4, 43);
    const GElement g = from_unitary(u);
    CHECK(preserves_form(g.matrix(), 1e-10));
    for (int t = 0; t < 50; ++t) {
        const BallPoint x = random_ball_point(4, 0.9, rng);
        CHECK(norm(apply(g, x).v() - u * x.v()) <= 1e-12);
    }

    CMatrix bad = CMatrix::identity(3);
    bad(0, 0) = 2.0;
    CHECK_THROWS_AS(from_unitary(bad), NotUnitary);
}

TEST_CASE("canonical element construction") {
    CHECK(max_abs(GElement(0.0, CMatrix::identity(2), CVector(2)).matrix() -
                  CMatrix::identity(3)) == 0.0);

    const GElement g(0.0, CMatrix::identity(2), vec({0.75, 0.0}));
    CHECK(std::abs(g.matrix()(2, 2) - Complex(1.25, 0.0)) < 1e-15);

    // A(ξ) = aξ and A = I on ⟨ξ⟩^⊥
    Rng rng(44);
    for (int t = 0; t < 50; ++t) {
        const GElement e = random_element(Family::Uniform, 5, rng);
        const CMatrix a = e.scaling();
        CHECK(norm(a * e.xi() - Complex(e.a(), 0.0) * e.xi()) <= 1e-12 * (1.0 + norm(e.xi())));
        CHECK(max_abs(a * e.scaling_inverse() - CMatrix::identity(5)) <= 1e-13);
        CHECK(preserves_form(e.matrix(), 1e-10));
    }

    CMatrix skewed = CMatrix::identity(2);
    skewed(0, 1) = 0.1;
    CHECK_THROWS_AS(GElement(0.0, skewed, CVector(2)), NotUnitary);
}

TEST_CASE("compose and inverse") {
    Rng rng(45);
    for (std::size_t n : {2u, 8u}) {
        for (int t = 0; t < 40; ++t) {
            const GElement g = random_element(Family::Uniform, n, rng);
            const GElement gi = inverse(g);
            CHECK(max_abs(g.matrix() * gi.matrix() - CMatrix::identity(n + 1)) <= 1e-11);
            CHECK(max_abs(gi.matrix() * g.matrix() - CMatrix::identity(n + 1)) <= 1e-11);
            CHECK(max_abs(compose(g, gi).matrix() - CMatrix::identity(n + 1)) <= 1e-10);

            // the center commutes through compose
            const GElement c = center(n, rng.uniform(0.0, 2.0 * M_PI));
            CHECK(max_abs(compose(c, g).matrix() - compose(g, c).matrix()) <= 1e-12);
        }
    }

    CHECK(max_abs(inverse(identity_element(3)).matrix() - CMatrix::identity(4)) == 0.0);

    const CMatrix u = random_unitary(3, 46);
    CHECK(max_abs(inverse(from_unitary(u)).matrix() - from_unitary(adjoint(u)).matrix()) <= 1e-15);

    // φ(inverse(from_point(x0)))(0) = x0
    Rng rng2(47);
    for (int t = 0; t < 50; ++t) {
        const BallPoint x0 = random_ball_point(3, 0.9, rng2);
        const GElement e = inverse(from_point(x0));
        CHECK(norm(apply(e, BallPoint::origin(3)).v() - x0.v()) <= 1e-12);
    }
}

TEST_CASE("homomorphism pointwise") {
    Rng rng(48);
    for (std::size_t n : {2u, 8u}) {
        for (int t = 0; t < 50; ++t) {
            const GElement s = random_element(Family::Uniform, n, rng);
            const GElement g = random_element(Family::Uniform, n, rng);
            const GElement sg = compose(s, g);
            for (int probe = 0; probe < 5; ++probe) {
                const BallPoint x = random_ball_point(n, 0.8, rng);
                CHECK(norm(apply(sg, x).v() - apply(s, apply(g, x)).v()) <= 1e-9);
            }
        }
    }
}

TEST_CASE("adjoint closed form") {
    const CMatrix u = random_unitary(3, 49);
    const FormMatrix a = adjoint_g(from_unitary(u));
    CMatrix want = CMatrix::identity(4);
    const CMatrix us = adjoint(u);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) want(i, j) = us(i, j);
    CHECK(max_abs(a.M - want) == 0.0);

    Rng rng(50);
    for (int t = 0; t < 60; ++t) {
        const GElement g = random_element(Family::Uniform, 4, rng);
        CHECK(max_abs(adjoint_g(g).M - adjoint(g.matrix())) <= 1e-12);
    }

    // T = make(0, I, ξ) is self-adjoint
    const GElement t1(0.0, CMatrix::identity(3), vec({0.3, Complex(0.0, 0.2), 0.1}));
    CHECK(max_abs(adjoint_g(t1).M - t1.matrix()) <= 1e-15);
}

TEST_CASE("preserves_form") {
    Rng rng(51);
    for (int t = 0; t < 40; ++t) {
        const GElement g = random_element(Family::Uniform, 3, rng);
        CHECK(preserves_form(g.matrix(), 1e-10));
    }

    CMatrix stretch = CMatrix::identity(4);
    stretch(3, 3) = 2.0;
    CHECK_FALSE(preserves_form(stretch, 1e-10));

    CMatrix phase = CMatrix::identity(4);
    phase *= std::polar(1.0, 1.234);
    CHECK(preserves_form(phase, 1e-12)); // the center lies in G
}

TEST_CASE("canonicalize") {
    const GElement id = canonicalize(CMatrix::identity(4));
    CHECK(id.theta() == 0.0);
    CHECK(norm(id.xi()) == 0.0);
    CHECK(max_abs(id.U() - CMatrix::identity(3)) == 0.0);

    CMatrix stretch = CMatrix::identity(4);
    stretch(3, 3) = 2.0;
    CHECK_THROWS_AS(canonicalize(stretch), FormViolation);

    Rng rng(52);
    for (std::size_t n : {2u, 8u, 32u}) {
        for (int t = 0; t < 25; ++t) {
            const GElement g = random_element(Family::Uniform, n, rng);
            const CMatrix m = g.matrix();
            const GElement back = canonicalize(m);
            CHECK(max_abs(back.matrix() - m) <= 1e-10);
            CHECK(std::abs(back.a() - g.a()) <= 1e-11);
            CHECK(norm(back.xi() - g.xi()) <= 1e-10);
        }
    }
}

TEST_CASE("mobius factorization") {
    const CMatrix u = random_unitary(3, 53);
    const MobiusMap mu = to_mobius(from_unitary(u));
    CHECK(max_abs(mu.U() - u) == 0.0);
    CHECK(norm(mu.x0()) == 0.0);

    Rng rng(54);
    for (int t = 0; t < 50; ++t) {
        const BallPoint x0 = random_ball_point(3, 0.9, rng);
        const GElement e = from_point(x0);
        CHECK(norm(apply(e, BallPoint::origin(3)).v() + x0.v()) <= 1e-12); // f(0) = −x0

        // projective evaluation agrees with the U ∘ f_{x0} factorization
        const GElement g = random_element(Family::Uniform, 3, rng);
        const MobiusMap f = to_mobius(g);
        const BallPoint x = random_ball_point(3, 0.85, rng);
        CHECK(norm(apply(g, x).v() - mobius_apply(f, x).v()) <= 1e-10);
    }

    // multiplying by the center leaves φ untouched
    for (int t = 0; t < 30; ++t) {
        const GElement g = random_element(Family::Uniform, 4, rng);
        const GElement cg = compose(center(4, rng.uniform(0.0, 2.0 * M_PI)), g);
        const BallPoint x = random_ball_point(4, 0.8, rng);
        CHECK(norm(apply(cg, x).v() - apply(g, x).v()) <= 1e-10);
    }
}

TEST_CASE("unitary/self-adjoint split") {
    const CMatrix u = random_unitary(3, 55);
    const auto [v0, t0] = unitary_selfadjoint_split(from_unitary(u));
    CHECK(max_abs(v0.matrix() - from_unitary(u).matrix()) == 0.0);
    CHECK(max_abs(t0.matrix() - CMatrix::identity(4)) == 0.0);

    Rng rng(56);
    for (int t = 0; t < 50; ++t) {
        const GElement g = random_element(Family::Uniform, 4, rng);
        const auto [v, t1] = unitary_selfadjoint_split(g);
        CHECK(norm(v.xi()) == 0.0);
        CHECK(max_abs(adjoint_g(t1).M - t1.matrix()) <= 1e-15);
        CHECK(max_abs(compose(v, t1).matrix() - g.matrix()) <= 1e-10);
    }
}

TEST_CASE("defining constraint in raw coordinates") {
    // (UA)*(UA) = I + ⟨·, A*(Uξ)… with the canonical data the right side is I + ξξ*
    Rng rng(57);
    for (int t = 0; t < 60; ++t) {
        const GElement g = random_element(Family::Uniform, 5, rng);
        const CMatrix ua = g.ua();
        CHECK(max_abs(adjoint(ua) * ua - rank_one_update(1.0, g.xi())) <= 1e-10);
    }
}
