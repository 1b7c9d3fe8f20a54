#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hyperball/ball.hpp"
#include "hyperball/generate.hpp"
#include "hyperball/group.hpp"

using namespace hyperball;

namespace {

CVector vec(std::initializer_list<Complex> entries) { return CVector(std::vector<Complex>(entries)); }

} // namespace

TEST_CASE("ball admission") {
    CHECK_NOTHROW(BallPoint(vec({0.5, 0.5})));
    CHECK_THROWS_AS(BallPoint(vec({1.0, 0.0})), OutOfBall);
    CHECK_THROWS_AS(BallPoint(vec({0.8, 0.8})), OutOfBall);
}

TEST_CASE("t_operator") {
    CHECK(max_abs(t_operator(CVector(3)) - CMatrix::identity(3)) == 0.0);

    const CVector x0 = vec({0.6, 0.0});
    const CMatrix t = t_operator(x0);
    CHECK(norm(t * x0 - x0) < 1e-15);               // coefficient 0.36/1.8 + 0.8 = 1
    const CVector y = vec({0.0, 1.0});
    CHECK(norm(t * y - Complex(0.8, 0.0) * y) < 1e-15); // √(1−0.36) on ⟨x0⟩^⊥

    CHECK_THROWS_AS(t_operator(vec({1.0, 0.5})), OutOfBall);
}

TEST_CASE("mobius_apply") {
    const CVector x0 = vec({0.6, 0.0});
    const MobiusMap f = MobiusMap::translation(x0);
    CHECK(mobius_apply(f, BallPoint(x0)).norm() < 1e-15);         // f_{x0}(x0) = 0
    CHECK(norm(mobius_apply(f, BallPoint::origin(2)).v() + x0) < 1e-15); // f_{x0}(0) = −x0

    // ball preservation sweep
    Rng rng(31);
    for (std::size_t n : {2u, 8u, 32u}) {
        for (int t = 0; t < 1000; ++t) {
            const BallPoint base = random_ball_point(n, 0.95, rng);
            const BallPoint x = random_ball_point(n, 0.95, rng);
            const MobiusMap m(random_unitary(n, rng), base.v());
            CHECK(mobius_apply(m, x).norm() < 1.0);
        }
    }
}

TEST_CASE("mobius_boundary_apply") {
    Rng rng(32);
    const std::size_t n = 4;

    // identity map fixes every unit vector
    const MobiusMap id = MobiusMap::translation(CVector(n));
    CVector u = rng.gaussian_vector(n);
    u *= Complex(1.0 / norm(u), 0.0);
    CHECK(norm(mobius_boundary_apply(id, u) - u) < 1e-12);

    // a unitary (x0 = 0) preserves the sphere
    const MobiusMap rot(random_unitary(n, rng), CVector(n));
    const CVector img = mobius_boundary_apply(rot, u);
    CHECK(std::abs(norm(img) - 1.0) < 1e-12);

    // generic translations keep the sphere within the stated tolerance
    for (int t = 0; t < 200; ++t) {
        const BallPoint base = random_ball_point(n, 0.9, rng);
        const MobiusMap m(random_unitary(n, rng), base.v());
        CVector w = rng.gaussian_vector(n);
        w *= Complex(1.0 / norm(w), 0.0);
        CHECK(std::abs(norm(mobius_boundary_apply(m, w)) - 1.0) <= 1e-9);
    }

    // the map of a normal isometry datum fixes ξ/‖ξ‖ on the sphere
    CVector xi(n);
    xi[0] = 0.75;
    const GElement nrm(0.0, CMatrix::identity(n), xi);
    const MobiusMap fm = to_mobius(nrm);
    CVector unit_xi = xi;
    unit_xi *= Complex(1.0 / norm(xi), 0.0);
    CHECK(norm(mobius_boundary_apply(fm, unit_xi) - unit_xi) <= 1e-12);

    CHECK_THROWS_AS(mobius_boundary_apply(id, vec({0.5, 0.0, 0.0, 0.0})), OutOfBall);
}

TEST_CASE("mobius map guards") {
    CMatrix skew = CMatrix::identity(2);
    skew(0, 1) = 0.05;
    CHECK_THROWS_AS(MobiusMap(skew, CVector(2)), NotUnitary);

    // a base point grazing the sphere collapses the denominator at the
    // aligned boundary direction
    CVector near_sphere(2);
    near_sphere[0] = 1.0 - 1e-15;
    const MobiusMap grazing = MobiusMap::translation(near_sphere);
    CVector aligned(2);
    aligned[0] = 1.0;
    CHECK_THROWS_AS(mobius_boundary_apply(grazing, aligned), NearSingular);
}

TEST_CASE("poincare_distance") {
    CHECK(poincare_distance(0.0, 0.0) == 0.0);
    CHECK(std::abs(poincare_distance(0.0, 0.6) - std::log(2.0)) < 1e-15);
    Rng rng(33);
    for (int t = 0; t < 200; ++t) {
        const Complex z = std::polar(0.95 * rng.uniform(), rng.uniform(0.0, 2.0 * M_PI));
        const Complex w = std::polar(0.95 * rng.uniform(), rng.uniform(0.0, 2.0 * M_PI));
        CHECK(std::abs(poincare_distance(z, w) - poincare_distance(w, z)) < 1e-12);
    }
    CHECK_THROWS_AS(poincare_distance(Complex(1.2, 0.0), 0.0), OutOfBall);
}

TEST_CASE("caratheodory closed form") {
    Rng rng(34);
    const BallPoint x = random_ball_point(5, 0.9, rng);
    CHECK(caratheodory_distance(x, x) < 1e-15);

    // C(0, y) = atanh‖y‖; ln 2 at ‖y‖ = 0.6
    const BallPoint y(vec({0.6, 0.0, 0.0, 0.0, 0.0}));
    CHECK(std::abs(caratheodory_distance(BallPoint::origin(5), y) - std::log(2.0)) <= 1e-12);

    for (int t = 0; t < 200; ++t) {
        const BallPoint p = random_ball_point(5, 0.9, rng);
        CHECK(std::abs(caratheodory_distance(BallPoint::origin(5), p) - std::atanh(p.norm())) <=
              1e-12);
    }
}

TEST_CASE("caratheodory isometry invariance") {
    Rng rng(35);
    for (std::size_t n : {2u, 8u}) {
        for (int t = 0; t < 200; ++t) {
            const GElement f = random_element(Family::Uniform, n, rng);
            const BallPoint x = random_ball_point(n, 0.8, rng);
            const BallPoint y = random_ball_point(n, 0.8, rng);
            const double d0 = caratheodory_distance(x, y);
            const double d1 = caratheodory_distance(apply(f, x), apply(f, y));
            CHECK(std::abs(d1 - d0) <= 1e-9);
        }
    }
}

TEST_CASE("caratheodory metric axioms") {
    Rng rng(36);
    for (int t = 0; t < 300; ++t) {
        const BallPoint x = random_ball_point(6, 0.9, rng);
        const BallPoint y = random_ball_point(6, 0.9, rng);
        const BallPoint z = random_ball_point(6, 0.9, rng);
        const double xy = caratheodory_distance(x, y);
        CHECK(xy >= 0.0);
        CHECK(std::abs(xy - caratheodory_distance(y, x)) <= 1e-9);
        CHECK(caratheodory_distance(x, z) <= xy + caratheodory_distance(y, z) + 1e-9);
    }
}

TEST_CASE("supremum oracle") {
    const BallPoint x0 = BallPoint::origin(3);
    CHECK(caratheodory_lower_bound(x0, x0, 10, 1) == 0.0);

    const BallPoint y(vec({0.6, 0.0, 0.0}));
    CHECK(std::abs(caratheodory_lower_bound(x0, y, 10, 2) - std::log(2.0)) <= 1e-12);

    Rng rng(37);
    for (std::size_t n : {2u, 8u, 32u}) {
        for (int t = 0; t < 100; ++t) {
            const BallPoint a = random_ball_point(n, 0.9, rng);
            const BallPoint b = random_ball_point(n, 0.9, rng);
            const double closed = caratheodory_distance(a, b);
            const double bound = caratheodory_lower_bound(a, b, 8, rng.next_u64());
            CHECK(bound <= closed + 1e-9);
            CHECK(closed - bound <= 1e-9);
        }
    }
}

TEST_CASE("restriction to a complex line matches the disk metric") {
    Rng rng(38);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 6;
        CVector e = rng.gaussian_vector(n);
        e *= Complex(1.0 / norm(e), 0.0);
        const Complex z = std::polar(0.9 * rng.uniform(), rng.uniform(0.0, 2.0 * M_PI));
        const Complex w = std::polar(0.9 * rng.uniform(), rng.uniform(0.0, 2.0 * M_PI));
        CVector ze = e, we = e;
        ze *= z;
        we *= w;
        CHECK(std::abs(caratheodory_distance(BallPoint(ze), BallPoint(we)) -
                       poincare_distance(z, w)) <= 1e-10);
    }
}
