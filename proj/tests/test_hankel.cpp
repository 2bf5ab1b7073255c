#include "support.hpp"

#include <array>
#include <random>

#include "p3fox/errors.hpp"
#include "p3fox/hankel.hpp"
#include "p3fox/verify.hpp"

using namespace p3fox;

namespace {
const Cylinder kD{0.55, 0.71};
}

TEST_CASE("determinant of small matrices") {
    CHECK(determinant(ComplexMatrix::identity(4)) == 1.0);
    const ComplexMatrix m(2, 2, {cplx(1, 2), 3.0, cplx(0, -1), 4.0});
    CHECK_REL(determinant(m), cplx(1, 2) * 4.0 - 3.0 * cplx(0, -1), 1e-15);
    CHECK(determinant(ComplexMatrix(0, 0)) == 1.0);
    CHECK_THROWS_AS(ComplexMatrix(2, 2, {1.0, 2.0, 3.0}), ShapeError);
    CHECK_THROWS_AS(determinant(ComplexMatrix(2, 3)), ShapeError);
}

TEST_CASE("Hankel determinants match mpmath values") {
    // tests/oracle/piii_oracle.py
    CHECK_REL(delta(2, 0.98, 1.0, kD), 0.46414871512315387139, 1e-13);
    CHECK_REL(delta(3, 7.0, 1e-3, kD), 4.1393140537646797946e+33, 1e-10);
    CHECK_REL(delta(3, 1.0, 1e-3, kD), 8886221959306.8678151, 1e-10);
    CHECK_REL(delta(3, -7.0, 1e-3, kD), 1.9241609723355275091e+33, 1e-10);
}

TEST_CASE("small orders and the tau convention") {
    CHECK(delta(0, 0.7, 1.2, kD) == 1.0);
    CHECK_REL(delta(1, 0.7, 1.2, kD), cylinder(0.35, 1.2, kD), 1e-15);
    CHECK_THROWS_AS(delta(-1, 0.7, 1.2, kD), RangeError);
    const double x = 1.3;
    CHECK_REL(tau(3, 0.98, x, kD), -std::pow(x, 6) * delta(3, 0.98, x, kD), 1e-14);
    CHECK_REL(tau(2, 0.98, x, kD), -x * x * delta(2, 0.98, x, kD), 1e-14);
}

TEST_CASE("delta_derivative agrees with finite differences") {
    CHECK(checks::delta_derivative_error(20240611, 20) <= 1e-7);
    CHECK_THROWS_AS(delta_derivative(2, 0.5, 0.0, kD), DomainError);
}

TEST_CASE("Toda equation for tau_n") {
    const int ns[] = {1, 2, 3};
    const double xs[] = {0.8, 1.0, 1.5};
    CHECK(checks::toda_error(ns, xs, 0.98, kD) <= 1e-5);
}

TEST_CASE("Laguerre Hankel determinant closed form") {
    for (const double g : {0.3, 1.7, 2.5})
        for (int n = 1; n <= 6; ++n) CHECK_REL(laguerre_hankel_numeric(g, n), laguerre_hankel_closed(g, n), 1e-9);
    CHECK_REL(laguerre_moment(0.3, 2), p3fox::gamma(cplx(3.3)), 1e-15);
    CHECK_THROWS_AS(laguerre_moment(-1.5, 0), DomainError);
}

TEST_CASE("Gauss-Laguerre rule integrates moments exactly") {
    for (const double g : {0.0, 0.3, 2.5}) {
        const QuadratureRule rule = gauss_laguerre(8, g);
        for (int k = 0; k < 16; ++k) {
            double sum = 0.0;
            for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * std::pow(rule.nodes[i], k);
            CHECK_REL(sum, p3fox::gamma(cplx(g + k + 1.0)), 1e-11);
        }
    }
    CHECK_THROWS_AS(gauss_laguerre(0, 0.5), DomainError);
}

TEST_CASE("Desnanot-Jacobi, Andreief and Vandermonde identities") {
    CHECK(checks::desnanot_jacobi_error(20240611, 100) <= 1e-11);
    CHECK(checks::andreief_error(3) <= 1e-8);
    CHECK(checks::vandermonde_error(20240611, 100) <= 1e-11);
    const ComplexMatrix m = ComplexMatrix::identity(3);
    CHECK_THROWS_AS(desnanot_jacobi_residual(m, 1, 1), ShapeError);
    CHECK_THROWS_AS(andreief_residual(4, 0.5), DomainError);
}

TEST_CASE("Delta_1 small-x law") {
    CHECK(checks::delta1_small_x_error(0.98, 1e-4, kD) <= 1e-3);
    CHECK(checks::delta1_small_x_error(3.5, 1e-4, kD) <= 1e-3);
}
