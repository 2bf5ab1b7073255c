#include "support.hpp"

#include "p3fox/errors.hpp"
#include "p3fox/special.hpp"
#include "p3fox/verify.hpp"

using namespace p3fox;

namespace {
const Cylinder kD{0.55, 0.71};
constexpr double kPi = 3.14159265358979323846;
}  // namespace

// Reference values from tests/oracle/piii_oracle.py (mpmath, 40 digits).
TEST_CASE("bessel and gamma match mpmath values") {
    CHECK_REL(bessel_j(0.49, 1.3), 0.6759103884750058027, 1e-14);
    CHECK_REL(cylinder(0.49, 1.0, kD), 0.07147371170261328153, 1e-13);
    CHECK_REL(p3fox::gamma(cplx(2.3)), 1.1667119051981603450, 1e-15);
    CHECK_REL(p3fox::gamma(cplx(-1.5, 0.5)), cplx(0.93791666278788505097, 0.34920566814780486859), 1e-14);
    const cplx nu(0.3, 0.4), z(1.1, -0.7);
    CHECK_REL(bessel_j(nu, z), cplx(1.3126561097503994065, 0.030665462445845599593), 1e-14);
    CHECK_REL(bessel_y(nu, z), cplx(-0.066853505008294715749, -1.1583130467846756909), 1e-13);
}

TEST_CASE("sin_pi and cos_pi are exact at integers and half-integers") {
    for (int k = -6; k <= 6; ++k) {
        CHECK(sin_pi(cplx(k)) == 0.0);
        CHECK(cos_pi(cplx(k + 0.5)) == 0.0);
        CHECK(std::abs(cos_pi(cplx(k))) == 1.0);
    }
    CHECK_REL(sin_pi(cplx(0.25, 0.3)), std::sin(kPi * cplx(0.25, 0.3)), 1e-15);
}

TEST_CASE("gamma poles and the reciprocal") {
    CHECK_THROWS_AS(p3fox::gamma(cplx(0.0)), PoleError);
    CHECK_THROWS_AS(p3fox::gamma(cplx(-3.0)), PoleError);
    CHECK(std::abs(rgamma(cplx(-3.0))) < 1e-15);
    CHECK_REL(rgamma(cplx(4.0)), 1.0 / 6.0, 1e-15);
    CHECK_REL(p3fox::gamma(cplx(0.5)) * p3fox::gamma(cplx(0.5)), kPi, 1e-15);
}

TEST_CASE("gamma recurrence and reflection hold on a complex grid") {
    for (double re = -4.65; re < 6.0; re += 0.9)
        for (double im = -3.0; im <= 3.0; im += 1.5) {
            const cplx z(re, im);
            CHECK_REL(p3fox::gamma(z + 1.0), z * p3fox::gamma(z), 1e-13);
            CHECK_REL(p3fox::gamma(z) * p3fox::gamma(1.0 - z), kPi / sin_pi(z), 1e-13);
        }
    CHECK(checks::gamma_recurrence_error() <= 1e-12);
}

TEST_CASE("gamma_product multiplies consecutive gammas") {
    const cplx z(0.7, 0.2);
    cplx want = 1.0;
    for (int j = 0; j < 5; ++j) want *= p3fox::gamma(z + double(j));
    CHECK_REL(gamma_product(z, 5), want, 1e-14);
    CHECK(gamma_product(z, 0) == 1.0);
    CHECK_THROWS_AS(gamma_product(z, -1), RangeError);
    CHECK_THROWS_AS(gamma_product(cplx(-2.0), 3), PoleError);
}

TEST_CASE("bessel special cases") {
    CHECK(bessel_j(0.0, 0.0) == 1.0);
    CHECK(bessel_j(1.5, 0.0) == 0.0);
    CHECK_THROWS_AS(bessel_j(-0.5, 0.0), DomainError);
    CHECK_REL(bessel_j(-3.0, 2.2), -bessel_j(3.0, 2.2), 1e-15);
    CHECK_THROWS_AS(bessel_y(2.0, 1.0), IntegerOrderError);
    // J_{1/2}(x) = sqrt(2/(pi x)) sin x
    CHECK_REL(bessel_j(0.5, 1.7), std::sqrt(2.0 / (kPi * 1.7)) * std::sin(1.7), 1e-15);
    CHECK_REL(bessel_y(0.5, 1.7), -std::sqrt(2.0 / (kPi * 1.7)) * std::cos(1.7), 1e-14);
}

TEST_CASE("Wronskian, recurrence and derivative identities") {
    for (const double nu : {0.3, 1.7, -2.4})
        for (const double x : {0.4, 1.0, 3.5}) {
            const cplx w = bessel_j(nu + 1.0, x) * bessel_y(nu, x) - bessel_j(nu, x) * bessel_y(nu + 1.0, x);
            CHECK_REL(w, 2.0 / (kPi * x), 1e-12);
            const cplx lhs = cylinder(nu - 1.0, x, kD) + cylinder(nu + 1.0, x, kD);
            CHECK_REL(lhs, 2.0 * nu / x * cylinder(nu, x, kD), 1e-12);
        }
    CHECK(checks::wronskian_error() <= 1e-10);
    CHECK(checks::derivative_identity_error(20240611, 50) <= 1e-12);
}

TEST_CASE("small-x power law of J") {
    CHECK(checks::bessel_small_x_error() <= 1e-10);
}
