#include "support.hpp"

#include "p3fox/asymptotics.hpp"
#include "p3fox/errors.hpp"
#include "p3fox/verify.hpp"

using namespace p3fox;

namespace {
const Cylinder kD{0.55, 0.71};
constexpr double kPi = 3.14159265358979323846;
}  // namespace

TEST_CASE("power_p and the critical index") {
    CHECK(power_p(0, Rational(3), 2) == Rational(-3));
    CHECK(power_p(1, Rational(3), 2) == Rational(-2));
    CHECK(power_p(2, Rational(3), 2) == Rational(3));
    CHECK(critical_r(Rational(3), 2) == 0);
    CHECK(critical_r(Rational(1), 2) == 1);
    CHECK(critical_r(Rational(7), 2) == 0);
    CHECK(critical_r(Rational(-7), 2) == 2);
    CHECK_THROWS_AS(power_p(3, 1.0, 2), RangeError);
    CHECK_THROWS_AS(critical_r(Rational(2), 2), BoundaryAlphaError);
}

TEST_CASE("critical_r equals the brute-force argmin") {
    CHECK(checks::critical_r_mismatches(8, 400) == 0);
    for (int n = 0; n <= 6; ++n)
        for (int k = -60; k <= 60; ++k) {
            const Rational a(4 * k + 1, 5);  // never on an even-integer edge
            CHECK(critical_r(a, n) == critical_r_brute(a, n));
        }
}

TEST_CASE("piecewise exponent and coefficient match their compositions") {
    CHECK(checks::exponent_mismatches(8, 400) == 0);
    CHECK(checks::q_composition_error(8, 400, kD) <= 1e-10);
    for (int n = 0; n <= 5; ++n)
        for (int k = -70; k <= 70; ++k) {
            const Rational a(2 * k + 1, 3);
            if (a.den() == 1) continue;
            CHECK(exponent_e(a, n) == exponent_e_composed(a, n));
        }
    CHECK_THROWS_AS(exponent_e(Rational(0), 1), BoundaryAlphaError);
}

TEST_CASE("regime records for simple families") {
    const Regime r = u_regime({0, 6.0, kD});
    CHECK(r.case_label == 1);
    CHECK_REL(r.exponent, 1.0, 1e-15);
    CHECK_REL(r.coefficient, -0.5, 1e-15);

    const Regime cot = u_regime({0, 1.0, Cylinder{1.0, 0.0}});  // u_0 = -cot x
    CHECK(cot.case_label == 4);
    CHECK_REL(cot.exponent, -1.0, 1e-15);
    CHECK_REL(cot.coefficient, -0.5, 1e-15);

    // Delta_1 = C_{alpha/2} ~ -d2 Gamma(alpha/2) / pi (x/2)^{-alpha/2}
    const Regime d1 = delta_leading({1, 0.98, kD});
    CHECK(d1.r_c == 0);
    CHECK_REL(d1.exponent, -0.49, 1e-15);
    CHECK_REL(d1.coefficient, -kD.d2 * p3fox::gamma(cplx(0.49)) / kPi, 1e-14);

    CHECK_THROWS_AS(u_regime({0, 6.0, Cylinder{1.0, 0.0}}), DegenerateCoefficientError);
    CHECK_THROWS_AS(u_regime({0, 1.0, Cylinder{0.0, 0.0}}), DegenerateCoefficientError);
}

TEST_CASE("Delta_n ratio test converges as x halves") {
    for (const double a : {7.0, 1.0, -7.0}) {
        const SolutionParams p{3, a, kD};
        double prev = 1.0;
        for (const double x : {1e-3, 5e-4, 2.5e-4}) {
            const double dev = std::abs(checks::delta_ratio(p, x) - 1.0);
            CAPTURE(a);
            CAPTURE(x);
            CHECK(dev <= 1e-2);
            CHECK(dev <= prev);
            prev = dev;
        }
    }
}

TEST_CASE("u_n ratio test, one point per case") {
    struct Point {
        int n;
        double alpha;
        Cylinder d;
    };
    const Point points[] = {{1, 7.0, kD}, {1, 2.95, kD}, {1, 0.95, kD}, {2, 0.98, Cylinder{1.0, 0.0}}, {1, -5.5, kD}};
    for (const auto& pt : points) {
        CAPTURE(pt.n);
        CAPTURE(pt.alpha);
        CHECK(std::abs(checks::u_ratio({pt.n, pt.alpha, pt.d}, 1e-3) - 1.0) <= 1e-2);
    }
    // mpmath: u_2(0.98, d = (0.55, 0.71), x = 1e-3) is 1.0101 times the leading term.
    const SolutionParams p{2, 0.98, kD};
    CHECK_REL(u_n_determinant(p, 1e-3).u, 0.87522186249949766657, 1e-12);
    CHECK(std::abs(checks::u_ratio(p, 1e-3) - 1.0101090846576) <= 1e-6);
}

TEST_CASE("exponent scan for n = 5 has breakpoints only at even integers") {
    CHECK(checks::scan_mismatches(5, -12, 12) == 0);
    const auto samples = exponent_scan(5, Rational(-12), Rational(12), Rational(1, 10));
    CHECK(samples.size() == 241);
    for (const auto& s : samples)
        if (s.boundary) CHECK((s.alpha.den() == 1 && s.alpha.num() % 2 == 0));
    CHECK_THROWS_AS(exponent_scan(5, Rational(1), Rational(0), Rational(1, 10)), RangeError);
}
