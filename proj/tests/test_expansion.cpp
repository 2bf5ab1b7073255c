#include "support.hpp"

#include "p3fox/errors.hpp"
#include "p3fox/expansion.hpp"
#include "p3fox/verify.hpp"

using namespace p3fox;

namespace {
const Cylinder kD{0.55, 0.71};
}

TEST_CASE("lattice arithmetic on a geometric series") {
    const cplx p(0.3);
    // 1 - x  inverted to budget 3 is 1 + x + x^2 + x^3
    LatticeSeries a(p);
    a.add({0, 0}, 1.0);
    a.add({1, 0}, -1.0);
    const LatticeSeries inv = series_inverse(a, 3.0);
    for (int m = 0; m <= 3; ++m) CHECK_REL(inv.coefficient({m, 0}), 1.0, 1e-15);
    CHECK(inv.coefficient({4, 0}) == 0.0);
    const LatticeSeries prod = series_product(a, inv, 3.0);
    CHECK_REL(prod.coefficient({0, 0}), 1.0, 1e-15);
    for (int m = 1; m <= 3; ++m) CHECK(std::abs(prod.coefficient({m, 0})) < 1e-15);
}

TEST_CASE("derivative and evaluation of lattice monomials") {
    const cplx p(0.25);
    const LatticeSeries s = LatticeSeries::monomial(p, {1, 2}, 3.0);  // 3 x^{1.5}
    const LatticeSeries ds = series_derivative(s);
    CHECK_REL(ds.coefficient({0, 2}), 4.5, 1e-15);
    CHECK_REL(series_eval(s, 4.0), 24.0, 1e-15);
    CHECK_THROWS_AS(series_eval(s, 0.0), DomainError);
    CHECK_THROWS_AS(series_inverse(LatticeSeries(p), 2.0), ZeroLeadError);
}

TEST_CASE("integer p canonicalizes keys") {
    LatticeSeries s(cplx(2.0));
    s.add({1, 1}, 1.0);
    s.add({3, 0}, 2.0);
    CHECK(s.size() == 1);
    CHECK_REL(s.coefficient({3, 0}), 3.0, 1e-15);
}

TEST_CASE("expansion matches the determinant path at small x") {
    // mpmath: u_2(0.98, d = (0.55, 0.71), x = 0.02)
    const LatticeSeries u = expand_u({2, 0.98, kD}, 12.0);
    CHECK_REL(series_eval(u, 0.02), 0.99815492952175901004, 1e-6);
    const double window[] = {0.01, 0.02, 0.03, 0.05};
    for (int n = 0; n <= 3; ++n) CHECK(checks::expansion_error({n, 0.98, kD}, 12.0, window) <= 1e-5);
}

TEST_CASE("residual is at the rounding floor") {
    const ExpansionResult r = expand_u_detailed({2, 0.98, kD}, 12.0);
    CHECK(r.max_residual <= 1e-12);
    CHECK(r.g_limit > 0.0);
    CHECK(checks::expansion_residual({1, 0.98, kD}, 12.0) <= 1e-12);
}

TEST_CASE("leading coefficient and lattice parity") {
    for (int n = 0; n <= 3; ++n) {
        CAPTURE(n);
        CHECK(checks::expansion_lead_error({n, 0.98, kD}, 4.0) <= 1e-13);
        CHECK(checks::expansion_parity_violations({n, 0.98, kD}, 6.0) == 0);
    }
}

TEST_CASE("log resonance is reported") {
    CHECK_THROWS_AS(expand_u({0, 6.0, kD}, 12.0), ResonanceError);
    CHECK_THROWS_AS(expand_u({0, 0.5, kD}, -1.0), DomainError);
}
