#include "support.hpp"

#include <array>

#include "p3fox/errors.hpp"
#include "p3fox/ode.hpp"
#include "p3fox/verify.hpp"

using namespace p3fox;

namespace {
const Cylinder kD{0.55, 0.71};
const Cylinder kJ{1.0, 0.0};
constexpr double kPi = 3.14159265358979323846;
}  // namespace

TEST_CASE("one step follows -cot") {
    const ChartState s = make_state(u0(1.0, 1.0, kJ), {1.0, 1.0});
    const StepResult r = rk_step(s, 0.01);
    CHECK_REL(r.state.y, -1.0 / std::tan(1.01), 1e-11);
    CHECK(r.error < 1e-9);
}

TEST_CASE("chart switch is an involution and make_state inverts large u") {
    const ChartState s = make_state({1.0, 0.5, 0.3}, {0.7, 1.1});
    CHECK(s.chart == Chart::U);
    const ChartState v = chart_switch(s);
    CHECK(v.chart == Chart::V);
    CHECK_REL(v.y, 2.0, 1e-15);
    CHECK_REL(v.params.alpha, -1.1, 1e-15);
    CHECK_REL(v.params.beta, -0.7, 1e-15);
    const ChartState back = chart_switch(v);
    CHECK_REL(back.y, s.y, 1e-15);
    CHECK_REL(back.dy, s.dy, 1e-15);
    CHECK(make_state({1.0, 5.0, 1.0}, {0.7, 1.1}).chart == Chart::V);
    CHECK_THROWS_AS(chart_switch(ChartState{1.0, 0.0, 1.0, Chart::U, {}}), ZeroError);
}

TEST_CASE("segment distance to the origin") {
    CHECK(segment_distance_to_origin(1.0, 2.0) == doctest::Approx(1.0));
    CHECK(segment_distance_to_origin(cplx(-1, 1), cplx(1, 1)) == doctest::Approx(1.0));
    CHECK(segment_distance_to_origin(-1.0, 1.0) == doctest::Approx(0.0));
}

TEST_CASE("trace crosses the poles of -cot") {
    const checks::CotTrace t = checks::cot_trace(1e-9);
    CHECK(t.max_error <= 1e-7);
    CHECK(t.accepted > 0);
    CHECK(double(t.rejected) / double(t.accepted + t.rejected) <= 0.5);

    const ChartState s = make_state(u0(0.5, 1.0, kJ), {1.0, 1.0});
    const std::array<cplx, 1> path = {6.0};
    const Trajectory tr = trace(s, path, 1e-9);
    CHECK(tr.switches == 3);  // into V near pi, back to U, into V near 2 pi
    const JetPoint end = to_u_jet(tr.samples[tr.waypoint_samples.back()]);
    CHECK_REL(end.x, 6.0, 1e-15);
    CHECK_REL(end.u, -1.0 / std::tan(6.0), 1e-7);
}

TEST_CASE("paths through the exclusion disc are rejected") {
    const ChartState s = make_state(u0(1.0, 1.0, kJ), {1.0, 1.0});
    const std::array<cplx, 1> path = {-1.0};
    CHECK_THROWS_AS(trace(s, path, 1e-9), DomainError);
    const std::array<cplx, 1> ok = {2.0};
    CHECK_THROWS_AS(trace(s, ok, 0.0), DomainError);
}

TEST_CASE("seeded trace, path independence and chart symmetry") {
    CHECK(checks::seeded_trace_error(1e-9) <= 1e-6);
    CHECK(checks::path_independence_error(1e-9) <= 1e-8);
    CHECK(checks::chart_symmetry_error(1e-9) <= 1e-5);
}

TEST_CASE("seed_state reports an error estimate") {
    const Seed s = seed_state({2, 0.98, kD});
    CHECK(s.error_estimate < 1e-8);
    CHECK_REL(to_u_jet(s.state).u, u_n_determinant({2, 0.98, kD}, 0.05).u, 1e-8);
}

TEST_CASE("grid marks the poles of -cot") {
    const GridSpec spec{0.5, 6.5, -0.2, 0.2, 61, 3};
    const GridResult g = grid({0, 1.0, kJ}, spec, 1e-9, 2);
    REQUIRE(g.values.size() == std::size_t(61 * 3));
    int poles = 0;
    for (int ix = 0; ix < spec.nx; ++ix) {
        const std::size_t i = g.index(ix, 1);
        const cplx x = g.point(ix, 1);
        if (g.status[i] == PointStatus::pole) {
            ++poles;
            CHECK(std::min(std::abs(x - kPi), std::abs(x - 2.0 * kPi)) < 0.1);
        } else {
            REQUIRE(g.status[i] == PointStatus::ok);
            CHECK_REL(g.values[i], -1.0 / std::tan(x), 1e-6);
        }
    }
    CHECK(poles == 2);
    for (int ix = 0; ix < spec.nx; ++ix)
        for (const int iy : {0, 2}) {
            const std::size_t i = g.index(ix, iy);
            REQUIRE(g.status[i] == PointStatus::ok);
            CHECK_REL(g.values[i], -1.0 / std::tan(g.point(ix, iy)), 1e-6);
        }
    CHECK_THROWS_AS(grid({0, 1.0, kJ}, GridSpec{0.5, 1.0, 0.0, 0.0, 0, 1}, 1e-9), DomainError);
}

TEST_CASE("grid is independent of the thread count") {
    const GridSpec spec{0.5, 3.0, -1.0, 1.0, 11, 9};
    const GridResult a = grid({1, 0.98, kD}, spec, 1e-9, 1);
    const GridResult b = grid({1, 0.98, kD}, spec, 1e-9, 4);
    CHECK(a.values == b.values);
    CHECK(a.status == b.status);
}
