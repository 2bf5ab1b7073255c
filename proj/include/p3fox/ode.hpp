#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "p3fox/painleve.hpp"

namespace p3fox {

// Chart U integrates u; chart V integrates v = 1/u, which solves PIII with
// parameters (-beta, -alpha). Both charts keep the variable bounded; zeros of
// the variable are singular points of its equation and are passed on detours.
enum class Chart { U, V };

struct ChartState {
    cplx x{0.0};
    cplx y{0.0};
    cplx dy{0.0};
    Chart chart = Chart::U;
    PIIIParams params{};
};

struct StepResult {
    ChartState state;
    double error = 0.0;
};

// One Dormand-Prince 5(4) step. The error is the max over (y, y') of
// |e| / (1 + |value|).
StepResult rk_step(const ChartState& state, cplx h);

ChartState chart_switch(const ChartState& state);

// State in chart U, already inverted if |u| exceeds the switch threshold.
ChartState make_state(const JetPoint& jet, const PIIIParams& params);

// (x, u, u') in the U chart; u is infinite at an exact zero of v.
JetPoint to_u_jet(const ChartState& state);

struct TraceOptions {
    double tol = 1e-9;
    double switch_threshold = 2.0;
    double initial_step = 0.01;
    double max_step = 0.25;
    double min_step = 1e-12;
    double exclusion_radius = 0.05;
    double detour_radius = 0.15;
};

struct Trajectory {
    std::vector<ChartState> samples;            // start, every accepted step, waypoints
    std::vector<std::size_t> waypoint_samples;  // index into samples per waypoint
    int accepted = 0;
    int rejected = 0;
    int switches = 0;
};

double segment_distance_to_origin(cplx a, cplx b);

Trajectory trace(const ChartState& start, std::span<const cplx> path, double tol);
Trajectory trace(const ChartState& start, std::span<const cplx> path, const TraceOptions& opts);

struct Seed {
    ChartState state;
    double error_estimate = 0.0;  // last series term, or determinant vs recurrence spread
    bool from_expansion = false;
};

// Initial state for u_n at x0: the small-x expansion or the determinant
// path, whichever has the smaller error estimate.
Seed seed_state(const SolutionParams& params, cplx x0 = 0.05, double budget = 12.0);

struct GridSpec {
    double x_min = 0.0;
    double x_max = 0.0;
    double y_min = 0.0;
    double y_max = 0.0;
    int nx = 0;
    int ny = 0;
};

enum class PointStatus { ok, pole, failed };

struct GridResult {
    GridSpec spec;
    std::vector<cplx> values;  // row-major, index iy * nx + ix
    std::vector<PointStatus> status;

    cplx point(int ix, int iy) const;
    std::size_t index(int ix, int iy) const { return std::size_t(iy) * spec.nx + ix; }
};

// Rows are traced leftwards from a spine at Re x = x_max; the spine is
// reached from the seed along the real axis. threads = 0 picks the
// hardware concurrency.
GridResult grid(const SolutionParams& params, const GridSpec& spec, double tol, unsigned threads = 0);

}  // namespace p3fox
