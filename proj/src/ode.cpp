#include "p3fox/ode.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <thread>

#include "p3fox/errors.hpp"
#include "p3fox/expansion.hpp"

namespace p3fox {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr std::array<double, 7> kC = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84}};
constexpr std::array<double, 7> kB = {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84, 0.0};
constexpr std::array<double, 7> kBStar = {5179.0 / 57600,    0.0,           7571.0 / 16695, 393.0 / 640,
                                          -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

constexpr double kSafety = 0.9;
// Error per unit length behaves like h^4.
constexpr double kExpI = 0.7 / 4.0;
constexpr double kExpP = 0.4 / 4.0;
constexpr double kFacMin = 0.2;
constexpr double kFacMax = 5.0;

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

struct Deriv {
    cplx dy;
    cplx d2y;
};

Deriv field(cplx x, cplx y, cplx dy, const PIIIParams& p) {
    try {
        return {dy, piii_rhs({x, y, dy}, p)};
    } catch (const Error& e) {
        throw StepError(e.what());
    }
}

}  // namespace

StepResult rk_step(const ChartState& state, cplx h) {
    if (h == 0.0) return {state, 0.0};
    std::array<Deriv, 7> k{};
    for (int s = 0; s < 7; ++s) {
        cplx y = state.y, dy = state.dy;
        for (int j = 0; j < s; ++j) {
            y += h * kA[s][j] * k[j].dy;
            dy += h * kA[s][j] * k[j].d2y;
        }
        if (!finite(y) || !finite(dy)) throw StepError("non-finite stage value");
        k[s] = field(state.x + kC[s] * h, y, dy, state.params);
        if (!finite(k[s].dy) || !finite(k[s].d2y)) throw StepError("non-finite stage derivative");
    }
    ChartState out = state;
    cplx ey = 0.0, edy = 0.0;
    for (int s = 0; s < 7; ++s) {
        out.y += h * kB[s] * k[s].dy;
        out.dy += h * kB[s] * k[s].d2y;
        ey += h * (kB[s] - kBStar[s]) * k[s].dy;
        edy += h * (kB[s] - kBStar[s]) * k[s].d2y;
    }
    out.x = state.x + h;
    if (!finite(out.y) || !finite(out.dy)) throw StepError("non-finite step result");
    const double err = std::max(std::abs(ey) / (1.0 + std::max(std::abs(state.y), std::abs(out.y))),
                                std::abs(edy) / (1.0 + std::max(std::abs(state.dy), std::abs(out.dy))));
    return {out, err};
}

ChartState chart_switch(const ChartState& state) {
    if (state.y == 0.0) throw ZeroError("chart switch at y = 0");
    ChartState out = state;
    out.y = 1.0 / state.y;
    out.dy = -state.dy / (state.y * state.y);
    out.params = {-state.params.beta, -state.params.alpha};
    out.chart = state.chart == Chart::U ? Chart::V : Chart::U;
    return out;
}

ChartState make_state(const JetPoint& jet, const PIIIParams& params) {
    ChartState s{jet.x, jet.u, jet.du, Chart::U, params};
    if (std::abs(s.y) > 2.0) s = chart_switch(s);
    return s;
}

JetPoint to_u_jet(const ChartState& state) {
    if (state.chart == Chart::U) return {state.x, state.y, state.dy};
    if (state.y == 0.0) {
        const double inf = std::numeric_limits<double>::infinity();
        return {state.x, cplx(inf, 0.0), cplx(inf, 0.0)};
    }
    return {state.x, 1.0 / state.y, -state.dy / (state.y * state.y)};
}

double segment_distance_to_origin(cplx a, cplx b) {
    const cplx d = b - a;
    const double len2 = std::norm(d);
    if (len2 == 0.0) return std::abs(a);
    const double t = std::clamp(-(std::conj(d) * a).real() / len2, 0.0, 1.0);
    return std::abs(a + t * d);
}

Trajectory trace(const ChartState& start, std::span<const cplx> path, double tol) {
    TraceOptions opts;
    opts.tol = tol;
    return trace(start, path, opts);
}

namespace {

// Integrates along straight legs. Before every step the Newton estimate
// x - y/y' locates a nearby zero of the chart variable; if the leg would
// pass by it, the leg is replaced by a route around a circle of radius
// detour_radius (radial legs in and out are allowed, they never pass a zero).
class Tracer {
public:
    Tracer(const ChartState& start, const TraceOptions& opts) : opts_(opts), state_(start) {
        if (std::abs(state_.y) > opts_.switch_threshold) {
            state_ = chart_switch(state_);
            ++traj_.switches;
        }
        traj_.samples.push_back(state_);
        step_ = opts_.initial_step;
    }

    void waypoint(cplx target) {
        go(target, 0);
        traj_.waypoint_samples.push_back(traj_.samples.size() - 1);
    }

    Trajectory take() { return std::move(traj_); }

private:
    // Detected zeros persist for the whole trace so repeated estimates of one
    // zero are recognised; zeros whose detour is in progress are not detoured
    // again. Radii stay below half the gap to the nearest other known zero.
    void go(cplx target, int depth) {
        if (depth > 64 || replans_ > 4096) throw StallError("too many detours while tracing");
        check_segment(state_.x, target);
        while (!at(target)) {
            const auto zero = zero_ahead(target);
            if (!zero) {
                advance(target);
                continue;
            }
            const cplx z = remember(*zero);
            if (std::find(active_.begin(), active_.end(), z) != active_.end()) {
                advance(target);
                continue;
            }
            ++replans_;
            const auto legs = route(state_.x, target, z, detour_radius(z));
            active_.push_back(z);
            for (const cplx leg : legs) go(leg, depth + 1);
            active_.pop_back();
            return;
        }
    }

    cplx remember(cplx z) {
        for (const cplx k : known_) {
            if (std::abs(z - k) < 0.3 * radius(k)) return k;
        }
        known_.push_back(z);
        return z;
    }

    double detour_radius(cplx z) const {
        double rho = radius(z);
        for (const cplx k : known_) {
            if (k != z) rho = std::min(rho, 0.45 * std::abs(z - k));
        }
        return rho;
    }

    bool at(cplx target) const {
        return std::abs(target - state_.x) <= 1e-14 * std::max(1.0, std::abs(target));
    }

    void check_segment(cplx a, cplx b) const {
        if (segment_distance_to_origin(a, b) < opts_.exclusion_radius) {
            std::ostringstream os;
            os << "path segment " << a << " -> " << b << " enters the exclusion disc around 0";
            throw DomainError(os.str());
        }
    }

    std::optional<cplx> zero_ahead(cplx target) const {
        // Zeros of either chart variable have slope +-1; other small values
        // (power-law decay near the origin) are not singular.
        if (std::abs(std::abs(state_.dy) - 1.0) > 0.5) return std::nullopt;
        const cplx offset = state_.y / state_.dy;
        if (std::abs(offset) > 2.0 * opts_.detour_radius) return std::nullopt;
        const cplx z = state_.x - offset;
        const double rho = radius(z);
        if (rho < opts_.exclusion_radius) return std::nullopt;
        const double pass = segment_distance_to_origin(state_.x - z, target - z);
        const double ends = std::min(std::abs(state_.x - z), std::abs(target - z));
        if (pass < 0.8 * rho && pass < 0.9 * ends) return z;
        return std::nullopt;
    }

    // Winding angle of a polyline about the origin.
    static double winding(cplx from, const std::vector<cplx>& pts) {
        double total = 0.0;
        cplx prev = from;
        for (const cplx p : pts) {
            total += std::arg(p / prev);
            prev = p;
        }
        return total;
    }

    // Detours shrink near the origin so they never reach the exclusion disc.
    double radius(cplx z) const { return std::min(opts_.detour_radius, 0.4 * std::abs(z)); }

    std::vector<cplx> route(cplx from, cplx to, cplx z, double rho) const {
        const cplx a = from - z, b = to - z;
        const double ta = std::arg(a), tb = std::arg(b);
        double dt = std::remainder(tb - ta, 2.0 * std::numbers::pi);
        const double target_winding = std::arg(to / from);
        for (int attempt = 0; attempt < 2; ++attempt) {
            const double sweep = attempt == 0 ? dt : (dt > 0 ? dt - 2.0 * std::numbers::pi : dt + 2.0 * std::numbers::pi);
            const int chords = std::max(4, int(std::ceil(std::abs(sweep) / (std::numbers::pi / 16.0))));
            std::vector<cplx> pts;
            for (int k = 0; k <= chords; ++k) pts.push_back(z + std::polar(rho, ta + sweep * k / chords));
            pts.push_back(to);
            bool clear = true;
            cplx prev = from;
            for (const cplx p : pts) {
                if (segment_distance_to_origin(prev, p) < opts_.exclusion_radius) clear = false;
                prev = p;
            }
            if (clear && std::abs(winding(from, pts) - target_winding) < 1e-6) return pts;
        }
        throw StallError("no admissible detour around a singular point of the chart");
    }

    void advance(cplx target) {
        const double remaining = std::abs(target - state_.x);
        const double hl = std::min({step_, opts_.max_step, remaining});
        const bool last = remaining - hl <= 1e-14 * std::max(1.0, remaining);
        const cplx h = last ? target - state_.x : (target - state_.x) * (hl / remaining);
        double err;
        StepResult res;
        try {
            res = rk_step(state_, h);
            err = res.error / (opts_.tol * std::abs(h));
        } catch (const StepError&) {
            err = std::numeric_limits<double>::infinity();
        }
        if (err <= 1.0) {
            state_ = res.state;
            if (last) state_.x = target;
            ++traj_.accepted;
            if (std::abs(state_.y) > opts_.switch_threshold) {
                state_ = chart_switch(state_);
                ++traj_.switches;
            }
            traj_.samples.push_back(state_);
            const double e = std::max(err, 1e-10);
            const double fac = kSafety * std::pow(e, -kExpI) * std::pow(err_prev_, kExpP);
            err_prev_ = std::max(e, 1e-4);
            const double proposal = hl * std::clamp(fac, kFacMin, kFacMax);
            // A short final step onto a waypoint says nothing about the scale.
            step_ = last && hl < step_ ? std::max(step_, proposal) : proposal;
        } else {
            ++traj_.rejected;
            const double fac = std::isfinite(err) ? kSafety * std::pow(err, -1.0 / 4.0) : kFacMin;
            step_ = hl * std::clamp(fac, kFacMin, 1.0);
        }
        if (step_ < opts_.min_step) {
            std::ostringstream os;
            os << "step size underflow near x = " << state_.x;
            throw StallError(os.str());
        }
    }

    TraceOptions opts_;
    ChartState state_;
    Trajectory traj_;
    double step_ = 0.0;
    double err_prev_ = 1e-4;
    int replans_ = 0;
    std::vector<cplx> known_;
    std::vector<cplx> active_;
};

}  // namespace

Trajectory trace(const ChartState& start, std::span<const cplx> path, const TraceOptions& opts) {
    if (!(opts.tol > 0.0)) throw DomainError("trace tolerance must be positive");
    Tracer tracer(start, opts);
    for (const cplx target : path) tracer.waypoint(target);
    return tracer.take();
}

Seed seed_state(const SolutionParams& params, cplx x0, double budget) {
    const PIIIParams p = params.piii();
    std::optional<Seed> series;
    std::string why;
    try {
        const LatticeSeries s = expand_u(params, budget);
        const cplx u = series_eval(s, x0);
        const cplx du = series_eval(series_derivative(s), x0);
        if (finite(u) && finite(du) && u != 0.0) {
            const auto terms = s.ordered();
            const auto& [k, c] = terms.back();
            const double last = std::abs(c * std::exp(s.exponent(k) * std::log(x0)));
            series = Seed{make_state({x0, u, du}, p), last, true};
        }
    } catch (const Error& e) {
        why = e.what();
    }
    // The determinant seed is scored by its disagreement with the recurrence,
    // which shares no cancellation with it.
    std::optional<Seed> direct;
    try {
        const JetPoint det = u_n_determinant(params, x0);
        double spread = std::numeric_limits<double>::infinity();
        try {
            const JetPoint rec = u_n_recurrence(params, x0);
            spread = std::max(std::abs(det.u - rec.u), std::abs(det.du - rec.du) * std::abs(x0));
        } catch (const Error&) {
        }
        direct = Seed{make_state(det, p), spread, false};
    } catch (const Error& e) {
        if (!series) why += std::string(why.empty() ? "" : "; ") + e.what();
    }
    if (series && (!direct || series->error_estimate <= direct->error_estimate)) return *series;
    if (direct) return *direct;
    throw SeedError("no seed at x0: " + why);
}

cplx GridResult::point(int ix, int iy) const {
    const double x = spec.nx > 1 ? spec.x_min + (spec.x_max - spec.x_min) * ix / (spec.nx - 1) : spec.x_min;
    const double y = spec.ny > 1 ? spec.y_min + (spec.y_max - spec.y_min) * iy / (spec.ny - 1) : spec.y_min;
    return {x, y};
}

namespace {

// A point is a pole marker when v = 1/u is tiny there, or when the Newton
// estimate of the nearby zero of v falls inside the point's grid cell.
bool pole_in_cell(const GridResult& g, const ChartState& s) {
    if (s.chart != Chart::V) return false;
    if (std::abs(s.y) < 1e-3) return true;
    if (s.dy == 0.0) return false;
    const cplx off = s.y / s.dy;
    const double hx = g.spec.nx > 1 ? 0.5 * (g.spec.x_max - g.spec.x_min) / (g.spec.nx - 1) : 0.0;
    const double hy = g.spec.ny > 1 ? 0.5 * (g.spec.y_max - g.spec.y_min) / (g.spec.ny - 1) : 0.0;
    return std::abs(off.real()) <= hx && std::abs(off.imag()) <= hy;
}

void store(GridResult& g, std::size_t idx, const ChartState& s) {
    const JetPoint jet = to_u_jet(s);
    g.values[idx] = jet.u;
    if (pole_in_cell(g, s)) {
        g.status[idx] = PointStatus::pole;
    } else {
        g.status[idx] = finite(jet.u) ? PointStatus::ok : PointStatus::failed;
    }
}

}  // namespace

GridResult grid(const SolutionParams& params, const GridSpec& spec, double tol, unsigned threads) {
    if (spec.nx < 1 || spec.ny < 1) throw DomainError("grid needs nx, ny >= 1");
    if (!(spec.x_min <= spec.x_max) || !(spec.y_min <= spec.y_max)) throw DomainError("grid rectangle is inverted");
    constexpr double x0 = 0.05;
    if (spec.x_max < x0) throw DomainError("grid spine must lie at Re x >= 0.05");
    GridResult g{spec, std::vector<cplx>(std::size_t(spec.nx) * spec.ny, cplx(0.0)),
                 std::vector<PointStatus>(std::size_t(spec.nx) * spec.ny, PointStatus::failed)};

    TraceOptions opts;
    opts.tol = tol;
    // Spine: along the real axis to x_max, then vertically through every row.
    std::vector<ChartState> row_seed(spec.ny);
    std::vector<bool> row_ok(spec.ny, false);
    try {
        const Seed seed = seed_state(params, x0);
        const cplx corner(spec.x_max, 0.0);
        const ChartState base = trace(seed.state, std::span<const cplx>(&corner, 1), opts).samples.back();
        for (const int dir : {1, -1}) {
            ChartState s = base;
            for (int iy = dir > 0 ? 0 : spec.ny - 1; iy >= 0 && iy < spec.ny; iy += dir) {
                const cplx target = g.point(spec.nx - 1, iy);
                if ((dir > 0) != (target.imag() >= 0.0)) continue;
                const cplx wp = target;
                s = trace(s, std::span<const cplx>(&wp, 1), opts).samples.back();
                row_seed[iy] = s;
                row_ok[iy] = true;
            }
        }
    } catch (const Error& e) {
        throw SeedError(std::string("spine trace failed: ") + e.what());
    }

    const unsigned hw = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    const unsigned workers = std::min<unsigned>(hw, spec.ny);
    std::atomic<int> next_row{0};
    auto work = [&] {
        for (int iy = next_row++; iy < spec.ny; iy = next_row++) {
            if (!row_ok[iy]) continue;
            ChartState s = row_seed[iy];
            store(g, g.index(spec.nx - 1, iy), s);
            for (int ix = spec.nx - 2; ix >= 0; --ix) {
                const cplx target = g.point(ix, iy);
                try {
                    s = trace(s, std::span<const cplx>(&target, 1), opts).samples.back();
                } catch (const Error&) {
                    break;  // remaining points of the row stay failed
                }
                store(g, g.index(ix, iy), s);
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    return g;
}

}  // namespace p3fox
