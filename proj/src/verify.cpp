#include "p3fox/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <random>

#include "p3fox/asymptotics.hpp"
#include "p3fox/errors.hpp"
#include "p3fox/expansion.hpp"
#include "p3fox/hankel.hpp"
#include "p3fox/ode.hpp"

namespace p3fox {

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

cplx first_derivative(const std::function<cplx(double)>& f, double x, double h) {
    auto d = [&](double s) { return (f(x + s) - f(x - s)) / (2.0 * s); };
    return (4.0 * d(0.5 * h) - d(h)) / 3.0;
}

cplx second_derivative(const std::function<cplx(double)>& f, double x, double h) {
    const cplx f0 = f(x);
    auto d = [&](double s) { return (f(x + s) - 2.0 * f0 + f(x - s)) / (s * s); };
    return (4.0 * d(0.5 * h) - d(h)) / 3.0;
}

cplx random_cplx(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> u(lo, hi);
    const double re = u(rng);
    return {re, u(rng)};
}

bool screened_out(const SolutionParams& p, double x) {
    for (const cplx a : {p.alpha, p.alpha - 2.0})
        for (const int k : {p.n, p.n + 1})
            if (std::abs(delta(k, a, x, p.d)) <= 1e-6) return true;
    return false;
}

}  // namespace

namespace checks {

Screened cross_path(int n_max, std::span<const cplx> alphas, std::span<const double> xs, const Cylinder& d) {
    Screened s;
    for (int n = 0; n <= n_max; ++n)
        for (const cplx a : alphas)
            for (const double x : xs) {
                const SolutionParams p{n, a, d};
                if (screened_out(p, x)) {
                    ++s.skipped;
                    continue;
                }
                const cplx ud = u_n_determinant(p, x).u;
                const cplx ub = u_n_backlund(p, x).u;
                const cplx ur = u_n_recurrence(p, x).u;
                s.max_error = std::max({s.max_error, rel(ub, ud), rel(ur, ud), rel(ur, ub)});
                ++s.evaluated;
            }
    return s;
}

Screened path_residual(int n_max, std::span<const cplx> alphas, std::span<const double> xs, const Cylinder& d) {
    Screened s;
    for (int n = 0; n <= n_max; ++n)
        for (const cplx a : alphas)
            for (const double x : xs) {
                const SolutionParams p{n, a, d};
                if (screened_out(p, x)) {
                    ++s.skipped;
                    continue;
                }
                const std::function<cplx(cplx)> paths[] = {
                    [&](cplx t) { return u_n_determinant(p, t).u; },
                    [&](cplx t) { return u_n_backlund(p, t).u; },
                    [&](cplx t) { return u_n_recurrence(p, t).u; },
                };
                for (const auto& f : paths) s.max_error = std::max(s.max_error, piii_residual(f, x, p.piii()));
                ++s.evaluated;
            }
    return s;
}

double delta_ratio(const SolutionParams& params, double x) {
    return std::abs(delta(params.n, params.alpha, x, params.d) / delta_leading_value(params, x));
}

double u_ratio(const SolutionParams& params, double x) {
    return std::abs(u_n_determinant(params, x).u / u_leading(params, x));
}

double delta_window_gap(const SolutionParams& params) {
    const Regime reg = delta_leading(params);
    double gap = std::numeric_limits<double>::infinity();
    for (int r = 0; r <= params.n; ++r)
        if (r != reg.r_c) gap = std::min(gap, (power_p(r, params.alpha, params.n) - reg.exponent).real());
    return gap;
}

std::vector<double> alpha_grid(int n, int points) {
    std::vector<double> out;
    const double lo = -2.0 * n - 4.0, hi = 2.0 * n + 4.0;
    for (int i = 0; i < points; ++i) {
        double a = lo + (hi - lo) * (i + 0.5) / points;
        const double nearest = 2.0 * std::round(a / 2.0);
        if (std::abs(a - nearest) < 0.05) a = nearest + (a < nearest ? -0.05 : 0.05);
        out.push_back(a);
    }
    return out;
}

int critical_r_mismatches(int n_max, int points) {
    int bad = 0;
    for (int n = 0; n <= n_max; ++n)
        for (const double a : alpha_grid(n, points))
            if (critical_r(a, n) != critical_r_brute(a, n)) ++bad;
    return bad;
}

int exponent_mismatches(int n_max, int points) {
    int bad = 0;
    for (int n = 0; n <= n_max; ++n)
        for (const double a : alpha_grid(n, points)) {
            const Rational r(std::llround(a * 1000.0), 1000);
            if (exponent_e(r, n) != exponent_e_composed(r, n)) ++bad;
            if (std::abs(exponent_e(cplx(a, 0.3), n) - exponent_e_composed(cplx(a, 0.3), n)) > 1e-12) ++bad;
        }
    return bad;
}

double q_composition_error(int n_max, int points, const Cylinder& d) {
    double worst = 0.0;
    for (int n = 0; n <= n_max; ++n)
        for (const double a : alpha_grid(n, points)) {
            const SolutionParams p{n, a, d};
            worst = std::max(worst, rel(coefficient_q(p), coefficient_q_composed(p)));
        }
    return worst;
}

int scan_mismatches(int n, int lo, int hi) {
    const Rational step(1, 10);
    const auto samples = exponent_scan(n, Rational(lo), Rational(hi), step);
    int bad = 0;
    for (const auto& s : samples) {
        if (s.boundary) {
            if (s.alpha.den() != 1 || s.alpha.num() % 2 != 0) ++bad;
            continue;
        }
        if (s.r_c != critical_r_brute(s.alpha, n)) ++bad;
        if (s.delta_exponent != power_pc(s.alpha, n)) ++bad;
        if (s.u_exponent != exponent_e_composed(s.alpha, n)) ++bad;
    }
    // A change of slope between adjacent pieces must sit on an even integer;
    // boundary samples carry no value and are checked above.
    auto check = [&](auto value) {
        for (std::size_t i = 1; i + 1 < samples.size(); ++i) {
            const auto& a = samples[i - 1];
            const auto& b = samples[i];
            const auto& c = samples[i + 1];
            if (a.boundary || c.boundary) continue;
            if (b.boundary) continue;
            const Rational left = (value(b) - value(a)) / step;
            const Rational right = (value(c) - value(b)) / step;
            if (left != right && (b.alpha.den() != 1 || b.alpha.num() % 2 != 0)) ++bad;
        }
    };
    check([](const ExponentSample& s) { return s.delta_exponent; });
    check([](const ExponentSample& s) { return s.u_exponent; });
    return bad;
}

double laguerre_error(int n_max, std::span<const double> gammas) {
    double worst = 0.0;
    for (const double g : gammas)
        for (int n = 1; n <= n_max; ++n)
            worst = std::max(worst, rel(laguerre_hankel_numeric(g, n), laguerre_hankel_closed(g, n)));
    return worst;
}

double toda_error(std::span<const int> ns, std::span<const double> xs, cplx alpha, const Cylinder& d) {
    double worst = 0.0;
    for (const int n : ns)
        for (const double x : xs) {
            const cplx t0 = tau(n, alpha, x, d);
            const std::function<cplx(double)> f = [&](double t) { return std::log(tau(n, alpha, t, d) / t0); };
            const double h = 1e-3 * x;
            const cplx lhs = x * first_derivative(f, x, h) + x * x * second_derivative(f, x, h);
            const cplx rhs = tau(n + 1, alpha, x, d) * tau(n - 1, alpha, x, d) / (t0 * t0);
            worst = std::max(worst, rel(lhs, rhs));
        }
    return worst;
}

double tau_hamiltonian_error(std::span<const int> ns, std::span<const double> xs, cplx alpha, const Cylinder& d) {
    double worst = 0.0;
    for (const int n : ns)
        for (const double x : xs) {
            const cplx lhs = double(n * (n - 1)) + x * delta_derivative(n, alpha, x, d) / delta(n, alpha, x, d);
            worst = std::max(worst, rel(lhs, h_n({n, alpha, d}, x)));
        }
    return worst;
}

double delta_derivative_error(std::uint64_t seed, int samples) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_n(1, 4);
    std::uniform_real_distribution<double> pick_x(0.5, 3.0);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const int n = pick_n(rng);
        cplx alpha = random_cplx(rng, -3.0, 3.0);
        const Cylinder d{random_cplx(rng, -1.0, 1.0), random_cplx(rng, -1.0, 1.0)};
        const double x = pick_x(rng);
        const std::function<cplx(double)> f = [&](double t) { return delta(n, alpha, t, d); };
        const cplx fd = first_derivative(f, x, 1e-3 * x);
        worst = std::max(worst, rel(delta_derivative(n, alpha, x, d), fd));
    }
    return worst;
}

double desnanot_jacobi_error(std::uint64_t seed, int matrices) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_size(3, 6);
    double worst = 0.0;
    for (int i = 0; i < matrices; ++i) {
        const int size = pick_size(rng);
        ComplexMatrix m(size, size);
        for (int r = 0; r < size; ++r)
            for (int c = 0; c < size; ++c) m(r, c) = random_cplx(rng, -1.0, 1.0);
        std::uniform_int_distribution<int> pick_index(0, size - 1);
        const int a = pick_index(rng);
        int b = pick_index(rng);
        while (b == a) b = pick_index(rng);
        worst = std::max(worst, desnanot_jacobi_residual(m, a, b));
    }
    return worst;
}

double andreief_error(int n_max) {
    double worst = 0.0;
    for (const double g : {0.3, 1.7})
        for (int n = 1; n <= n_max; ++n) worst = std::max(worst, andreief_residual(n, g));
    return worst;
}

double vandermonde_error(std::uint64_t seed, int sets) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_size(2, 6);
    double worst = 0.0;
    for (int i = 0; i < sets; ++i) {
        std::vector<cplx> xs(pick_size(rng));
        for (auto& x : xs) x = random_cplx(rng, -2.0, 2.0);
        worst = std::max(worst, vandermonde_residual(xs));
    }
    return worst;
}

double gamma_recurrence_error() {
    double worst = 0.0;
    for (const double re : {-4.3, -2.7, -0.5, 0.3, 1.5, 4.2, 10.1, 30.2})
        for (const double im : {0.0, 0.7, -3.1}) {
            const cplx z(re, im);
            worst = std::max(worst, rel(z * gamma(z), gamma(z + 1.0)));
        }
    return worst;
}

double wronskian_error() {
    double worst = 0.0;
    for (const double nu : {0.3, 0.49, 1.3})
        for (const double x : {0.1, 1.0, 5.0, 10.0}) {
            const cplx w = bessel_j(nu + 1.0, x) * bessel_y(nu, x) - bessel_j(nu, x) * bessel_y(nu + 1.0, x);
            worst = std::max(worst, std::abs(w - 2.0 / (std::numbers::pi * x)));
        }
    return worst;
}

double derivative_identity_error(std::uint64_t seed, int samples) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> pick_nu(0.1, 2.9);
    std::uniform_real_distribution<double> pick_x(0.2, 8.0);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        double nu = pick_nu(rng);
        if (std::abs(nu - std::round(nu)) < 0.05) nu += 0.1;
        const double x = pick_x(rng);
        const Cylinder d{random_cplx(rng, -1.0, 1.0), random_cplx(rng, -1.0, 1.0)};
        const cplx c = cylinder(nu, x, d);
        const cplx lower = cylinder(nu - 1.0, x, d);
        const cplx second = lower - (nu / x) * c;
        const double scale = std::max({std::abs(lower), std::abs(nu / x * c), 1e-300});
        worst = std::max(worst, std::abs(cylinder_derivative(nu, x, d) - second) / scale);
    }
    return worst;
}

double bessel_small_x_error() {
    double worst = 0.0;
    const double x = 1e-6;
    for (const cplx nu : {cplx(0.3), cplx(1.49), cplx(2.5, 0.5)}) {
        const cplx lead = bessel_j(nu, x) * gamma(nu + 1.0) * std::pow(cplx(0.5 * x), -nu);
        worst = std::max(worst, std::abs(lead - 1.0));
    }
    return worst;
}

double delta1_small_x_error(cplx alpha, double x, const Cylinder& d) {
    const cplx nu = 0.5 * alpha;
    const cplx lead = delta(1, alpha, x, d) * std::pow(cplx(0.5 * x), nu) * (-std::numbers::pi / (d.d2 * gamma(nu)));
    return std::abs(lead - 1.0);
}

double backlund_commutativity_error(std::span<const cplx> alphas, std::span<const double> xs, const Cylinder& d) {
    double worst = 0.0;
    for (const cplx a : alphas)
        for (const double x : xs) {
            const JetPoint jet = u0(x, a, d);
            const PIIIParams p{a, 2.0 - a};
            const BacklundResult b1 = backlund_b1(jet, p);
            const BacklundResult b2 = backlund_b2(jet, p);
            const BacklundResult b12 = backlund_b2(b1.jet, b1.params);
            const BacklundResult b21 = backlund_b1(b2.jet, b2.params);
            worst = std::max({worst, rel(b12.jet.u, b21.jet.u), rel(b12.jet.du, b21.jet.du)});
        }
    return worst;
}

double b2_shift_error(int n_max, std::span<const cplx> alphas, std::span<const double> xs, const Cylinder& d) {
    double worst = 0.0;
    for (int n = 0; n <= n_max; ++n)
        for (const cplx a : alphas)
            for (const double x : xs) {
                const SolutionParams p{n, a, d};
                const SolutionParams shifted{n, a - 2.0, d};
                if (screened_out(p, x) || screened_out(shifted, x)) continue;
                const BacklundResult b = backlund_b2(u_n_determinant(p, x), p.piii());
                worst = std::max(worst, rel(b.jet.u, u_n_determinant(shifted, x).u));
            }
    return worst;
}

double expansion_error(const SolutionParams& params, double budget, std::span<const double> xs) {
    const LatticeSeries s = expand_u(params, budget);
    double worst = 0.0;
    for (const double x : xs) worst = std::max(worst, rel(series_eval(s, x), u_n_determinant(params, x).u));
    return worst;
}

double expansion_residual(const SolutionParams& params, double budget) {
    return expand_u_detailed(params, budget).max_residual;
}

double expansion_lead_error(const SolutionParams& params, double budget) {
    const LatticeSeries s = expand_u(params, budget);
    const Regime reg = u_regime(params);
    const cplx expected = reg.coefficient * std::pow(cplx(2.0), -reg.exponent);
    return rel(s.coefficient({0, 1}), expected);
}

int expansion_parity_violations(const SolutionParams& params, double budget) {
    const ExpansionResult r = expand_u_detailed(params, budget);
    const LatticeSeries& u = r.series;
    if (u.integer_p()) return 0;
    int bad = 0;
    auto expect = [&](const LatticeSeries& s, int parity) {
        const auto got = s.parity();
        if (!s.empty() && got != parity) ++bad;
    };
    const LatticeSeries uu = series_product(u, u);
    expect(u, 1);
    expect(uu, 0);
    expect(series_product(uu, u), 1);
    expect(series_derivative(u), 0);
    expect(matched_residual(u, params.piii(), r.g_limit), 1);
    return bad;
}

CotTrace cot_trace(double tol) {
    const ChartState start = make_state(u0(0.5, 1.0, Cylinder{1.0, 0.0}), {1.0, 1.0});
    std::vector<cplx> path;
    for (int i = 1; i <= 110; ++i) path.push_back(0.5 + 0.05 * i);
    const Trajectory tr = trace(start, path, tol);
    CotTrace out{0.0, tr.accepted, tr.rejected};
    for (const std::size_t k : tr.waypoint_samples) {
        const JetPoint jet = to_u_jet(tr.samples[k]);
        const double x = jet.x.real();
        if (std::abs(x - std::numbers::pi) < 0.2 || std::abs(x - 2.0 * std::numbers::pi) < 0.2) continue;
        out.max_error = std::max(out.max_error, rel(jet.u, -1.0 / std::tan(x)));
    }
    return out;
}

double seeded_trace_error(double tol) {
    const SolutionParams p{2, 0.98, {0.55, 0.71}};
    const LatticeSeries s = expand_u(p, 12.0);
    const cplx x0 = 0.05;
    const ChartState start = make_state({x0, series_eval(s, x0), series_eval(series_derivative(s), x0)}, p.piii());
    const cplx end = 3.0;
    const Trajectory tr = trace(start, std::span<const cplx>(&end, 1), tol);
    return rel(to_u_jet(tr.samples.back()).u, u_n_determinant(p, end).u);
}

double path_independence_error(double tol) {
    using namespace std::complex_literals;
    const SolutionParams p{2, 0.98, {0.55, 0.71}};
    const ChartState start = make_state(u_n_determinant(p, 1.0), p.piii());
    const std::vector<cplx> detour = {1.0 + 0.5i, 2.0 + 0.5i, 2.0};
    const cplx end = 2.0;
    const cplx a = to_u_jet(trace(start, detour, tol).samples.back()).u;
    const cplx b = to_u_jet(trace(start, std::span<const cplx>(&end, 1), tol).samples.back()).u;
    return std::abs(a - b);
}

double chart_symmetry_error(double tol) {
    const ChartState start = make_state(u0(0.5, 1.0, Cylinder{1.0, 0.0}), {1.0, 1.0});
    const cplx end = 6.0;
    const Trajectory tr = trace(start, std::span<const cplx>(&end, 1), tol);
    const PIIIParams inverted{-1.0, -1.0};
    double worst = 0.0;
    for (const ChartState& s : tr.samples) {
        if (s.chart != Chart::V) continue;
        worst = std::max(worst, piii_residual([](cplx t) { return -std::tan(t); }, s.x, inverted));
    }
    return worst;
}

}  // namespace checks

int VerifyReport::failures() const {
    return int(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

VerifyOptions verify_options_from_env() {
    VerifyOptions o;
    const char* fast = std::getenv("P3FOX_VERIFY_FAST");
    o.fast = fast && std::string(fast) == "1";
    if (const char* inject = std::getenv("P3FOX_VERIFY_INJECT")) o.inject = inject;
    return o;
}

VerifyReport run_verify(const VerifyOptions& options) {
    using namespace checks;
    VerifyReport report;
    report.seed = options.seed;
    const bool fast = options.fast;
    const std::uint64_t seed = options.seed;
    const Cylinder d{0.55, 0.71};
    const std::vector<cplx> alphas = {0.98, -0.5, 3.5, -223.0 / 225.0};
    const std::vector<double> xs = {0.5, 1.0, 2.0};

    auto add = [&](const std::string& module, const std::string& name, const std::function<double()>& measure,
                   double tol) {
        CheckResult c{module, name, 0.0, tol, false};
        try {
            c.value = measure();
            c.passed = std::isfinite(c.value) && c.value <= tol;
        } catch (const std::exception&) {
            c.value = std::numeric_limits<double>::infinity();
        }
        report.checks.push_back(c);
    };
    auto count = [&](const std::string& module, const std::string& name, const std::function<int()>& measure) {
        add(module, name, [&] { return double(measure()); }, 0.0);
    };

    add("special", "gamma recurrence", gamma_recurrence_error, 1e-12);
    add("special", "bessel wronskian", wronskian_error, 1e-10);
    add("special", "derivative identities", [&] { return derivative_identity_error(seed, fast ? 20 : 100); }, 1e-12);
    add("special", "bessel small-x law", bessel_small_x_error, 1e-10);

    const int toda_n[] = {1, 2, 3};
    const double toda_x[] = {0.8, 1.0, 1.5};
    add("hankel", "toda equation", [&] { return toda_error(toda_n, toda_x, 0.98, d); }, 1e-5);
    const double gammas[] = {0.3, 1.7, 2.5};
    add("hankel", "laguerre closed form", [&] { return laguerre_error(6, gammas); }, 1e-9);
    add("hankel", "delta derivative", [&] { return delta_derivative_error(seed, fast ? 10 : 40); }, 1e-7);
    add("hankel", "desnanot-jacobi", [&] { return desnanot_jacobi_error(seed, fast ? 20 : 100); }, 1e-11);
    add("hankel", "delta_1 small-x law", [&] {
        return std::max(delta1_small_x_error(0.98, 1e-4, d), delta1_small_x_error(3.5, 1e-4, d));
    }, 1e-3);
    add("hankel", "andreief quadrature", [] { return andreief_error(3); }, 1e-8);
    add("hankel", "vandermonde", [&] { return vandermonde_error(seed, fast ? 20 : 100); }, 1e-11);

    const int n_max = fast ? 3 : 5;
    add("painleve", "cross-path equality", [&] { return cross_path(n_max, alphas, xs, d).max_error; }, 1e-8);
    add("painleve", "piii residual", [&] { return path_residual(n_max, alphas, xs, d).max_error; }, 1e-5);
    const std::vector<cplx> seed_alphas = {0.98, -0.5, 3.5};
    add("painleve", "backlund commutativity", [&] { return backlund_commutativity_error(seed_alphas, xs, d); }, 1e-9);
    add("painleve", "b2 shift law", [&] { return b2_shift_error(3, alphas, xs, d); }, 1e-8);
    const int link_n[] = {1, 2};
    add("painleve", "tau-hamiltonian link", [&] { return tau_hamiltonian_error(link_n, xs, 0.98, d); }, 1e-6);

    const int grid_points = fast ? 80 : 400;
    count("asymptotics", "critical_r vs brute force", [&] { return critical_r_mismatches(8, grid_points); });
    count("asymptotics", "exponent e composition", [&] { return exponent_mismatches(8, grid_points); });
    add("asymptotics", "coefficient q composition", [&] { return q_composition_error(8, grid_points, d); }, 1e-10);
    count("asymptotics", "n=5 exponent scan", [] { return scan_mismatches(5, -12, 12); });
    add("asymptotics", "delta ratio convergence", [&] {
        // Observed order on halving x must reach min(2, window gap).
        double worst = 0.0;
        for (const double a : {7.0, 1.0, -7.0}) {
            const SolutionParams p{3, a, d};
            const double e1 = std::abs(delta_ratio(p, 1e-2) - 1.0);
            const double e2 = std::abs(delta_ratio(p, 5e-3) - 1.0);
            const double e3 = std::abs(delta_ratio(p, 2.5e-3) - 1.0);
            const double want = std::min(2.0, delta_window_gap(p)) - 0.1;
            const double order = std::min(std::log2(e1 / e2), std::log2(e2 / e3));
            worst = std::max(worst, want - order);
        }
        return worst;
    }, 0.0);

    const SolutionParams fig2{2, 0.98, d};
    add("expansion", "residual at noise floor", [&] {
        double worst = 0.0;
        for (const double b : {4.0, 8.0, 12.0}) worst = std::max(worst, expansion_residual(fig2, b));
        return worst;
    }, 1e-12);
    add("expansion", "agreement window", [&] {
        const double window[] = {0.01, 0.02, 0.03, 0.04, 0.05};
        double worst = 0.0;
        for (int n = 0; n <= 3; ++n) worst = std::max(worst, expansion_error({n, 0.98, d}, 12.0, window));
        return worst;
    }, 1e-5);
    add("expansion", "leading coefficient", [&] {
        double worst = 0.0;
        for (int n = 0; n <= 3; ++n) worst = std::max(worst, expansion_lead_error({n, 0.98, d}, 4.0));
        return worst;
    }, 1e-13);
    count("expansion", "parity closure", [&] {
        int bad = 0;
        for (int n = 0; n <= 3; ++n) bad += expansion_parity_violations({n, 0.98, d}, fast ? 4.0 : 8.0);
        return bad;
    });

    add("ode", "-cot oracle", [] { return cot_trace(1e-9).max_error; }, 1e-7);
    add("ode", "rejected-step fraction", [] {
        const CotTrace t = cot_trace(1e-9);
        return double(t.rejected) / double(t.accepted + t.rejected);
    }, 0.5);
    add("ode", "expansion-seeded trace", [] { return seeded_trace_error(1e-9); }, 1e-6);
    add("ode", "path independence", [] { return path_independence_error(1e-9); }, 1e-8);
    add("ode", "chart symmetry", [] { return chart_symmetry_error(1e-9); }, 1e-5);

    if (!options.inject.empty()) {
        CheckResult c{options.inject, "injected failure", 1.0, 0.0, false};
        report.checks.push_back(c);
    }
    return report;
}

}  // namespace p3fox
