// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "p3fox/expansion.hpp"
#include "p3fox/verify.hpp"

using namespace p3fox;

namespace {

const Cylinder kD{0.55, 0.71};
const std::vector<cplx> kAlphas = {0.98, -0.5, 3.5, -223.0 / 225.0};
const std::vector<double> kXs = {0.5, 1.0, 2.0};

struct Outcome {
    bool pass;
    std::string detail;
};

template <class... Args>
std::string fmt(const char* format, Args... args) {
    char buf[160];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

Outcome bound(double value, double tol) { return {value <= tol, fmt("value %.3g, tolerance %.3g", value, tol)}; }

Outcome named(const char* name, Outcome o) { return {o.pass, std::string(name) + " " + o.detail}; }

Outcome exact(int mismatches) { return {mismatches == 0, fmt("mismatches %d", mismatches)}; }

// Deviations from 1 at x = 1e-3, 5e-4, 2.5e-4: within tol at the first and
// non-increasing afterwards.
Outcome ratio_protocol(const std::function<double(double)>& ratio, double tol, std::string label) {
    const double d0 = std::abs(ratio(1e-3) - 1.0);
    const double d1 = std::abs(ratio(5e-4) - 1.0);
    const double d2 = std::abs(ratio(2.5e-4) - 1.0);
    const bool ok = d0 <= tol && d1 <= d0 && d2 <= d1;
    char buf[200];
    std::snprintf(buf, sizeof buf, "%s |r-1| = %.2e, %.2e, %.2e", label.c_str(), d0, d1, d2);
    return {ok, buf};
}

Outcome all_of(std::vector<Outcome> parts) {
    Outcome o{true, ""};
    for (const auto& p : parts) {
        o.pass = o.pass && p.pass;
        o.detail += (o.detail.empty() ? "" : "; ") + p.detail + (p.pass ? "" : " [fail]");
    }
    return o;
}

}  // namespace

int main() {
    using namespace checks;
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "cross-path equality", [] {
             const auto t0 = std::chrono::steady_clock::now();
             const Screened s = cross_path(5, kAlphas, kXs, kD);
             const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
             Outcome o = bound(s.max_error, 1e-8);
             o.pass = o.pass && secs < 5.0;
             o.detail += fmt(", %d points screened out, %.2f s", s.skipped, secs);
             return o;
         }},
        {2, "PIII residual of every path", [] { return bound(path_residual(5, kAlphas, kXs, kD).max_error, 1e-5); }},
        {3, "Delta_n small-x ratio", [] {
             std::vector<Outcome> parts;
             for (const double a : {7.0, 1.0, -7.0})
                 parts.push_back(ratio_protocol([&](double x) { return delta_ratio({3, a, kD}, x); }, 1e-2,
                                                fmt("(3,%g)", a)));
             return all_of(parts);
         }},
        {4, "u_n small-x ratio", [] {
             struct Point {
                 int n;
                 double a;
                 Cylinder d;
             };
             const Point points[] = {{1, 7.0, kD}, {1, 2.95, kD}, {1, 0.95, kD}, {2, 0.98, Cylinder{1.0, 0.0}},
                                     {1, -5.5, kD}};
             std::vector<Outcome> parts;
             for (const auto& p : points)
                 parts.push_back(ratio_protocol([&](double x) { return u_ratio({p.n, p.a, p.d}, x); }, 1e-2,
                                                fmt("(%d,%g)", p.n, p.a) + (p.d.d2 == 0.0 ? " d2=0" : "")));
             return all_of(parts);
         }},
        {5, "critical_r exhaustive check", [] { return exact(critical_r_mismatches(8, 400)); }},
        {6, "piecewise e and q compositions", [] {
             return all_of({named("e", exact(exponent_mismatches(8, 400))),
                            named("q", bound(q_composition_error(8, 400, kD), 1e-10))});
         }},
        {7, "Laguerre Hankel closed form", [] {
             const double gammas[] = {0.3, 1.7, 2.5};
             return bound(laguerre_error(6, gammas), 1e-9);
         }},
        {8, "Toda equation", [] {
             const int ns[] = {1, 2, 3};
             const double xs[] = {0.8, 1.0, 1.5};
             return bound(toda_error(ns, xs, 0.98, kD), 1e-5);
         }},
        {9, "expansion fidelity at x = 0.02", [] {
             const SolutionParams p{2, 0.98, kD};
             const cplx series = series_eval(expand_u(p, 12.0), 0.02);
             const cplx det = u_n_determinant(p, 0.02).u;
             return bound(std::abs(series - det) / std::abs(det), 1e-6);
         }},
        {10, "pole transit against -cot", [] { return bound(cot_trace(1e-9).max_error, 1e-7); }},
        {11, "identity suites", [] {
             const std::vector<cplx> seeds = {0.98, -0.5, 3.5};
             return all_of({named("wronskian", bound(wronskian_error(), 1e-10)),
                            named("desnanot-jacobi", bound(desnanot_jacobi_error(20240611, 100), 1e-11)),
                            named("andreief", bound(andreief_error(3), 1e-8)),
                            named("vandermonde", bound(vandermonde_error(20240611, 100), 1e-11)),
                            named("b1/b2 commutativity", bound(backlund_commutativity_error(seeds, kXs, kD), 1e-9)),
                            named("b2 shift", bound(b2_shift_error(3, kAlphas, kXs, kD), 1e-8))});
         }},
        {12, "n = 5 exponent scan", [] { return exact(scan_mismatches(5, -12, 12)); }},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failures;
        std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
    }
    std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
