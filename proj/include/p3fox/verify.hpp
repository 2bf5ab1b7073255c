#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "p3fox/painleve.hpp"

namespace p3fox {

// Measurements shared by the verify suite and the acceptance binary. Each
// returns the worst observed error (or a mismatch count) for the stated set.
namespace checks {

struct Screened {
    double max_error = 0.0;
    int evaluated = 0;
    int skipped = 0;  // points rejected by the |Delta| > 1e-6 screen
};

// Max pairwise relative difference of the determinant, Backlund and
// recurrence paths for u_n, n = 0..n_max.
Screened cross_path(int n_max, std::span<const cplx> alphas, std::span<const double> xs, const Cylinder& d);
// Max piii_residual of all three paths at the same points.
Screened path_residual(int n_max, std::span<const cplx> alphas, std::span<const double> xs, const Cylinder& d);

// Delta_n(x) / (c (x/2)^{p_c}) and u_n(x) / (q (x/2)^e).
double delta_ratio(const SolutionParams& params, double x);
double u_ratio(const SolutionParams& params, double x);
// Smallest exponent gap above p_c among r != r_c.
double delta_window_gap(const SolutionParams& params);

// Grid of Re(alpha) in (-2n-4, 2n+4) avoiding even integers by >= 0.05.
std::vector<double> alpha_grid(int n, int points);
int critical_r_mismatches(int n_max, int points);
// Piecewise e versus the p_c composition in exact rationals; mismatch count.
int exponent_mismatches(int n_max, int points);
double q_composition_error(int n_max, int points, const Cylinder& d);
// Exponent scan of Delta_n and u_n over [lo, hi] with step 1/10: number of
// samples disagreeing with the piecewise formulas plus breakpoints found
// away from even integers.
int scan_mismatches(int n, int lo, int hi);

double laguerre_error(int n_max, std::span<const double> gammas);
// Relative Toda residual with Richardson differences of ln tau (step 1e-3).
double toda_error(std::span<const int> ns, std::span<const double> xs, cplx alpha, const Cylinder& d);
double tau_hamiltonian_error(std::span<const int> ns, std::span<const double> xs, cplx alpha, const Cylinder& d);
double delta_derivative_error(std::uint64_t seed, int samples);
double desnanot_jacobi_error(std::uint64_t seed, int matrices);
double andreief_error(int n_max);
double vandermonde_error(std::uint64_t seed, int sets);

double gamma_recurrence_error();
double wronskian_error();
double derivative_identity_error(std::uint64_t seed, int samples);
// |J_nu(x) Gamma(nu+1) (x/2)^{-nu} - 1| at x = 1e-6 over a few orders.
double bessel_small_x_error();
// |Delta_1 (x/2)^{alpha/2} (-pi / (d2 Gamma(alpha/2))) - 1| at x.
double delta1_small_x_error(cplx alpha, double x, const Cylinder& d);

double backlund_commutativity_error(std::span<const cplx> alphas, std::span<const double> xs, const Cylinder& d);
double b2_shift_error(int n_max, std::span<const cplx> alphas, std::span<const double> xs, const Cylinder& d);

// |series_eval(expand_u) - u_n_determinant| / |u_n| over the given x.
double expansion_error(const SolutionParams& params, double budget, std::span<const double> xs);
double expansion_residual(const SolutionParams& params, double budget);
// |coefficient at (0,1) - q 2^{-e}| / |q 2^{-e}|.
double expansion_lead_error(const SolutionParams& params, double budget);
// 0 when the expansion, its residual and derivative-built pieces all carry
// odd m + l; otherwise the number of offending series.
int expansion_parity_violations(const SolutionParams& params, double budget);

struct CotTrace {
    double max_error = 0.0;
    int accepted = 0;
    int rejected = 0;
};
// u_0(., 1), d = (1, 0) from 0.5 to 6 against -cot x, outside discs of
// radius 0.2 around pi and 2 pi.
CotTrace cot_trace(double tol);
// Expansion-seeded trace of u_2(., 0.98), d = (0.55, 0.71) from 0.05 to 3
// against the determinant path.
double seeded_trace_error(double tol);
// Rectangle detour 1 -> 1+0.5i -> 2+0.5i -> 2 versus the direct trace.
double path_independence_error(double tol);
// Finite-difference residual of 1/u against PIII(-beta, -alpha) at the
// chart-V samples of the -cot trajectory.
double chart_symmetry_error(double tol);

}  // namespace checks

struct CheckResult {
    std::string module;
    std::string name;
    double value = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

struct VerifyOptions {
    bool fast = false;              // smaller grids, set by P3FOX_VERIFY_FAST=1
    std::uint64_t seed = 20240611;  // randomized identity tests
    std::string inject;             // module whose suite reports a forced failure
};

struct VerifyReport {
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;
    int failures() const;
};

// P3FOX_VERIFY_FAST=1 sets fast; P3FOX_VERIFY_INJECT=<module> sets inject.
VerifyOptions verify_options_from_env();
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace p3fox
