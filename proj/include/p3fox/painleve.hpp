#pragma once

#include <functional>

#include "p3fox/special.hpp"

namespace p3fox {

struct PIIIParams {
    cplx alpha{0.0};
    cplx beta{0.0};
};

// Selects u_n(x, alpha) built from C = d1 J + d2 Y; u_n solves PIII with
// parameters (alpha + 2n, beta()).
struct SolutionParams {
    int n = 0;
    cplx alpha{0.0};
    Cylinder d{};

    cplx beta() const { return -alpha + 2.0 + 2.0 * double(n); }
    PIIIParams piii() const { return {alpha + 2.0 * double(n), beta()}; }
};

struct JetPoint {
    cplx x{0.0};
    cplx u{0.0};
    cplx du{0.0};
};

struct BacklundResult {
    JetPoint jet;
    PIIIParams params;
};

struct RiccatiRow {
    double a;
    cplx b;  // multiplies 1/x
    double c;
    cplx beta;
};

// u'' from the PIII equation.
cplx piii_rhs(const JetPoint& jet, const PIIIParams& p);

// |u''_FD - piii_rhs| / max(1, |piii_rhs|) with Richardson-extrapolated
// central differences; the base step 1e-4 max(1, |x|) shrinks to
// 1e-2 |u/u'| near poles (|u| > 1).
double piii_residual(const std::function<cplx(cplx)>& u_of_x, cplx x, const PIIIParams& p);

RiccatiRow riccati_coefficients(int case_id, cplx alpha);

// Riccati seed: u_0 = -alpha/x + C_{alpha/2+1}/C_{alpha/2}, solving PIII(alpha, 2-alpha).
JetPoint u0(cplx x, cplx alpha, const Cylinder& d);

BacklundResult backlund_b1(const JetPoint& jet, const PIIIParams& p);
BacklundResult backlund_b2(const JetPoint& jet, const PIIIParams& p);

JetPoint u_n_backlund(const SolutionParams& params, cplx x);
JetPoint u_n_determinant(const SolutionParams& params, cplx x);
JetPoint u_n_recurrence(const SolutionParams& params, cplx x);

cplx momentum(const JetPoint& jet, cplx beta);
cplx hamiltonian(cplx u, cplx v, cplx x, const PIIIParams& p);
cplx aux_hamiltonian(cplx H, cplx u, cplx v, cplx x, const PIIIParams& p);

struct HamiltonianChain {
    JetPoint jet;
    cplx v;
    cplx H;
    cplx h;
};

// v_n, H_n, h_n for u_n at parameters (alpha + 2n, beta()).
HamiltonianChain hamiltonian_chain(const SolutionParams& params, cplx x);
cplx h_n(const SolutionParams& params, cplx x);

}  // namespace p3fox
