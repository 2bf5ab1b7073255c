#include "p3fox/painleve.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "p3fox/errors.hpp"
#include "p3fox/hankel.hpp"

namespace p3fox {

namespace {

constexpr double kSingularTol = 1e-13;

std::string describe(const char* what, cplx x) {
    std::ostringstream os;
    os << what << " at x = " << x;
    return os.str();
}

// Jets carried in long double through u0, the Backlund maps and the
// recurrence; rounded to double on the way out.
struct XJet {
    xcplx x, u, du;
};

xcplx widen(cplx z) { return {z.real(), z.imag()}; }
XJet widen(const JetPoint& j) { return {widen(j.x), widen(j.u), widen(j.du)}; }
cplx narrow(xcplx z) { return {static_cast<double>(z.real()), static_cast<double>(z.imag())}; }

JetPoint narrow(const XJet& j, const char* what = "u") {
    const std::string name(what);
    return {narrow(j.x), require_finite(narrow(j.u), name.c_str()),
            require_finite(narrow(j.du), (name + "'").c_str())};
}

xcplx rhs_x(const XJet& jet, const PIIIParams& p) {
    const auto [x, u, du] = jet;
    if (std::abs(u) < kSingularTol) throw SingularError(describe("u vanishes", narrow(x)));
    if (std::abs(x) < kSingularTol) throw SingularError(describe("x vanishes", narrow(x)));
    const xcplx al = widen(p.alpha), be = widen(p.beta);
    return du * du / u - du / x + (al * u * u + be) / x + u * u * u - 1.0L / u;
}

XJet u0_x(cplx x, cplx alpha, const Cylinder& d) {
    if (x == 0.0) throw DomainError("u0 at x = 0");
    const xcplx X = widen(x), a = widen(alpha);
    const xcplx c = cylinder_x(0.5L * a, X, d);
    if (std::abs(c) < kSingularTol) throw PoleError(describe("C_{alpha/2} vanishes (pole of u_0)", x));
    const xcplx u = -a / X + cylinder_x(0.5L * a + 1.0L, X, d) / c;
    return {X, u, u * u + ((a - 1.0L) / X) * u + 1.0L};
}

// sign = +1 gives B1, sign = -1 gives B2.
XJet backlund_x(const XJet& jet, const PIIIParams& p, long double sign, const char* name) {
    const auto [x, u, du] = jet;
    const xcplx al = widen(p.alpha), be = widen(p.beta);
    const xcplx d2u = rhs_x(jet, p);
    const xcplx N = x * du + sign * x * u * u - be * u - u + x;
    const xcplx M = x * du + sign * (x * u * u + al * u) + u + x;
    const xcplx D = u * M;
    if (std::abs(D) < kSingularTol)
        throw DegenerateError(describe((std::string(name) + " denominator vanishes").c_str(), narrow(x)));
    const xcplx common = du + x * d2u + sign * (u * u + 2.0L * x * u * du) + 1.0L;
    const xcplx dN = common - be * du - du;
    const xcplx dM = common + sign * al * du + du;
    const xcplx dD = du * M + u * dM;
    return {x, sign * N / D, sign * (dN * D - N * dD) / (D * D)};
}

XJet b1_x(const XJet& jet, const PIIIParams& p) { return backlund_x(jet, p, 1.0L, "B1"); }
XJet b2_x(const XJet& jet, const PIIIParams& p) { return backlund_x(jet, p, -1.0L, "B2"); }
}  // namespace

cplx piii_rhs(const JetPoint& jet, const PIIIParams& p) {
    return narrow(rhs_x(widen(jet), p));
}

namespace {

struct Differences {
    cplx u, d1, d2;
};

Differences richardson(const std::function<cplx(cplx)>& u_of_x, cplx x, double h) {
    const cplx u = u_of_x(x);
    const cplx up = u_of_x(x + h), um = u_of_x(x - h);
    const cplx up2 = u_of_x(x + 0.5 * h), um2 = u_of_x(x - 0.5 * h);
    const cplx d1_h = (up - um) / (2.0 * h);
    const cplx d1_h2 = (up2 - um2) / h;
    const cplx d2_h = (up - 2.0 * u + um) / (h * h);
    const cplx d2_h2 = (up2 - 2.0 * u + um2) / (0.25 * h * h);
    return {u, (4.0 * d1_h2 - d1_h) / 3.0, (4.0 * d2_h2 - d2_h) / 3.0};
}

}  // namespace

double piii_residual(const std::function<cplx(cplx)>& u_of_x, cplx x, const PIIIParams& p) {
    const double base = 1e-4 * std::max(1.0, std::abs(x));
    Differences fd = richardson(u_of_x, x, base);
    // Near a pole the stencil must shrink with the local scale |u/u'|; near a
    // zero u is smooth and a small stencil only amplifies rounding.
    const double scale = fd.d1 == 0.0 || std::abs(fd.u) <= 1.0 ? base : 1e-2 * std::abs(fd.u / fd.d1);
    if (scale < base) fd = richardson(u_of_x, x, scale);
    const cplx rhs = piii_rhs({x, fd.u, fd.d1}, p);
    return std::abs(fd.d2 - rhs) / std::max(1.0, std::abs(rhs));
}

RiccatiRow riccati_coefficients(int case_id, cplx alpha) {
    switch (case_id) {
        case 1: return {1.0, alpha - 1.0, 1.0, 2.0 - alpha};
        case 2: return {-1.0, -1.0 - alpha, -1.0, -2.0 - alpha};
        case 3: return {1.0, alpha - 1.0, -1.0, alpha - 2.0};
        case 4: return {-1.0, -1.0 - alpha, 1.0, alpha + 2.0};
        default: throw RangeError("Riccati case must be 1..4");
    }
}

JetPoint u0(cplx x, cplx alpha, const Cylinder& d) { return narrow(u0_x(x, alpha, d), "u0"); }

BacklundResult backlund_b1(const JetPoint& jet, const PIIIParams& p) {
    return {narrow(b1_x(widen(jet), p), "B1"), {p.alpha + 2.0, p.beta + 2.0}};
}

BacklundResult backlund_b2(const JetPoint& jet, const PIIIParams& p) {
    return {narrow(b2_x(widen(jet), p), "B2"), {p.alpha - 2.0, p.beta + 2.0}};
}

JetPoint u_n_backlund(const SolutionParams& params, cplx x) {
    if (params.n < 0) throw RangeError("n must be non-negative");
    XJet jet = u0_x(x, params.alpha, params.d);
    PIIIParams p{params.alpha, 2.0 - params.alpha};
    for (int k = 0; k < params.n; ++k) {
        try {
            jet = b1_x(jet, p);
            p = {p.alpha + 2.0, p.beta + 2.0};
        } catch (const DegenerateError& e) {
            throw DegenerateError("iteration " + std::to_string(k) + ": " + e.what());
        } catch (const SingularError& e) {
            throw DegenerateError("iteration " + std::to_string(k) + ": " + e.what());
        }
    }
    return narrow(jet, "u_n");
}

JetPoint u_n_determinant(const SolutionParams& params, cplx x) {
    const int n = params.n;
    if (n < 0) throw RangeError("n must be non-negative");
    if (x == 0.0) throw DomainError("u_n_determinant at x = 0");
    const cplx a = params.alpha;
    const auto& d = params.d;
    struct Factor {
        const char* name;
        int order;
        cplx alpha;
        double power;
    };
    const Factor factors[] = {{"Delta_{n+1}(alpha-2)", n + 1, a - 2.0, 1.0},
                              {"Delta_n(alpha)", n, a, 1.0},
                              {"Delta_{n+1}(alpha)", n + 1, a, -1.0},
                              {"Delta_n(alpha-2)", n, a - 2.0, -1.0}};
    cplx u = -1.0;
    cplx log_derivative = 0.0;
    for (const auto& f : factors) {
        const cplx value = delta(f.order, f.alpha, x, d);
        if (std::abs(value) < 1e-300) throw PoleError(std::string(f.name) + " vanishes at x");
        u = f.power > 0 ? u * value : u / value;
        log_derivative += f.power * delta_derivative(f.order, f.alpha, x, d) / value;
    }
    return {x, require_finite(u, "u_n"), require_finite(u * log_derivative, "u_n'")};
}

JetPoint u_n_recurrence(const SolutionParams& params, cplx x) {
    if (params.n < 0) throw RangeError("n must be non-negative");
    const xcplx a = widen(params.alpha);
    XJet jet = u0_x(x, params.alpha, params.d);
    const xcplx X = jet.x;
    for (int k = 0; k < params.n; ++k) {
        const long double kk = k;
        const xcplx u = jet.u, du = jet.du;
        xcplx d2u;
        try {
            d2u = rhs_x(jet, {params.alpha + 2.0 * k, -params.alpha + 2.0 + 2.0 * k});
        } catch (const SingularError& e) {
            throw DegenerateError("level " + std::to_string(k) + ": " + e.what());
        }
        const xcplx shared = X * u * u + X + X * du;
        const xcplx dshared = u * u + 2.0L * X * u * du + 1.0L + du + X * d2u;
        const xcplx cp = a - 2.0L * kk - 3.0L;
        const xcplx cq = a + 2.0L * kk + 1.0L;
        const xcplx P = cp * u + shared;
        const xcplx Q = cq * u + shared;
        const xcplx D = u * Q;
        if (std::abs(D) < kSingularTol)
            throw DegenerateError("recurrence denominator vanishes at level " + std::to_string(k));
        const xcplx dP = cp * du + dshared;
        const xcplx dD = du * Q + u * (cq * du + dshared);
        jet = {X, P / D, (dP * D - P * dD) / (D * D)};
    }
    return narrow(jet, "u_{n+1}");
}

cplx momentum(const JetPoint& jet, cplx beta) {
    const auto [x, u, du] = jet;
    if (std::abs(u) < kSingularTol) throw SingularError(describe("momentum needs u != 0", x));
    return (x * du + x * u * u - x + u * (beta - 1.0)) / (2.0 * u * u);
}

cplx hamiltonian(cplx u, cplx v, cplx x, const PIIIParams& p) {
    return v * v * u * u - v * (x * u * u - x + u * (p.beta - 1.0)) +
           2.0 * x * u * (p.beta - (2.0 + p.alpha)) / 4.0;
}

cplx aux_hamiltonian(cplx H, cplx u, cplx v, cplx x, const PIIIParams& p) {
    return 0.5 * (H + u * v - x * x + 0.25 * (p.beta - 4.0) * (p.beta + p.alpha - 2.0));
}

HamiltonianChain hamiltonian_chain(const SolutionParams& params, cplx x) {
    const JetPoint jet = u_n_determinant(params, x);
    const PIIIParams p = params.piii();
    const cplx v = momentum(jet, p.beta);
    const cplx H = hamiltonian(jet.u, v, x, p);
    return {jet, v, H, aux_hamiltonian(H, jet.u, v, x, p)};
}

cplx h_n(const SolutionParams& params, cplx x) { return hamiltonian_chain(params, x).h; }

}  // namespace p3fox
