#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <type_traits>
#include <vector>

#include "p3fox/errors.hpp"
#include "p3fox/painleve.hpp"
#include "p3fox/rational.hpp"
#include "p3fox/special.hpp"

namespace p3fox {

enum class Subject { delta, u };

// Small-x regime. For subject delta the exponent is p_c and the coefficient
// c(alpha, n) in Delta_n ~ c (x/2)^{p_c}; for subject u they are e and q.
struct Regime {
    Subject subject = Subject::delta;
    int case_label = 0;
    int j = -1;  // window index, -1 outside the window cases
    int r_c = 0;
    cplx exponent{0.0};
    cplx coefficient{0.0};
};

namespace detail {

inline double real_part(const cplx& z) { return z.real(); }
inline double real_part(double v) { return v; }
inline Rational real_part(const Rational& r) { return r; }
inline double to_double(double v) { return v; }
inline double to_double(const Rational& r) { return r.to_double(); }

inline void require_off_edge(double re, double edge, const char* what) {
    if (std::abs(re - edge) < 1e-9)
        throw BoundaryAlphaError(std::string(what) + ": Re(alpha) = " + std::to_string(re) +
                                 " sits on the window edge " + std::to_string(edge));
}

}  // namespace detail

// p(r, alpha, n) = alpha r - n alpha / 2 - 2 r (n - r).
template <class T>
T power_p(int r, const T& alpha, int n) {
    if (n < 0 || r < 0 || r > n) throw RangeError("power_p needs 0 <= r <= n");
    return alpha * T(r) - alpha * T(n) / T(2) - T(2 * r * (n - r));
}

// Index minimizing Re p(r, alpha, n); floor form of the piecewise rule.
template <class T>
int critical_r(const T& alpha, int n) {
    if (n < 0) throw RangeError("critical_r needs n >= 0");
    if (n == 0) return 0;
    const auto re = detail::real_part(alpha);
    for (int j = 0; j < n; ++j) detail::require_off_edge(detail::to_double(re), 2 * n - 4 * j - 2, "critical_r");
    long long r;
    if constexpr (std::is_same_v<T, Rational>) {
        r = (Rational(n, 2) - re / Rational(4) + Rational(1, 2)).floor();
    } else {
        r = static_cast<long long>(std::floor(0.5 * n - re / 4.0 + 0.5));
    }
    return static_cast<int>(std::clamp<long long>(r, 0, n));
}

// Brute-force argmin of Re p(r, alpha, n) over r = 0..n.
template <class T>
int critical_r_brute(const T& alpha, int n) {
    int best = 0;
    for (int r = 1; r <= n; ++r)
        if (detail::real_part(power_p(r, alpha, n)) < detail::real_part(power_p(best, alpha, n))) best = r;
    return best;
}

template <class T>
T power_pc(const T& alpha, int n) {
    return power_p(critical_r(alpha, n), alpha, n);
}

// Piecewise exponent of u_n ~ q (x/2)^e.
template <class T>
T exponent_e(const T& alpha, int n) {
    if (n < 0) throw RangeError("exponent_e needs n >= 0");
    const auto re = detail::real_part(alpha);
    const double rd = detail::to_double(re);
    for (int edge = -2 * n; edge <= 2 * n + 2; edge += 2) detail::require_off_edge(rd, edge, "exponent_e");
    if (rd > 2 * n + 2) return T(1);
    if (rd < -2 * n) return T(-1);
    const int lower = 2 * static_cast<int>(std::floor(rd / 2.0));
    if ((2 * n - lower) % 4 == 0) {
        const int j = (2 * n - lower) / 4;
        return alpha - T(2 * n - 4 * j + 1);
    }
    const int j = (2 * n - lower - 2) / 4;
    return -alpha + T(2 * n - 4 * j - 1);
}

// e(alpha, n) = p_c(alpha-2, n+1) - p_c(alpha-2, n) + p_c(alpha, n) - p_c(alpha, n+1).
template <class T>
T exponent_e_composed(const T& alpha, int n) {
    const T a2 = alpha - T(2);
    return power_pc(a2, n + 1) - power_pc(a2, n) + power_pc(alpha, n) - power_pc(alpha, n + 1);
}

// c(alpha, n) evaluated at the index r selected by delta_leading.
cplx delta_coefficient(cplx alpha, int n, int r, const Cylinder& d);

Regime delta_leading(const SolutionParams& params);
cplx delta_leading_value(const SolutionParams& params, cplx x);

cplx coefficient_q(const SolutionParams& params);
// -c(alpha-2, n+1) c(alpha, n) / (c(alpha-2, n) c(alpha, n+1)).
cplx coefficient_q_composed(const SolutionParams& params);

Regime u_regime(const SolutionParams& params);
cplx u_leading(const SolutionParams& params, cplx x);

struct ExponentSample {
    Rational alpha;
    bool boundary = false;
    int r_c = 0;
    Rational delta_exponent;
    Rational u_exponent;
};

// Exact exponent scan over alpha = lo, lo + step, ..., <= hi.
std::vector<ExponentSample> exponent_scan(int n, Rational lo, Rational hi, Rational step);

}  // namespace p3fox
