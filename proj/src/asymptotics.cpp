#include "p3fox/asymptotics.hpp"

#include <cctype>
#include <numbers>

namespace p3fox {

Rational Rational::parse(const std::string& text) {
    auto fail = [&]() -> Rational { throw std::invalid_argument("not a rational literal: '" + text + "'"); };
    if (text.empty()) return fail();
    const auto slash = text.find('/');
    auto parse_int = [&](const std::string& s) -> std::int64_t {
        std::size_t pos = 0;
        if (s.empty()) fail();
        const long long v = std::stoll(s, &pos);
        if (pos != s.size()) fail();
        return v;
    };
    if (slash != std::string::npos) {
        const std::int64_t den = parse_int(text.substr(slash + 1));
        if (den == 0) return fail();
        return {parse_int(text.substr(0, slash)), den};
    }
    std::size_t i = 0;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') negative = text[i++] == '-';
    std::int64_t num = 0, den = 1;
    bool digits = false, point = false;
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '.' && !point) {
            point = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits = true;
            num = num * 10 + (c - '0');
            if (point) den *= 10;
            if (den > 1000000000000LL || num > 1000000000000000LL) return fail();
        } else {
            return fail();
        }
    }
    if (!digits) return fail();
    return {negative ? -num : num, den};
}

namespace {

cplx ipow(cplx base, int k) {
    cplx r = 1.0;
    for (int i = 0; i < k; ++i) r *= base;
    return r;
}

struct Degeneracy {
    bool d2_zero;
    bool s_zero;
};

cplx s_factor(cplx alpha, const Cylinder& d) {
    return d.d1 * sin_pi(0.5 * alpha) + d.d2 * cos_pi(0.5 * alpha);
}

Degeneracy classify(cplx alpha, const Cylinder& d) {
    const double scale = std::abs(d.d1) + std::abs(d.d2);
    if (scale == 0.0) throw DegenerateCoefficientError("(d1, d2) = (0, 0)");
    const Degeneracy g{std::abs(d.d2) <= 1e-12 * scale, std::abs(s_factor(alpha, d)) <= 1e-12 * scale};
    if (g.d2_zero && g.s_zero) throw DegenerateCoefficientError("both d2 and d1 sin + d2 cos vanish");
    return g;
}

cplx principal_power(cplx base, cplx e) {
    if (base == 0.0) throw DomainError("power of zero");
    if (base.imag() == 0.0) base = {base.real(), 0.0};
    return std::exp(e * std::log(base));
}

}  // namespace

cplx delta_coefficient(cplx alpha, int n, int r, const Cylinder& d) {
    if (r < 0 || r > n) throw RangeError("delta_coefficient needs 0 <= r <= n");
    const cplx h = 0.5 * alpha;
    const long long e = (long long)n * (n - 1) / 2 + n - r + (long long)n * r;
    const double sign = e % 2 == 0 ? 1.0 : -1.0;
    const cplx g = gamma_product(h + double(2 * r - n + 1), n - r) * gamma_product(1.0 - h - double(2 * r - n), r) *
                   gamma_product(1.0, n - r) * gamma_product(1.0, r);
    const cplx c = sign * std::pow(std::numbers::pi, -n) * ipow(s_factor(alpha, d), r) * ipow(d.d2, n - r) * g;
    return require_finite(c, "delta coefficient");
}

Regime delta_leading(const SolutionParams& params) {
    const int n = params.n;
    if (n < 0) throw RangeError("n must be non-negative");
    Regime reg;
    reg.subject = Subject::delta;
    if (n == 0) {
        reg.case_label = 1;
        reg.coefficient = 1.0;
        return reg;
    }
    const Degeneracy g = classify(params.alpha, params.d);
    int r;
    if (g.d2_zero) {
        r = n;
    } else if (g.s_zero) {
        r = 0;
    } else {
        r = critical_r(params.alpha, n);
    }
    reg.r_c = r;
    reg.case_label = r == 0 ? 1 : (r == n ? 3 : 2);
    if (reg.case_label == 2) reg.j = r;
    reg.exponent = power_p(r, params.alpha, n);
    reg.coefficient = delta_coefficient(params.alpha, n, r, params.d);
    return reg;
}

cplx delta_leading_value(const SolutionParams& params, cplx x) {
    const Regime reg = delta_leading(params);
    return reg.coefficient * principal_power(0.5 * x, reg.exponent);
}

Regime u_regime(const SolutionParams& params) {
    const int n = params.n;
    if (n < 0) throw RangeError("n must be non-negative");
    const cplx a = params.alpha;
    const cplx h = 0.5 * a;
    const double nn = n;
    Regime reg;
    reg.subject = Subject::u;
    const Degeneracy g = classify(a, params.d);
    auto case1 = [&] {
        reg.case_label = 1;
        reg.exponent = 1.0;
        reg.coefficient = 2.0 / (2.0 * nn + 2.0 - a);
    };
    auto case4 = [&] {
        reg.case_label = 4;
        reg.exponent = -1.0;
        reg.coefficient = -h - nn;
    };
    if (g.d2_zero) {
        reg.r_c = n;
        case4();
        return reg;
    }
    if (g.s_zero) {
        reg.r_c = 0;
        case1();
        return reg;
    }
    reg.exponent = exponent_e(a, n);
    reg.r_c = critical_r(a, n);
    const double re = a.real();
    if (re > 2 * n + 2) {
        case1();
        return reg;
    }
    if (re < -2 * n) {
        case4();
        return reg;
    }
    const double sign = n % 2 == 0 ? 1.0 : -1.0;
    const cplx t = s_factor(a, params.d) / params.d.d2;
    const int lower = 2 * static_cast<int>(std::floor(re / 2.0));
    if ((2 * n - lower) % 4 == 0) {
        const int j = (2 * n - lower) / 4;
        const double jj = j;
        const cplx ratio = gamma(-h + nn - 2.0 * jj + 1.0) * rgamma(h - nn + 2.0 * jj);
        reg.case_label = 2;
        reg.j = j;
        reg.coefficient = sign * t * ratio * ratio * gamma(jj + h) * gamma(jj + 1.0) *
                          rgamma(-h + nn - jj + 1.0) * rgamma(nn - jj + 1.0);
    } else {
        const int j = (2 * n - lower - 2) / 4;
        const double jj = j;
        const cplx ratio = gamma(h - nn + 2.0 * jj + 1.0) * rgamma(-h + nn - 2.0 * jj);
        reg.case_label = 3;
        reg.j = j;
        reg.coefficient = sign / t * ratio * ratio * gamma(-h + nn - jj + 1.0) * gamma(nn - jj) *
                          rgamma(jj + h + 1.0) * rgamma(jj + 1.0);
    }
    require_finite(reg.coefficient, "q(alpha, n)");
    return reg;
}

cplx coefficient_q(const SolutionParams& params) { return u_regime(params).coefficient; }

cplx coefficient_q_composed(const SolutionParams& params) {
    const int n = params.n;
    const cplx a = params.alpha;
    auto c = [&](cplx alpha, int order) { return delta_leading({order, alpha, params.d}).coefficient; };
    return -c(a - 2.0, n + 1) * c(a, n) / (c(a - 2.0, n) * c(a, n + 1));
}

cplx u_leading(const SolutionParams& params, cplx x) {
    const Regime reg = u_regime(params);
    return reg.coefficient * principal_power(0.5 * x, reg.exponent);
}

std::vector<ExponentSample> exponent_scan(int n, Rational lo, Rational hi, Rational step) {
    if (step <= Rational(0)) throw RangeError("scan step must be positive");
    if (hi < lo) throw RangeError("scan range is empty");
    std::vector<ExponentSample> out;
    for (Rational a = lo; a <= hi; a += step) {
        ExponentSample s;
        s.alpha = a;
        try {
            s.r_c = critical_r(a, n);
            s.delta_exponent = power_p(s.r_c, a, n);
            s.u_exponent = exponent_e(a, n);
        } catch (const BoundaryAlphaError&) {
            s.boundary = true;
        }
        out.push_back(s);
    }
    return out;
}

}  // namespace p3fox
