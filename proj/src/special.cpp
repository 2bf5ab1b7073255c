#include "p3fox/special.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "p3fox/errors.hpp"

namespace p3fox {

namespace {

constexpr long double kPiL = 3.141592653589793238462643383279502884L;
constexpr long double kHalfLog2PiL = 0.918938533204672741780329736405617640L;

// B_{2k} / (2k (2k - 1)), k = 1..12.
constexpr std::array<long double, 12> kStirling = {
    1.0L / 12.0L,           -1.0L / 360.0L,          1.0L / 1260.0L,
    -1.0L / 1680.0L,        1.0L / 1188.0L,          -691.0L / 360360.0L,
    1.0L / 156.0L,          -3617.0L / 122400.0L,    43867.0L / 244188.0L,
    -174611.0L / 125400.0L, 77683.0L / 5796.0L,      -236364091.0L / 1506960.0L};
constexpr long double kStirlingReach = 20.0L;

constexpr double kPoleTol = 1e-12;
constexpr int kBesselMaxTerms = 200;
constexpr long double kBesselTol = 1e-14L;

cplx narrow(xcplx z) { return {static_cast<double>(z.real()), static_cast<double>(z.imag())}; }
xcplx widen(cplx z) { return {z.real(), z.imag()}; }

// Reduce into [-1, 1] modulo 2; exact for binary floating point.
long double reduce_mod2(long double a) { return a - 2.0L * std::round(0.5L * a); }

long double sin_pi_real(long double r) {
    if (r == 0.0L || std::abs(r) == 1.0L) return 0.0L;
    if (std::abs(r) == 0.5L) return r > 0.0L ? 1.0L : -1.0L;
    return std::sin(kPiL * r);
}

long double cos_pi_real(long double r) {
    if (std::abs(r) == 0.5L) return 0.0L;
    if (r == 0.0L) return 1.0L;
    if (std::abs(r) == 1.0L) return -1.0L;
    return std::cos(kPiL * r);
}

template <class T>
bool near_pole(std::complex<T> z) {
    if (std::abs(z.imag()) >= kPoleTol || z.real() > 0.5) return false;
    const T k = std::round(z.real());
    return k <= 0 && std::abs(z.real() - k) < kPoleTol;
}

// Shifted Stirling series, Re(z) >= 0.5.
xcplx gamma_stirling(xcplx z) {
    xcplx product = 1.0L;
    xcplx w = z;
    while (std::abs(w) < kStirlingReach) {
        product *= w;
        w += 1.0L;
    }
    const xcplx inv = 1.0L / w;
    const xcplx inv2 = inv * inv;
    xcplx series = 0.0L;
    for (auto it = kStirling.rbegin(); it != kStirling.rend(); ++it) series = series * inv2 + *it;
    const xcplx lg = (w - 0.5L) * std::log(w) - w + kHalfLog2PiL + series * inv;
    return std::exp(lg) / product;
}

bool is_negative_integer(xcplx nu) {
    return nu.imag() == 0.0L && nu.real() < 0.0L && nu.real() == std::round(nu.real());
}

void check_integer_order(xcplx nu) {
    const long double k = std::round(nu.real());
    if (std::abs(nu - xcplx(k, 0.0L)) < 1e-10L) {
        std::ostringstream os;
        os << "bessel_y is not defined at integer order " << narrow(nu);
        throw IntegerOrderError(os.str());
    }
}

}  // namespace

cplx require_finite(cplx z, const char* what) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw OverflowError(std::string(what) + " is not finite");
    return z;
}

xcplx sin_pi_x(xcplx z) {
    const long double r = reduce_mod2(z.real());
    const long double b = kPiL * z.imag();
    return {sin_pi_real(r) * std::cosh(b), cos_pi_real(r) * std::sinh(b)};
}

xcplx cos_pi_x(xcplx z) {
    const long double r = reduce_mod2(z.real());
    const long double b = kPiL * z.imag();
    return {cos_pi_real(r) * std::cosh(b), -sin_pi_real(r) * std::sinh(b)};
}

cplx sin_pi(cplx z) { return narrow(sin_pi_x(widen(z))); }
cplx cos_pi(cplx z) { return narrow(cos_pi_x(widen(z))); }

xcplx rgamma_x(xcplx z) {
    if (z.real() < 0.5L) return sin_pi_x(z) * gamma_stirling(1.0L - z) / kPiL;
    return 1.0L / gamma_stirling(z);
}

cplx gamma(cplx z) {
    if (near_pole(z)) {
        std::ostringstream os;
        os << "gamma has a pole at z = " << z;
        throw PoleError(os.str());
    }
    const xcplx zl = widen(z);
    if (z.real() < 0.5) return require_finite(narrow(kPiL / (sin_pi_x(zl) * gamma_stirling(1.0L - zl))), "gamma");
    return require_finite(narrow(gamma_stirling(zl)), "gamma");
}

cplx rgamma(cplx z) { return narrow(rgamma_x(widen(z))); }

cplx gamma_product(cplx z, int k) {
    if (k < 0) throw RangeError("gamma_product needs k >= 0");
    cplx product = 1.0;
    cplx factor = 0.0;
    for (int j = 0; j < k; ++j) {
        const cplx arg = z + static_cast<double>(j);
        if (near_pole(arg)) {
            std::ostringstream os;
            os << "factor " << j << " of gamma_product hits a pole at " << arg;
            throw PoleError(os.str());
        }
        factor = j == 0 ? gamma(arg) : factor * (arg - 1.0);
        product *= factor;
    }
    return require_finite(product, "gamma_product");
}

xcplx bessel_j_x(xcplx nu, xcplx x) {
    if (x == 0.0L) {
        if (nu == 0.0L) return 1.0L;
        if (nu.real() > 0.0L) return 0.0L;
        throw DomainError("bessel_j at x = 0 needs Re(nu) > 0 or nu = 0");
    }
    if (is_negative_integer(nu)) {
        const long double m = -nu.real();
        const long double sign = std::fmod(m, 2.0L) == 0.0L ? 1.0L : -1.0L;
        return sign * bessel_j_x(m, x);
    }
    if (x.imag() == 0.0L) x = {x.real(), 0.0L};  // principal branch on the cut
    const xcplx half = 0.5L * x;
    const xcplx q = -half * half;
    const long double reach = std::abs(half);

    xcplx term = 1.0L;
    xcplx sum = 1.0L;
    bool converged = false;
    for (int k = 0; k < kBesselMaxTerms; ++k) {
        const long double kk = static_cast<long double>(k + 1);
        term *= q / (kk * (nu + kk));
        sum += term;
        if (kk > reach && std::abs(term) <= 1e-19L * std::abs(sum)) {
            converged = true;
            break;
        }
    }
    if (!converged && std::abs(term) > kBesselTol * std::abs(sum)) {
        std::ostringstream os;
        os << "bessel_j series did not converge for nu = " << narrow(nu) << ", x = " << narrow(x);
        throw ConvergenceError(os.str());
    }
    return std::exp(nu * std::log(half)) * sum * rgamma_x(nu + 1.0L);
}

xcplx bessel_y_x(xcplx nu, xcplx x) {
    check_integer_order(nu);
    return (cos_pi_x(nu) * bessel_j_x(nu, x) - bessel_j_x(-nu, x)) / sin_pi_x(nu);
}

cplx bessel_j(cplx nu, cplx x) { return require_finite(narrow(bessel_j_x(widen(nu), widen(x))), "bessel_j"); }
cplx bessel_y(cplx nu, cplx x) { return require_finite(narrow(bessel_y_x(widen(nu), widen(x))), "bessel_y"); }

xcplx cylinder_x(xcplx nu, xcplx x, const Cylinder& d) {
    xcplx r = 0.0L;
    if (d.d1 != 0.0) r += widen(d.d1) * bessel_j_x(nu, x);
    if (d.d2 != 0.0) r += widen(d.d2) * bessel_y_x(nu, x);
    return r;
}

cplx cylinder(cplx nu, cplx x, const Cylinder& d) {
    return require_finite(narrow(cylinder_x(widen(nu), widen(x), d)), "cylinder");
}

cplx cylinder(cplx nu, cplx x, cplx d1, cplx d2) { return cylinder(nu, x, Cylinder{d1, d2}); }

cplx cylinder_derivative(cplx nu, cplx x, const Cylinder& d) {
    if (x == 0.0) throw DomainError("cylinder_derivative at x = 0");
    return (nu / x) * cylinder(nu, x, d) - cylinder(nu + 1.0, x, d);
}

cplx cylinder_derivative(cplx nu, cplx x, cplx d1, cplx d2) {
    return cylinder_derivative(nu, x, Cylinder{d1, d2});
}

}  // namespace p3fox
