#pragma once

#include <complex>

namespace p3fox {

using cplx = std::complex<double>;
using xcplx = std::complex<long double>;

// Coefficients of the cylinder function C_nu = d1 J_nu + d2 Y_nu.
struct Cylinder {
    cplx d1{1.0};
    cplx d2{0.0};
};

// sin(pi z) and cos(pi z) with the real part reduced mod 2 before scaling,
// so that integer and half-integer arguments give exact zeros.
cplx sin_pi(cplx z);
cplx cos_pi(cplx z);

cplx gamma(cplx z);
cplx rgamma(cplx z);  // 1/Gamma, entire; zero at the poles of Gamma

// prod_{j=0}^{k-1} Gamma(z + j), i.e. G(z+k)/G(z) for the Barnes G-function.
cplx gamma_product(cplx z, int k);

cplx bessel_j(cplx nu, cplx x);
cplx bessel_y(cplx nu, cplx x);

cplx cylinder(cplx nu, cplx x, const Cylinder& d);
cplx cylinder(cplx nu, cplx x, cplx d1, cplx d2);

// C'_nu = (nu/x) C_nu - C_{nu+1}.
cplx cylinder_derivative(cplx nu, cplx x, const Cylinder& d);
cplx cylinder_derivative(cplx nu, cplx x, cplx d1, cplx d2);

// Extended-precision kernels behind the functions above. Backlund chains
// amplify input error by up to ~1e8, so they start from these.
xcplx sin_pi_x(xcplx z);
xcplx cos_pi_x(xcplx z);
xcplx rgamma_x(xcplx z);
xcplx bessel_j_x(xcplx nu, xcplx x);
xcplx bessel_y_x(xcplx nu, xcplx x);
xcplx cylinder_x(xcplx nu, xcplx x, const Cylinder& d);

// Raises OverflowError naming `what` if z has a non-finite component.
cplx require_finite(cplx z, const char* what);

}  // namespace p3fox
