#!/usr/bin/env python3
"""Arbitrary-precision reference values for the C++ test suites.

Every number frozen into tests/*.cpp with a "mpmath oracle" comment was
produced by this script. It evaluates the same quantities along routes that
do not share code with the library: mpmath's besselj/bessely, symbolic
differentiation via mpmath.diff, and the classical Bessel closed forms.

Run: python3 tests/oracle/piii_oracle.py
"""
import mpmath as mp

mp.mp.dps = 40


def C(nu, x, d1, d2):
    return d1 * mp.besselj(nu, x) + d2 * mp.bessely(nu, x)


def delta(n, a, x, d1, d2):
    if n == 0:
        return mp.mpf(1)
    M = mp.matrix(n, n)
    for j in range(n):
        for k in range(n):
            M[j, k] = C(a / 2 - j + k, x, d1, d2)
    return mp.det(M)


def u_det(n, a, x, d1, d2):
    return -delta(n + 1, a - 2, x, d1, d2) * delta(n, a, x, d1, d2) / (
        delta(n + 1, a, x, d1, d2) * delta(n, a - 2, x, d1, d2))


def rhs(x, u, du, al, be):
    return du**2 / u - du / x + (al * u**2 + be) / x + u**3 - 1 / u


def b1(x, u, du, al, be):
    f = lambda t, uu, dd: (t * dd + t * uu**2 - be * uu - uu + t) / (
        uu * (t * dd + t * uu**2 + al * uu + uu + t))
    w = f(x, u, du)
    # total derivative through (x, u, u') with u'' from the equation
    h = mp.mpf(10)**-15
    d2 = rhs(x, u, du, al, be)
    dw = (f(x + h, u + h * du, du + h * d2) - f(x - h, u - h * du, du - h * d2)) / (2 * h)
    return w, dw


def main():
    d1, d2 = mp.mpf('0.55'), mp.mpf('0.71')
    print("J_0.49(1.3)        =", mp.besselj(mp.mpf('0.49'), mp.mpf('1.3')))
    print("C_0.49(1.0)        =", C(mp.mpf('0.49'), 1, d1, d2))
    print("Gamma(2.3)         =", mp.gamma(mp.mpf('2.3')))
    a = mp.mpf('0.98')
    print("Delta_2(0.98,x=1)  =", delta(2, a, 1, d1, d2))
    for n in range(4):
        print(f"u_{n}(0.98, x=1)    =", u_det(n, a, 1, d1, d2))
        print(f"u_{n}(0.98, x=2)    =", u_det(n, a, 2, d1, d2))
    print("u_0(x=1, a=1, d=(1,0)) =", u_det(0, mp.mpf(1), 1, 1, 0), -mp.cot(1))

    # Recurrence: check the sign of the 2n term against the determinant path.
    x = mp.mpf('1.2')
    for n in range(3):
        u = u_det(n, a, x, d1, d2)
        du = mp.diff(lambda t: u_det(n, a, t, d1, d2), x)
        nxt = u_det(n + 1, a, x, d1, d2)
        for sgn in (+1, -1):
            num = (a + sgn * 2 * n - 3) * u + x * u**2 + x + x * du
            den = u**2 * ((a + 2 * n + 1) * u + x * u**2 + x + x * du)
            print(f"n={n} sign={sgn:+d}: u*num/den - u_(n+1) =", mp.nstr(u * num / den - nxt, 5),
                  "  num/(u den) - u_(n+1) =", mp.nstr(num / (u * den) * u**2 / u - nxt, 5))

    # Hamiltonian chain identity and tau link.
    def v_of(u, du, x, be):
        return (x * du + x * u**2 - x + u * (be - 1)) / (2 * u**2)

    def H_of(u, v, x, al, be):
        return v**2 * u**2 - v * (x * u**2 - x + u * (be - 1)) + 2 * x * u * (be - (2 + al)) / 4

    def h_of(H, u, v, x, al, be):
        return (H + u * v - x**2 + (be - 4) * (be + al - 2) / 4) / 2

    def h_n(n, x):
        u = u_det(n, a, x, d1, d2)
        du = mp.diff(lambda t: u_det(n, a, t, d1, d2), x)
        al, be = a + 2 * n, 2 - a + 2 * n
        v = v_of(u, du, x, be)
        return h_of(H_of(u, v, x, al, be), u, v, x, al, be), u, v

    for n in range(3):
        hn, un, vn = h_n(n, x)
        hn1, _, _ = h_n(n + 1, x)
        be0 = 2 - a
        ident = hn1 - (hn - vn * un - mp.mpf(3) / 2 + a / 4 + 3 * be0 / 4 + 2 * n)
        tau = lambda t: t**(n * (n - 1)) * (-1)**(n * (n - 1) // 2) * delta(n, a, t, d1, d2)
        xdlog = x * mp.diff(tau, x) / tau(x)
        print(f"n={n}: h_n={mp.nstr(hn, 12)}  x(ln tau)'={mp.nstr(xdlog, 12)}  identity residual={mp.nstr(ident, 5)}")

    # Toda equation for tau_n
    for n in (1, 2, 3):
        tau = lambda t, m: t**(m * (m - 1)) * (-1)**(m * (m - 1) // 2) * delta(m, a, t, d1, d2)
        L = lambda t: mp.log(tau(t, n))
        # (x d/dx)^2 ln tau = x L' + x^2 L''
        lhs = x * mp.diff(L, x) + x**2 * mp.diff(L, x, 2)
        rhs_ = tau(x, n + 1) * tau(x, n - 1) / tau(x, n)**2
        print(f"Toda n={n}: lhs={mp.nstr(lhs, 12)} rhs={mp.nstr(rhs_, 12)}")

    # u0(alpha) jet and the B1 image versus u_1 from determinants
    x = mp.mpf('1.3')
    u0 = u_det(0, a, x, d1, d2)
    du0 = u0**2 + (a - 1) / x * u0 + 1
    w, dw = b1(x, u0, du0, a, 2 - a)
    print("B1(u0) =", w, " u_1 =", u_det(1, a, x, d1, d2))

    # Momentum at the u0 jet, alpha=0.98, x=1
    x = mp.mpf(1)
    u0 = u_det(0, a, x, d1, d2)
    du0 = u0**2 + (a - 1) / x * u0 + 1
    be = 2 - a
    v0 = v_of(u0, du0, x, be)
    print("u0(x=1) =", u0, " du0 =", du0, " v0 =", v0)
    x = mp.mpf('1.3')
    u0 = u_det(0, a, x, d1, d2)
    du0 = u0**2 + (a - 1) / x * u0 + 1
    v0 = v_of(u0, du0, x, be)
    H0 = H_of(u0, v0, x, a, be)
    print("x=1.3: u0 =", u0, " v0 =", v0, " H0 =", H0, " h0 =", h_of(H0, u0, v0, x, a, be))

    # Small-x ratio tests
    for (n, al) in ((3, 7), (3, 1), (3, -7)):
        for xs in ('1e-3', '5e-4', '2.5e-4'):
            print(f"Delta_{n}(alpha={al}, x={xs}) =", mp.nstr(delta(n, mp.mpf(al), mp.mpf(xs), d1, d2), 20))
    for (n, al, dd1, dd2) in ((2, mp.mpf(7), d1, d2), (2, mp.mpf('0.98'), d1, d2), (2, mp.mpf('-0.98'), d1, d2),
                              (2, mp.mpf('3.5'), d1, d2), (2, mp.mpf('0.98'), 1, 0), (1, mp.mpf('-5.5'), d1, d2)):
        print(f"u_{n}(alpha={al}, d=({dd1},{dd2}), x=1e-3) =", mp.nstr(u_det(n, al, mp.mpf('1e-3'), dd1, dd2), 20))
    print("u_2(0.98, x=0.02) =", mp.nstr(u_det(2, a, mp.mpf('0.02'), d1, d2), 20))
    print("u_1(0.98, x=0.05) =", mp.nstr(u_det(1, a, mp.mpf('0.05'), d1, d2), 20))
    print("u_2(0.98, x=3)    =", mp.nstr(u_det(2, a, mp.mpf(3), d1, d2), 20))

    # Complex arguments.
    nu, z = mp.mpc('0.3', '0.4'), mp.mpc('1.1', '-0.7')
    print("J_(0.3+0.4i)(1.1-0.7i) =", mp.besselj(nu, z))
    print("Y_(0.3+0.4i)(1.1-0.7i) =", mp.bessely(nu, z))
    print("Gamma(-1.5+0.5i)       =", mp.gamma(mp.mpc('-1.5', '0.5')))
    print("Gamma(0.5)^2 - pi      =", mp.gamma(mp.mpf('0.5'))**2 - mp.pi)
    ac = mp.mpc(1, '0.5')
    print("u_1(1+0.5i, d=(1,0), x=1-0.2i) =", u_det(1, ac, mp.mpc(1, '-0.2'), 1, 0))
    print("u_2(0.98, d=(0.55,0.71), x=1.5+0.5i) =", u_det(2, a, mp.mpc('1.5', '0.5'), d1, d2))
    print("u_3(-223/225, d=(0.55,0.71), x=1) =", u_det(3, mp.mpf(-223) / 225, 1, d1, d2))


if __name__ == "__main__":
    main()
