#include "p3fox/hankel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "p3fox/errors.hpp"

namespace p3fox {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, cplx(0.0)) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) throw ShapeError("entry count does not match rows*cols");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::without(std::span<const std::size_t> drop_rows,
                                     std::span<const std::size_t> drop_cols) const {
    auto dropped = [](std::span<const std::size_t> list, std::size_t k) {
        return std::find(list.begin(), list.end(), k) != list.end();
    };
    std::vector<std::size_t> keep_r, keep_c;
    for (std::size_t r = 0; r < rows_; ++r)
        if (!dropped(drop_rows, r)) keep_r.push_back(r);
    for (std::size_t c = 0; c < cols_; ++c)
        if (!dropped(drop_cols, c)) keep_c.push_back(c);
    ComplexMatrix out(keep_r.size(), keep_c.size());
    for (std::size_t r = 0; r < keep_r.size(); ++r)
        for (std::size_t c = 0; c < keep_c.size(); ++c) out(r, c) = (*this)(keep_r[r], keep_c[c]);
    return out;
}

cplx determinant(const ComplexMatrix& m) {
    if (!m.square()) {
        std::ostringstream os;
        os << "determinant of a " << m.rows() << "x" << m.cols() << " matrix";
        throw ShapeError(os.str());
    }
    const std::size_t n = m.rows();
    std::vector<cplx> a = m.entries();
    cplx det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(a[k * n + k]);
        for (std::size_t r = k + 1; r < n; ++r) {
            const double v = std::abs(a[r * n + k]);
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best == 0.0) return 0.0;
        if (piv != k) {
            std::swap_ranges(a.begin() + k * n, a.begin() + (k + 1) * n, a.begin() + piv * n);
            det = -det;
        }
        const cplx pivot = a[k * n + k];
        det *= pivot;
        for (std::size_t r = k + 1; r < n; ++r) {
            const cplx f = a[r * n + k] / pivot;
            if (f == 0.0) continue;
            for (std::size_t c = k + 1; c < n; ++c) a[r * n + c] -= f * a[k * n + c];
        }
    }
    return require_finite(det, "determinant");
}

namespace {

void require_order(int n) {
    if (n < 0) throw RangeError("determinant order must be non-negative");
}

// C_{alpha/2 + s}(x) for s = -(n-1) .. n-1, indexed by s + n - 1.
std::vector<cplx> cylinder_band(int n, cplx alpha, cplx x, const Cylinder& d, int extra_top) {
    std::vector<cplx> band;
    for (int s = -(n - 1); s <= n - 1 + extra_top; ++s) band.push_back(cylinder(0.5 * alpha + double(s), x, d));
    return band;
}

}  // namespace

ComplexMatrix delta_matrix(int n, cplx alpha, cplx x, const Cylinder& d) {
    require_order(n);
    ComplexMatrix m(n, n);
    if (n == 0) return m;
    const auto band = cylinder_band(n, alpha, x, d, 0);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) m(j, k) = band[k - j + n - 1];
    return m;
}

cplx delta(int n, cplx alpha, cplx x, const Cylinder& d) {
    if (n == 0) return 1.0;
    return determinant(delta_matrix(n, alpha, x, d));
}

cplx delta_derivative(int n, cplx alpha, cplx x, const Cylinder& d) {
    require_order(n);
    if (n == 0) return 0.0;
    if (x == 0.0) throw DomainError("delta_derivative at x = 0");
    const auto band = cylinder_band(n, alpha, x, d, 1);
    // C'_nu = (nu/x) C_nu - C_{nu+1}, reusing the band.
    std::vector<cplx> dband(2 * n - 1);
    for (int s = -(n - 1); s <= n - 1; ++s) {
        const cplx nu = 0.5 * alpha + double(s);
        dband[s + n - 1] = (nu / x) * band[s + n - 1] - band[s + n];
    }
    ComplexMatrix m(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) m(j, k) = band[k - j + n - 1];
    cplx total = 0.0;
    for (int row = 0; row < n; ++row) {
        ComplexMatrix r = m;
        for (int k = 0; k < n; ++k) r(row, k) = dband[k - row + n - 1];
        total += determinant(r);
    }
    return require_finite(total, "delta_derivative");
}

cplx tau(int n, cplx alpha, cplx x, const Cylinder& d) {
    require_order(n);
    const int e = n * (n - 1);
    const double sign = ((e / 2) % 2 == 0) ? 1.0 : -1.0;
    return require_finite(sign * std::pow(x, e) * delta(n, alpha, x, d), "tau");
}

cplx laguerre_moment(cplx gamma_, int j) {
    if (j < 0 || gamma_.real() + j <= -1.0) throw DomainError("laguerre_moment needs Re(gamma) + j > -1");
    return gamma(gamma_ + double(j) + 1.0);
}

cplx laguerre_hankel_numeric(cplx gamma_, int n) {
    if (gamma_.real() <= -1.0) throw DomainError("laguerre_hankel_numeric needs Re(gamma) > -1");
    require_order(n);
    const std::size_t size = n + 1;
    std::vector<cplx> moments(2 * size - 1);
    for (std::size_t j = 0; j < moments.size(); ++j) moments[j] = laguerre_moment(gamma_, int(j));
    ComplexMatrix m(size, size);
    for (std::size_t j = 0; j < size; ++j)
        for (std::size_t k = 0; k < size; ++k) m(j, k) = moments[j + k];
    return determinant(m);
}

cplx laguerre_hankel_closed(cplx gamma_, int n) {
    require_order(n);
    // prod_j Gamma(j+gamma+1) Gamma(j+1) = G(n+gamma+2)/G(gamma+1) * G(n+2).
    return require_finite(gamma_product(gamma_ + 1.0, n + 1) * gamma_product(1.0, n + 1),
                          "laguerre_hankel_closed");
}

double desnanot_jacobi_residual(const ComplexMatrix& m, std::size_t i, std::size_t j) {
    if (!m.square() || m.rows() < 2) throw ShapeError("Desnanot-Jacobi needs a square matrix of size >= 2");
    if (i == j || i >= m.rows() || j >= m.rows()) throw ShapeError("Desnanot-Jacobi needs distinct in-range indices");
    const std::size_t ij[] = {i, j};
    const std::size_t ii[] = {i};
    const std::size_t jj[] = {j};
    const cplx lhs = determinant(m) * determinant(m.without(ij, ij));
    const cplx rhs = determinant(m.without(ii, ii)) * determinant(m.without(jj, jj)) -
                     determinant(m.without(ii, jj)) * determinant(m.without(jj, ii));
    return std::abs(lhs - rhs) / (1.0 + std::abs(rhs));
}

QuadratureRule gauss_laguerre(int count, double gamma_) {
    if (count < 1 || gamma_ <= -1.0) throw DomainError("gauss_laguerre needs count >= 1 and gamma > -1");
    QuadratureRule rule;
    rule.nodes.resize(count);
    rule.weights.resize(count);
    const double nn = count;
    double z = 0.0;
    for (int i = 0; i < count; ++i) {
        // Initial guesses as in the classical Numerical Recipes scheme.
        if (i == 0) {
            z = (1.0 + gamma_) * (3.0 + 0.92 * gamma_) / (1.0 + 2.4 * nn + 1.8 * gamma_);
        } else if (i == 1) {
            z += (15.0 + 6.25 * gamma_) / (1.0 + 0.9 * gamma_ + 2.5 * nn);
        } else {
            const double ai = i - 1;
            z += ((1.0 + 2.55 * ai) / (1.9 * ai) + 1.26 * ai * gamma_ / (1.0 + 3.5 * ai)) *
                 (z - rule.nodes[i - 2]) / (1.0 + 0.3 * gamma_);
        }
        // Newton in long double: the largest of 64 nodes sits near 230 and
        // double iterates cycle above a 1e-15 relative step.
        long double zl = z, p1 = 0.0L, p2 = 0.0L, pp = 0.0L;
        bool done = false;
        for (int it = 0; it < 100; ++it) {
            p1 = 1.0L;
            p2 = 0.0L;
            for (int j = 0; j < count; ++j) {
                const long double p3 = p2;
                p2 = p1;
                p1 = ((2 * j + 1 + gamma_ - zl) * p2 - (j + gamma_) * p3) / (j + 1);
            }
            pp = (nn * p1 - (nn + gamma_) * p2) / zl;
            const long double step = p1 / pp;
            zl -= step;
            if (std::abs(step) <= 1e-16L * std::abs(zl)) {
                done = true;
                break;
            }
        }
        if (!done) throw ConvergenceError("Gauss-Laguerre Newton iteration stalled");
        z = double(zl);
        rule.nodes[i] = z;
        rule.weights[i] = double(-std::exp(std::lgamma(gamma_ + nn) - std::lgamma(nn)) / (pp * nn * p2));
    }
    return rule;
}

namespace {

double vandermonde_squared(std::span<const double> xs) {
    double v = 1.0;
    for (std::size_t a = 0; a < xs.size(); ++a)
        for (std::size_t b = a + 1; b < xs.size(); ++b) v *= xs[b] - xs[a];
    return v * v;
}

}  // namespace

double andreief_residual(int n, double gamma_) {
    if (n < 1 || n > 3) throw DomainError("andreief_residual supports n in {1,2,3}");
    if (gamma_ <= -1.0) throw DomainError("andreief_residual needs gamma > -1");
    const QuadratureRule rule = gauss_laguerre(64, gamma_);
    const std::size_t q = rule.nodes.size();
    // det{x_k^{j}} det{x_k^{j}} = Vandermonde^2; the weight is built into the rule.
    double integral = 0.0;
    std::vector<std::size_t> idx(n, 0);
    std::vector<double> pts(n);
    while (true) {
        double w = 1.0;
        for (int a = 0; a < n; ++a) {
            pts[a] = rule.nodes[idx[a]];
            w *= rule.weights[idx[a]];
        }
        integral += w * vandermonde_squared(pts);
        int a = 0;
        while (a < n && ++idx[a] == q) idx[a++] = 0;
        if (a == n) break;
    }
    ComplexMatrix m(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) m(j, k) = laguerre_moment(gamma_, j + k);
    double factorial = 1.0;
    for (int k = 2; k <= n; ++k) factorial *= k;
    const cplx exact = factorial * determinant(m);
    return std::abs(integral - exact) / std::abs(exact);
}

double vandermonde_residual(std::span<const cplx> xs) {
    const std::size_t n = xs.size();
    if (n > 8) throw RangeError("vandermonde_residual supports at most 8 points");
    ComplexMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        cplx p = 1.0;
        for (std::size_t k = 0; k < n; ++k) {
            m(j, k) = p;
            p *= xs[j];
        }
    }
    cplx product = 1.0;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) product *= xs[b] - xs[a];
    const cplx det = determinant(m);
    if (product == 0.0) return std::abs(det);
    return std::abs(det - product) / std::abs(product);
}

}  // namespace p3fox
