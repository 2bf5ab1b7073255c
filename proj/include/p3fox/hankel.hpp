#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "p3fox/special.hpp"

namespace p3fox {

class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    cplx operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    const std::vector<cplx>& entries() const { return data_; }

    // Copy with the listed rows and columns removed.
    ComplexMatrix without(std::span<const std::size_t> drop_rows,
                          std::span<const std::size_t> drop_cols) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

cplx determinant(const ComplexMatrix& m);

// Delta_n = det{C_{alpha/2 - j + k}(x)}_{j,k=0}^{n-1}, Delta_0 = 1.
ComplexMatrix delta_matrix(int n, cplx alpha, cplx x, const Cylinder& d);
cplx delta(int n, cplx alpha, cplx x, const Cylinder& d);
cplx delta_derivative(int n, cplx alpha, cplx x, const Cylinder& d);

// tau_n = x^{n(n-1)} (-1)^{n(n-1)/2} Delta_n.
cplx tau(int n, cplx alpha, cplx x, const Cylinder& d);

cplx laguerre_moment(cplx gamma_, int j);
cplx laguerre_hankel_numeric(cplx gamma_, int n);
cplx laguerre_hankel_closed(cplx gamma_, int n);

// Indices are 0-based.
double desnanot_jacobi_residual(const ComplexMatrix& m, std::size_t i, std::size_t j);

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Generalized Gauss-Laguerre rule for the weight x^gamma e^{-x} on [0, inf).
QuadratureRule gauss_laguerre(int count, double gamma_);

double andreief_residual(int n, double gamma_);
double vandermonde_residual(std::span<const cplx> xs);

}  // namespace p3fox
