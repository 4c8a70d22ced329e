#pragma once

#include <vector>

#include "stabpoly/polynomial.hpp"
#include "stabpoly/rational.hpp"

namespace stabpoly {

/// Dense matrix over the Gaussian rationals, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols);
    static Matrix identity(int n);
    static Matrix diagonal(const std::vector<ComplexRational>& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    ComplexRational& at(int i, int j);
    const ComplexRational& at(int i, int j) const;

    bool is_hermitian() const;
    bool is_skew_hermitian() const;

    /// Keeps the listed rows and columns, in the given order.
    Matrix select(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const;

    /// Exact determinant by Gaussian elimination; requires a square matrix.
    ComplexRational determinant() const;

    /// Monic characteristic polynomial det(tI - A), coefficients lowest
    /// degree first; requires a square matrix.
    std::vector<ComplexRational> char_poly() const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<ComplexRational> e_;
};

/// Positive semidefiniteness, decided exactly through characteristic
/// coefficient signs; requires a Hermitian matrix.
bool psd_check(const Matrix& a);

/// Exact determinant of a square matrix of polynomials (cofactor expansion,
/// memoized over column subsets; intended for sizes <= 8).
Polynomial poly_matrix_det(const std::vector<std::vector<Polynomial>>& m);

}  // namespace stabpoly
