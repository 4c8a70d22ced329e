#include "stabpoly/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

namespace stabpoly {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    require(rows >= 0 && cols >= 0, "matrix dimensions must be nonnegative");
    e_.resize(static_cast<size_t>(rows) * static_cast<size_t>(cols));
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = ComplexRational(1);
    return m;
}

Matrix Matrix::diagonal(const std::vector<ComplexRational>& d) {
    Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
}

ComplexRational& Matrix::at(int i, int j) {
    require(i >= 0 && i < rows_ && j >= 0 && j < cols_, "matrix index out of range");
    return e_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
}

const ComplexRational& Matrix::at(int i, int j) const {
    require(i >= 0 && i < rows_ && j >= 0 && j < cols_, "matrix index out of range");
    return e_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
}

bool Matrix::is_hermitian() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i; j < cols_; ++j)
            if (at(i, j) != at(j, i).conj()) return false;
    return true;
}

bool Matrix::is_skew_hermitian() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i; j < cols_; ++j)
            if (at(i, j) != -at(j, i).conj()) return false;
    return true;
}

Matrix Matrix::select(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const {
    Matrix m(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
    for (size_t i = 0; i < row_idx.size(); ++i)
        for (size_t j = 0; j < col_idx.size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = at(row_idx[i], col_idx[j]);
    return m;
}

ComplexRational Matrix::determinant() const {
    require(is_square(), "determinant needs a square matrix");
    int n = rows_;
    if (n == 0) return ComplexRational(1);
    Matrix work = *this;
    ComplexRational det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!work.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return ComplexRational(0);
        if (pivot != col) {
            for (int j = col; j < n; ++j) {
                ComplexRational tmp = work.at(col, j);
                work.at(col, j) = work.at(pivot, j);
                work.at(pivot, j) = tmp;
            }
            det = -det;
        }
        det *= work.at(col, col);
        for (int r = col + 1; r < n; ++r) {
            if (work.at(r, col).is_zero()) continue;
            ComplexRational factor = work.at(r, col) / work.at(col, col);
            for (int j = col; j < n; ++j) work.at(r, j) -= factor * work.at(col, j);
        }
    }
    return det;
}

std::vector<ComplexRational> Matrix::char_poly() const {
    require(is_square(), "characteristic polynomial needs a square matrix");
    int n = rows_;
    std::vector<ComplexRational> c(static_cast<size_t>(n) + 1);
    c[static_cast<size_t>(n)] = ComplexRational(1);
    if (n == 0) return c;
    // Faddeev-LeVerrier: exact over the rationals
    Matrix m = *this;
    for (int k = 1; k <= n; ++k) {
        ComplexRational tr(0);
        for (int i = 0; i < n; ++i) tr += m.at(i, i);
        ComplexRational ck = -(tr / ComplexRational(k));
        c[static_cast<size_t>(n - k)] = ck;
        if (k == n) break;
        for (int i = 0; i < n; ++i) m.at(i, i) += ck;
        // m <- A * m
        Matrix next(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                ComplexRational acc(0);
                for (int t = 0; t < n; ++t) acc += at(i, t) * m.at(t, j);
                next.at(i, j) = acc;
            }
        m = next;
    }
    return c;
}

bool psd_check(const Matrix& a) {
    require(a.is_hermitian(), "positive semidefiniteness needs a Hermitian matrix");
    // Hermitian matrices are real-rooted, so all eigenvalues are >= 0 exactly
    // when the characteristic coefficients alternate: (-1)^(n-k) c_k >= 0.
    std::vector<ComplexRational> c = a.char_poly();
    int n = a.rows();
    for (int k = 0; k <= n; ++k) {
        const ComplexRational& ck = c[static_cast<size_t>(k)];
        ensure(ck.im.is_zero(), "Hermitian characteristic coefficients must be real");
        Rational signed_val = (n - k) % 2 == 0 ? ck.re : -ck.re;
        if (signed_val.sign() < 0) return false;
    }
    return true;
}

namespace {

Polynomial det_over_columns(const std::vector<std::vector<Polynomial>>& m, int nvars,
                            std::uint32_t colmask, int row,
                            std::unordered_map<std::uint32_t, Polynomial>& memo) {
    if (colmask == 0) return Polynomial::constant(nvars, ComplexRational(1));
    auto it = memo.find(colmask);
    if (it != memo.end()) return it->second;
    Polynomial acc(nvars);
    int sign = 1;
    int n = static_cast<int>(m.size());
    for (int j = 0; j < n; ++j) {
        if (!(colmask & (1u << j))) continue;
        const Polynomial& entry = m[static_cast<size_t>(row)][static_cast<size_t>(j)];
        if (!entry.is_zero()) {
            Polynomial sub =
                det_over_columns(m, nvars, colmask & ~(1u << j), row + 1, memo);
            Polynomial term = entry * sub;
            if (sign < 0) term *= ComplexRational(-1);
            acc += term;
        }
        sign = -sign;
    }
    memo.emplace(colmask, acc);
    return acc;
}

}  // namespace

Polynomial poly_matrix_det(const std::vector<std::vector<Polynomial>>& m) {
    int n = static_cast<int>(m.size());
    require(n <= 20, "symbolic determinant size guard");
    int nvars = 0;
    for (const auto& row : m) {
        require(static_cast<int>(row.size()) == n, "symbolic determinant needs a square matrix");
        for (const auto& p : row) nvars = std::max(nvars, p.nvars());
    }
    if (n == 0) return Polynomial::constant(nvars, ComplexRational(1));
    for (const auto& row : m)
        for (const auto& p : row)
            require(p.nvars() == nvars || p.is_zero(),
                    "symbolic determinant entries disagree on variable count");
    std::vector<std::vector<Polynomial>> work = m;
    for (auto& row : work)
        for (auto& p : row)
            if (p.is_zero()) p = Polynomial(nvars);
    std::unordered_map<std::uint32_t, Polynomial> memo;
    return det_over_columns(work, nvars, (1u << n) - 1, 0, memo);
}

}  // namespace stabpoly
