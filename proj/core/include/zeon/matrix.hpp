#pragma once

#include <complex>
#include <vector>

#include "zeon/error.hpp"

namespace zeon {

using Complex = std::complex<double>;

// Small dense row-major complex matrix. Sizes in this library stay below 64.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> data);
    Matrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t n) { return Matrix(n, n); }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Complex operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    const std::vector<Complex>& data() const noexcept { return data_; }

    Matrix adjoint() const;
    Matrix transpose() const;
    Complex trace() const;
    double frobenius() const;
    double max_abs() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(Complex s);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, Complex s) { return a *= s; }
    friend Matrix operator*(Complex s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    std::vector<Complex> apply(const std::vector<Complex>& v) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix commutator(const Matrix& a, const Matrix& b);
Matrix anticommutator(const Matrix& a, const Matrix& b);
Complex determinant(Matrix m);  // partial-pivot LU
bool is_hermitian(const Matrix& m, double tol);
bool is_symmetric(const Matrix& m, double tol);
bool is_antisymmetric(const Matrix& m, double tol);

}  // namespace zeon
