#ifndef GONIL_MATRIX_HPP
#define GONIL_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "gonil/rational.hpp"

namespace gonil {

/// Dense matrix over Rational, row-major. Dimensions up to a few dozen;
/// every operation is exact.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols);
    /// Column vector from entries.
    static Matrix column(std::initializer_list<Rational> entries);
    static Matrix column(const std::vector<Rational>& entries);
    /// n x n matrix with a single 1 at (row, col).
    static Matrix unit(std::size_t rows, std::size_t cols, std::size_t row,
                       std::size_t col);
    /// Assembles a matrix whose columns are the given column vectors.
    static Matrix from_columns(const std::vector<Matrix>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) {
        return data_[i * cols_ + j];
    }
    const Rational& operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix operator-() const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix operator*(const Rational& s) const;
    Matrix& operator+=(const Matrix& rhs);
    bool operator==(const Matrix& rhs) const = default;

    Matrix transpose() const;
    Rational trace() const;
    bool is_zero() const;
    bool is_symmetric() const;

    Matrix block(std::size_t row0, std::size_t col0, std::size_t nrows,
                 std::size_t ncols) const;
    void set_block(std::size_t row0, std::size_t col0, const Matrix& b);
    Matrix col(std::size_t j) const;
    /// Rows and columns restricted to the given index sets (in order).
    Matrix submatrix(const std::vector<std::size_t>& rows,
                     const std::vector<std::size_t>& cols) const;
    /// [this | rhs] side by side.
    Matrix hcat(const Matrix& rhs) const;
    /// The entries read row by row as a single column vector.
    Matrix vectorize() const;

    /// Lie bracket this*rhs - rhs*this.
    Matrix commutator(const Matrix& rhs) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

inline Matrix operator*(const Rational& s, const Matrix& m) { return m * s; }

}  // namespace gonil

#endif
