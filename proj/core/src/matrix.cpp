#include "gonil/matrix.hpp"

#include <stdexcept>

namespace gonil {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("ragged matrix initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::zero(std::size_t rows, std::size_t cols) {
    return Matrix(rows, cols);
}

Matrix Matrix::column(std::initializer_list<Rational> entries) {
    Matrix m(entries.size(), 1);
    std::size_t i = 0;
    for (const auto& e : entries) m(i++, 0) = e;
    return m;
}

Matrix Matrix::column(const std::vector<Rational>& entries) {
    Matrix m(entries.size(), 1);
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, 0) = entries[i];
    return m;
}

Matrix Matrix::unit(std::size_t rows, std::size_t cols, std::size_t row,
                    std::size_t col) {
    Matrix m(rows, cols);
    m(row, col) = 1;
    return m;
}

Matrix Matrix::from_columns(const std::vector<Matrix>& cols) {
    if (cols.empty()) return Matrix();
    Matrix m(cols.front().rows(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].cols() != 1 || cols[j].rows() != m.rows())
            throw std::invalid_argument("from_columns: bad column shape");
        for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = cols[j](i, 0);
    }
    return m;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix addition: dimension mismatch");
    Matrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k)
        out.data_[k] = data_[k] + rhs.data_[k];
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix subtraction: dimension mismatch");
    Matrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k)
        out.data_[k] = data_[k] - rhs.data_[k];
    return out;
}

Matrix Matrix::operator-() const {
    Matrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = -data_[k];
    return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("matrix product: dimension mismatch");
    Matrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Rational& b = rhs(k, j);
                if (b == 0) continue;
                out(i, j) += a * b;
            }
        }
    return out;
}

Matrix Matrix::operator*(const Rational& s) const {
    Matrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] * s;
    return out;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix addition: dimension mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
    return *this;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

Rational Matrix::trace() const {
    if (!is_square()) throw std::invalid_argument("trace: non-square matrix");
    Rational t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& e : data_)
        if (e != 0) return false;
    return true;
}

bool Matrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

Matrix Matrix::block(std::size_t row0, std::size_t col0, std::size_t nrows,
                     std::size_t ncols) const {
    if (row0 + nrows > rows_ || col0 + ncols > cols_)
        throw std::invalid_argument("block: out of range");
    Matrix out(nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j)
            out(i, j) = (*this)(row0 + i, col0 + j);
    return out;
}

void Matrix::set_block(std::size_t row0, std::size_t col0, const Matrix& b) {
    if (row0 + b.rows() > rows_ || col0 + b.cols() > cols_)
        throw std::invalid_argument("set_block: out of range");
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            (*this)(row0 + i, col0 + j) = b(i, j);
}

Matrix Matrix::col(std::size_t j) const { return block(0, j, rows_, 1); }

Matrix Matrix::submatrix(const std::vector<std::size_t>& rows,
                         const std::vector<std::size_t>& cols) const {
    Matrix out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            out(i, j) = (*this)(rows[i], cols[j]);
    return out;
}

Matrix Matrix::hcat(const Matrix& rhs) const {
    if (rows_ != rhs.rows_)
        throw std::invalid_argument("hcat: row count mismatch");
    Matrix out(rows_, cols_ + rhs.cols_);
    out.set_block(0, 0, *this);
    out.set_block(0, cols_, rhs);
    return out;
}

Matrix Matrix::vectorize() const {
    Matrix out(rows_ * cols_, 1);
    for (std::size_t k = 0; k < data_.size(); ++k) out(k, 0) = data_[k];
    return out;
}

Matrix Matrix::commutator(const Matrix& rhs) const {
    return (*this) * rhs - rhs * (*this);
}

}  // namespace gonil
