#include "gonil/linalg.hpp"

#include <stdexcept>

namespace gonil {

Rref rref(Matrix a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    Rref out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (a(i, c) != 0) {
                pivot = i;
                break;
            }
        if (pivot == rows) continue;
        if (pivot != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(pivot, j));
        const Rational inv = Rational(1) / a(r, c);
        for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c) == 0) continue;
            const Rational f = a(i, c);
            for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rank = r;
    out.mat = std::move(a);
    return out;
}

std::size_t rank(const Matrix& a) { return rref(a).rank; }

Rational determinant(const Matrix& a) {
    if (!a.is_square()) throw std::invalid_argument("determinant: non-square matrix");
    Matrix m = a;
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = n;
        for (std::size_t i = c; i < n; ++i)
            if (m(i, c) != 0) {
                pivot = i;
                break;
            }
        if (pivot == n) return 0;
        if (pivot != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(c, j), m(pivot, j));
            det = -det;
        }
        det *= m(c, c);
        const Rational inv = Rational(1) / m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            const Rational f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

namespace {

Matrix kernel_from_rref(const Rref& r, std::size_t cols) {
    std::vector<bool> is_pivot(cols, false);
    for (auto c : r.pivot_cols) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix k(cols, free_cols.size());
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
        const std::size_t fc = free_cols[f];
        k(fc, f) = 1;
        for (std::size_t p = 0; p < r.pivot_cols.size(); ++p)
            k(r.pivot_cols[p], f) = -r.mat(p, fc);
    }
    return k;
}

}  // namespace

Matrix nullspace(const Matrix& a) {
    return kernel_from_rref(rref(a), a.cols());
}

SolveResult solve(const Matrix& a, const Matrix& b) {
    if (b.cols() != 1 || b.rows() != a.rows())
        throw std::invalid_argument("solve: right-hand side dimension mismatch");
    const Rref r = rref(a.hcat(b));
    SolveResult out;
    // Infeasible iff the augmented column is a pivot.
    for (auto c : r.pivot_cols)
        if (c == a.cols()) {
            out.feasible = false;
            out.kernel = kernel_from_rref(rref(a), a.cols());
            return out;
        }
    out.feasible = true;
    out.particular = Matrix(a.cols(), 1);
    for (std::size_t p = 0; p < r.pivot_cols.size(); ++p)
        out.particular(r.pivot_cols[p], 0) = r.mat(p, a.cols());
    // Kernel from the same elimination: drop the augmented column.
    Rref ra;
    ra.pivot_cols = r.pivot_cols;
    ra.rank = r.rank;
    ra.mat = r.mat.block(0, 0, r.mat.rows(), a.cols());
    out.kernel = kernel_from_rref(ra, a.cols());
    return out;
}

std::optional<Matrix> infeasibility_certificate(const Matrix& a, const Matrix& b) {
    // y with A^T y = 0 and b^T y = 1: solve the stacked system.
    Matrix stacked = a.transpose();
    Matrix rhs(a.cols() + 1, 1);
    Matrix full(a.cols() + 1, a.rows());
    full.set_block(0, 0, stacked);
    full.set_block(a.cols(), 0, b.transpose());
    rhs(a.cols(), 0) = 1;
    SolveResult s = solve(full, rhs);
    if (!s.feasible) return std::nullopt;
    return s.particular;
}

Matrix inverse(const Matrix& a) {
    if (!a.is_square()) throw std::invalid_argument("inverse: non-square matrix");
    const std::size_t n = a.rows();
    const Rref r = rref(a.hcat(Matrix::identity(n)));
    if (r.rank < n || (n > 0 && r.pivot_cols.back() >= n))
        throw std::invalid_argument("inverse: singular matrix");
    return r.mat.block(0, n, n, n);
}

Polynomial char_poly(const Matrix& a) {
    if (!a.is_square()) throw std::invalid_argument("char_poly: non-square matrix");
    const std::size_t n = a.rows();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    Matrix m = Matrix::zero(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A (M_{k-1} + c_{n-k+1} I)
        for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
        m = a * m;
        c[n - k] = -m.trace() / Rational(static_cast<long>(k));
    }
    return Polynomial(std::move(c));
}

bool is_positive_definite(const Matrix& g) {
    if (!g.is_symmetric())
        throw std::invalid_argument("is_positive_definite: non-symmetric matrix");
    // Symmetric elimination without pivoting: pivots are quotients of
    // consecutive leading principal minors.
    Matrix m = g;
    const std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        if (m(c, c) <= 0) return false;
        const Rational inv = Rational(1) / m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            const Rational f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return true;
}

bool in_span(const Matrix& basis, const Matrix& v) {
    if (basis.cols() == 0) return v.is_zero();
    return solve(basis, v).feasible;
}

bool same_span(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) return false;
    const std::size_t ra = rank(a), rb = rank(b);
    if (ra != rb) return false;
    return rank(a.hcat(b)) == ra;
}

}  // namespace gonil
