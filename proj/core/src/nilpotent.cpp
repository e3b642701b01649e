#include "gonil/nilpotent.hpp"

#include <stdexcept>
#include <utility>

namespace gonil {

Subspace::Subspace(std::size_t ambient_dim, Matrix basis_cols)
    : ambient(ambient_dim), basis(std::move(basis_cols)) {
    if (basis.cols() > 0 && basis.rows() != ambient)
        throw std::invalid_argument("subspace basis has wrong ambient dimension");
    if (basis.cols() == 0) basis = Matrix::zero(ambient, 0);
    if (rank(basis) != basis.cols())
        throw std::invalid_argument("subspace basis is linearly dependent");
}

bool Subspace::contains(const Matrix& v) const { return in_span(basis, v); }

bool Subspace::equals(const Subspace& other) const {
    return ambient == other.ambient && same_span(basis, other.basis);
}

GraphLieAlgebra::GraphLieAlgebra(Graph g) : graph_(std::move(g)) {}

std::string GraphLieAlgebra::basis_label(std::size_t index) const {
    const std::size_t nn = static_cast<std::size_t>(n());
    if (index < nn) return "e" + std::to_string(index + 1);
    return "z" + std::to_string(index - nn + 1);
}

Matrix GraphLieAlgebra::bracket(const Matrix& x, const Matrix& y) const {
    const std::size_t d = static_cast<std::size_t>(dim());
    if (x.rows() != d || x.cols() != 1 || y.rows() != d || y.cols() != 1)
        throw std::invalid_argument("bracket: coordinate vectors of length " +
                                    std::to_string(d) + " expected");
    Matrix out(d, 1);
    const auto& edges = graph_.edges();
    for (std::size_t a = 0; a < edges.size(); ++a) {
        const std::size_t i = e_index(edges[a].u), j = e_index(edges[a].v);
        const Rational c = x(i, 0) * y(j, 0) - x(j, 0) * y(i, 0);
        if (c != 0) out(z_index(static_cast<int>(a)), 0) = c;
    }
    return out;
}

Subspace GraphLieAlgebra::derived_subalgebra() const {
    const std::size_t d = static_cast<std::size_t>(dim());
    Matrix basis(d, static_cast<std::size_t>(m()));
    for (int a = 0; a < m(); ++a) basis(z_index(a), static_cast<std::size_t>(a)) = 1;
    return Subspace(d, basis);
}

Subspace GraphLieAlgebra::center() const {
    const std::size_t d = static_cast<std::size_t>(dim());
    std::vector<Matrix> cols;
    for (int a = 0; a < m(); ++a) {
        Matrix v(d, 1);
        v(z_index(a), 0) = 1;
        cols.push_back(v);
    }
    for (int i = 1; i <= n(); ++i)
        if (graph_.is_isolated(i)) {
            Matrix v(d, 1);
            v(e_index(i), 0) = 1;
            cols.push_back(v);
        }
    if (cols.empty()) return Subspace(d, Matrix::zero(d, 0));
    return Subspace(d, Matrix::from_columns(cols));
}

}  // namespace gonil
