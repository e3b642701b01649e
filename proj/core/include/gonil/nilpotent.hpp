#ifndef GONIL_NILPOTENT_HPP
#define GONIL_NILPOTENT_HPP

#include <string>

#include "gonil/graph.hpp"
#include "gonil/linalg.hpp"
#include "gonil/matrix.hpp"

namespace gonil {

/// Linear subspace of an ambient coordinate space, given by an exact basis
/// (columns). Construction checks linear independence.
struct Subspace {
    std::size_t ambient = 0;
    Matrix basis;  // ambient x dim, columns independent

    Subspace() = default;
    Subspace(std::size_t ambient_dim, Matrix basis_cols);
    std::size_t dim() const { return basis.cols(); }
    bool contains(const Matrix& v) const;
    bool equals(const Subspace& other) const;
};

/// The two-step nilpotent Lie algebra of a graph: generators e_1..e_n for
/// the vertices, central z_1..z_m for the edges, [e_i, e_j] = z_alpha
/// exactly when edge alpha joins i < j.
///
/// Coordinates are always with respect to this construction basis, in the
/// order e_1..e_n, z_1..z_m. Other bases are carried as change-of-basis
/// matrices.
class GraphLieAlgebra {
public:
    explicit GraphLieAlgebra(Graph g);

    const Graph& graph() const { return graph_; }
    int n() const { return graph_.n(); }
    int m() const { return graph_.m(); }
    int dim() const { return n() + m(); }

    /// 0-based coordinate index of e_i (i is a 1-based vertex).
    std::size_t e_index(int i) const { return static_cast<std::size_t>(i - 1); }
    /// 0-based coordinate index of z_{alpha+1} (alpha is a 0-based edge).
    std::size_t z_index(int alpha) const {
        return static_cast<std::size_t>(n() + alpha);
    }
    std::string basis_label(std::size_t index) const;

    /// Lie bracket of coordinate vectors; lands in the z-span.
    Matrix bracket(const Matrix& x, const Matrix& y) const;

    /// [n, n] = span(z_1..z_m).
    Subspace derived_subalgebra() const;
    /// span(z's) + span(e_i : i isolated).
    Subspace center() const;

private:
    Graph graph_;
};

}  // namespace gonil

#endif
