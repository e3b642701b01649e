#ifndef GONIL_LINALG_HPP
#define GONIL_LINALG_HPP

#include <optional>
#include <vector>

#include "gonil/matrix.hpp"
#include "gonil/polynomial.hpp"

namespace gonil {

/// Reduced row echelon form together with the pivot columns.
struct Rref {
    Matrix mat;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

Rref rref(Matrix a);

std::size_t rank(const Matrix& a);

/// Exact determinant by Gaussian elimination with row swaps.
Rational determinant(const Matrix& a);

/// Columns form a basis of {x : A x = 0}.
Matrix nullspace(const Matrix& a);

struct SolveResult {
    bool feasible = false;
    Matrix particular;  // one solution, column vector (valid iff feasible)
    Matrix kernel;      // nullspace basis, one column per basis vector
};

/// Solves A x = b exactly. b must be a column vector with rows(A) entries.
SolveResult solve(const Matrix& a, const Matrix& b);

/// When A x = b is infeasible, produces y with y^T A = 0 and y^T b = 1,
/// an exact certificate of infeasibility.
std::optional<Matrix> infeasibility_certificate(const Matrix& a, const Matrix& b);

/// Matrix inverse; throws std::invalid_argument when singular or non-square.
Matrix inverse(const Matrix& a);

/// Characteristic polynomial det(xI - A), monic of degree = dim, by the
/// Faddeev-LeVerrier recurrence.
Polynomial char_poly(const Matrix& a);

/// Exact test via the signs of the LDL^T pivots (equivalent to positivity
/// of all leading principal minors). Throws on non-symmetric input.
bool is_positive_definite(const Matrix& g);

/// True iff v lies in the column span of basis.
bool in_span(const Matrix& basis, const Matrix& v);

/// True iff the two column spans coincide as subspaces.
bool same_span(const Matrix& a, const Matrix& b);

}  // namespace gonil

#endif
