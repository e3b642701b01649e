#ifndef GONIL_METRIC_HPP
#define GONIL_METRIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "gonil/nilpotent.hpp"
#include "gonil/prng.hpp"

namespace gonil {

/// Inner product on the algebra, stored as its Gram matrix in the
/// construction basis. Construction validates exact symmetry and positive
/// definiteness.
class Metric {
public:
    explicit Metric(Matrix gram);
    static Metric standard(std::size_t dim);

    const Matrix& gram() const { return gram_; }
    std::size_t dim() const { return gram_.rows(); }
    bool operator==(const Metric&) const = default;

private:
    Matrix gram_;
};

/// Parses the metric document format: a JSON object with fields
///   dim:  integer
///   gram: dim x dim array of rational strings ("p/q" or "p")
Metric parse_metric(const std::string& text);
std::string format_metric(const Metric& m);

/// Random SPD Gram with small rational entries (M^T M + D, D positive
/// diagonal): exercises cross terms between the e- and z-spans.
Metric random_spd_metric(std::size_t dim, Rng& rng);

/// A standard basis {e'_i, z_alpha} adapted to a metric: e'_i = e_i minus
/// its metric projection onto the derived algebra, so that
/// a = span(e'_i) is the metric-orthogonal complement of z. The brackets
/// of the new basis realize the same graph pattern.
struct AdaptedBasis {
    Matrix change;  // columns: new basis vectors in construction coordinates
    Matrix gram;    // Gram of the metric in the adapted basis (block diagonal)
    int n = 0;
    int m = 0;

    Matrix a_gram() const { return gram.block(0, 0, n, n); }
    Matrix z_gram() const {
        return gram.block(static_cast<std::size_t>(n), static_cast<std::size_t>(n),
                          static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    }
};

AdaptedBasis adapt(const GraphLieAlgebra& algebra, const Metric& metric);

/// The blocks A (on a) and C (on z) of the adapted Gram; both symmetric
/// positive definite.
struct ACSplit {
    Matrix A;
    Matrix C;
};

ACSplit ac_split(const AdaptedBasis& basis);

enum class JKind { Metric, Standard };

/// The family of operators J_{z_alpha} on a, in adapted a-coordinates.
/// For Z with z-coordinates zeta, J_Z = sum zeta_alpha J_{z_alpha}.
struct JPencil {
    std::vector<Matrix> ops;  // one n x n matrix per edge
    JKind kind = JKind::Standard;

    Matrix of(const Matrix& z_coords) const;
};

/// J w.r.t. the standard inner product: J0_{z_alpha} has +1 at (j, i) and
/// -1 at (i, j) for edge alpha = {i < j}. Depends only on the algebra.
JPencil standard_j_pencil(const GraphLieAlgebra& algebra);

/// J w.r.t. the metric carried by the adapted basis, solved exactly from
/// (J_Z X, Y) = (Z, [X, Y]).
JPencil j_pencil(const GraphLieAlgebra& algebra, const AdaptedBasis& basis);

/// B(K1, K2) = -1/2 tr(K1 K2).
Rational b_form(const Matrix& k1, const Matrix& k2);

struct Jj0Check {
    bool ok = true;
    Matrix offending_z;  // set when ok is false
};

/// Consistency self-test of the identity J_Z = A^{-1} J0_{CZ} on every
/// basis z and `extra_samples` random rational Z.
Jj0Check verify_jj0(const GraphLieAlgebra& algebra, const AdaptedBasis& basis,
                    std::size_t extra_samples = 4, std::uint64_t seed = 1);

}  // namespace gonil

#endif
