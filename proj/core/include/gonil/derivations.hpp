#ifndef GONIL_DERIVATIONS_HPP
#define GONIL_DERIVATIONS_HPP

#include <optional>
#include <vector>

#include "gonil/metric.hpp"
#include "gonil/nilpotent.hpp"

namespace gonil {

/// Basis of Der(n). Every derivation preserves the derived algebra, so in
/// block form it is [[T, 0], [S, R]] with T on a, S: a -> z, R on z. R is
/// determined by T; S is free. The basis below lists the lifted (T, R)
/// elements followed by the Hom(a, z) matrix units.
struct DerivationSpace {
    std::vector<Matrix> basis;    // (n+m) x (n+m)
    std::vector<Matrix> a_parts;  // admissible T, n x n
    std::vector<Matrix> z_parts;  // induced R per T, m x m
    std::size_t hom_block_dim = 0;

    std::size_t dim() const { return basis.size(); }

    /// On cluster graphs: whether the a-part space equals the direct sum
    /// of End(a_mu) over the classes (isolated block included). The sum
    /// misses clique-to-isolated maps whenever isolated vertices coexist
    /// with edges, so this can legitimately be false.
    std::optional<bool> end_sum_matches;
};

/// The full derivation algebra, from the linear condition that
/// J0_Z T + T^t J0_Z lies in span(J0) for every basis Z. Independent of
/// any metric.
DerivationSpace derivation_space(const GraphLieAlgebra& algebra);

/// Basis of Der(n) intersected with the skew operators of the metric:
/// block-diagonal (T, R), T and R metric-skew, J_{Rz} = [T, J_z].
struct SkewDerivationSpace {
    std::vector<Matrix> basis;    // (n+m) x (n+m), block diagonal
    std::vector<Matrix> a_parts;  // T
    std::vector<Matrix> z_parts;  // R
    std::size_t dim() const { return basis.size(); }
};

SkewDerivationSpace skew_derivation_space(const GraphLieAlgebra& algebra,
                                          const AdaptedBasis& basis);

/// The matrix units indexed by preceq-comparable pairs, under both
/// orientation conventions.
struct DmSpan {
    std::vector<std::pair<int, int>> pairs;   // (i, j) with i preceq j
    std::vector<Matrix> units_ei_to_ej;       // e_i -> e_j per pair
    std::vector<Matrix> units_ej_to_ei;       // e_j -> e_i per pair
};

DmSpan dm_span(const Graph& g);

/// Which orientation of dm_span matches the a-part projection of the
/// derivation algebra (both can match when the pair set is symmetric).
struct DmComparison {
    bool ei_to_ej_matches = false;
    bool ej_to_ei_matches = false;
};

DmComparison dm_compare(const Graph& g, const DerivationSpace& der);

}  // namespace gonil

#endif
