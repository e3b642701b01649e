#ifndef GONIL_GONR_HPP
#define GONIL_GONR_HPP

#include <cstdint>
#include <string>

#include "gonil/derivations.hpp"
#include "gonil/polynomial.hpp"

namespace gonil {

/// One Gordon feasibility check: does a metric-skew derivation D exist
/// with [D_a, J_Z] = 0 and D_a X = J_Z X?
struct GordonCheck {
    bool feasible = false;
    Matrix witness;  // full (n+m) x (n+m) derivation, valid iff feasible
    Matrix farkas;   // y with y^t M = 0, y^t b = 1, valid iff infeasible
};

GordonCheck gordon_feasible(const GraphLieAlgebra& algebra,
                            const AdaptedBasis& basis,
                            const SkewDerivationSpace& skew, const Matrix& z,
                            const Matrix& x);

/// Sampled verdict on the geodesic orbit property. A No is exact and
/// carries the witness pair; a ProbablyYes only reports which pairs were
/// tested.
struct GordonVerdict {
    enum class Tag { No, ProbablyYes };
    Tag tag = Tag::ProbablyYes;

    // No:
    Matrix witness_z;
    Matrix witness_x;
    Matrix farkas;
    bool witness_from_family = false;  // pair of the form (C^{-1} z_alpha, e_i)

    // ProbablyYes:
    std::string sample_description;
    std::size_t pairs_tested = 0;

    bool operator==(const GordonVerdict&) const = default;
};

/// Tests all pairs (C^{-1} z_alpha, e_i), a certified generic Z against
/// the basis vectors and random X, and extra random pairs.
GordonVerdict go_test_sampled(const GraphLieAlgebra& algebra,
                              const AdaptedBasis& basis, std::uint64_t seed,
                              std::size_t extra_samples);

/// Exact naturally-reductive test: (1) span(J) closed under commutator,
/// (2) the z-coordinate matrix of J^{-1} ad_{J_Z} J is skew w.r.t. the
/// z-Gram, for every basis Z.
struct NrResult {
    enum class Failure { None, NotSubalgebra, AdNotSkew };
    bool ok = false;
    Failure failure = Failure::None;
    int alpha = -1;  // offending indices (0-based edge positions)
    int beta = -1;

    bool operator==(const NrResult&) const = default;
};

NrResult nr_test(const GraphLieAlgebra& algebra, const AdaptedBasis& basis);

/// Maximal rank of J_Z over z. Closed formula sum of 2*floor(|C_mu|/2) on
/// cluster graphs; randomized maximization elsewhere (deterministic).
int max_rank(const GraphLieAlgebra& algebra);

/// Z with rk J_Z maximal and pairwise distinct nonzero eigenvalues,
/// certified by the squarefree nonzero-root factor f of char_poly(J_Z).
struct GenericElement {
    Matrix z;       // z-coordinates (m x 1)
    int rank = 0;
    Polynomial f;   // char_poly(J_Z) = f * lambda^{n - rank}, f squarefree
};

/// Constructive search following the block-rotation recipe on cluster
/// graphs, randomized elsewhere. Throws std::runtime_error when the search
/// budget is exhausted (signals an unexpected degeneracy).
GenericElement generic_element(const GraphLieAlgebra& algebra,
                               const AdaptedBasis& basis);

/// Confirms that some Gordon witness for (Z, X) decomposes as
/// D_a = J_Z + Q with J_Z Q = 0 and Q X = 0. Requires X generic for Z
/// ({J_Z^i X} independent); reports a precondition violation otherwise.
struct SolutionStructure {
    bool precondition_ok = false;
    bool decomposed = false;
    Matrix q;  // valid iff decomposed
};

SolutionStructure solution_structure_check(const GraphLieAlgebra& algebra,
                                           const AdaptedBasis& basis,
                                           const Matrix& z, const Matrix& x);

}  // namespace gonil

#endif
