#ifndef GONIL_CLASSIFY_HPP
#define GONIL_CLASSIFY_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gonil/gonr.hpp"

namespace gonil {

/// One ideal of the span of the standard J-operators, described both by
/// its z-coordinate subspace and by matrix representatives.
struct Ideal {
    enum class Kind { Simple, Abelian };
    Kind kind = Kind::Simple;
    int clique = -1;     // index into the cluster decomposition; -1 = center
    std::string name;    // e.g. "so(3) of clique {5,6,7}"
    Subspace zspace;     // subspace of R^m
    std::vector<Matrix> matrices;  // J0 combinations spanning the ideal
};

/// B-orthogonal decomposition of span(J0) into ideals: one simple ideal
/// per clique of size 3 or >= 5, the self-dual/anti-self-dual pair per
/// clique of size 4, and the so(2) lines of the 2-cliques collected into a
/// single abelian center entry (its splitting is not canonical).
struct IdealDecomposition {
    std::vector<Ideal> ideals;  // simple ideals first, center last if present
    std::size_t center_dim = 0;

    std::size_t simple_count() const {
        return ideals.size() - (center_dim > 0 ? 1 : 0);
    }
};

/// Throws std::invalid_argument unless the graph is a cluster graph.
IdealDecomposition ideal_decomposition(const GraphLieAlgebra& algebra);

/// The linear space of B-symmetric operators Phi on span(J0), in
/// z-coordinates, with [K, Phi K] = 0 for all K (polarized). Its positive
/// cone is exactly the set of valid semi-standard z-Grams for the
/// orthonormal-basis normal form.
struct PhiSpace {
    std::vector<Matrix> basis;  // symmetric m x m matrices
    std::size_t dim() const { return basis.size(); }
};

/// Throws std::invalid_argument unless the graph is a cluster graph.
PhiSpace phi_space(const GraphLieAlgebra& algebra);

/// Semi-standard metric with the given positive coefficient per simple
/// ideal (decomposition order) and the given SPD block on the abelian
/// center. Gram is the identity on a and the induced Phi on z.
Metric construct_semi_standard(const GraphLieAlgebra& algebra,
                               const std::vector<Rational>& ideal_coeffs,
                               const Matrix& center_block);

struct SemiStandardResult {
    bool ok = false;
    std::string violation;  // human-readable, set when !ok
    /// Recovered coefficient per simple ideal (decomposition order). A
    /// 4-clique whose normalized a-block is not the identity splits with
    /// irrational coefficients; those slots stay empty while the verdict
    /// is still exact.
    std::vector<std::optional<Rational>> ideal_coeffs;
    Matrix center_block;  // recovered center Gram

    bool operator==(const SemiStandardResult&) const = default;
};

/// Exact semi-standard recognition: cluster check, absorbability of the
/// isolated block (Schur-complement orthogonality of the clique blocks of
/// A), and membership of C in the positive Phi-cone transported to the
/// original coordinates.
SemiStandardResult is_semi_standard(const GraphLieAlgebra& algebra,
                                    const Metric& metric,
                                    const AdaptedBasis& basis);

struct ClusterVerdict {
    bool is_cluster = false;
    std::vector<int> isolated;
    std::vector<std::vector<int>> cliques;
    std::optional<Edge> witness;
    bool operator==(const ClusterVerdict&) const = default;
};

struct ClassificationReport {
    ClusterVerdict cluster;
    NrResult nr;
    GordonVerdict go;
    SemiStandardResult semi;
    /// Consistency with the equivalence: NR <=> (cluster and semi-standard),
    /// and a Gordon No-witness implies not NR. The NR test is the exact
    /// ground truth for the geodesic orbit verdict; the Gordon sampling
    /// corroborates it and produces witnesses.
    bool agree = false;

    bool operator==(const ClassificationReport&) const = default;
};

struct ClassifyOptions {
    std::uint64_t seed = 0;
    std::size_t extra_samples = 5;
};

ClassificationReport classify(const Graph& graph, const Metric& metric,
                              const ClassifyOptions& options = {});

/// Randomized falsification harness: random graphs, one metric from each
/// generator (standard; random semi-standard on cluster graphs; random SPD
/// Gram), classify everything, count agreement with the equivalence. Any
/// disagreement is dumped as a reproducible JSON case file.
struct CrossValidationSummary {
    int trials = 0;
    int cases = 0;
    int agreed_cases = 0;
    int noncluster_cases = 0;
    int noncluster_family_witnesses = 0;
    std::vector<std::string> dumps;

    bool all_agree() const { return cases == agreed_cases; }
};

CrossValidationSummary cross_validate(
    int trials, int max_vertices, std::uint64_t seed,
    const std::optional<std::filesystem::path>& dump_dir = std::nullopt,
    bool only_noncluster = false);

}  // namespace gonil

#endif
