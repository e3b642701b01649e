#include "gonil/classify.hpp"

#include <algorithm>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

namespace gonil {

namespace {

std::string vertex_set_name(const std::vector<int>& vs) {
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < vs.size(); ++i)
        out << (i ? "," : "") << vs[i];
    out << "}";
    return out.str();
}

/// Local lexicographic pair order (p < q over sorted clique vertices),
/// mapped to global 0-based z indices.
std::vector<int> clique_z_indices(const GraphLieAlgebra& algebra,
                                  const std::vector<int>& clique) {
    std::vector<int> out;
    for (std::size_t p = 0; p < clique.size(); ++p)
        for (std::size_t q = p + 1; q < clique.size(); ++q) {
            const auto idx = algebra.graph().edge_index(clique[p], clique[q]);
            if (!idx) throw std::logic_error("clique edge missing from graph");
            out.push_back(*idx);
        }
    return out;
}

Matrix z_unit(std::size_t m, int idx) {
    Matrix v(m, 1);
    v(static_cast<std::size_t>(idx), 0) = 1;
    return v;
}

/// The Hodge-star involution of a 4-set, in local pair order
/// (12),(13),(14),(23),(24),(34): swaps (12)<->(34), (14)<->(23) and
/// (13)<->-(24).
Matrix star4() {
    Matrix s(6, 6);
    s(0, 5) = s(5, 0) = 1;
    s(2, 3) = s(3, 2) = 1;
    s(1, 4) = s(4, 1) = -1;
    return s;
}

/// Second compound matrix: entries are the 2x2 minors of a, indexed by
/// local pairs in lexicographic order. For a = h^t h this equals
/// (Lambda^2 h)^t (Lambda^2 h), the z-block induced by normalizing the
/// clique block of the metric.
Matrix compound2(const Matrix& a) {
    const std::size_t k = a.rows();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t p = 0; p < k; ++p)
        for (std::size_t q = p + 1; q < k; ++q) pairs.emplace_back(p, q);
    Matrix out(pairs.size(), pairs.size());
    for (std::size_t r = 0; r < pairs.size(); ++r)
        for (std::size_t c = 0; c < pairs.size(); ++c) {
            const auto [p, q] = pairs[r];
            const auto [s, t] = pairs[c];
            out(r, c) = a(p, s) * a(q, t) - a(p, t) * a(q, s);
        }
    return out;
}

struct ClusterLayout {
    ClusterDecomposition cluster;
    std::vector<std::vector<int>> clique_z;  // per clique, local pair order
    std::vector<int> center_z;               // z indices of the 2-cliques
};

ClusterLayout cluster_layout(const GraphLieAlgebra& algebra) {
    ClusterLayout out;
    out.cluster = cluster_decomposition(algebra.graph());
    if (!out.cluster.is_cluster)
        throw std::invalid_argument("not a cluster graph");
    for (auto& c : out.cluster.cliques) std::sort(c.begin(), c.end());
    std::sort(out.cluster.cliques.begin(), out.cluster.cliques.end());
    std::sort(out.cluster.isolated.begin(), out.cluster.isolated.end());
    for (const auto& c : out.cluster.cliques) {
        out.clique_z.push_back(clique_z_indices(algebra, c));
        if (c.size() == 2) out.center_z.push_back(out.clique_z.back()[0]);
    }
    return out;
}

}  // namespace

IdealDecomposition ideal_decomposition(const GraphLieAlgebra& algebra) {
    const ClusterLayout layout = cluster_layout(algebra);
    const std::size_t m = static_cast<std::size_t>(algebra.m());
    const JPencil j0 = standard_j_pencil(algebra);

    IdealDecomposition out;
    const auto add_ideal = [&](Ideal::Kind kind, int clique, std::string name,
                               const std::vector<Matrix>& zvecs) {
        Ideal ideal;
        ideal.kind = kind;
        ideal.clique = clique;
        ideal.name = std::move(name);
        ideal.zspace = Subspace(m, Matrix::from_columns(zvecs));
        for (const auto& v : zvecs) ideal.matrices.push_back(j0.of(v));
        out.ideals.push_back(std::move(ideal));
    };

    for (std::size_t mu = 0; mu < layout.cluster.cliques.size(); ++mu) {
        const auto& clique = layout.cluster.cliques[mu];
        const auto& zidx = layout.clique_z[mu];
        const std::size_t k = clique.size();
        const std::string set = vertex_set_name(clique);
        if (k == 2) continue;  // collected into the abelian center below
        if (k == 4) {
            // Self-dual and anti-self-dual so(3) ideals of so(4), with the
            // local pair order (12),(13),(14),(23),(24),(34).
            const auto combo = [&](int a, int b, int sign) {
                return z_unit(m, zidx[a]) + z_unit(m, zidx[b]) * Rational(sign);
            };
            add_ideal(Ideal::Kind::Simple, static_cast<int>(mu),
                      "so(3) self-dual of clique " + set,
                      {combo(0, 5, 1), combo(2, 3, 1), combo(4, 1, -1)});
            add_ideal(Ideal::Kind::Simple, static_cast<int>(mu),
                      "so(3) anti-self-dual of clique " + set,
                      {combo(0, 5, -1), combo(2, 3, -1), combo(4, 1, 1)});
        } else {
            std::vector<Matrix> units;
            for (int idx : zidx) units.push_back(z_unit(m, idx));
            add_ideal(Ideal::Kind::Simple, static_cast<int>(mu),
                      "so(" + std::to_string(k) + ") of clique " + set, units);
        }
    }
    if (!layout.center_z.empty()) {
        std::vector<Matrix> units;
        for (int idx : layout.center_z) units.push_back(z_unit(m, idx));
        add_ideal(Ideal::Kind::Abelian, -1, "abelian center", units);
        out.center_dim = layout.center_z.size();
    }
    return out;
}

PhiSpace phi_space(const GraphLieAlgebra& algebra) {
    if (!is_cluster_graph(algebra.graph()))
        throw std::invalid_argument("not a cluster graph");
    const std::size_t m = static_cast<std::size_t>(algebra.m());
    const std::size_t n = static_cast<std::size_t>(algebra.n());
    const JPencil j0 = standard_j_pencil(algebra);

    // Parameters: entries of a symmetric Phi (B-symmetry is symmetry in
    // z-coordinates because B(J0_a, J0_b) = delta_ab). Constraints: the
    // polarized commuting condition [J0_a, Phi J0_b] + [J0_b, Phi J0_a] = 0.
    std::vector<std::pair<std::size_t, std::size_t>> params;
    for (std::size_t g = 0; g < m; ++g)
        for (std::size_t d = g; d < m; ++d) params.emplace_back(g, d);

    std::vector<std::pair<std::size_t, std::size_t>> upper;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) upper.emplace_back(i, j);

    Matrix sys(m * (m + 1) / 2 * upper.size(), params.size());
    std::size_t row0 = 0;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a; b < m; ++b) {
            for (std::size_t p = 0; p < params.size(); ++p) {
                const auto [g, d] = params[p];
                // Phi J0_b = sum_gamma Phi(gamma, b) J0_gamma
                Matrix mat(n, n);
                bool nonzero = false;
                const auto add = [&](std::size_t outer, std::size_t gamma) {
                    mat += j0.ops[outer].commutator(j0.ops[gamma]);
                    nonzero = true;
                };
                if (d == b) add(a, g);
                if (g == b && g != d) add(a, d);
                if (d == a) add(b, g);
                if (g == a && g != d) add(b, d);
                if (!nonzero) continue;
                for (std::size_t u = 0; u < upper.size(); ++u)
                    sys(row0 + u, p) = mat(upper[u].first, upper[u].second);
            }
            row0 += upper.size();
        }

    const Matrix kernel = nullspace(sys);
    PhiSpace out;
    for (std::size_t c = 0; c < kernel.cols(); ++c) {
        Matrix phi(m, m);
        for (std::size_t p = 0; p < params.size(); ++p) {
            const auto [g, d] = params[p];
            phi(g, d) = kernel(p, c);
            phi(d, g) = kernel(p, c);
        }
        out.basis.push_back(std::move(phi));
    }
    return out;
}

Metric construct_semi_standard(const GraphLieAlgebra& algebra,
                               const std::vector<Rational>& ideal_coeffs,
                               const Matrix& center_block) {
    const IdealDecomposition dec = ideal_decomposition(algebra);
    const std::size_t m = static_cast<std::size_t>(algebra.m());
    const std::size_t n = static_cast<std::size_t>(algebra.n());
    if (ideal_coeffs.size() != dec.simple_count())
        throw std::invalid_argument(
            "expected " + std::to_string(dec.simple_count()) +
            " ideal coefficients, got " + std::to_string(ideal_coeffs.size()));
    for (const auto& c : ideal_coeffs)
        if (c <= 0) throw std::invalid_argument("ideal coefficients must be positive");
    if (center_block.rows() != dec.center_dim ||
        center_block.cols() != dec.center_dim)
        throw std::invalid_argument("center block must be " +
                                    std::to_string(dec.center_dim) + " x " +
                                    std::to_string(dec.center_dim));
    if (dec.center_dim > 0) {
        if (!center_block.is_symmetric() || !is_positive_definite(center_block))
            throw std::invalid_argument("center block must be symmetric positive "
                                        "definite");
    }

    Matrix c(m, m);
    for (std::size_t k = 0; k < dec.simple_count(); ++k) {
        const Matrix& v = dec.ideals[k].zspace.basis;
        const Matrix proj = v * inverse(v.transpose() * v) * v.transpose();
        c += proj * ideal_coeffs[k];
    }
    if (dec.center_dim > 0) {
        const Matrix& units = dec.ideals.back().zspace.basis;  // m x d0 selector
        c += units * center_block * units.transpose();
    }

    Matrix gram(n + m, n + m);
    gram.set_block(0, 0, Matrix::identity(n));
    gram.set_block(n, n, c);
    return Metric(std::move(gram));
}

SemiStandardResult is_semi_standard(const GraphLieAlgebra& algebra,
                                    const Metric& metric,
                                    const AdaptedBasis& basis) {
    SemiStandardResult out;
    if (metric.dim() != static_cast<std::size_t>(algebra.dim()))
        throw std::invalid_argument("metric dimension does not match the algebra");
    if (!is_cluster_graph(algebra.graph())) {
        out.ok = false;
        out.violation = "not a cluster graph";
        return out;
    }
    const ClusterLayout layout = cluster_layout(algebra);
    const Matrix A = basis.a_gram();
    const Matrix C = basis.z_gram();
    const auto& cliques = layout.cluster.cliques;

    // Indices of the isolated block and per-clique blocks in a-coordinates.
    std::vector<std::size_t> a0;
    for (int v : layout.cluster.isolated) a0.push_back(algebra.e_index(v));
    std::vector<std::vector<std::size_t>> aidx;
    for (const auto& c : cliques) {
        std::vector<std::size_t> idx;
        for (int v : c) idx.push_back(algebra.e_index(v));
        aidx.push_back(std::move(idx));
    }

    // Clique blocks of A after absorbing the isolated directions:
    // tilde(A)_{mu nu} = A_{mu nu} - A_{mu 0} A_00^{-1} A_{0 nu}.
    Matrix a00_inv;
    if (!a0.empty()) a00_inv = inverse(A.submatrix(a0, a0));
    const auto schur_block = [&](std::size_t mu, std::size_t nu) {
        Matrix blk = A.submatrix(aidx[mu], aidx[nu]);
        if (!a0.empty())
            blk = blk - A.submatrix(aidx[mu], a0) * a00_inv *
                            A.submatrix(a0, aidx[nu]);
        return blk;
    };

    for (std::size_t mu = 0; mu < cliques.size(); ++mu)
        for (std::size_t nu = mu + 1; nu < cliques.size(); ++nu)
            if (!schur_block(mu, nu).is_zero()) {
                out.ok = false;
                out.violation =
                    "clique blocks " + vertex_set_name(cliques[mu]) + " and " +
                    vertex_set_name(cliques[nu]) +
                    " of the a-Gram are not orthogonal after absorbing the "
                    "isolated directions";
                return out;
            }

    // z-Gram cross blocks: only the 2-clique directions may couple.
    const auto zvec = [&](const std::vector<int>& idx) {
        std::vector<std::size_t> v;
        for (int i : idx) v.push_back(static_cast<std::size_t>(i));
        return v;
    };
    for (std::size_t mu = 0; mu < cliques.size(); ++mu)
        for (std::size_t nu = mu + 1; nu < cliques.size(); ++nu) {
            if (cliques[mu].size() == 2 && cliques[nu].size() == 2) continue;
            if (!C.submatrix(zvec(layout.clique_z[mu]), zvec(layout.clique_z[nu]))
                     .is_zero()) {
                out.ok = false;
                out.violation = "z-Gram couples the ideals of cliques " +
                                vertex_set_name(cliques[mu]) + " and " +
                                vertex_set_name(cliques[nu]);
                return out;
            }
        }

    // Per-clique cone conditions on the z-blocks.
    for (std::size_t mu = 0; mu < cliques.size(); ++mu) {
        const std::size_t k = cliques[mu].size();
        if (k == 2) continue;
        const Matrix cblk =
            C.submatrix(zvec(layout.clique_z[mu]), zvec(layout.clique_z[mu]));
        const Matrix lam2 = compound2(schur_block(mu, mu));
        const std::string set = vertex_set_name(cliques[mu]);
        if (k == 4) {
            // c = u Lambda^2(a) + v star; coefficients recovered exactly,
            // positivity of the two ideal coefficients u +- v / sqrt(det a)
            // reads v^2 < u^2 det a.
            const Matrix sig = star4();
            Matrix sys(36, 2);
            for (std::size_t i = 0; i < 6; ++i)
                for (std::size_t j = 0; j < 6; ++j) {
                    sys(i * 6 + j, 0) = lam2(i, j);
                    sys(i * 6 + j, 1) = sig(i, j);
                }
            const SolveResult s = solve(sys, cblk.vectorize());
            if (!s.feasible) {
                out.ok = false;
                out.violation = "z-block of clique " + set +
                                " is not a combination of the two so(3) ideal "
                                "projections";
                return out;
            }
            const Rational u = s.particular(0, 0), v = s.particular(1, 0);
            const Rational det = determinant(schur_block(mu, mu));
            if (!(u > 0 && v * v < u * u * det)) {
                out.ok = false;
                out.violation = "ideal coefficients of clique " + set +
                                " are not both positive";
                return out;
            }
            if (lam2 == Matrix::identity(6)) {
                out.ideal_coeffs.push_back(u + v);
                out.ideal_coeffs.push_back(u - v);
            } else {
                out.ideal_coeffs.push_back(std::nullopt);
                out.ideal_coeffs.push_back(std::nullopt);
            }
        } else {
            // c = lambda Lambda^2(a), lambda > 0.
            if (lam2(0, 0) == 0)
                throw std::logic_error("compound of an SPD block is SPD");
            const Rational lambda = cblk(0, 0) / lam2(0, 0);
            if (!(lam2 * lambda == cblk) || lambda <= 0) {
                out.ok = false;
                out.violation =
                    "z-block of clique " + set +
                    " is not a positive multiple of the induced ideal form";
                return out;
            }
            out.ideal_coeffs.push_back(lambda);
        }
    }

    if (!layout.center_z.empty())
        out.center_block =
            C.submatrix(zvec(layout.center_z), zvec(layout.center_z));
    out.ok = true;
    return out;
}

ClassificationReport classify(const Graph& graph, const Metric& metric,
                              const ClassifyOptions& options) {
    const GraphLieAlgebra algebra{graph};
    const AdaptedBasis basis = adapt(algebra, metric);
    ClassificationReport report;

    const ClusterDecomposition cluster = cluster_decomposition(graph);
    report.cluster = {cluster.is_cluster, cluster.isolated, cluster.cliques,
                      cluster.witness};
    report.nr = nr_test(algebra, basis);
    report.go = go_test_sampled(algebra, basis, options.seed, options.extra_samples);
    report.semi = is_semi_standard(algebra, metric, basis);

    const bool go_no = report.go.tag == GordonVerdict::Tag::No;
    report.agree = (report.nr.ok == (cluster.is_cluster && report.semi.ok)) &&
                   (!go_no || !report.nr.ok);
    return report;
}

namespace {

using nlohmann::json;

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Graph random_graph(int max_vertices, Rng& rng, bool only_noncluster) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_vertices)));
        if (only_noncluster && n < 3) n = 3;
        std::vector<std::pair<int, int>> edges;
        if (!only_noncluster && rng.coin()) {
            // Random cluster graph: shuffle, cut into blocks, join blocks.
            std::vector<int> perm(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
            for (int i = n - 1; i > 0; --i)
                std::swap(perm[static_cast<std::size_t>(i)],
                          perm[rng.below(static_cast<std::uint64_t>(i + 1))]);
            std::size_t start = 0;
            while (start < perm.size()) {
                std::size_t len = 1 + rng.below(3);
                len = std::min(len, perm.size() - start);
                for (std::size_t a = start; a < start + len; ++a)
                    for (std::size_t b = a + 1; b < start + len; ++b)
                        edges.emplace_back(perm[a], perm[b]);
                start += len;
            }
        } else {
            const int denom = 4;
            const int num = 1 + static_cast<int>(rng.below(3));
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    if (static_cast<int>(rng.below(denom)) < num)
                        edges.emplace_back(i, j);
        }
        Graph g(n, edges);
        if (only_noncluster && is_cluster_graph(g)) continue;
        return g;
    }
    // Deterministic fallback: the path on three vertices.
    return Graph(3, {{1, 2}, {2, 3}});
}

Metric random_semi_standard(const GraphLieAlgebra& algebra, Rng& rng) {
    const IdealDecomposition dec = ideal_decomposition(algebra);
    std::vector<Rational> coeffs;
    for (std::size_t k = 0; k < dec.simple_count(); ++k)
        coeffs.push_back(rng.positive_rational());
    Matrix center(dec.center_dim, dec.center_dim);
    if (dec.center_dim > 0) {
        Matrix l(dec.center_dim, dec.center_dim);
        for (std::size_t i = 0; i < dec.center_dim; ++i)
            for (std::size_t j = 0; j < dec.center_dim; ++j)
                l(i, j) = Rational(rng.range(-1, 1));
        center = l.transpose() * l;
        for (std::size_t i = 0; i < dec.center_dim; ++i)
            center(i, i) += rng.range(1, 3);
    }
    return construct_semi_standard(algebra, coeffs, center);
}

}  // namespace

CrossValidationSummary cross_validate(
    int trials, int max_vertices, std::uint64_t seed,
    const std::optional<std::filesystem::path>& dump_dir, bool only_noncluster) {
    if (trials < 1) throw std::invalid_argument("cross_validate: trials must be >= 1");
    if (max_vertices < 1)
        throw std::invalid_argument("cross_validate: max_vertices must be >= 1");
    CrossValidationSummary summary;
    summary.trials = trials;

    for (int trial = 0; trial < trials; ++trial) {
        Rng rng(split_seed(seed, static_cast<std::uint64_t>(trial)));
        const Graph graph = random_graph(max_vertices, rng, only_noncluster);
        const GraphLieAlgebra algebra{graph};
        const bool cluster = is_cluster_graph(graph);

        std::vector<std::pair<std::string, Metric>> metrics;
        metrics.emplace_back("standard",
                             Metric::standard(static_cast<std::size_t>(algebra.dim())));
        if (cluster)
            metrics.emplace_back("semi-standard", random_semi_standard(algebra, rng));
        metrics.emplace_back("random-spd",
                             random_spd_metric(static_cast<std::size_t>(algebra.dim()), rng));

        for (const auto& [kind, metric] : metrics) {
            ClassifyOptions options;
            options.seed = rng.next();
            options.extra_samples = 3;
            const ClassificationReport report = classify(graph, metric, options);
            ++summary.cases;
            if (report.agree) ++summary.agreed_cases;
            if (!report.cluster.is_cluster) {
                ++summary.noncluster_cases;
                if (report.go.tag == GordonVerdict::Tag::No &&
                    report.go.witness_from_family)
                    ++summary.noncluster_family_witnesses;
            }
            if (!report.agree && dump_dir) {
                std::filesystem::create_directories(*dump_dir);
                const auto path =
                    *dump_dir / ("trial-" + std::to_string(trial) + "-" + kind +
                                 ".json");
                json doc{
                    {"trial", trial},
                    {"seed", seed},
                    {"metric_kind", kind},
                    {"graph", graph.to_text()},
                    {"gram", matrix_to_json(metric.gram())},
                    {"verdicts",
                     {{"cluster", report.cluster.is_cluster},
                      {"nr", report.nr.ok},
                      {"go_no", report.go.tag == GordonVerdict::Tag::No},
                      {"semi_standard", report.semi.ok},
                      {"agree", report.agree}}}};
                std::ofstream out(path);
                out << doc.dump(2) << "\n";
                summary.dumps.push_back(path.string());
            }
        }
    }
    return summary;
}

}  // namespace gonil
