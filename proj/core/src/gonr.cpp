#include "gonil/gonr.hpp"

#include <sstream>
#include <stdexcept>

namespace gonil {

namespace {

/// Stacks the Gordon constraints for coefficients c over the skew basis:
/// sum c_k [T_k, J_Z] = 0 and sum c_k T_k X = J_Z X.
void gordon_system(const SkewDerivationSpace& skew, const Matrix& jz,
                   const Matrix& x, Matrix& sys, Matrix& rhs) {
    const std::size_t n = jz.rows();
    const std::size_t cols = skew.dim();
    sys = Matrix(n * n + n, cols);
    rhs = Matrix(n * n + n, 1);
    for (std::size_t k = 0; k < cols; ++k) {
        const Matrix comm = skew.a_parts[k].commutator(jz);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) sys(i * n + j, k) = comm(i, j);
        const Matrix tx = skew.a_parts[k] * x;
        for (std::size_t i = 0; i < n; ++i) sys(n * n + i, k) = tx(i, 0);
    }
    const Matrix jzx = jz * x;
    for (std::size_t i = 0; i < n; ++i) rhs(n * n + i, 0) = jzx(i, 0);
}

Matrix combine(const std::vector<Matrix>& basis, const Matrix& coeffs) {
    if (basis.empty()) return Matrix();
    Matrix out = Matrix::zero(basis[0].rows(), basis[0].cols());
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (coeffs(k, 0) != 0) out += basis[k] * coeffs(k, 0);
    return out;
}

}  // namespace

GordonCheck gordon_feasible(const GraphLieAlgebra& algebra,
                            const AdaptedBasis& basis,
                            const SkewDerivationSpace& skew, const Matrix& z,
                            const Matrix& x) {
    const std::size_t n = static_cast<std::size_t>(algebra.n());
    const std::size_t m = static_cast<std::size_t>(algebra.m());
    if (z.rows() != m || z.cols() != 1 || x.rows() != n || x.cols() != 1)
        throw std::invalid_argument("gordon_feasible: bad coordinate shapes");

    const JPencil j = j_pencil(algebra, basis);
    const Matrix jz = m > 0 ? j.of(z) : Matrix::zero(n, n);

    Matrix sys, rhs;
    gordon_system(skew, jz, x, sys, rhs);
    const SolveResult s = solve(sys, rhs);
    GordonCheck out;
    if (!s.feasible) {
        out.feasible = false;
        if (auto cert = infeasibility_certificate(sys, rhs)) out.farkas = *cert;
        return out;
    }
    out.feasible = true;
    out.witness = combine(skew.basis, s.particular);
    if (out.witness.empty())
        out.witness = Matrix::zero(static_cast<std::size_t>(algebra.dim()),
                                   static_cast<std::size_t>(algebra.dim()));

    // Re-verify all three constraints on the returned derivation.
    const Matrix t = out.witness.block(0, 0, n, n);
    if (!t.commutator(jz).is_zero() || !(t * x == jz * x))
        throw std::logic_error("gordon_feasible: witness fails re-verification");
    if (m > 0) {
        const Matrix r = out.witness.block(n, n, m, m);
        if (!(r * z).is_zero())
            throw std::logic_error("gordon_feasible: witness does not kill Z");
    }
    return out;
}

GordonVerdict go_test_sampled(const GraphLieAlgebra& algebra,
                              const AdaptedBasis& basis, std::uint64_t seed,
                              std::size_t extra_samples) {
    const std::size_t n = static_cast<std::size_t>(algebra.n());
    const std::size_t m = static_cast<std::size_t>(algebra.m());
    GordonVerdict verdict;
    if (m == 0) {
        verdict.tag = GordonVerdict::Tag::ProbablyYes;
        verdict.sample_description = "abelian algebra: D = 0 works for every pair";
        return verdict;
    }

    const SkewDerivationSpace skew = skew_derivation_space(algebra, basis);
    const JPencil j = j_pencil(algebra, basis);
    const Matrix c_inv = inverse(basis.z_gram());
    std::size_t tested = 0;

    // Feasibility of one pair, split in two stages: coefficients commuting
    // with J_Z first, then the affine condition on X over that subspace.
    // Returns true when feasible.
    const auto feasible_for = [&](const Matrix& jz, const Matrix& commuting,
                                  const Matrix& x) {
        Matrix sys(n, commuting.cols());
        for (std::size_t c = 0; c < commuting.cols(); ++c) {
            Matrix t = Matrix::zero(n, n);
            for (std::size_t k = 0; k < skew.dim(); ++k)
                if (commuting(k, c) != 0) t += skew.a_parts[k] * commuting(k, c);
            const Matrix tx = t * x;
            for (std::size_t i = 0; i < n; ++i) sys(i, c) = tx(i, 0);
        }
        return solve(sys, jz * x).feasible;
    };
    const auto commuting_subspace = [&](const Matrix& jz) {
        Matrix sys(n * n, skew.dim());
        for (std::size_t k = 0; k < skew.dim(); ++k) {
            const Matrix comm = skew.a_parts[k].commutator(jz);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t jj = 0; jj < n; ++jj)
                    sys(i * n + jj, k) = comm(i, jj);
        }
        return nullspace(sys);
    };
    const auto report_no = [&](const Matrix& z, const Matrix& x, bool family) {
        verdict.tag = GordonVerdict::Tag::No;
        verdict.witness_z = z;
        verdict.witness_x = x;
        verdict.witness_from_family = family;
        const GordonCheck full = gordon_feasible(algebra, basis, skew, z, x);
        if (full.feasible)
            throw std::logic_error("go_test_sampled: two-stage and direct "
                                   "feasibility disagree");
        verdict.farkas = full.farkas;
    };

    // The family (C^{-1} z_alpha, e_i): the proof-backed witness pairs.
    for (std::size_t a = 0; a < m; ++a) {
        Matrix za = c_inv.col(a);
        const Matrix jz = j.of(za);
        const Matrix commuting = commuting_subspace(jz);
        for (std::size_t i = 0; i < n; ++i) {
            Matrix x(n, 1);
            x(i, 0) = 1;
            ++tested;
            if (!feasible_for(jz, commuting, x)) {
                report_no(za, x, true);
                return verdict;
            }
        }
    }

    // One certified generic Z against the basis vectors and random X.
    Rng rng(seed);
    const GenericElement gen = generic_element(algebra, basis);
    {
        const Matrix jz = j.of(gen.z);
        const Matrix commuting = commuting_subspace(jz);
        for (std::size_t i = 0; i < n; ++i) {
            Matrix x(n, 1);
            x(i, 0) = 1;
            ++tested;
            if (!feasible_for(jz, commuting, x)) {
                report_no(gen.z, x, false);
                return verdict;
            }
        }
        for (std::size_t s = 0; s < 2; ++s) {
            Matrix x(n, 1);
            for (std::size_t i = 0; i < n; ++i)
                x(i, 0) = rng.small_rational_or_zero();
            ++tested;
            if (!feasible_for(jz, commuting, x)) {
                report_no(gen.z, x, false);
                return verdict;
            }
        }
    }

    for (std::size_t s = 0; s < extra_samples; ++s) {
        Matrix z(m, 1), x(n, 1);
        for (std::size_t a = 0; a < m; ++a) z(a, 0) = rng.small_rational_or_zero();
        for (std::size_t i = 0; i < n; ++i) x(i, 0) = rng.small_rational_or_zero();
        const Matrix jz = j.of(z);
        const Matrix commuting = commuting_subspace(jz);
        ++tested;
        if (!feasible_for(jz, commuting, x)) {
            report_no(z, x, false);
            return verdict;
        }
    }

    verdict.tag = GordonVerdict::Tag::ProbablyYes;
    verdict.pairs_tested = tested;
    std::ostringstream desc;
    desc << "all " << m * n << " pairs (C^-1 z_a, e_i), one generic Z against "
         << n << "+2 vectors, " << extra_samples << " random pairs";
    verdict.sample_description = desc.str();
    return verdict;
}

NrResult nr_test(const GraphLieAlgebra& algebra, const AdaptedBasis& basis) {
    const std::size_t n = static_cast<std::size_t>(algebra.n());
    const std::size_t m = static_cast<std::size_t>(algebra.m());
    NrResult out;
    if (m == 0) {
        out.ok = true;
        return out;
    }
    const auto [A, C] = ac_split(basis);
    const Matrix c_inv = inverse(C);
    const JPencil j = j_pencil(algebra, basis);
    const auto& edges = algebra.graph().edges();

    // A [J_a, J_b] is plain skew and lies in span(J0); membership in
    // span(J) of the commutator is exactly vanishing of its non-edge
    // entries.
    const auto z_coords_of_bracket = [&](std::size_t a, std::size_t b,
                                         Matrix& w) -> bool {
        const Matrix k = A * j.ops[a].commutator(j.ops[b]);
        for (int i = 1; i <= algebra.n(); ++i)
            for (int jj = i + 1; jj <= algebra.n(); ++jj)
                if (!algebra.graph().has_edge(i, jj) &&
                    k(algebra.e_index(jj), algebra.e_index(i)) != 0)
                    return false;
        Matrix edge_entries(m, 1);
        for (std::size_t e = 0; e < m; ++e)
            edge_entries(e, 0) =
                k(algebra.e_index(edges[e].v), algebra.e_index(edges[e].u));
        w = c_inv * edge_entries;
        return true;
    };

    Matrix w;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a; b < m; ++b)
            if (!z_coords_of_bracket(a, b, w)) {
                out.ok = false;
                out.failure = NrResult::Failure::NotSubalgebra;
                out.alpha = static_cast<int>(a);
                out.beta = static_cast<int>(b);
                return out;
            }

    for (std::size_t a = 0; a < m; ++a) {
        Matrix s(m, m);
        for (std::size_t b = 0; b < m; ++b) {
            if (!z_coords_of_bracket(a, b, w))
                throw std::logic_error("nr_test: subalgebra check passed but "
                                       "membership failed");
            for (std::size_t e = 0; e < m; ++e) s(e, b) = w(e, 0);
        }
        if (!(s.transpose() * C + C * s).is_zero()) {
            out.ok = false;
            out.failure = NrResult::Failure::AdNotSkew;
            out.alpha = static_cast<int>(a);
            return out;
        }
    }
    out.ok = true;
    return out;
}

int max_rank(const GraphLieAlgebra& algebra) {
    const auto cluster = cluster_decomposition(algebra.graph());
    if (cluster.is_cluster) {
        int r = 0;
        for (const auto& c : cluster.cliques)
            r += 2 * (static_cast<int>(c.size()) / 2);
        return r;
    }
    const JPencil j0 = standard_j_pencil(algebra);
    const std::size_t m = static_cast<std::size_t>(algebra.m());
    Rng rng(0x6d617892616b6eULL);
    int best = 0;
    for (int attempt = 0; attempt < 12; ++attempt) {
        Matrix z(m, 1);
        for (std::size_t a = 0; a < m; ++a)
            z(a, 0) = Rational(rng.range(-7, 7));
        best = std::max(best, static_cast<int>(rank(j0.of(z))));
    }
    return best;
}

GenericElement generic_element(const GraphLieAlgebra& algebra,
                               const AdaptedBasis& basis) {
    const std::size_t n = static_cast<std::size_t>(algebra.n());
    const std::size_t m = static_cast<std::size_t>(algebra.m());
    const int r = max_rank(algebra);
    const JPencil j = j_pencil(algebra, basis);

    if (r == 0) {
        GenericElement out;
        out.z = Matrix(m, 1);
        out.rank = 0;
        out.f = Polynomial::constant(1);
        return out;
    }

    const auto certify = [&](const Matrix& z, GenericElement& out) {
        const Matrix jz = j.of(z);
        if (static_cast<int>(rank(jz)) != r) return false;
        const auto [f, zeros] = char_poly(jz).strip_zero_roots();
        if (zeros != n - static_cast<std::size_t>(r)) return false;
        if (!is_squarefree(f)) return false;
        out.z = z;
        out.rank = r;
        out.f = f;
        return true;
    };

    const auto cluster = cluster_decomposition(algebra.graph());
    const std::size_t half = static_cast<std::size_t>(r) / 2;
    Rng rng(0x67656e5a21ULL);
    GenericElement out;
    const int budget = 500;
    for (int attempt = 0; attempt < budget; ++attempt) {
        Matrix w(m, 1);
        if (cluster.is_cluster) {
            // J0_W = sum x_k K_k with K_k the rotation generator of the
            // consecutive vertex pair (v_{2j-1}, v_{2j}) in each clique,
            // i.e. the z-unit of that edge.
            std::vector<Rational> xs(half);
            for (std::size_t k = 0; k < half; ++k) {
                if (attempt == 0)
                    xs[k] = Rational(static_cast<long>(k + 1));
                else
                    xs[k] = Rational(rng.range(1, 2 * r + 3));
            }
            std::size_t k = 0;
            for (const auto& c : cluster.cliques)
                for (std::size_t p = 0; p + 1 < c.size(); p += 2) {
                    const auto idx = algebra.graph().edge_index(c[p], c[p + 1]);
                    if (!idx)
                        throw std::logic_error("generic_element: clique edge missing");
                    w(static_cast<std::size_t>(*idx), 0) = xs[k++];
                }
        } else {
            for (std::size_t a = 0; a < m; ++a)
                w(a, 0) = Rational(rng.range(-(r + 2), r + 2));
        }
        // J_{C^{-1}W} = A^{-1} J0_W has the same rank as J0_W.
        const Matrix z = inverse(basis.z_gram()) * w;
        if (certify(z, out)) return out;
    }
    throw std::runtime_error(
        "generic_element: no certified generic vector found within " +
        std::to_string(budget) + " attempts");
}

SolutionStructure solution_structure_check(const GraphLieAlgebra& algebra,
                                           const AdaptedBasis& basis,
                                           const Matrix& z, const Matrix& x) {
    const std::size_t n = static_cast<std::size_t>(algebra.n());
    const JPencil j = j_pencil(algebra, basis);
    const Matrix jz = algebra.m() > 0 ? j.of(z) : Matrix::zero(n, n);
    const int r = static_cast<int>(rank(jz));

    SolutionStructure out;
    // The guarantee needs X in U''(Z): {J_Z^i X, i = 1..r-1} independent.
    // The solve below still runs when the precondition fails; the caller
    // sees both facts.
    out.precondition_ok = true;
    if (r >= 2) {
        std::vector<Matrix> cols;
        Matrix power = jz * x;
        cols.push_back(power);
        for (int i = 2; i <= r - 1; ++i) {
            power = jz * power;
            cols.push_back(power);
        }
        out.precondition_ok =
            rank(Matrix::from_columns(cols)) == static_cast<std::size_t>(r - 1);
    }

    // Affine solve in decomposed form: D_a = J_Z + Q demands
    // J_Z D_a = J_Z^2 and D_a X = J_Z X over the skew-derivation space.
    const SkewDerivationSpace skew = skew_derivation_space(algebra, basis);
    Matrix sys(n * n + n, skew.dim());
    Matrix rhs(n * n + n, 1);
    for (std::size_t k = 0; k < skew.dim(); ++k) {
        const Matrix prod = jz * skew.a_parts[k];
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) sys(a * n + b, k) = prod(a, b);
        const Matrix tx = skew.a_parts[k] * x;
        for (std::size_t i = 0; i < n; ++i) sys(n * n + i, k) = tx(i, 0);
    }
    const Matrix jz2 = jz * jz;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) rhs(a * n + b, 0) = jz2(a, b);
    const Matrix jzx = jz * x;
    for (std::size_t i = 0; i < n; ++i) rhs(n * n + i, 0) = jzx(i, 0);

    const SolveResult s = solve(sys, rhs);
    if (!s.feasible) {
        out.decomposed = false;
        return out;
    }
    Matrix da = Matrix::zero(n, n);
    for (std::size_t k = 0; k < skew.dim(); ++k)
        if (s.particular(k, 0) != 0) da += skew.a_parts[k] * s.particular(k, 0);
    out.q = da - jz;
    out.decomposed = true;
    if (!(jz * out.q).is_zero() || !(out.q * x).is_zero())
        throw std::logic_error("solution_structure_check: decomposition fails "
                               "re-verification");
    return out;
}

}  // namespace gonil
