#include "gonil/derivations.hpp"

#include <stdexcept>

namespace gonil {

namespace {

/// Pairs (i < j), 0-based, that are not edges of the graph.
std::vector<std::pair<std::size_t, std::size_t>> nonedge_pairs(const Graph& g) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (int i = 1; i <= g.n(); ++i)
        for (int j = i + 1; j <= g.n(); ++j)
            if (!g.has_edge(i, j))
                out.emplace_back(static_cast<std::size_t>(i - 1),
                                 static_cast<std::size_t>(j - 1));
    return out;
}

/// z-part R induced by an a-part T: R z_alpha = z-part of
/// [T e_u, e_v] + [e_u, T e_v] for edge alpha = {u < v}.
Matrix induced_z_part(const GraphLieAlgebra& algebra, const Matrix& t) {
    const std::size_t n = static_cast<std::size_t>(algebra.n());
    const std::size_t m = static_cast<std::size_t>(algebra.m());
    Matrix r(m, m);
    const auto& edges = algebra.graph().edges();
    for (std::size_t a = 0; a < m; ++a) {
        const std::size_t u = algebra.e_index(edges[a].u);
        const std::size_t v = algebra.e_index(edges[a].v);
        const std::size_t d = static_cast<std::size_t>(algebra.dim());
        Matrix tu(d, 1), tv(d, 1), eu(d, 1), ev(d, 1);
        for (std::size_t k = 0; k < n; ++k) {
            tu(k, 0) = t(k, u);
            tv(k, 0) = t(k, v);
        }
        eu(u, 0) = 1;
        ev(v, 0) = 1;
        const Matrix val = algebra.bracket(tu, ev) + algebra.bracket(eu, tv);
        for (std::size_t b = 0; b < m; ++b) r(b, a) = val(n + b, 0);
    }
    return r;
}

Matrix full_from_parts(const GraphLieAlgebra& algebra, const Matrix& t,
                       const Matrix& r) {
    const std::size_t n = static_cast<std::size_t>(algebra.n());
    const std::size_t m = static_cast<std::size_t>(algebra.m());
    Matrix d(n + m, n + m);
    d.set_block(0, 0, t);
    if (m > 0) d.set_block(n, n, r);
    return d;
}

}  // namespace

DerivationSpace derivation_space(const GraphLieAlgebra& algebra) {
    const std::size_t n = static_cast<std::size_t>(algebra.n());
    const std::size_t m = static_cast<std::size_t>(algebra.m());
    const auto nonedges = nonedge_pairs(algebra.graph());
    const JPencil j0 = standard_j_pencil(algebra);

    // Unknown T as a row-major n^2 vector; one row per (beta, non-edge
    // (i < j)): entry (j, i) of J0_b T + T^t J0_b must vanish.
    Matrix sys(m * nonedges.size(), n * n);
    std::size_t row = 0;
    for (std::size_t b = 0; b < m; ++b) {
        const Matrix& jb = j0.ops[b];
        for (const auto& [i, j] : nonedges) {
            for (std::size_t k = 0; k < n; ++k) {
                // (J0_b T)_{ji} = sum_k (J0_b)_{jk} T_{ki}
                if (jb(j, k) != 0) sys(row, k * n + i) += jb(j, k);
                // (T^t J0_b)_{ji} = sum_k T_{kj} (J0_b)_{ki}
                if (jb(k, i) != 0) sys(row, k * n + j) += jb(k, i);
            }
            ++row;
        }
    }
    const Matrix kernel = nullspace(sys);

    DerivationSpace out;
    for (std::size_t c = 0; c < kernel.cols(); ++c) {
        Matrix t(n, n);
        for (std::size_t k = 0; k < n * n; ++k) t(k / n, k % n) = kernel(k, c);
        Matrix r = induced_z_part(algebra, t);
        out.basis.push_back(full_from_parts(algebra, t, r));
        out.a_parts.push_back(std::move(t));
        out.z_parts.push_back(std::move(r));
    }
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t i = 0; i < n; ++i)
            out.basis.push_back(Matrix::unit(n + m, n + m, n + a, i));
    out.hom_block_dim = m * n;

    const auto cluster = cluster_decomposition(algebra.graph());
    if (cluster.is_cluster) {
        std::size_t end_sum = cluster.isolated.size() * cluster.isolated.size();
        for (const auto& c : cluster.cliques) end_sum += c.size() * c.size();
        out.end_sum_matches = (out.a_parts.size() == end_sum);
    }
    return out;
}

SkewDerivationSpace skew_derivation_space(const GraphLieAlgebra& algebra,
                                          const AdaptedBasis& basis) {
    const std::size_t n = static_cast<std::size_t>(algebra.n());
    const std::size_t m = static_cast<std::size_t>(algebra.m());
    const auto [A, C] = ac_split(basis);
    const Matrix a_inv = inverse(A);
    const Matrix c_inv = m > 0 ? inverse(C) : Matrix();
    const JPencil j = j_pencil(algebra, basis);
    const auto nonedges = nonedge_pairs(algebra.graph());
    const auto& edges = algebra.graph().edges();

    // T is metric-skew iff T = A^{-1} S with S plain skew; parameters are
    // the entries s_{uv}, u < v, of S. For each parameter and each basis
    // z_b, K_b = A [T, J_b] is plain skew; admissibility needs its
    // non-edge entries to vanish, and the z-part W (columns = edge entries
    // of K_b) must itself be skew so that R = C^{-1} W is metric-skew.
    std::vector<std::pair<std::size_t, std::size_t>> params;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) params.emplace_back(u, v);

    const std::size_t rows = m * nonedges.size() + m * (m + 1) / 2;
    Matrix sys(rows, params.size());
    std::vector<Matrix> w_cols(params.size());
    for (std::size_t p = 0; p < params.size(); ++p) {
        Matrix s(n, n);
        s(params[p].first, params[p].second) = 1;
        s(params[p].second, params[p].first) = -1;
        const Matrix t = a_inv * s;
        std::size_t row = 0;
        Matrix w(m, m);
        for (std::size_t b = 0; b < m; ++b) {
            const Matrix k = A * t.commutator(j.ops[b]);
            for (const auto& [i, jj] : nonedges) sys(row++, p) = k(jj, i);
            for (std::size_t a = 0; a < m; ++a)
                w(a, b) = k(algebra.e_index(edges[a].v), algebra.e_index(edges[a].u));
        }
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = a; b < m; ++b) sys(row++, p) = w(a, b) + w(b, a);
        w_cols[p] = std::move(w);
    }

    const Matrix kernel = nullspace(sys);
    SkewDerivationSpace out;
    for (std::size_t c = 0; c < kernel.cols(); ++c) {
        Matrix s(n, n);
        Matrix w(m, m);
        for (std::size_t p = 0; p < params.size(); ++p) {
            const Rational& coef = kernel(p, c);
            if (coef == 0) continue;
            s(params[p].first, params[p].second) += coef;
            s(params[p].second, params[p].first) -= coef;
            w += w_cols[p] * coef;
        }
        Matrix t = a_inv * s;
        Matrix r = m > 0 ? c_inv * w : Matrix(0, 0);
        out.basis.push_back(full_from_parts(algebra, t, r));
        out.a_parts.push_back(std::move(t));
        out.z_parts.push_back(std::move(r));
    }
    return out;
}

DmSpan dm_span(const Graph& g) {
    DmSpan out;
    const std::size_t n = static_cast<std::size_t>(g.n());
    for (int i = 1; i <= g.n(); ++i)
        for (int j = 1; j <= g.n(); ++j)
            if (g.preceq(i, j)) {
                out.pairs.emplace_back(i, j);
                out.units_ei_to_ej.push_back(
                    Matrix::unit(n, n, static_cast<std::size_t>(j - 1),
                                 static_cast<std::size_t>(i - 1)));
                out.units_ej_to_ei.push_back(
                    Matrix::unit(n, n, static_cast<std::size_t>(i - 1),
                                 static_cast<std::size_t>(j - 1)));
            }
    return out;
}

DmComparison dm_compare(const Graph& g, const DerivationSpace& der) {
    const DmSpan span = dm_span(g);
    std::vector<Matrix> a_cols;
    for (const auto& t : der.a_parts) a_cols.push_back(t.vectorize());
    const std::size_t n2 = static_cast<std::size_t>(g.n()) * g.n();
    const Matrix a_span = a_cols.empty() ? Matrix::zero(n2, 0)
                                         : Matrix::from_columns(a_cols);
    const auto span_of = [&](const std::vector<Matrix>& units) {
        std::vector<Matrix> cols;
        for (const auto& u : units) cols.push_back(u.vectorize());
        return cols.empty() ? Matrix::zero(n2, 0) : Matrix::from_columns(cols);
    };
    DmComparison out;
    out.ei_to_ej_matches = same_span(a_span, span_of(span.units_ei_to_ej));
    out.ej_to_ei_matches = same_span(a_span, span_of(span.units_ej_to_ei));
    return out;
}

}  // namespace gonil
