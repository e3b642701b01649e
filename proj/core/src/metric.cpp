#include "gonil/metric.hpp"

#include <nlohmann/json.hpp>
#include <stdexcept>

namespace gonil {

using nlohmann::json;

Metric::Metric(Matrix gram) : gram_(std::move(gram)) {
    if (!gram_.is_symmetric())
        throw std::invalid_argument("metric Gram matrix must be symmetric");
    if (!is_positive_definite(gram_))
        throw std::invalid_argument("metric Gram matrix must be positive definite");
}

Metric Metric::standard(std::size_t dim) { return Metric(Matrix::identity(dim)); }

Metric parse_metric(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("metric document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("gram"))
        throw parse_error("metric document: expected fields 'dim' and 'gram'");
    const auto dim = doc["dim"].get<std::size_t>();
    const auto& gram = doc["gram"];
    if (!gram.is_array() || gram.size() != dim)
        throw parse_error("metric document: 'gram' must be a dim x dim array");
    Matrix g(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const auto& row = gram[i];
        if (!row.is_array() || row.size() != dim)
            throw parse_error("metric document: 'gram' must be a dim x dim array");
        for (std::size_t j = 0; j < dim; ++j)
            g(i, j) = parse_rational(row[j].get<std::string>());
    }
    return Metric(std::move(g));
}

std::string format_metric(const Metric& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.dim(); ++j)
            row.push_back(to_string(m.gram()(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"dim", m.dim()}, {"gram", std::move(rows)}}.dump(2);
}

Metric random_spd_metric(std::size_t dim, Rng& rng) {
    Matrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            m(i, j) = Rational(rng.range(-1, 1));
    Matrix g = m.transpose() * m;
    for (std::size_t i = 0; i < dim; ++i) g(i, i) += rng.range(1, 3);
    return Metric(std::move(g));
}

AdaptedBasis adapt(const GraphLieAlgebra& algebra, const Metric& metric) {
    const std::size_t n = static_cast<std::size_t>(algebra.n());
    const std::size_t m = static_cast<std::size_t>(algebra.m());
    if (metric.dim() != n + m)
        throw std::invalid_argument("metric dimension does not match the algebra");
    const Matrix& g = metric.gram();

    Matrix change = Matrix::identity(n + m);
    if (m > 0) {
        // e'_i = e_i - G_z^{-1} <e_i, z_.> corrections; z part of change.
        const Matrix gz = g.block(n, n, m, m);
        const Matrix gz_inv = inverse(gz);
        const Matrix cross = g.block(n, 0, m, n);  // <z_a, e_i>
        const Matrix corr = gz_inv * cross;        // m x n
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t a = 0; a < m; ++a) change(n + a, i) = -corr(a, i);
    }
    AdaptedBasis out;
    out.n = static_cast<int>(n);
    out.m = static_cast<int>(m);
    out.gram = change.transpose() * g * change;
    out.change = std::move(change);
    // The cross block vanishes by construction.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < m; ++a)
            if (out.gram(i, n + a) != 0)
                throw std::logic_error("adapt: cross block did not vanish");
    return out;
}

ACSplit ac_split(const AdaptedBasis& basis) {
    ACSplit out{basis.a_gram(), basis.z_gram()};
    if (!is_positive_definite(out.A) ||
        (out.C.rows() > 0 && !is_positive_definite(out.C)))
        throw std::logic_error("ac_split: blocks of an SPD Gram must be SPD");
    return out;
}

Matrix JPencil::of(const Matrix& z_coords) const {
    if (z_coords.cols() != 1 || z_coords.rows() != ops.size())
        throw std::invalid_argument("JPencil::of: z-coordinate vector expected");
    if (ops.empty()) return Matrix();
    Matrix out = Matrix::zero(ops[0].rows(), ops[0].cols());
    for (std::size_t a = 0; a < ops.size(); ++a) {
        if (z_coords(a, 0) == 0) continue;
        out += ops[a] * z_coords(a, 0);
    }
    return out;
}

JPencil standard_j_pencil(const GraphLieAlgebra& algebra) {
    const std::size_t n = static_cast<std::size_t>(algebra.n());
    JPencil out;
    out.kind = JKind::Standard;
    for (const auto& e : algebra.graph().edges()) {
        Matrix j(n, n);
        j(algebra.e_index(e.v), algebra.e_index(e.u)) = 1;
        j(algebra.e_index(e.u), algebra.e_index(e.v)) = -1;
        out.ops.push_back(std::move(j));
    }
    return out;
}

JPencil j_pencil(const GraphLieAlgebra& algebra, const AdaptedBasis& basis) {
    // (J_Z X, Y) = (Z, [X, Y]) with X = e'_i, Y = e'_j reads, in matrix
    // form, A J_Z = J0_{CZ}; the brackets of the adapted basis follow the
    // same graph pattern, so the right side uses the structure constants.
    const auto [A, C] = ac_split(basis);
    const Matrix a_inv = inverse(A);
    const JPencil j0 = standard_j_pencil(algebra);
    JPencil out;
    out.kind = JKind::Metric;
    for (int a = 0; a < algebra.m(); ++a) {
        Matrix cz = C.col(static_cast<std::size_t>(a));
        out.ops.push_back(a_inv * j0.of(cz));
    }
    return out;
}

Rational b_form(const Matrix& k1, const Matrix& k2) {
    if (!k1.is_square() || k1.rows() != k2.rows() || k1.cols() != k2.cols())
        throw std::invalid_argument("b_form: square matrices of equal size expected");
    return (k1 * k2).trace() / Rational(-2);
}

Jj0Check verify_jj0(const GraphLieAlgebra& algebra, const AdaptedBasis& basis,
                    std::size_t extra_samples, std::uint64_t seed) {
    const auto [A, C] = ac_split(basis);
    const Matrix a_inv = inverse(A);
    const JPencil j0 = standard_j_pencil(algebra);
    const std::size_t m = static_cast<std::size_t>(algebra.m());
    const std::size_t n = static_cast<std::size_t>(algebra.n());

    // Independent evaluation of J_Z straight from the defining identity:
    // row (i, j) of the linear system (A J_Z)_{ji} = (Z, [e'_i, e'_j]).
    const auto j_direct = [&](const Matrix& z) {
        Matrix rhs(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Matrix x(static_cast<std::size_t>(algebra.dim()), 1);
                Matrix y(static_cast<std::size_t>(algebra.dim()), 1);
                x(i, 0) = 1;
                y(j, 0) = 1;
                const Matrix br = algebra.bracket(x, y);
                Rational v = 0;
                for (std::size_t a = 0; a < m; ++a) {
                    const Rational c = br(n + a, 0);
                    if (c == 0) continue;
                    for (std::size_t b = 0; b < m; ++b)
                        if (z(b, 0) != 0) v += z(b, 0) * C(b, a) * c;
                }
                rhs(j, i) = v;
            }
        return a_inv * rhs;
    };

    Rng rng(seed);
    std::vector<Matrix> samples;
    for (std::size_t a = 0; a < m; ++a) {
        Matrix z(m, 1);
        z(a, 0) = 1;
        samples.push_back(std::move(z));
    }
    for (std::size_t s = 0; s < extra_samples; ++s) {
        Matrix z(m, 1);
        for (std::size_t a = 0; a < m; ++a) z(a, 0) = rng.small_rational_or_zero();
        samples.push_back(std::move(z));
    }
    for (const auto& z : samples) {
        Matrix cz(m, 1);
        for (std::size_t a = 0; a < m; ++a) {
            Rational v = 0;
            for (std::size_t b = 0; b < m; ++b)
                if (z(b, 0) != 0) v += C(a, b) * z(b, 0);
            cz(a, 0) = v;
        }
        if (!(j_direct(z) == a_inv * j0.of(cz))) return {false, z};
    }
    return {true, Matrix()};
}

}  // namespace gonil
