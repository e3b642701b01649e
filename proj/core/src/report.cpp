#include "gonil/report.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace gonil {

namespace {

using nlohmann::json;

json matrix_to_json(const Matrix& m) {
    json out;
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    out["entries"] = std::move(rows);
    return out;
}

Matrix matrix_from_json(const json& doc) {
    const std::size_t rows = doc.at("rows").get<std::size_t>();
    const std::size_t cols = doc.at("cols").get<std::size_t>();
    Matrix m(rows, cols);
    const auto& entries = doc.at("entries");
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = parse_rational(entries[i][j].get<std::string>());
    return m;
}

}  // namespace

std::string report_to_json(const Report& report) {
    const auto& b = report.body;
    json cluster{{"is_cluster", b.cluster.is_cluster},
                 {"isolated", b.cluster.isolated},
                 {"cliques", b.cluster.cliques}};
    if (b.cluster.witness)
        cluster["witness"] = {b.cluster.witness->u, b.cluster.witness->v};

    json nr{{"ok", b.nr.ok},
            {"failure", static_cast<int>(b.nr.failure)},
            {"alpha", b.nr.alpha},
            {"beta", b.nr.beta}};

    json go{{"tag", b.go.tag == GordonVerdict::Tag::No ? "no" : "probably-yes"},
            {"witness_from_family", b.go.witness_from_family},
            {"sample_description", b.go.sample_description},
            {"pairs_tested", b.go.pairs_tested}};
    if (b.go.tag == GordonVerdict::Tag::No) {
        go["witness_z"] = matrix_to_json(b.go.witness_z);
        go["witness_x"] = matrix_to_json(b.go.witness_x);
        go["farkas"] = matrix_to_json(b.go.farkas);
    }

    json coeffs = json::array();
    for (const auto& c : b.semi.ideal_coeffs) {
        if (c)
            coeffs.push_back(to_string(*c));
        else
            coeffs.push_back(nullptr);
    }
    json semi{{"ok", b.semi.ok},
              {"violation", b.semi.violation},
              {"ideal_coeffs", std::move(coeffs)},
              {"center_block", matrix_to_json(b.semi.center_block)}};

    json doc{{"version", report.version},
             {"graph_source", report.graph_source},
             {"metric_source", report.metric_source},
             {"graph", report.graph_text},
             {"seed", report.seed},
             {"cluster", std::move(cluster)},
             {"nr", std::move(nr)},
             {"go", std::move(go)},
             {"semi_standard", std::move(semi)},
             {"agree", b.agree}};
    return doc.dump(2);
}

Report report_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("report document: ") + e.what());
    }
    Report report;
    report.version = doc.at("version").get<std::string>();
    report.graph_source = doc.at("graph_source").get<std::string>();
    report.metric_source = doc.at("metric_source").get<std::string>();
    report.graph_text = doc.at("graph").get<std::string>();
    report.seed = doc.at("seed").get<std::uint64_t>();
    auto& b = report.body;

    const auto& cluster = doc.at("cluster");
    b.cluster.is_cluster = cluster.at("is_cluster").get<bool>();
    b.cluster.isolated = cluster.at("isolated").get<std::vector<int>>();
    b.cluster.cliques = cluster.at("cliques").get<std::vector<std::vector<int>>>();
    if (cluster.contains("witness"))
        b.cluster.witness = Edge{cluster["witness"][0].get<int>(),
                                 cluster["witness"][1].get<int>()};

    const auto& nr = doc.at("nr");
    b.nr.ok = nr.at("ok").get<bool>();
    b.nr.failure = static_cast<NrResult::Failure>(nr.at("failure").get<int>());
    b.nr.alpha = nr.at("alpha").get<int>();
    b.nr.beta = nr.at("beta").get<int>();

    const auto& go = doc.at("go");
    b.go.tag = go.at("tag").get<std::string>() == "no"
                   ? GordonVerdict::Tag::No
                   : GordonVerdict::Tag::ProbablyYes;
    b.go.witness_from_family = go.at("witness_from_family").get<bool>();
    b.go.sample_description = go.at("sample_description").get<std::string>();
    b.go.pairs_tested = go.at("pairs_tested").get<std::size_t>();
    if (b.go.tag == GordonVerdict::Tag::No) {
        b.go.witness_z = matrix_from_json(go.at("witness_z"));
        b.go.witness_x = matrix_from_json(go.at("witness_x"));
        b.go.farkas = matrix_from_json(go.at("farkas"));
    }

    const auto& semi = doc.at("semi_standard");
    b.semi.ok = semi.at("ok").get<bool>();
    b.semi.violation = semi.at("violation").get<std::string>();
    for (const auto& c : semi.at("ideal_coeffs")) {
        if (c.is_null())
            b.semi.ideal_coeffs.push_back(std::nullopt);
        else
            b.semi.ideal_coeffs.push_back(parse_rational(c.get<std::string>()));
    }
    b.semi.center_block = matrix_from_json(semi.at("center_block"));
    b.agree = doc.at("agree").get<bool>();
    return report;
}

namespace {

std::string vertex_list(const std::vector<int>& vs) {
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? "," : "") << vs[i];
    out << "}";
    return out.str();
}

std::string column_entries(const Matrix& v) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < v.rows(); ++i)
        out << (i ? ", " : "") << to_string(v(i, 0));
    out << ")";
    return out.str();
}

}  // namespace

std::string report_to_text(const Report& report) {
    const auto& b = report.body;
    std::ostringstream out;
    out << "graph: " << report.graph_source << "\n";
    out << "metric: " << report.metric_source << "\n";

    out << "cluster graph: " << (b.cluster.is_cluster ? "yes" : "no");
    if (b.cluster.is_cluster) {
        out << "  (cliques:";
        for (const auto& c : b.cluster.cliques) out << " " << vertex_list(c);
        if (!b.cluster.isolated.empty())
            out << "; isolated " << vertex_list(b.cluster.isolated);
        out << ")";
    } else if (b.cluster.witness) {
        out << "  (edge " << b.cluster.witness->u << "-" << b.cluster.witness->v
            << " joins non-equivalent vertices)";
    }
    out << "\n";

    out << "naturally reductive: " << (b.nr.ok ? "yes" : "no");
    if (!b.nr.ok) {
        if (b.nr.failure == NrResult::Failure::NotSubalgebra)
            out << "  ([J_" << b.nr.alpha + 1 << ", J_" << b.nr.beta + 1
                << "] is outside span(J))";
        else
            out << "  (ad_{J_" << b.nr.alpha + 1
                << "} transported to z is not skew)";
    }
    out << "\n";

    out << "geodesic orbit (sampled): ";
    if (b.go.tag == GordonVerdict::Tag::No) {
        out << "no\n  witness Z = " << column_entries(b.go.witness_z)
            << " (z-coordinates)\n  witness X = " << column_entries(b.go.witness_x)
            << " (a-coordinates)";
        if (b.go.witness_from_family) out << "\n  witness from the (C^-1 z_a, e_i) family";
    } else {
        out << "probably yes  (" << b.go.sample_description << ")";
    }
    out << "\n";

    out << "semi-standard: " << (b.semi.ok ? "yes" : "no");
    if (!b.semi.ok) {
        out << "  (" << b.semi.violation << ")";
    } else if (!b.semi.ideal_coeffs.empty()) {
        out << "  (ideal coefficients:";
        for (const auto& c : b.semi.ideal_coeffs) {
            if (c)
                out << " " << to_string(*c);
            else
                out << " [irrational split]";
        }
        out << ")";
    }
    out << "\n";

    out << "verdicts consistent with the equivalence: "
        << (b.agree ? "yes" : "NO — counterexample, please report") << "\n";
    return out.str();
}

}  // namespace gonil
