#include "gonil/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gonil {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 1) throw parse_error("vertex count must be at least 1");
    adj_.assign(static_cast<std::size_t>(n) + 1, {});
    for (const auto& [a, b] : edges) {
        if (a < 1 || a > n || b < 1 || b > n)
            throw parse_error("edge endpoint out of range: " + std::to_string(a) +
                              " " + std::to_string(b));
        if (a == b) throw parse_error("loop at vertex " + std::to_string(a));
        const Edge e{std::min(a, b), std::max(a, b)};
        if (has_edge(e.u, e.v))
            throw parse_error("duplicate edge " + std::to_string(e.u) + " " +
                              std::to_string(e.v));
        edges_.push_back(e);
        adj_[e.u].insert(e.v);
        adj_[e.v].insert(e.u);
    }
}

Graph Graph::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    std::optional<int> n;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> edge_lines;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        if (!n) {
            int v;
            if (!(fields >> v)) {
                std::string rest;
                if (fields.clear(), std::getline(fields, rest) && !rest.empty() &&
                    rest.find_first_not_of(" \t\r") != std::string::npos)
                    throw parse_error("line " + std::to_string(lineno) +
                                      ": malformed vertex count");
                continue;  // blank or comment-only line
            }
            std::string extra;
            if (fields >> extra)
                throw parse_error("line " + std::to_string(lineno) +
                                  ": trailing tokens after vertex count");
            n = v;
            continue;
        }
        int a, b;
        if (!(fields >> a)) {
            continue;  // blank line
        }
        std::string extra;
        if (!(fields >> b) || (fields >> extra))
            throw parse_error("line " + std::to_string(lineno) +
                              ": malformed edge line (want: i j)");
        edges.emplace_back(a, b);
        edge_lines.push_back(lineno);
    }
    if (!n) throw parse_error("missing vertex count line");
    try {
        return Graph(*n, edges);
    } catch (const parse_error& err) {
        // Re-derive the offending line for the message.
        for (std::size_t k = 0; k < edges.size(); ++k) {
            try {
                std::vector<std::pair<int, int>> prefix(edges.begin(),
                                                        edges.begin() + k + 1);
                Graph(*n, prefix);
            } catch (const parse_error&) {
                throw parse_error("line " + std::to_string(edge_lines[k]) + ": " +
                                  err.what());
            }
        }
        throw;
    }
}

void Graph::check_vertex(int i) const {
    if (i < 1 || i > n_)
        throw std::invalid_argument("vertex out of range: " + std::to_string(i));
}

bool Graph::has_edge(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) return false;
    return adj_[i].count(j) > 0;
}

std::optional<int> Graph::edge_index(int i, int j) const {
    const Edge e{std::min(i, j), std::max(i, j)};
    for (std::size_t k = 0; k < edges_.size(); ++k)
        if (edges_[k] == e) return static_cast<int>(k);
    return std::nullopt;
}

const std::set<int>& Graph::omega_prime(int i) const {
    check_vertex(i);
    return adj_[i];
}

std::set<int> Graph::omega(int i) const {
    std::set<int> s = omega_prime(i);
    s.insert(i);
    return s;
}

bool Graph::preceq(int i, int j) const {
    const auto om = omega(j);
    for (int k : omega_prime(i))
        if (!om.count(k)) return false;
    return true;
}

std::string Graph::to_text() const {
    std::ostringstream out;
    out << n_ << "\n";
    for (const auto& e : edges_) out << e.u << " " << e.v << "\n";
    return out.str();
}

int ClassPartition::class_of(int vertex) const {
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (int v : classes[c].vertices)
            if (v == vertex) return static_cast<int>(c);
    return -1;
}

ClassPartition equivalence_classes(const Graph& g) {
    const int n = g.n();
    std::vector<int> cls(static_cast<std::size_t>(n) + 1, -1);
    ClassPartition out;
    for (int i = 1; i <= n; ++i) {
        if (cls[i] >= 0) continue;
        const int id = static_cast<int>(out.classes.size());
        out.classes.push_back({});
        for (int j = i; j <= n; ++j)
            if (cls[j] < 0 && g.preceq(i, j) && g.preceq(j, i)) {
                cls[j] = id;
                out.classes[id].vertices.push_back(j);
            }
    }
    // Complete/edgeless dichotomy per class; asserted, not assumed.
    for (auto& c : out.classes) {
        const auto& vs = c.vertices;
        bool all = true, none = true;
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b)
                (g.has_edge(vs[a], vs[b]) ? none : all) = false;
        if (!all && !none)
            throw std::logic_error(
                "equivalence class is neither complete nor edgeless; the "
                "dichotomy this construction relies on is violated");
        if (vs.size() == 1) {
            c.kind = g.is_isolated(vs[0]) ? ClassKind::Empty : ClassKind::Complete;
        } else {
            c.kind = all ? ClassKind::Complete : ClassKind::Empty;
        }
    }
    // preceq descends to classes; record the induced relation.
    for (std::size_t a = 0; a < out.classes.size(); ++a)
        for (std::size_t b = 0; b < out.classes.size(); ++b)
            if (g.preceq(out.classes[a].vertices[0], out.classes[b].vertices[0]))
                out.order.emplace_back(static_cast<int>(a), static_cast<int>(b));
    return out;
}

ClusterDecomposition cluster_decomposition(const Graph& g) {
    ClusterDecomposition out;
    const int n = g.n();
    // Connected components, then check each is a clique.
    std::vector<int> comp(static_cast<std::size_t>(n) + 1, -1);
    int ncomp = 0;
    for (int i = 1; i <= n; ++i) {
        if (comp[i] >= 0) continue;
        std::vector<int> stack{i};
        comp[i] = ncomp;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : g.omega_prime(v))
                if (comp[w] < 0) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
        }
        ++ncomp;
    }
    std::vector<std::vector<int>> comps(ncomp);
    for (int i = 1; i <= n; ++i) comps[comp[i]].push_back(i);

    out.is_cluster = true;
    for (const auto& c : comps) {
        bool clique = true;
        Edge witness{};
        for (std::size_t a = 0; a < c.size() && clique; ++a)
            for (std::size_t b = a + 1; b < c.size(); ++b)
                if (!g.has_edge(c[a], c[b])) {
                    clique = false;
                    // Report a concrete edge joining non-equivalent vertices:
                    // some edge incident to this component must do so.
                    break;
                }
        if (!clique) {
            out.is_cluster = false;
            for (const auto& e : g.edges())
                if (comp[e.u] == comp[c[0]] &&
                    !(g.preceq(e.u, e.v) && g.preceq(e.v, e.u))) {
                    witness = e;
                    break;
                }
            out.witness = witness;
            // keep scanning so cliques/isolated stay unset on failure
            out.cliques.clear();
            out.isolated.clear();
            return out;
        }
        if (c.size() == 1)
            out.isolated.push_back(c[0]);
        else
            out.cliques.push_back(c);
    }
    std::sort(out.isolated.begin(), out.isolated.end());
    for (auto& c : out.cliques) std::sort(c.begin(), c.end());
    std::sort(out.cliques.begin(), out.cliques.end());
    return out;
}

}  // namespace gonil
