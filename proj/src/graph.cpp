#include "thetakit/graph.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace thetakit {

Graph::Graph(int n, GraphMeta meta) : n_(n), words_((n + kWordBits - 1) / kWordBits), meta_(std::move(meta)) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= Word{1} << (v & 63);
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= Word{1} << (u & 63);
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(Word{1} << (v & 63));
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(Word{1} << (u & 63));
}

int Graph::degree(int v) const {
    int d = 0;
    for (Word w : row(v)) d += std::popcount(w);
    return d;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> out(n_);
    for (int v = 0; v < n_; ++v) out[v] = degree(v);
    return out;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (adjacent(v, u)) out.push_back(u);
    return out;
}

std::int64_t Graph::edge_count() const {
    std::int64_t twice = 0;
    for (Word w : bits_) twice += std::popcount(w);
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

std::optional<int> Graph::regular_degree() const {
    const int d = degree(0);
    for (int v = 1; v < n_; ++v)
        if (degree(v) != d) return std::nullopt;
    return d;
}

bool Graph::is_connected() const {
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < n_; ++u) {
            if (!seen[u] && adjacent(v, u)) {
                seen[u] = 1;
                ++count;
                stack.push_back(u);
            }
        }
    }
    return count == n_;
}

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph complement(const Graph& g) {
    Graph h(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.adjacent(u, v)) h.add_edge(u, v);
    if (!g.meta().name.empty()) h.meta().name = "complement(" + g.meta().name + ")";
    h.meta().vertex_transitive = g.meta().vertex_transitive;
    h.meta().self_complementary = g.meta().self_complementary;
    return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph h(a.n() + b.n());
    for (auto [u, v] : a.edges()) h.add_edge(u, v);
    for (auto [u, v] : b.edges()) h.add_edge(a.n() + u, a.n() + v);
    return h;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    Graph h(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (g.adjacent(vertices[i], vertices[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

Graph permute(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.n()) throw std::invalid_argument("permutation size mismatch");
    Graph h(g.n(), g.meta());
    for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    return h;
}

}  // namespace thetakit
