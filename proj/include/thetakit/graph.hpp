#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace thetakit {

// Catalog assertions about a graph. Never inferred from the adjacency.
struct GraphMeta {
    std::string name;
    std::optional<bool> vertex_transitive;
    std::optional<bool> edge_transitive;
    std::optional<bool> self_complementary;
};

// Undirected simple graph stored as a dense bit-packed symmetric matrix.
class Graph {
public:
    using Word = std::uint64_t;
    static constexpr int kWordBits = 64;

    explicit Graph(int n, GraphMeta meta = {});

    int n() const { return n_; }
    int words() const { return words_; }

    bool adjacent(int u, int v) const {
        return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }
    std::span<const Word> row(int v) const {
        return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
    }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    int degree(int v) const;
    std::vector<int> degrees() const;
    std::vector<int> neighbors(int v) const;
    std::int64_t edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    // Common degree when every vertex has the same degree.
    std::optional<int> regular_degree() const;
    bool is_connected() const;
    bool is_complete() const { return edge_count() == static_cast<std::int64_t>(n_) * (n_ - 1) / 2; }
    bool is_empty() const { return edge_count() == 0; }

    const GraphMeta& meta() const { return meta_; }
    GraphMeta& meta() { return meta_; }

    // Adjacency equality; metadata is ignored.
    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

private:
    void check_vertex(int v) const;

    int n_;
    int words_;
    std::vector<Word> bits_;
    GraphMeta meta_;
};

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);
Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);
// Relabels so that vertex v of g becomes perm[v].
Graph permute(const Graph& g, const std::vector<int>& perm);

}  // namespace thetakit
