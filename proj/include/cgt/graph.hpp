#pragma once

// Small labelled undirected graphs and exact isomorphism testing by
// profile refinement plus backtracking. Desk scale only (<= 100 vertices).

#include <optional>
#include <string>
#include <vector>

#include "cgt/errors.hpp"

namespace cgt {

class Graph {
public:
    Graph() = default;
    explicit Graph(std::vector<std::string> labels);

    int add_vertex(const std::string& label);
    void add_edge(int u, int v); // simple graph; duplicate edges ignored

    int vertex_count() const { return int(labels_.size()); }
    int edge_count() const;
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const;

    int degree(int v) const { return int(adj_[v].size()); }
    bool is_regular(int k) const;
    bool is_bipartite() const;
    /// Length of a shortest cycle, or 0 for a forest.
    int girth() const;

    std::vector<std::pair<int, int>> edges() const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> adj_;
};

/// Witness bijection preserving adjacency both ways, or nullopt when the
/// graphs are definitively non-isomorphic. The witness is re-verified
/// edge-by-edge before being returned. Throws budget_error above 100 vertices.
std::optional<std::vector<int>> graph_isomorphism(const Graph& g1, const Graph& g2);

/// Checks that map is a bijection g1 -> g2 preserving adjacency exactly.
bool verify_isomorphism(const Graph& g1, const Graph& g2, const std::vector<int>& map);

} // namespace cgt
