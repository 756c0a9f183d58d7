#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "srgint/bitset.hpp"

namespace srgint {

using Vertex = std::size_t;

/// Simple undirected graph with bitset adjacency rows.
///
/// Rows are kept symmetric with an empty diagonal; every mutating entry point
/// preserves that. Optional per-vertex labels record where a vertex came from
/// in a construction (block, point, pentagon coordinate, ...).
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);

    static Graph from_edges(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges);

    std::size_t order() const { return adj_.size(); }
    std::size_t size() const;  // edge count

    bool adjacent(Vertex x, Vertex y) const { return adj_[x].contains(y); }
    void add_edge(Vertex x, Vertex y);
    void remove_edge(Vertex x, Vertex y);

    const VertexSet& neighbours(Vertex x) const { return adj_[x]; }
    std::size_t degree(Vertex x) const { return adj_[x].count(); }
    std::optional<std::size_t> regular_degree() const;
    std::size_t min_degree() const;

    std::vector<std::pair<Vertex, Vertex>> edges() const;

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);
    const std::string& label(Vertex x) const;
    bool has_labels() const { return !labels_.empty(); }

    /// Induced subgraph on `vertices`, in the given order. Labels carry over.
    Graph induced(const std::vector<Vertex>& vertices) const;
    Graph induced(const VertexSet& vertices) const { return induced(vertices.elements()); }

    VertexSet all_vertices() const { return VertexSet::full(order()); }

    bool operator==(const Graph& o) const { return adj_ == o.adj_; }

private:
    std::vector<VertexSet> adj_;
    std::vector<std::string> labels_;
};

Graph complement(const Graph& g);

/// Vertices at distance exactly `i` from x (i = 0, 1, 2, ...).
VertexSet distance_layer(const Graph& g, Vertex x, std::size_t i);
bool is_connected(const Graph& g);
bool is_complete(const Graph& g);

/// Connected components as vertex sets, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

/// Backtracking isomorphism test with degree-sequence refinement; adequate
/// for the small graphs (tens of vertices) it is used on.
bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace srgint
