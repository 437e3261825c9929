#ifndef OTSGE_GRAPH_HPP
#define OTSGE_GRAPH_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace otsge {

/// Simple undirected graph over an ordered set of string labels.
/// Edges are stored as index pairs (u < v), sorted and deduplicated,
/// so identical constructions serialize identically.
struct LabeledGraph {
    std::string name;
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;

    int index_of(std::string_view label) const;

    /// Set-semantics insert; self-loops are rejected.
    void add_edge(int u, int v);
    void add_edge(std::string_view u, std::string_view v);

    bool has_edge(int u, int v) const;
    bool has_edge(std::string_view u, std::string_view v) const;

    int vertex_count() const { return static_cast<int>(labels.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }

    std::vector<std::vector<int>> adjacency() const;

    bool operator==(const LabeledGraph&) const = default;
};

/// True iff the graph stays connected after deleting any one or two
/// vertices. Brute force over all vertex pairs; meant for desk-scale
/// instances. Throws Errc::too_small below 4 vertices.
bool is_three_connected(const LabeledGraph& g);

} // namespace otsge

#endif
