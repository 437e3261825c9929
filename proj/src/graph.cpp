#include "otsge/graph.hpp"

#include "otsge/error.hpp"

#include <algorithm>
#include <cassert>

namespace otsge {

int LabeledGraph::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return static_cast<int>(i);
    return -1;
}

void LabeledGraph::add_edge(int u, int v) {
    assert(u >= 0 && v >= 0 && u < vertex_count() && v < vertex_count());
    if (u == v)
        fail(Errc::degenerate_input, "self-loop at '" + labels[u] + "'");
    if (u > v) std::swap(u, v);
    std::pair<int, int> e{u, v};
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it != edges.end() && *it == e) return;
    edges.insert(it, e);
}

void LabeledGraph::add_edge(std::string_view u, std::string_view v) {
    int iu = index_of(u);
    int iv = index_of(v);
    if (iu < 0 || iv < 0)
        fail(Errc::missing_label,
             "edge endpoint '" + std::string(iu < 0 ? u : v) + "' is not a vertex");
    add_edge(iu, iv);
}

bool LabeledGraph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::pair<int, int>{u, v});
}

bool LabeledGraph::has_edge(std::string_view u, std::string_view v) const {
    int iu = index_of(u);
    int iv = index_of(v);
    if (iu < 0 || iv < 0) return false;
    return has_edge(iu, iv);
}

std::vector<std::vector<int>> LabeledGraph::adjacency() const {
    std::vector<std::vector<int>> adj(labels.size());
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

namespace {

// Connectivity of g minus `removed` (boolean mask), by DFS.
bool connected_without(const std::vector<std::vector<int>>& adj,
                       const std::vector<bool>& removed) {
    int n = static_cast<int>(adj.size());
    int start = -1;
    int alive = 0;
    for (int v = 0; v < n; ++v) {
        if (removed[v]) continue;
        ++alive;
        if (start < 0) start = v;
    }
    if (alive <= 1) return true;

    std::vector<bool> seen(n, false);
    std::vector<int> stack{start};
    seen[start] = true;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v]) {
            if (removed[w] || seen[w]) continue;
            seen[w] = true;
            ++reached;
            stack.push_back(w);
        }
    }
    return reached == alive;
}

} // namespace

bool is_three_connected(const LabeledGraph& g) {
    int n = g.vertex_count();
    if (n < 4)
        fail(Errc::too_small, "3-connectivity needs at least 4 vertices, got " +
                                  std::to_string(n));
    auto adj = g.adjacency();
    std::vector<bool> removed(n, false);
    if (!connected_without(adj, removed)) return false;
    for (int u = 0; u < n; ++u) {
        removed[u] = true;
        if (!connected_without(adj, removed)) return false;
        for (int v = u + 1; v < n; ++v) {
            removed[v] = true;
            if (!connected_without(adj, removed)) return false;
            removed[v] = false;
        }
        removed[u] = false;
    }
    return true;
}

} // namespace otsge
