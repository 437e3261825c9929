#include "otsge/drawing.hpp"

#include "otsge/error.hpp"

#include <map>

namespace otsge {

std::string PlaneViolation::describe() const {
    switch (kind) {
    case Kind::coincident_vertices:
        return "vertices '" + a + "' and '" + b + "' share a point";
    case Kind::vertex_on_edge:
        return "vertex '" + a + "' lies on edge (" + b + ", " + c + ")";
    case Kind::crossing_edges:
        return "edges (" + a + ", " + b + ") and (" + c + ", " + d + ") cross";
    }
    return "";
}

namespace {

// Proper crossing: the segments intersect in a single interior point of
// both. Touching configurations (an endpoint on the other segment) are
// reported by the vertex-on-edge scan instead.
bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
    int d1 = orientation(c, d, a);
    int d2 = orientation(c, d, b);
    int d3 = orientation(a, b, c);
    int d4 = orientation(a, b, d);
    return d1 * d2 < 0 && d3 * d4 < 0;
}

} // namespace

PlaneReport drawing_is_plane(const LabeledGraph& g, const Placement& placement) {
    int n = g.vertex_count();
    std::vector<const Point*> at(n);
    for (int v = 0; v < n; ++v) at[v] = &placement_at(placement, g.labels[v]);

    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (*at[u] == *at[v])
                return {PlaneViolation{PlaneViolation::Kind::coincident_vertices,
                                       g.labels[u], g.labels[v], "", ""}};

    for (int v = 0; v < n; ++v)
        for (auto [a, b] : g.edges) {
            if (v == a || v == b) continue;
            if (on_closed_segment(*at[a], *at[b], *at[v]))
                return {PlaneViolation{PlaneViolation::Kind::vertex_on_edge,
                                       g.labels[v], g.labels[a], g.labels[b], ""}};
        }

    for (std::size_t e = 0; e < g.edges.size(); ++e)
        for (std::size_t f = e + 1; f < g.edges.size(); ++f) {
            auto [a, b] = g.edges[e];
            auto [c, d] = g.edges[f];
            if (a == c || a == d || b == c || b == d) continue;
            if (segments_cross(*at[a], *at[b], *at[c], *at[d]))
                return {PlaneViolation{PlaneViolation::Kind::crossing_edges,
                                       g.labels[a], g.labels[b], g.labels[c],
                                       g.labels[d]}};
        }
    return {};
}

std::string SgeReport::describe() const {
    if (ok()) return "all member drawings are plane";
    std::string out = "member graph " + std::to_string(failing_graph);
    if (!failing_graph_name.empty()) out += " (" + failing_graph_name + ")";
    out += " is not plane";
    if (violation) out += ": " + violation->describe();
    return out;
}

SgeReport verify_sge(const std::vector<LabeledGraph>& family, const Placement& placement) {
    for (std::size_t i = 0; i < family.size(); ++i) {
        PlaneReport report = drawing_is_plane(family[i], placement);
        if (!report.ok()) {
            SgeReport out;
            out.failing_graph = static_cast<int>(i);
            out.failing_graph_name = family[i].name;
            out.violation = report.violation;
            return out;
        }
    }
    return {};
}

} // namespace otsge
