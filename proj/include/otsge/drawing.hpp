#ifndef OTSGE_DRAWING_HPP
#define OTSGE_DRAWING_HPP

#include "otsge/geometry.hpp"
#include "otsge/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace otsge {

struct PlaneViolation {
    enum class Kind { coincident_vertices, vertex_on_edge, crossing_edges };
    Kind kind;
    // coincident_vertices: a, b
    // vertex_on_edge:      a on edge (b, c)
    // crossing_edges:      (a, b) x (c, d)
    std::string a, b, c, d;
    std::string describe() const;
};

struct PlaneReport {
    std::optional<PlaneViolation> violation;
    bool ok() const { return !violation.has_value(); }
};

/// Strict plane test for the straight-line drawing of g under the
/// placement: labels map to pairwise distinct points, no vertex lies on
/// the closed segment of a non-incident edge, and no two edges meet
/// outside a shared endpoint. All decisions are exact. The first
/// violation in fixed scan order is reported.
/// Throws Errc::missing_label when the placement misses a label of g.
PlaneReport drawing_is_plane(const LabeledGraph& g, const Placement& placement);

struct SgeReport {
    int failing_graph = -1;
    std::string failing_graph_name;
    std::optional<PlaneViolation> violation;
    bool ok() const { return failing_graph < 0; }
    std::string describe() const;
};

/// Simultaneous-embedding check: drawing_is_plane for every member
/// graph, in family order; nothing else. First failing member reported.
SgeReport verify_sge(const std::vector<LabeledGraph>& family, const Placement& placement);

} // namespace otsge

#endif
