#ifndef OTSGE_REDUCTION_HPP
#define OTSGE_REDUCTION_HPP

#include "otsge/chirotope.hpp"
#include "otsge/drawing.hpp"
#include "otsge/graph.hpp"

#include <array>
#include <string>
#include <vector>

namespace otsge {

/// Bookkeeping for one reduction instance: which source elements sit on
/// the (triangular) hull, which are interior, and how each of the three
/// wheel copies identifies its hull with the frame corners.
///
/// Copy vertices are labeled "<source>#<copy>"; frame vertices "t1".."t4".
/// Copy 1 maps (h1,h2,h3) onto (t1,t4,t3), copy 2 onto (t2,t4,t1),
/// copy 3 onto (t3,t4,t2).
struct GadgetMeta {
    Hull hull;                  // exactly 3 source labels, clockwise
    std::vector<int> interior;  // remaining source labels, ascending

    static constexpr std::array<std::array<int, 3>, 3> copy_frame = {{
        {{0, 3, 2}}, // copy 1: t1, t4, t3
        {{1, 3, 0}}, // copy 2: t2, t4, t1
        {{2, 3, 1}}, // copy 3: t3, t4, t2
    }};

    static std::string frame_label(int frame_index); // 0..3 -> "t1".."t4"

    /// Gadget label of source element `v` in copy `copy` (1-based).
    std::string copy_label(int v, int copy) const;

    /// Shared label set: t1..t4, then interior labels of copies 1..3.
    std::vector<std::string> shared_labels() const;

    bool operator==(const GadgetMeta&) const = default;
};

/// Wheel of element v: the other n-1 elements arranged in the cycle
/// given by the surrounding sequence of v (a hull vertex's linear
/// sequence is closed through the opposite hull edge), plus spokes from
/// v to everything. Requires a triangular hull.
LabeledGraph build_wheel(const Chirotope& chi, int v);

/// The scaffold graph: outer triangle t1,t2,t3 plus center t4 (K4).
LabeledGraph build_frame();

struct Gadget {
    LabeledGraph graph;
    GadgetMeta meta;
};

/// Three relabeled copies of the wheel of v glued into the frame, hull
/// vertices identified with frame corners per GadgetMeta; edge set
/// deduplicated. 4 + 3(n-3) vertices.
Gadget build_gadget(const Chirotope& chi, int v);

/// Family of all n gadgets over one shared label set of size 3n-5.
struct SgeInstance {
    int n = 0;
    std::vector<std::string> labels;
    std::vector<LabeledGraph> graphs; // one per source element, in label order
    GadgetMeta meta;
    std::string source_signs;         // sign string of the source chirotope

    Chirotope source_chirotope() const;

    bool operator==(const SgeInstance&) const = default;
};

/// Requires a triangular hull (callers wanting automatic re-marking run
/// normalize_triangular_hull first).
SgeInstance reduce_to_sge(const Chirotope& chi);

inline SgeReport verify_sge(const SgeInstance& instance, const Placement& placement) {
    return verify_sge(instance.graphs, placement);
}

} // namespace otsge

#endif
