#include "otsge/reduction.hpp"

#include "otsge/error.hpp"

#include <algorithm>
#include <cassert>

namespace otsge {

std::string GadgetMeta::frame_label(int frame_index) {
    assert(frame_index >= 0 && frame_index < 4);
    return "t" + std::to_string(frame_index + 1);
}

std::string GadgetMeta::copy_label(int v, int copy) const {
    assert(copy >= 1 && copy <= 3);
    for (int r = 0; r < 3; ++r)
        if (hull[r] == v) return frame_label(copy_frame[copy - 1][r]);
    return std::to_string(v) + "#" + std::to_string(copy);
}

std::vector<std::string> GadgetMeta::shared_labels() const {
    std::vector<std::string> labels;
    labels.reserve(4 + 3 * interior.size());
    for (int f = 0; f < 4; ++f) labels.push_back(frame_label(f));
    for (int copy = 1; copy <= 3; ++copy)
        for (int v : interior) labels.push_back(copy_label(v, copy));
    return labels;
}

namespace {

GadgetMeta meta_for(const Chirotope& chi) {
    Hull hull = convex_hull(chi);
    if (hull.size() != 3)
        fail(Errc::non_triangular_hull,
             "hull has " + std::to_string(hull.size()) + " vertices, need 3");
    GadgetMeta meta;
    meta.hull = hull;
    for (int v = 0; v < chi.n(); ++v)
        if (!hull_contains(hull, v)) meta.interior.push_back(v);
    return meta;
}

// Cycle of the wheel of v: the surrounding sequence, closed into a ring.
// A hull vertex's linear sequence is closed through the hull edge
// joining its two hull neighbors, which are exactly the endpoints.
std::vector<int> wheel_cycle(const Chirotope& chi, const Hull& hull, int v) {
    if (hull_contains(hull, v)) return hull_surrounding_sequence(chi, v).order;
    return internal_surrounding_sequence(chi, v).order;
}

} // namespace

LabeledGraph build_wheel(const Chirotope& chi, int v) {
    GadgetMeta meta = meta_for(chi);
    int n = chi.n();

    LabeledGraph wheel;
    wheel.name = "W_" + std::to_string(v);
    wheel.labels.reserve(n);
    for (int u = 0; u < n; ++u) wheel.labels.push_back(std::to_string(u));

    std::vector<int> ring = wheel_cycle(chi, meta.hull, v);
    for (std::size_t i = 0; i < ring.size(); ++i)
        wheel.add_edge(ring[i], ring[(i + 1) % ring.size()]);
    for (int u = 0; u < n; ++u)
        if (u != v) wheel.add_edge(v, u);
    return wheel;
}

LabeledGraph build_frame() {
    LabeledGraph frame;
    frame.name = "T";
    for (int f = 0; f < 4; ++f) frame.labels.push_back(GadgetMeta::frame_label(f));
    frame.add_edge(0, 1);
    frame.add_edge(1, 2);
    frame.add_edge(0, 2);
    frame.add_edge(3, 0);
    frame.add_edge(3, 1);
    frame.add_edge(3, 2);
    return frame;
}

Gadget build_gadget(const Chirotope& chi, int v) {
    GadgetMeta meta = meta_for(chi);
    std::vector<int> ring = wheel_cycle(chi, meta.hull, v);

    LabeledGraph g;
    g.name = "T_" + std::to_string(v);
    g.labels = meta.shared_labels();

    LabeledGraph frame = build_frame();
    for (auto [a, b] : frame.edges) g.add_edge(frame.labels[a], frame.labels[b]);

    for (int copy = 1; copy <= 3; ++copy) {
        for (std::size_t i = 0; i < ring.size(); ++i)
            g.add_edge(meta.copy_label(ring[i], copy),
                       meta.copy_label(ring[(i + 1) % ring.size()], copy));
        for (int u = 0; u < chi.n(); ++u)
            if (u != v) g.add_edge(meta.copy_label(v, copy), meta.copy_label(u, copy));
    }
    return {std::move(g), std::move(meta)};
}

Chirotope SgeInstance::source_chirotope() const {
    std::vector<std::int8_t> signs;
    signs.reserve(source_signs.size());
    for (char c : source_signs)
        signs.push_back(c == '+' ? std::int8_t{1} : (c == '-' ? std::int8_t{-1} : std::int8_t{0}));
    return Chirotope(n, std::move(signs));
}

SgeInstance reduce_to_sge(const Chirotope& chi) {
    SgeInstance instance;
    instance.n = chi.n();
    instance.source_signs = chi.sign_string();
    for (int v = 0; v < chi.n(); ++v) {
        Gadget gadget = build_gadget(chi, v);
        if (v == 0) {
            instance.meta = gadget.meta;
            instance.labels = gadget.graph.labels;
        }
        instance.graphs.push_back(std::move(gadget.graph));
    }
    return instance;
}

} // namespace otsge
