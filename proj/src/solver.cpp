#include "otsge/solver.hpp"

#include "otsge/error.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace otsge {

namespace {

// Frame corners: a clockwise triangle with t4 at its centroid. The
// exact values are an implementation constant; only the orientation and
// t4 being strictly interior matter.
const std::array<Point, 4>& frame_points() {
    static const std::array<Point, 4> points = {
        Point(0, 0),    // t1
        Point(60, 120), // t2
        Point(120, 0),  // t3
        Point(60, 40),  // t4
    };
    return points;
}

struct AffineMap {
    // x -> M x + t, all rational.
    Rational m00, m01, m10, m11;
    Rational t0, t1;

    Point apply(const Point& p) const {
        return Point(m00 * p.x + m01 * p.y + t0, m10 * p.x + m11 * p.y + t1);
    }
};

// Unique affine map with src[i] -> dst[i] for a non-degenerate triangle.
AffineMap affine_through(const std::array<Point, 3>& src, const std::array<Point, 3>& dst) {
    Rational ux = src[1].x - src[0].x, uy = src[1].y - src[0].y;
    Rational wx = src[2].x - src[0].x, wy = src[2].y - src[0].y;
    Rational det = ux * wy - uy * wx;
    assert(sign_of(det) != 0);
    Rational vx = dst[1].x - dst[0].x, vy = dst[1].y - dst[0].y;
    Rational zx = dst[2].x - dst[0].x, zy = dst[2].y - dst[0].y;

    AffineMap map;
    map.m00 = (vx * wy - zx * uy) / det;
    map.m01 = (zx * ux - vx * wx) / det;
    map.m10 = (vy * wy - zy * uy) / det;
    map.m11 = (zy * ux - vy * wx) / det;
    map.t0 = dst[0].x - map.m00 * src[0].x - map.m01 * src[0].y;
    map.t1 = dst[0].y - map.m10 * src[0].x - map.m11 * src[0].y;
    return map;
}

} // namespace

Placement embed_from_realization(const Chirotope& chi,
                                 const std::vector<Point>& points,
                                 const SgeInstance& instance) {
    if (static_cast<int>(points.size()) != chi.n())
        fail(Errc::realization_mismatch,
             "got " + std::to_string(points.size()) + " points for " +
                 std::to_string(chi.n()) + " elements");
    if (Chirotope::from_points(points) != chi)
        fail(Errc::realization_mismatch, "points do not realize the chirotope");
    if (instance.n != chi.n() || instance.source_signs != chi.sign_string())
        fail(Errc::realization_mismatch,
             "instance was not reduced from this chirotope");
    Hull hull = convex_hull(chi);
    if (hull.size() != 3)
        fail(Errc::non_triangular_hull,
             "hull has " + std::to_string(hull.size()) + " vertices, need 3");

    const GadgetMeta& meta = instance.meta;
    std::array<Point, 3> source_triangle = {points[meta.hull[0]], points[meta.hull[1]],
                                            points[meta.hull[2]]};

    Placement placement;
    for (int f = 0; f < 4; ++f) placement[GadgetMeta::frame_label(f)] = frame_points()[f];
    for (int copy = 1; copy <= 3; ++copy) {
        std::array<Point, 3> target;
        for (int r = 0; r < 3; ++r)
            target[r] = frame_points()[GadgetMeta::copy_frame[copy - 1][r]];
        AffineMap map = affine_through(source_triangle, target);
        for (int v : meta.interior)
            placement[meta.copy_label(v, copy)] = map.apply(points[v]);
    }
    return placement;
}

namespace {

// Strict convex hull corners (collinear boundary points dropped),
// monotone chain over exact coordinates.
std::vector<Point> hull_corners(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    auto build = [&](auto begin, auto end) {
        std::vector<Point> chain;
        for (auto it = begin; it != end; ++it) {
            while (chain.size() >= 2 &&
                   orientation(chain[chain.size() - 2], chain.back(), *it) != +1)
                chain.pop_back();
            chain.push_back(*it);
        }
        return chain;
    };
    std::vector<Point> upper = build(pts.begin(), pts.end());
    std::vector<Point> lower = build(pts.rbegin(), pts.rend());
    upper.pop_back();
    lower.pop_back();
    upper.insert(upper.end(), lower.begin(), lower.end());
    return upper; // clockwise corner cycle
}

bool on_hull_boundary(const std::vector<Point>& corners, const Point& p) {
    if (corners.size() == 1) return corners[0] == p;
    for (std::size_t i = 0; i < corners.size(); ++i)
        if (on_closed_segment(corners[i], corners[(i + 1) % corners.size()], p))
            return true;
    return false;
}

} // namespace

Extraction extract_realization(const SgeInstance& instance, const Placement& placement) {
    SgeReport report = verify_sge(instance, placement);
    if (!report.ok())
        fail(Errc::inconsistent_input,
             "placement is not a simultaneous embedding: " + report.describe());

    std::vector<Point> placed;
    placed.reserve(instance.labels.size());
    for (const auto& label : instance.labels)
        placed.push_back(placement_at(placement, label));
    std::vector<Point> corners = hull_corners(placed);

    const GadgetMeta& meta = instance.meta;
    int chosen = 0;
    for (int copy = 1; copy <= 3 && chosen == 0; ++copy) {
        bool touches = false;
        for (int v : meta.interior) {
            const Point& p = placement_at(placement, meta.copy_label(v, copy));
            if (on_hull_boundary(corners, p)) {
                touches = true;
                break;
            }
        }
        if (!touches) chosen = copy;
    }
    if (chosen == 0)
        fail(Errc::no_mutual_face,
             "every copy has a vertex on the outer hull; no copy is interior");

    std::vector<std::string> copy_labels;
    std::vector<Point> points;
    for (int v = 0; v < instance.n; ++v) {
        copy_labels.push_back(meta.copy_label(v, chosen));
        points.push_back(placement_at(placement, copy_labels.back()));
    }
    try {
        Chirotope extracted = order_type_of_points(placement, copy_labels);
        return Extraction{std::move(points), std::move(extracted), chosen};
    } catch (const Error& e) {
        if (e.code() == Errc::degenerate_input)
            fail(Errc::degenerate_realization,
                 std::string("copy ") + std::to_string(chosen) + " is degenerate: " +
                     e.what());
        throw;
    }
}

namespace {

// Integer-grid fast path: the searches decide everything on 64-bit
// products of grid coordinates, which is exact for any desk-scale
// bound. Same sign convention as the rational predicate.
struct GridPoint {
    std::int64_t x = 0;
    std::int64_t y = 0;
    bool operator==(const GridPoint&) const = default;
};

int orient_grid(const GridPoint& p, const GridPoint& q, const GridPoint& r) {
    std::int64_t det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return det > 0 ? -1 : (det < 0 ? +1 : 0);
}

bool grid_on_closed_segment(const GridPoint& a, const GridPoint& b, const GridPoint& p) {
    if (orient_grid(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool grid_segments_cross(const GridPoint& a, const GridPoint& b, const GridPoint& c,
                         const GridPoint& d) {
    int d1 = orient_grid(c, d, a);
    int d2 = orient_grid(c, d, b);
    int d3 = orient_grid(a, b, c);
    int d4 = orient_grid(a, b, d);
    return d1 * d2 < 0 && d3 * d4 < 0;
}

} // namespace

std::optional<std::vector<Point>> grid_realize(const Chirotope& chi, GridSpec grid) {
    if (grid.bound < 1)
        fail(Errc::degenerate_input, "grid bound must be at least 1");
    int n = chi.n();

    // Hull vertices first (in hull order), then the rest ascending:
    // the hull constraints prune earliest.
    Hull hull = convex_hull(chi);
    std::vector<int> order = hull;
    for (int v = 0; v < n; ++v)
        if (!hull_contains(hull, v)) order.push_back(v);

    std::vector<GridPoint> at(n);
    int side = grid.bound + 1;

    std::vector<int> choice(n, -1); // flat grid index per placement step
    int depth = 0;
    while (true) {
        int next = choice[depth] + 1;
        bool placed = false;
        for (; next < side * side; ++next) {
            GridPoint p{next / side, next % side};
            bool clash = false;
            for (int d = 0; d < depth && !clash; ++d) clash = at[order[d]] == p;
            if (clash) continue;
            int v = order[depth];
            bool consistent = true;
            for (int a = 0; a < depth && consistent; ++a)
                for (int b = a + 1; b < depth && consistent; ++b) {
                    int u = order[a], w = order[b];
                    consistent = orient_grid(at[u], at[w], p) == chi.sign(u, w, v);
                }
            if (!consistent) continue;
            at[v] = p;
            choice[depth] = next;
            placed = true;
            break;
        }
        if (placed) {
            if (depth + 1 == n) {
                std::vector<Point> points;
                points.reserve(n);
                for (int v = 0; v < n; ++v)
                    points.emplace_back(static_cast<long>(at[v].x),
                                        static_cast<long>(at[v].y));
                return points;
            }
            ++depth;
            choice[depth] = -1;
        } else {
            choice[depth] = -1;
            if (depth == 0) return std::nullopt;
            --depth;
        }
    }
}

std::optional<Placement> brute_force_sge(const std::vector<LabeledGraph>& family,
                                         GridSpec grid, int guard) {
    if (family.empty()) fail(Errc::degenerate_input, "empty graph family");
    if (grid.bound < 1)
        fail(Errc::degenerate_input, "grid bound must be at least 1");
    const std::vector<std::string>& labels = family.front().labels;
    for (const auto& g : family)
        if (g.labels != labels)
            fail(Errc::inconsistent_input,
                 "family members do not share one label set");
    int count = static_cast<int>(labels.size());
    if (count == 0) fail(Errc::degenerate_input, "family has no labels");
    if (count > guard)
        fail(Errc::instance_too_large,
             std::to_string(count) + " labels exceeds the guard of " +
                 std::to_string(guard) + " (raise it explicitly to override)");

    // Labels are assigned in label order, so an edge becomes decided
    // exactly when its larger endpoint is placed.
    struct GraphPlan {
        std::vector<std::vector<std::pair<int, int>>> edges_completed_at;
        std::vector<std::vector<std::pair<int, int>>> edges_before;
    };
    std::vector<GraphPlan> plans;
    plans.reserve(family.size());
    for (const auto& g : family) {
        GraphPlan plan;
        plan.edges_completed_at.assign(count, {});
        plan.edges_before.assign(count, {});
        for (auto [u, v] : g.edges) plan.edges_completed_at[std::max(u, v)].push_back({u, v});
        std::vector<std::pair<int, int>> prefix;
        for (int i = 0; i < count; ++i) {
            plan.edges_before[i] = prefix;
            for (auto e : plan.edges_completed_at[i]) prefix.push_back(e);
        }
        plans.push_back(std::move(plan));
    }

    std::vector<GridPoint> at(count);
    int side = grid.bound + 1;
    std::vector<int> choice(count, -1);
    int depth = 0;

    auto admissible = [&](int i, const GridPoint& p) {
        for (int d = 0; d < i; ++d)
            if (at[d] == p) return false;
        for (const auto& plan : plans) {
            // The new vertex may not sit on any decided edge.
            for (auto [c, d] : plan.edges_before[i])
                if (grid_on_closed_segment(at[c], at[d], p)) return false;
            for (auto [a, b] : plan.edges_completed_at[i]) {
                const GridPoint& pa = a == i ? p : at[a];
                const GridPoint& pb = b == i ? p : at[b];
                // No placed vertex on the new edge.
                for (int w = 0; w < i; ++w) {
                    if (w == a || w == b) continue;
                    if (grid_on_closed_segment(pa, pb, at[w])) return false;
                }
                // No crossing with a decided edge.
                for (auto [c, d] : plan.edges_before[i]) {
                    if (c == a || c == b || d == a || d == b) continue;
                    if (grid_segments_cross(pa, pb, at[c], at[d])) return false;
                }
            }
        }
        return true;
    };

    while (true) {
        int next = choice[depth] + 1;
        bool placed = false;
        for (; next < side * side; ++next) {
            GridPoint p{next / side, next % side};
            if (!admissible(depth, p)) continue;
            at[depth] = p;
            choice[depth] = next;
            placed = true;
            break;
        }
        if (placed) {
            if (depth + 1 == count) {
                Placement placement;
                for (int i = 0; i < count; ++i)
                    placement[labels[i]] = Point(static_cast<long>(at[i].x),
                                                 static_cast<long>(at[i].y));
                return placement;
            }
            ++depth;
            choice[depth] = -1;
        } else {
            choice[depth] = -1;
            if (depth == 0) return std::nullopt;
            --depth;
        }
    }
}

std::optional<Placement> brute_force_sge(const SgeInstance& instance, GridSpec grid,
                                         int guard) {
    return brute_force_sge(instance.graphs, grid, guard);
}

} // namespace otsge
