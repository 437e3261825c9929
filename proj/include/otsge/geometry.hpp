#ifndef OTSGE_GEOMETRY_HPP
#define OTSGE_GEOMETRY_HPP

#include "otsge/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace otsge {

struct Point {
    Rational x;
    Rational y;

    Point() = default;
    Point(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}
    Point(long px, long py) : x(px), y(py) {}

    bool operator==(const Point& other) const {
        return x == other.x && y == other.y;
    }
    // Lexicographic; used for canonical ordering and dedup maps.
    bool operator<(const Point& other) const {
        int cx = cmp(x, other.x);
        if (cx != 0) return cx < 0;
        return cmp(y, other.y) < 0;
    }
};

/// Sign of the turn p -> q -> r with the y-axis pointing up:
/// +1 for a right (clockwise) turn, -1 for a left turn, 0 for collinear.
int orientation(const Point& p, const Point& q, const Point& r);

/// True iff p lies on the closed segment [a, b].
bool on_closed_segment(const Point& a, const Point& b, const Point& p);

/// Assignment of vertex labels to exact points.
using Placement = std::map<std::string, Point>;

/// Looks up a label, throwing Errc::missing_label when absent.
const Point& placement_at(const Placement& placement, const std::string& label);

} // namespace otsge

#endif
