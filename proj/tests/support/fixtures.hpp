#ifndef OTSGE_TESTS_FIXTURES_HPP
#define OTSGE_TESTS_FIXTURES_HPP

#include "otsge/chirotope.hpp"
#include "otsge/geometry.hpp"

#include <string>
#include <vector>

namespace otsge::tests {

// Six labeled points with hull (h1, h2, h3) and interior a, b, c whose
// sweep sequences exercise both sequence kinds: around h2 the sweep
// meets h1, a, c, b, h3 in that order, and around a it cycles through
// h1, c, b, h3, h2. Labels: h1=0, h2=1, h3=2, a=3, b=4, c=5.
inline std::vector<Point> six_point_points() {
    return {Point(0, 0), Point(8, 16), Point(16, 0),
            Point(4, 6), Point(7, 3),  Point(3, 3)};
}

inline Chirotope six_point_chirotope() {
    return Chirotope::from_points(six_point_points());
}

// Wheel example: triangular hull h1=0, h2=1, h3=2 with interior hub
// v=3 and rim companions a=4, b=5; the rim cycle through the sweep
// order of v is {a-h1, h1-b, b-h2, h2-h3, h3-a}.
inline std::vector<Point> wheel_example_points() {
    return {Point(0, 0), Point(4, 8), Point(8, 0),
            Point(4, 3), Point(5, 1), Point(3, 4)};
}

inline Chirotope wheel_example_chirotope() {
    return Chirotope::from_points(wheel_example_points());
}

inline std::vector<Point> square_points() {
    return {Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)};
}

inline std::vector<Point> triangle_plus_interior_points() {
    return {Point(0, 0), Point(3, 0), Point(0, 3), Point(1, 1)};
}

inline Chirotope triangle_plus_interior_chirotope() {
    return Chirotope::from_points(triangle_plus_interior_points());
}

// Convex hexagon in general position (the convex-position order type
// on six elements).
inline std::vector<Point> hexagon_points() {
    return {Point(0, 0), Point(2, -1), Point(4, 0),
            Point(4, 2), Point(2, 3),  Point(0, 2)};
}

/// Placement keyed "0", "1", ... for a plain point list.
inline Placement indexed_placement(const std::vector<Point>& points) {
    Placement placement;
    for (std::size_t i = 0; i < points.size(); ++i)
        placement[std::to_string(i)] = points[i];
    return placement;
}

} // namespace otsge::tests

#endif
