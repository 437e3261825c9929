#include "otsge/geometry.hpp"

#include "otsge/error.hpp"

namespace otsge {

int orientation(const Point& p, const Point& q, const Point& r) {
    // Negated z-component of (q-p) x (r-p): positive cross product is a
    // counterclockwise (left) turn, which this convention calls -1.
    Rational det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return -sign_of(det);
}

bool on_closed_segment(const Point& a, const Point& b, const Point& p) {
    if (orientation(a, b, p) != 0) return false;
    if (cmp(std::min(a.x, b.x), p.x) > 0 || cmp(p.x, std::max(a.x, b.x)) > 0) return false;
    if (cmp(std::min(a.y, b.y), p.y) > 0 || cmp(p.y, std::max(a.y, b.y)) > 0) return false;
    return true;
}

const Point& placement_at(const Placement& placement, const std::string& label) {
    auto it = placement.find(label);
    if (it == placement.end())
        fail(Errc::missing_label, "placement has no point for label '" + label + "'");
    return it->second;
}

} // namespace otsge
