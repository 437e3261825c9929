#ifndef OTSGE_SOLVER_HPP
#define OTSGE_SOLVER_HPP

#include "otsge/chirotope.hpp"
#include "otsge/geometry.hpp"
#include "otsge/reduction.hpp"

#include <optional>
#include <vector>

namespace otsge {

/// Integer search window [0,bound]^2 for the exhaustive solvers.
struct GridSpec {
    int bound = 1;
};

/// Places the instance from a concrete realization of its source
/// chirotope: the frame goes to fixed clockwise coordinates with t4 at
/// the centroid, and each copy is the image of the realization under
/// the unique affine map carrying the hull triangle onto that copy's
/// frame triangle (clockwise to clockwise, so orientations survive).
///
/// Throws Errc::realization_mismatch when the points do not realize the
/// instance's source chirotope, Errc::non_triangular_hull when the hull
/// is not a triangle.
Placement embed_from_realization(const Chirotope& chi,
                                 const std::vector<Point>& points,
                                 const SgeInstance& instance);

struct Extraction {
    std::vector<Point> points; // per source element, in label order
    Chirotope chirotope;
    int copy_used = 0;         // 1..3
};

/// Reads a realization back out of a verified placement: identifies the
/// outer face from the convex hull of the placed points, picks copy 1
/// when the frame triangle is outermost and otherwise the first copy
/// with no vertex on the hull boundary, and returns that copy's points
/// with their order type (the source chirotope or its opposite).
///
/// Throws Errc::no_mutual_face when every copy touches the hull
/// boundary, Errc::degenerate_realization when the chosen copy has a
/// collinear triple, Errc::inconsistent_input when the placement does
/// not verify.
Extraction extract_realization(const SgeInstance& instance, const Placement& placement);

/// Backtracking search for integer points in [0,G]^2 realizing chi:
/// elements are placed hull-first, candidate grid points are scanned in
/// lexicographic (x, y) order, and any decided triple whose orientation
/// contradicts chi prunes the branch. Returns the first full placement
/// or nullopt once the grid is exhausted, which is not a proof that no
/// realization exists, only that none fits this grid.
std::optional<std::vector<Point>> grid_realize(const Chirotope& chi, GridSpec grid);

/// Exhaustive simultaneous-embedding search: assigns labels (in family
/// label order) to distinct grid points, pruning a branch as soon as
/// the partial drawing of any member graph stops being plane. The
/// incremental checks are the solver's own; solutions are verified
/// independently by verify_sge in the test suites.
///
/// Guard: refuses families with more than `guard` labels (default 8)
/// via Errc::instance_too_large.
std::optional<Placement> brute_force_sge(const std::vector<LabeledGraph>& family,
                                         GridSpec grid, int guard = 8);
std::optional<Placement> brute_force_sge(const SgeInstance& instance,
                                         GridSpec grid, int guard = 8);

} // namespace otsge

#endif
