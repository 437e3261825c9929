#include "otsge/chirotope.hpp"

#include "otsge/error.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <deque>
#include <functional>
#include <set>
#include <string>

namespace otsge {

int triple_count_for(int n) { return n * (n - 1) * (n - 2) / 6; }

Chirotope::Chirotope(int n, std::vector<std::int8_t> lex_signs)
    : n_(n), signs_(std::move(lex_signs)) {
    if (n_ < 3)
        fail(Errc::degenerate_input, "need at least 3 elements, got " + std::to_string(n_));
    if (static_cast<int>(signs_.size()) != triple_count_for(n_))
        fail(Errc::degenerate_input,
             "expected " + std::to_string(triple_count_for(n_)) + " triple signs, got " +
                 std::to_string(signs_.size()));
}

int Chirotope::lex_rank(int i, int j, int k) const {
    assert(0 <= i && i < j && j < k && k < n_);
    int rank = 0;
    for (int a = 0; a < i; ++a) rank += (n_ - 1 - a) * (n_ - 2 - a) / 2;
    for (int b = i + 1; b < j; ++b) rank += n_ - 1 - b;
    return rank + (k - j - 1);
}

int Chirotope::lex_sign(int i, int j, int k) const {
    return signs_[lex_rank(i, j, k)];
}

int Chirotope::sign(int a, int b, int c) const {
    assert(a != b && b != c && a != c);
    // Sort the triple, tracking permutation parity.
    int parity = 1;
    if (a > b) { std::swap(a, b); parity = -parity; }
    if (b > c) { std::swap(b, c); parity = -parity; }
    if (a > b) { std::swap(a, b); parity = -parity; }
    return parity * signs_[lex_rank(a, b, c)];
}

Chirotope Chirotope::opposite() const {
    std::vector<std::int8_t> flipped(signs_.size());
    for (std::size_t t = 0; t < signs_.size(); ++t)
        flipped[t] = static_cast<std::int8_t>(-signs_[t]);
    return Chirotope(n_, std::move(flipped));
}

std::string Chirotope::sign_string() const {
    std::string out;
    out.reserve(signs_.size());
    for (std::int8_t s : signs_)
        out.push_back(s > 0 ? '+' : (s < 0 ? '-' : '0'));
    return out;
}

namespace {

// Shared by from_points and order_type_of_points so error messages can
// name elements the way the caller does.
Chirotope chirotope_from_named_points(const std::vector<Point>& points,
                                      const std::function<std::string(int)>& name) {
    int n = static_cast<int>(points.size());
    if (n < 3)
        fail(Errc::degenerate_input, "need at least 3 points, got " + std::to_string(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (points[i] == points[j])
                fail(Errc::degenerate_input,
                     "duplicate points " + name(i) + " and " + name(j));
    std::vector<std::int8_t> signs;
    signs.reserve(triple_count_for(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                int s = orientation(points[i], points[j], points[k]);
                if (s == 0)
                    fail(Errc::degenerate_input, "collinear triple (" + name(i) + ", " +
                                                     name(j) + ", " + name(k) + ")");
                signs.push_back(static_cast<std::int8_t>(s));
            }
    return Chirotope(n, std::move(signs));
}

} // namespace

Chirotope Chirotope::from_points(const std::vector<Point>& points) {
    return chirotope_from_named_points(points,
                                       [](int i) { return std::to_string(i); });
}

Chirotope order_type_of_points(const Placement& placement,
                               const std::vector<std::string>& labels) {
    std::vector<Point> points;
    points.reserve(labels.size());
    for (const auto& label : labels) points.push_back(placement_at(placement, label));
    return chirotope_from_named_points(
        points, [&labels](int i) { return "'" + labels[i] + "'"; });
}

std::string ChirotopeIssue::describe() const {
    if (kind == Kind::zero_sign)
        return "zero sign on triple (" + std::to_string(triple[0]) + ", " +
               std::to_string(triple[1]) + ", " + std::to_string(triple[2]) + ")";
    std::string out = "exchange condition fails for (x, a, b, c, d) = (";
    for (int i = 0; i < 5; ++i)
        out += (i ? ", " : "") + std::to_string(tuple[i]);
    return out + ")";
}

ValidationReport validate_chirotope(const Chirotope& chi) {
    int n = chi.n();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (chi.lex_sign(i, j, k) == 0) {
                    ChirotopeIssue issue;
                    issue.kind = ChirotopeIssue::Kind::zero_sign;
                    issue.triple = {i, j, k};
                    return {issue};
                }

    // For each x and each 4-subset of the rest, the three pairing
    // products must take both signs; zero-free signs make the "all
    // zero" branch impossible, and one ordering per 4-subset suffices
    // because permuting (a,b,c,d) only permutes or negates the set.
    std::vector<int> rest(n - 1);
    for (int x = 0; x < n; ++x) {
        int m = 0;
        for (int v = 0; v < n; ++v)
            if (v != x) rest[m++] = v;
        for (int ia = 0; ia < m; ++ia)
            for (int ib = ia + 1; ib < m; ++ib)
                for (int ic = ib + 1; ic < m; ++ic)
                    for (int id = ic + 1; id < m; ++id) {
                        int a = rest[ia], b = rest[ib], c = rest[ic], d = rest[id];
                        int s1 = chi.sign(x, a, b) * chi.sign(x, c, d);
                        int s2 = -chi.sign(x, a, c) * chi.sign(x, b, d);
                        int s3 = chi.sign(x, a, d) * chi.sign(x, b, c);
                        bool has_plus = s1 > 0 || s2 > 0 || s3 > 0;
                        bool has_minus = s1 < 0 || s2 < 0 || s3 < 0;
                        if (!has_plus || !has_minus) {
                            ChirotopeIssue issue;
                            issue.kind = ChirotopeIssue::Kind::exchange_axiom;
                            issue.tuple = {x, a, b, c, d};
                            return {issue};
                        }
                    }
    }
    return {};
}

bool hull_contains(const Hull& hull, int v) {
    return std::find(hull.begin(), hull.end(), v) != hull.end();
}

Hull convex_hull(const Chirotope& chi) {
    int n = chi.n();
    // Directed hull edges: (a, b) with every other element on the right.
    std::vector<int> successor(n, -1);
    std::vector<int> indegree(n, 0);
    int edge_count = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            bool all_right = true;
            for (int v = 0; v < n && all_right; ++v) {
                if (v == a || v == b) continue;
                all_right = chi.sign(a, b, v) == +1;
            }
            if (!all_right) continue;
            if (successor[a] != -1)
                fail(Errc::not_acyclic,
                     "element " + std::to_string(a) + " starts two hull edges");
            successor[a] = b;
            ++indegree[b];
            ++edge_count;
        }

    int start = -1;
    for (int v = 0; v < n; ++v) {
        if (successor[v] == -1) continue;
        if (indegree[v] != 1)
            fail(Errc::not_acyclic,
                 "hull edges do not chain at element " + std::to_string(v));
        if (start < 0) start = v;
    }
    if (start < 0) fail(Errc::not_acyclic, "no hull edge exists");

    Hull hull;
    int v = start;
    do {
        hull.push_back(v);
        v = successor[v];
        if (v < 0 || static_cast<int>(hull.size()) > n)
            fail(Errc::not_acyclic, "hull edges do not close into a cycle");
    } while (v != start);

    if (static_cast<int>(hull.size()) != edge_count)
        fail(Errc::not_acyclic, "hull edges form more than one cycle");
    if (hull.size() < 3)
        fail(Errc::not_acyclic, "hull cycle shorter than a triangle");
    return hull;
}

int SurroundingSequence::position_of(int v) const {
    auto it = std::find(order.begin(), order.end(), v);
    return it == order.end() ? -1 : static_cast<int>(it - order.begin());
}

std::vector<int> SurroundingSequence::rotated_to(int front) const {
    int p = position_of(front);
    assert(p >= 0);
    std::vector<int> out;
    out.reserve(order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        out.push_back(order[(p + i) % order.size()]);
    return out;
}

namespace {

// Insertion sort: safe even if the comparator is not a strict weak
// order (invalid inputs are answered with a thrown error after the
// verification pass, never undefined behavior).
void sort_by(std::vector<int>& items, const std::function<bool(int, int)>& before) {
    for (std::size_t i = 1; i < items.size(); ++i) {
        int x = items[i];
        std::size_t j = i;
        while (j > 0 && before(x, items[j - 1])) {
            items[j] = items[j - 1];
            --j;
        }
        items[j] = x;
    }
}

SurroundingSequence hull_sequence_impl(const Chirotope& chi, int center) {
    int n = chi.n();
    std::vector<int> others;
    others.reserve(n - 1);
    for (int v = 0; v < n; ++v)
        if (v != center) others.push_back(v);
    sort_by(others, [&](int u, int w) { return chi.sign(u, center, w) == +1; });
    for (std::size_t a = 0; a < others.size(); ++a)
        for (std::size_t b = a + 1; b < others.size(); ++b)
            if (chi.sign(others[a], center, others[b]) != +1)
                fail(Errc::inconsistent_input,
                     "no linear sweep order exists around element " +
                         std::to_string(center));
    return {center, SequenceKind::hull, std::move(others)};
}

SurroundingSequence internal_sequence_impl(const Chirotope& chi, int center) {
    int n = chi.n();
    // The smallest other label anchors the stored rotation. Elements on
    // its counterclockwise side come first, each side sorted by the
    // pairwise sweep comparator.
    int anchor = center == 0 ? 1 : 0;
    std::vector<int> ccw_side, cw_side;
    for (int v = 0; v < n; ++v) {
        if (v == center || v == anchor) continue;
        (chi.sign(anchor, center, v) == +1 ? ccw_side : cw_side).push_back(v);
    }
    if (ccw_side.empty() || cw_side.empty())
        fail(Errc::no_consistent_cycle,
             "all elements on one side of element " + std::to_string(center));
    auto before = [&](int u, int w) { return chi.sign(u, center, w) == +1; };
    sort_by(ccw_side, before);
    sort_by(cw_side, before);

    std::vector<int> order;
    order.reserve(n - 1);
    order.push_back(anchor);
    order.insert(order.end(), ccw_side.begin(), ccw_side.end());
    order.insert(order.end(), cw_side.begin(), cw_side.end());

    for (std::size_t j = 0; j < order.size(); ++j) {
        int u = order[j];
        int w = order[(j + 1) % order.size()];
        if (chi.sign(u, center, w) != +1)
            fail(Errc::no_consistent_cycle,
                 "no cyclic sweep order exists around element " + std::to_string(center));
    }
    return {center, SequenceKind::internal, std::move(order)};
}

} // namespace

SurroundingSequence hull_surrounding_sequence(const Chirotope& chi, int hull_vertex) {
    Hull hull = convex_hull(chi);
    if (!hull_contains(hull, hull_vertex))
        fail(Errc::not_on_hull,
             "element " + std::to_string(hull_vertex) + " is not a hull vertex");
    return hull_sequence_impl(chi, hull_vertex);
}

SurroundingSequence internal_surrounding_sequence(const Chirotope& chi, int v) {
    Hull hull = convex_hull(chi);
    if (hull_contains(hull, v))
        fail(Errc::on_hull, "element " + std::to_string(v) + " is a hull vertex");
    return internal_sequence_impl(chi, v);
}

std::vector<SurroundingSequence> all_surrounding_sequences(const Chirotope& chi) {
    Hull hull = convex_hull(chi);
    std::vector<SurroundingSequence> sequences;
    sequences.reserve(chi.n());
    for (int v = 0; v < chi.n(); ++v)
        sequences.push_back(hull_contains(hull, v) ? hull_sequence_impl(chi, v)
                                                   : internal_sequence_impl(chi, v));
    return sequences;
}

namespace {

class Reconstructor {
public:
    Reconstructor(const Hull& hull, const std::vector<SurroundingSequence>& sequences)
        : hull_(hull), sequences_(sequences), n_(static_cast<int>(sequences.size())) {
        check_shape();
        positions_.assign(n_, std::vector<int>(n_, -1));
        for (int c = 0; c < n_; ++c)
            for (std::size_t p = 0; p < sequences_[c].order.size(); ++p)
                positions_[c][sequences_[c].order[p]] = static_cast<int>(p);
        on_hull_.assign(n_, false);
        for (int h : hull_) on_hull_[h] = true;
    }

    Chirotope run() const {
        std::vector<std::int8_t> signs;
        signs.reserve(triple_count_for(n_));
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                for (int k = j + 1; k < n_; ++k)
                    signs.push_back(static_cast<std::int8_t>(triple_sign(i, j, k)));
        return Chirotope(n_, std::move(signs));
    }

private:
    void check_shape() const {
        if (n_ < 3) fail(Errc::inconsistent_input, "need at least 3 sequences");
        if (hull_.size() < 3 || hull_.size() > static_cast<std::size_t>(n_))
            fail(Errc::inconsistent_input, "hull size out of range");
        for (int h : hull_)
            if (h < 0 || h >= n_)
                fail(Errc::inconsistent_input, "hull label out of range");
        std::set<int> hull_set(hull_.begin(), hull_.end());
        if (hull_set.size() != hull_.size())
            fail(Errc::inconsistent_input, "repeated hull label");
        for (int c = 0; c < n_; ++c) {
            const auto& seq = sequences_[c];
            if (seq.center != c)
                fail(Errc::inconsistent_input,
                     "sequences must be indexed by center label");
            bool hull_kind = seq.kind == SequenceKind::hull;
            if (hull_kind != hull_set.contains(c))
                fail(Errc::inconsistent_input,
                     "sequence kind of element " + std::to_string(c) +
                         " disagrees with hull membership");
            if (seq.order.size() != static_cast<std::size_t>(n_ - 1))
                fail(Errc::inconsistent_input,
                     "sequence of element " + std::to_string(c) + " has wrong length");
            std::set<int> seen(seq.order.begin(), seq.order.end());
            if (seen.size() != seq.order.size() || seen.contains(c))
                fail(Errc::inconsistent_input,
                     "sequence of element " + std::to_string(c) +
                         " is not a permutation of the others");
            for (int v : seq.order)
                if (v < 0 || v >= n_)
                    fail(Errc::inconsistent_input, "sequence label out of range");
        }
    }

    int pos(int center, int v) const { return positions_[center][v]; }

    // Rotate the (cyclic) sequence of `center` to start at `front` and
    // report the position of v there.
    int rotated_pos(int center, int front, int v) const {
        int len = n_ - 1;
        return (pos(center, v) - pos(center, front) + len) % len;
    }

    void propose(int& decided, int candidate, int i, int j, int k) const {
        if (decided == 0) {
            decided = candidate;
        } else if (decided != candidate) {
            fail(Errc::inconsistent_input,
                 "sequences admit no consistent sign for triple (" + std::to_string(i) +
                     ", " + std::to_string(j) + ", " + std::to_string(k) + ")");
        }
    }

    // Sign of the lexicographic triple (i, j, k). Every applicable
    // reading is evaluated; disagreement means the input lies.
    int triple_sign(int i, int j, int k) const {
        int decided = 0;
        const std::array<int, 3> t{i, j, k};

        // A hull vertex in the triple settles it from its own linear
        // sequence: sign(u, h, w) = +1 exactly when u precedes w. Each
        // of (j,i,k), (k,j,i), (i,k,j) is one transposition away from
        // (i,j,k), so the middle-form sign always negates.
        for (int idx = 0; idx < 3; ++idx) {
            int h = t[idx];
            if (!on_hull_[h]) continue;
            int u = t[(idx + 1) % 3];
            int w = t[(idx + 2) % 3];
            int middle = pos(h, u) < pos(h, w) ? +1 : -1;
            propose(decided, -middle, i, j, k);
        }
        if (decided != 0) return decided;

        // All three interior. One-side case first: some hull vertex
        // sees i and k on the same side of j in its sweep; then the
        // sweep around j, started at that hull vertex, orders i and k.
        for (int h : hull_) {
            int pi = pos(h, i), pj = pos(h, j), pk = pos(h, k);
            bool both_before = pi < pj && pk < pj;
            bool both_after = pi > pj && pk > pj;
            if (!both_before && !both_after) continue;
            int s = rotated_pos(j, h, i) < rotated_pos(j, h, k) ? +1 : -1;
            propose(decided, s, i, j, k);
        }
        if (decided != 0) return decided;

        // Split case: every hull vertex sees j between i and k. Use a
        // witness with order (i, j, k) and read the sweep around i, or
        // the mirror witness (k, j, i) and flip.
        for (int h : hull_) {
            int pi = pos(h, i), pj = pos(h, j), pk = pos(h, k);
            if (pi < pj && pj < pk) {
                int s = rotated_pos(i, h, j) < rotated_pos(i, h, k) ? -1 : +1;
                propose(decided, s, i, j, k);
            } else if (pk < pj && pj < pi) {
                int s = rotated_pos(k, h, j) < rotated_pos(k, h, i) ? -1 : +1;
                propose(decided, -s, i, j, k);
            }
        }
        if (decided == 0)
            fail(Errc::inconsistent_input,
                 "no rule decides triple (" + std::to_string(i) + ", " +
                     std::to_string(j) + ", " + std::to_string(k) + ")");
        return decided;
    }

    const Hull& hull_;
    const std::vector<SurroundingSequence>& sequences_;
    int n_;
    std::vector<std::vector<int>> positions_;
    std::vector<bool> on_hull_;
};

} // namespace

Chirotope reconstruct_chirotope(const Hull& hull,
                                const std::vector<SurroundingSequence>& sequences) {
    return Reconstructor(hull, sequences).run();
}

Chirotope reorient(const Chirotope& chi, const ReorientationSet& flipped) {
    int n = chi.n();
    std::vector<std::int8_t> signs;
    signs.reserve(chi.triple_count());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                int hits = static_cast<int>(flipped.contains(i)) +
                           static_cast<int>(flipped.contains(j)) +
                           static_cast<int>(flipped.contains(k));
                int s = chi.lex_sign(i, j, k);
                signs.push_back(static_cast<std::int8_t>(hits % 2 ? -s : s));
            }
    return Chirotope(n, std::move(signs));
}

namespace {

ReorientationSet mask_to_set(std::uint64_t mask, int n) {
    ReorientationSet flipped;
    for (int v = 0; v < n; ++v)
        if (mask >> v & 1) flipped.insert(v);
    return flipped;
}

} // namespace

NormalizationResult normalize_triangular_hull(const Chirotope& chi) {
    int n = chi.n();
    if (n > 62)
        fail(Errc::search_exhausted,
             "re-marking search supports at most 62 elements, got " + std::to_string(n));

    Hull hull = convex_hull(chi);
    if (hull.size() == 3) return {chi, {}};

    std::set<std::uint64_t> visited{0};
    std::deque<std::uint64_t> queue{0};
    while (!queue.empty()) {
        std::uint64_t mask = queue.front();
        queue.pop_front();
        for (int v = 0; v < n; ++v) {
            std::uint64_t child = mask ^ (std::uint64_t{1} << v);
            if (!visited.insert(child).second) continue;
            ReorientationSet flipped = mask_to_set(child, n);
            Chirotope candidate = reorient(chi, flipped);
            Hull candidate_hull;
            try {
                candidate_hull = convex_hull(candidate);
            } catch (const Error& e) {
                if (e.code() == Errc::not_acyclic) continue; // not a face marking
                throw;
            }
            if (candidate_hull.size() == 3) return {std::move(candidate), std::move(flipped)};
            queue.push_back(child);
        }
    }
    fail(Errc::search_exhausted, "no reachable marking has a triangular hull");
}

} // namespace otsge
