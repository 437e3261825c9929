#ifndef OTSGE_CHIROTOPE_HPP
#define OTSGE_CHIROTOPE_HPP

#include "otsge/geometry.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace otsge {

/// Abstract order type of n labeled elements in general position: a sign
/// in {-1,+1} for every ordered triple of distinct labels 0..n-1, with
/// +1 meaning a right (clockwise) turn. Signs are stored only for
/// lexicographic triples i < j < k; every other ordering is derived by
/// alternation (swapping two arguments negates, cyclic shifts preserve).
class Chirotope {
public:
    /// `lex_signs` holds one entry per lexicographic triple; entries are
    /// expected in {-1,+1} but 0 is representable so that invalid data
    /// can be surfaced by validate_chirotope rather than here.
    Chirotope(int n, std::vector<std::int8_t> lex_signs);

    /// Order type of a concrete point list: sign(a,b,c) = orientation of
    /// (points[a], points[b], points[c]). Throws Errc::degenerate_input
    /// on duplicate points or a collinear triple, naming the offenders.
    static Chirotope from_points(const std::vector<Point>& points);

    int n() const { return n_; }
    int triple_count() const { return static_cast<int>(signs_.size()); }

    /// Sign of an arbitrary ordering of three distinct labels.
    int sign(int a, int b, int c) const;

    /// Stored sign of the lexicographic triple i < j < k.
    int lex_sign(int i, int j, int k) const;

    int lex_rank(int i, int j, int k) const;

    Chirotope opposite() const;

    /// Signs as a '+'/'-' string in lexicographic triple order ('0' for
    /// a zero entry, which no valid chirotope contains).
    std::string sign_string() const;

    bool operator==(const Chirotope&) const = default;

private:
    int n_ = 0;
    std::vector<std::int8_t> signs_;
};

/// Number of lexicographic triples over n elements, C(n,3).
int triple_count_for(int n);

struct ChirotopeIssue {
    enum class Kind { zero_sign, exchange_axiom };
    Kind kind;
    std::array<int, 3> triple{};   // zero_sign: the offending lex triple
    std::array<int, 5> tuple{};    // exchange_axiom: (x, a, b, c, d)
    std::string describe() const;
};

struct ValidationReport {
    std::optional<ChirotopeIssue> issue;
    bool ok() const { return !issue.has_value(); }
};

/// Accepts iff no zero signs and the three pairwise sign products of the
/// exchange condition contain both +1 and -1 for every x and every
/// 4-subset {a,b,c,d} of the remaining labels. The first violation in
/// scan order (x ascending, then a<b<c<d ascending) is reported.
ValidationReport validate_chirotope(const Chirotope& chi);

/// Clockwise hull h_1..h_t, stored starting at the smallest hull label.
/// Consecutive pairs satisfy sign(h_i, h_{i+1}, v) = +1 for every other v.
using Hull = std::vector<int>;

/// Throws Errc::not_acyclic when the directed hull-edge relation does not
/// close into a single consistent cycle (valid chirotope, bad marking).
Hull convex_hull(const Chirotope& chi);

bool hull_contains(const Hull& hull, int v);

enum class SequenceKind { hull, internal };

/// Order in which a counterclockwise ray sweep around `center` meets the
/// other elements: linear from h_{i-1} to h_{i+1} for a hull vertex,
/// cyclic (stored rotated to the smallest label) for an interior one.
struct SurroundingSequence {
    int center = -1;
    SequenceKind kind = SequenceKind::hull;
    std::vector<int> order;

    bool operator==(const SurroundingSequence&) const = default;

    /// Position of label v in `order`; -1 when absent.
    int position_of(int v) const;

    /// Cyclic rotation placing `front` first. Valid for internal
    /// sequences (and used on them only).
    std::vector<int> rotated_to(int front) const;
};

SurroundingSequence hull_surrounding_sequence(const Chirotope& chi, int hull_vertex);
SurroundingSequence internal_surrounding_sequence(const Chirotope& chi, int v);

/// One sequence per element, indexed by element label.
std::vector<SurroundingSequence> all_surrounding_sequences(const Chirotope& chi);

/// Rebuilds the full sign map from the hull and the n surrounding
/// sequences alone. Every applicable reading of a triple is evaluated
/// and cross-checked; Errc::inconsistent_input is thrown when the
/// sequences admit no consistent sign for some triple.
Chirotope reconstruct_chirotope(const Hull& hull,
                                const std::vector<SurroundingSequence>& sequences);

/// Element subset whose incident triples all flip sign.
using ReorientationSet = std::set<int>;

/// sign'(a,b,c) = sign(a,b,c) * (-1)^|{a,b,c} ∩ flipped|. An involution;
/// preserves validity.
Chirotope reorient(const Chirotope& chi, const ReorientationSet& flipped);

struct NormalizationResult {
    Chirotope chirotope;
    ReorientationSet flipped;
};

/// Finds a reorientation making the hull a triangle: breadth-first
/// search over single-element flips, visiting only chirotopes whose
/// hull computation succeeds, expanding flips in increasing label
/// order, stopping at the first triangular hull. Identity when the
/// input hull is already a triangle. Throws Errc::search_exhausted if
/// no reachable marking has a triangular hull.
NormalizationResult normalize_triangular_hull(const Chirotope& chi);

/// Order type of a sub-placement read in the given label order.
Chirotope order_type_of_points(const Placement& placement,
                               const std::vector<std::string>& labels);

} // namespace otsge

#endif
