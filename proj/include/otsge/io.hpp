#ifndef OTSGE_IO_HPP
#define OTSGE_IO_HPP

#include "otsge/chirotope.hpp"
#include "otsge/geometry.hpp"
#include "otsge/graph.hpp"
#include "otsge/reduction.hpp"

#include <optional>
#include <string>
#include <vector>

namespace otsge {

// Text formats. Every file opens with a version line; parsing is the
// exact inverse of serialization on canonical output.
//
//   chirotope v1        n, then C(n,3) signs as one '+'/'-' string
//   points v1           one "x y" line per element, rationals as num/den
//   placement v1        lines "label xNum/xDen yNum/yDen", sorted by label
//   sge v1              header (n, labels, optionally hull + source signs
//                       for reduction instances), then per-graph blocks
//                       "graph <name>" followed by "u w" edge lines
//
// Parsers throw Errc::version_error on an unknown or missing version
// line and Errc::format_error (with a line number) on malformed content.

std::string serialize_chirotope(const Chirotope& chi);
Chirotope parse_chirotope(const std::string& text);

std::string serialize_points(const std::vector<Point>& points);
std::vector<Point> parse_points(const std::string& text);

std::string serialize_placement(const Placement& placement);
Placement parse_placement(const std::string& text);

/// Either a full reduction instance (hull + source present) or a plain
/// shared-label graph family.
struct ParsedSge {
    std::vector<std::string> labels;
    std::vector<LabeledGraph> graphs;
    std::optional<SgeInstance> instance;
};

std::string serialize_instance(const SgeInstance& instance);
std::string serialize_family(const std::vector<std::string>& labels,
                             const std::vector<LabeledGraph>& graphs);
ParsedSge parse_sge(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace otsge

#endif
