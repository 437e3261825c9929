#include "otsge/io.hpp"

#include "otsge/error.hpp"

#include <fstream>
#include <sstream>

namespace otsge {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string current;
    for (char c : text) {
        if (c == '\n') {
            if (!current.empty() && current.back() == '\r') current.pop_back();
            lines.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty()) lines.push_back(std::move(current));
    return lines;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

[[noreturn]] void bad_line(std::size_t lineno, const std::string& what) {
    fail(Errc::format_error, "line " + std::to_string(lineno) + ": " + what);
}

int parse_int(const std::string& tok, std::size_t lineno) {
    try {
        std::size_t used = 0;
        int value = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("");
        return value;
    } catch (...) {
        bad_line(lineno, "expected an integer, got '" + tok + "'");
    }
}

void expect_version(const std::vector<std::string>& lines, const std::string& expected) {
    if (lines.empty() || tokens_of(lines[0]) != tokens_of(expected))
        fail(Errc::version_error,
             "expected '" + expected + "' header" +
                 (lines.empty() ? "" : ", got '" + lines[0] + "'"));
}

bool valid_sign_string(const std::string& s) {
    for (char c : s)
        if (c != '+' && c != '-') return false;
    return true;
}

} // namespace

std::string serialize_chirotope(const Chirotope& chi) {
    return "chirotope v1\n" + std::to_string(chi.n()) + "\n" + chi.sign_string() + "\n";
}

Chirotope parse_chirotope(const std::string& text) {
    auto lines = split_lines(text);
    expect_version(lines, "chirotope v1");
    if (lines.size() < 3) fail(Errc::format_error, "truncated chirotope file");
    for (std::size_t i = 3; i < lines.size(); ++i)
        if (!tokens_of(lines[i]).empty()) bad_line(i + 1, "unexpected trailing content");
    int n = parse_int(lines[1], 2);
    if (n < 3) bad_line(2, "element count must be at least 3");
    const std::string& signs = lines[2];
    if (static_cast<int>(signs.size()) != triple_count_for(n))
        bad_line(3, "expected " + std::to_string(triple_count_for(n)) +
                        " signs for n=" + std::to_string(n) + ", got " +
                        std::to_string(signs.size()));
    if (!valid_sign_string(signs)) bad_line(3, "signs must be '+' or '-'");
    std::vector<std::int8_t> values;
    values.reserve(signs.size());
    for (char c : signs) values.push_back(c == '+' ? std::int8_t{1} : std::int8_t{-1});
    return Chirotope(n, std::move(values));
}

std::string serialize_points(const std::vector<Point>& points) {
    std::string out = "points v1\n";
    for (const auto& p : points)
        out += rational_to_string(p.x) + " " + rational_to_string(p.y) + "\n";
    return out;
}

std::vector<Point> parse_points(const std::string& text) {
    auto lines = split_lines(text);
    expect_version(lines, "points v1");
    std::vector<Point> points;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto toks = tokens_of(lines[i]);
        if (toks.empty()) continue;
        if (toks.size() != 2) bad_line(i + 1, "expected 'x y'");
        try {
            points.emplace_back(rational_from_string(toks[0]),
                                rational_from_string(toks[1]));
        } catch (const Error& e) {
            bad_line(i + 1, e.what());
        }
    }
    return points;
}

std::string serialize_placement(const Placement& placement) {
    std::string out = "placement v1\n";
    for (const auto& [label, p] : placement)
        out += label + " " + rational_to_string(p.x) + " " + rational_to_string(p.y) + "\n";
    return out;
}

Placement parse_placement(const std::string& text) {
    auto lines = split_lines(text);
    expect_version(lines, "placement v1");
    Placement placement;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto toks = tokens_of(lines[i]);
        if (toks.empty()) continue;
        if (toks.size() != 3) bad_line(i + 1, "expected 'label x y'");
        if (placement.contains(toks[0])) bad_line(i + 1, "duplicate label '" + toks[0] + "'");
        try {
            placement[toks[0]] = Point(rational_from_string(toks[1]),
                                       rational_from_string(toks[2]));
        } catch (const Error& e) {
            bad_line(i + 1, e.what());
        }
    }
    return placement;
}

namespace {

std::string serialize_graph_blocks(const std::vector<std::string>& labels,
                                   const std::vector<LabeledGraph>& graphs,
                                   const std::vector<std::string>& block_names) {
    std::string out;
    for (std::size_t g = 0; g < graphs.size(); ++g) {
        out += "graph " + block_names[g] + "\n";
        for (auto [u, v] : graphs[g].edges)
            out += labels[u] + " " + labels[v] + "\n";
    }
    return out;
}

} // namespace

std::string serialize_instance(const SgeInstance& instance) {
    std::string out = "sge v1\n";
    out += "n " + std::to_string(instance.n) + "\n";
    out += "labels";
    for (const auto& label : instance.labels) out += " " + label;
    out += "\nhull";
    for (int h : instance.meta.hull) out += " " + std::to_string(h);
    out += "\nsource " + instance.source_signs + "\n";
    std::vector<std::string> names;
    for (int v = 0; v < instance.n; ++v) names.push_back(std::to_string(v));
    return out + serialize_graph_blocks(instance.labels, instance.graphs, names);
}

std::string serialize_family(const std::vector<std::string>& labels,
                             const std::vector<LabeledGraph>& graphs) {
    std::string out = "sge v1\n";
    out += "n " + std::to_string(graphs.size()) + "\n";
    out += "labels";
    for (const auto& label : labels) out += " " + label;
    out += "\n";
    std::vector<std::string> names;
    for (std::size_t g = 0; g < graphs.size(); ++g)
        names.push_back(graphs[g].name.empty() ? "g" + std::to_string(g)
                                               : graphs[g].name);
    return out + serialize_graph_blocks(labels, graphs, names);
}

ParsedSge parse_sge(const std::string& text) {
    auto lines = split_lines(text);
    expect_version(lines, "sge v1");

    ParsedSge out;
    int n = -1;
    std::optional<Hull> hull;
    std::optional<std::string> source;

    std::size_t i = 1;
    // Header lines, in order: n, labels, then optional hull and source.
    for (; i < lines.size(); ++i) {
        auto toks = tokens_of(lines[i]);
        if (toks.empty()) continue;
        if (toks[0] == "graph") break;
        if (toks[0] == "n") {
            if (toks.size() != 2) bad_line(i + 1, "expected 'n <count>'");
            n = parse_int(toks[1], i + 1);
        } else if (toks[0] == "labels") {
            for (std::size_t t = 1; t < toks.size(); ++t) {
                for (const auto& existing : out.labels)
                    if (existing == toks[t])
                        bad_line(i + 1, "duplicate label '" + toks[t] + "'");
                out.labels.push_back(toks[t]);
            }
        } else if (toks[0] == "hull") {
            if (toks.size() != 4) bad_line(i + 1, "expected 'hull <a> <b> <c>'");
            hull = Hull{parse_int(toks[1], i + 1), parse_int(toks[2], i + 1),
                        parse_int(toks[3], i + 1)};
        } else if (toks[0] == "source") {
            if (toks.size() != 2) bad_line(i + 1, "expected 'source <signs>'");
            source = toks[1];
        } else {
            bad_line(i + 1, "unknown header line '" + toks[0] + "'");
        }
    }
    if (n < 0) fail(Errc::format_error, "missing 'n' header line");
    if (out.labels.empty()) fail(Errc::format_error, "missing 'labels' header line");
    if (hull.has_value() != source.has_value())
        fail(Errc::format_error, "'hull' and 'source' must appear together");

    // Graph blocks.
    while (i < lines.size()) {
        auto toks = tokens_of(lines[i]);
        if (toks.empty()) {
            ++i;
            continue;
        }
        if (toks[0] != "graph" || toks.size() != 2)
            bad_line(i + 1, "expected 'graph <name>'");
        LabeledGraph g;
        g.name = toks[1];
        g.labels = out.labels;
        ++i;
        for (; i < lines.size(); ++i) {
            auto edge = tokens_of(lines[i]);
            if (edge.empty()) continue;
            if (edge[0] == "graph") break;
            if (edge.size() != 2) bad_line(i + 1, "expected 'u w' edge line");
            int u = g.index_of(edge[0]);
            int v = g.index_of(edge[1]);
            if (u < 0 || v < 0)
                bad_line(i + 1, "edge endpoint is not a declared label");
            if (u == v) bad_line(i + 1, "self-loop at '" + edge[0] + "'");
            g.add_edge(u, v);
        }
        out.graphs.push_back(std::move(g));
    }
    if (static_cast<int>(out.graphs.size()) != n)
        fail(Errc::format_error, "header says n=" + std::to_string(n) + " but " +
                                     std::to_string(out.graphs.size()) +
                                     " graph blocks follow");

    if (hull) {
        if (n < 3) fail(Errc::format_error, "reduction instance needs n >= 3");
        GadgetMeta meta;
        meta.hull = *hull;
        for (int h : meta.hull)
            if (h < 0 || h >= n) fail(Errc::format_error, "hull label out of range");
        for (int v = 0; v < n; ++v)
            if (!hull_contains(meta.hull, v)) meta.interior.push_back(v);
        if (meta.interior.size() + 3 != static_cast<std::size_t>(n))
            fail(Errc::format_error, "hull must list 3 distinct labels");
        if (meta.shared_labels() != out.labels)
            fail(Errc::format_error,
                 "label list does not match the reduction label scheme");
        if (static_cast<int>(source->size()) != triple_count_for(n) ||
            !valid_sign_string(*source))
            fail(Errc::format_error, "source sign string is malformed");

        SgeInstance instance;
        instance.n = n;
        instance.labels = out.labels;
        instance.meta = std::move(meta);
        instance.source_signs = *source;
        for (int v = 0; v < n; ++v) {
            if (out.graphs[v].name != std::to_string(v))
                fail(Errc::format_error,
                     "reduction instance graphs must be named 0..n-1 in order");
            LabeledGraph g = out.graphs[v];
            g.name = "T_" + std::to_string(v);
            instance.graphs.push_back(std::move(g));
        }
        out.instance = std::move(instance);
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::format_error, "cannot open '" + path + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Errc::format_error, "cannot open '" + path + "' for writing");
    out << content;
    if (!out) fail(Errc::format_error, "failed writing '" + path + "'");
}

} // namespace otsge
