#include "otsge/cli.hpp"

#include "otsge/error.hpp"
#include "otsge/io.hpp"
#include "otsge/solver.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace otsge {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitReject = 1;
constexpr int kExitUsage = 2;

std::string hull_to_string(const Hull& hull) {
    std::string out;
    for (std::size_t i = 0; i < hull.size(); ++i)
        out += (i ? " " : "") + std::to_string(hull[i]);
    return out;
}

std::string sequence_to_string(const SurroundingSequence& seq) {
    std::string out = "S(" + std::to_string(seq.center) + ") ";
    out += seq.kind == SequenceKind::hull ? "hull:" : "internal:";
    for (int v : seq.order) out += " " + std::to_string(v);
    return out;
}

struct Options {
    std::string input;
    std::string input2;
    std::string input3;
    std::string output;
    std::string points_out;
    std::string chirotope_out;
    bool normalize = false;
    int grid = 6;
    int guard = 8;
};

int cmd_ot_validate(const Options& opt, std::ostream& err) {
    Chirotope chi = parse_chirotope(read_file(opt.input));
    ValidationReport report = validate_chirotope(chi);
    if (!report.ok()) {
        err << "invalid chirotope: " << report.issue->describe() << "\n";
        return kExitReject;
    }
    err << "valid chirotope on " << chi.n() << " elements\n";
    return kExitOk;
}

int cmd_ot_from_points(const Options& opt, std::ostream& err) {
    std::vector<Point> points = parse_points(read_file(opt.input));
    Chirotope chi = Chirotope::from_points(points);
    write_file(opt.output, serialize_chirotope(chi));
    err << "wrote chirotope on " << chi.n() << " elements to " << opt.output << "\n";
    return kExitOk;
}

int cmd_ot_hull(const Options& opt, std::ostream& out) {
    Chirotope chi = parse_chirotope(read_file(opt.input));
    out << "hull " << hull_to_string(convex_hull(chi)) << "\n";
    return kExitOk;
}

int cmd_ot_sequences(const Options& opt, std::ostream& out) {
    Chirotope chi = parse_chirotope(read_file(opt.input));
    out << "hull " << hull_to_string(convex_hull(chi)) << "\n";
    for (const auto& seq : all_surrounding_sequences(chi))
        out << sequence_to_string(seq) << "\n";
    return kExitOk;
}

int cmd_ot_normalize(const Options& opt, std::ostream& err) {
    Chirotope chi = parse_chirotope(read_file(opt.input));
    NormalizationResult result = normalize_triangular_hull(chi);
    write_file(opt.output, serialize_chirotope(result.chirotope));
    err << "flipped {";
    bool first = true;
    for (int v : result.flipped) {
        err << (first ? "" : ", ") << v;
        first = false;
    }
    err << "}; hull " << hull_to_string(convex_hull(result.chirotope)) << "; wrote "
        << opt.output << "\n";
    return kExitOk;
}

int cmd_reduce(const Options& opt, std::ostream& err) {
    Chirotope chi = parse_chirotope(read_file(opt.input));
    if (opt.normalize) {
        NormalizationResult result = normalize_triangular_hull(chi);
        if (!result.flipped.empty())
            err << "normalized hull by flipping " << result.flipped.size()
                << " element(s)\n";
        chi = result.chirotope;
    }
    SgeInstance instance = reduce_to_sge(chi);
    write_file(opt.output, serialize_instance(instance));
    err << "wrote instance with " << instance.graphs.size() << " graphs on "
        << instance.labels.size() << " labels to " << opt.output << "\n";
    return kExitOk;
}

int cmd_embed(const Options& opt, std::ostream& err) {
    Chirotope chi = parse_chirotope(read_file(opt.input));
    std::vector<Point> points = parse_points(read_file(opt.input2));
    ParsedSge parsed = parse_sge(read_file(opt.input3));
    if (!parsed.instance)
        fail(Errc::format_error, "embed needs a reduction instance file (hull/source headers)");
    Placement placement = embed_from_realization(chi, points, *parsed.instance);
    write_file(opt.output, serialize_placement(placement));
    err << "wrote placement of " << placement.size() << " points to " << opt.output << "\n";
    return kExitOk;
}

int cmd_verify(const Options& opt, std::ostream& err) {
    ParsedSge parsed = parse_sge(read_file(opt.input));
    Placement placement = parse_placement(read_file(opt.input2));
    const auto& graphs = parsed.instance ? parsed.instance->graphs : parsed.graphs;
    SgeReport report = verify_sge(graphs, placement);
    if (!report.ok()) {
        err << "reject: " << report.describe() << "\n";
        return kExitReject;
    }
    err << "accept: " << graphs.size() << " member drawings are plane\n";
    return kExitOk;
}

int cmd_extract(const Options& opt, std::ostream& err) {
    ParsedSge parsed = parse_sge(read_file(opt.input));
    if (!parsed.instance)
        fail(Errc::format_error, "extract needs a reduction instance file (hull/source headers)");
    Placement placement = parse_placement(read_file(opt.input2));
    Extraction extraction = extract_realization(*parsed.instance, placement);
    write_file(opt.points_out, serialize_points(extraction.points));
    write_file(opt.chirotope_out, serialize_chirotope(extraction.chirotope));
    std::string relation = "distinct from";
    if (extraction.chirotope.sign_string() == parsed.instance->source_signs)
        relation = "equal to";
    else if (extraction.chirotope.opposite().sign_string() == parsed.instance->source_signs)
        relation = "opposite to";
    err << "extracted copy " << extraction.copy_used << "; chirotope is " << relation
        << " the instance source\n";
    return kExitOk;
}

int cmd_realize(const Options& opt, std::ostream& err) {
    Chirotope chi = parse_chirotope(read_file(opt.input));
    auto points = grid_realize(chi, GridSpec{opt.grid});
    if (!points) {
        err << "no realization on the [0," << opt.grid << "]^2 grid "
            << "(not a proof that none exists on larger grids)\n";
        return kExitReject;
    }
    write_file(opt.output, serialize_points(*points));
    err << "wrote realization to " << opt.output << "\n";
    return kExitOk;
}

int cmd_solve_sge(const Options& opt, std::ostream& err) {
    ParsedSge parsed = parse_sge(read_file(opt.input));
    const auto& graphs = parsed.instance ? parsed.instance->graphs : parsed.graphs;
    auto placement = brute_force_sge(graphs, GridSpec{opt.grid}, opt.guard);
    if (!placement) {
        err << "no simultaneous embedding on the [0," << opt.grid << "]^2 grid\n";
        return kExitReject;
    }
    write_file(opt.output, serialize_placement(*placement));
    err << "wrote placement to " << opt.output << "\n";
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"order types, wheel-gadget reductions, and simultaneous "
                 "geometric embedding at desk scale"};
    app.require_subcommand(1);
    Options opt;

    auto* validate = app.add_subcommand("ot-validate", "check the order-type conditions");
    validate->add_option("chirotope", opt.input, "chirotope v1 file")->required();

    auto* from_points = app.add_subcommand("ot-from-points", "order type of a point list");
    from_points->add_option("points", opt.input, "points v1 file")->required();
    from_points->add_option("-o,--output", opt.output, "chirotope v1 output")->required();

    auto* hull_cmd = app.add_subcommand("ot-hull", "print the clockwise convex hull");
    hull_cmd->add_option("chirotope", opt.input, "chirotope v1 file")->required();

    auto* sequences = app.add_subcommand("ot-sequences", "print all surrounding sequences");
    sequences->add_option("chirotope", opt.input, "chirotope v1 file")->required();

    auto* normalize = app.add_subcommand("ot-normalize",
                                         "reorient so the hull becomes a triangle");
    normalize->add_option("chirotope", opt.input, "chirotope v1 file")->required();
    normalize->add_option("-o,--output", opt.output, "chirotope v1 output")->required();

    auto* reduce = app.add_subcommand("reduce", "build the gadget family of a chirotope");
    reduce->add_option("chirotope", opt.input, "chirotope v1 file")->required();
    reduce->add_option("-o,--output", opt.output, "sge v1 output")->required();
    reduce->add_flag("--normalize", opt.normalize,
                     "re-mark to a triangular hull first if needed");

    auto* embed = app.add_subcommand("embed", "place an instance from a realization");
    embed->add_option("chirotope", opt.input, "chirotope v1 file")->required();
    embed->add_option("points", opt.input2, "points v1 file realizing the chirotope")
        ->required();
    embed->add_option("instance", opt.input3, "sge v1 instance file")->required();
    embed->add_option("-o,--output", opt.output, "placement v1 output")->required();

    auto* verify = app.add_subcommand("verify", "check a placement against a family");
    verify->add_option("instance", opt.input, "sge v1 file")->required();
    verify->add_option("placement", opt.input2, "placement v1 file")->required();

    auto* extract = app.add_subcommand("extract",
                                       "read a realization back out of a placement");
    extract->add_option("instance", opt.input, "sge v1 instance file")->required();
    extract->add_option("placement", opt.input2, "placement v1 file")->required();
    extract->add_option("--points-out", opt.points_out, "points v1 output")->required();
    extract->add_option("--chirotope-out", opt.chirotope_out, "chirotope v1 output")
        ->required();

    auto* realize = app.add_subcommand("realize", "search a grid for a realization");
    realize->add_option("chirotope", opt.input, "chirotope v1 file")->required();
    realize->add_option("-o,--output", opt.output, "points v1 output")->required();
    realize->add_option("--grid", opt.grid, "grid bound G, search in [0,G]^2")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    auto* solve = app.add_subcommand("solve-sge", "exhaustive embedding search");
    solve->add_option("instance", opt.input, "sge v1 file")->required();
    solve->add_option("-o,--output", opt.output, "placement v1 output")->required();
    solve->add_option("--grid", opt.grid, "grid bound G, search in [0,G]^2")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    solve->add_option("--guard", opt.guard, "maximum label count to attempt")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    std::vector<const char*> argv;
    argv.push_back("otsge");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
            out << app.help();
            return kExitOk;
        }
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (validate->parsed()) return cmd_ot_validate(opt, err);
        if (from_points->parsed()) return cmd_ot_from_points(opt, err);
        if (hull_cmd->parsed()) return cmd_ot_hull(opt, out);
        if (sequences->parsed()) return cmd_ot_sequences(opt, out);
        if (normalize->parsed()) return cmd_ot_normalize(opt, err);
        if (reduce->parsed()) return cmd_reduce(opt, err);
        if (embed->parsed()) return cmd_embed(opt, err);
        if (verify->parsed()) return cmd_verify(opt, err);
        if (extract->parsed()) return cmd_extract(opt, err);
        if (realize->parsed()) return cmd_realize(opt, err);
        if (solve->parsed()) return cmd_solve_sge(opt, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        bool malformed = e.code() == Errc::format_error || e.code() == Errc::version_error;
        return malformed ? kExitUsage : kExitReject;
    }
    err << "usage error: no subcommand given\n";
    return kExitUsage;
}

} // namespace otsge
