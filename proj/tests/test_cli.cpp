#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "otsge/cli.hpp"
#include "otsge/io.hpp"
#include "otsge/reduction.hpp"
#include "otsge/solver.hpp"

#include "fixtures.hpp"

#include <filesystem>
#include <sstream>

using namespace otsge;
using namespace otsge::tests;
namespace fs = std::filesystem;

namespace {

struct CliRun {
    int status;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int status = run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("otsge_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

} // namespace

TEST_CASE("cli pipeline: points to chirotope to instance to placement and back") {
    TempDir dir;
    write_file(dir.file("points.txt"), serialize_points(triangle_plus_interior_points()));

    CliRun from = run({"ot-from-points", dir.file("points.txt"), "-o", dir.file("chi.txt")});
    CHECK(from.status == 0);

    CliRun validate = run({"ot-validate", dir.file("chi.txt")});
    CHECK(validate.status == 0);

    CliRun hull = run({"ot-hull", dir.file("chi.txt")});
    CHECK(hull.status == 0);
    CHECK(hull.out == "hull 0 2 1\n");

    CliRun sequences = run({"ot-sequences", dir.file("chi.txt")});
    CHECK(sequences.status == 0);
    CHECK(sequences.out.find("S(3) internal:") != std::string::npos);

    CliRun reduce = run({"reduce", dir.file("chi.txt"), "-o", dir.file("inst.txt")});
    CHECK(reduce.status == 0);
    ParsedSge parsed = parse_sge(read_file(dir.file("inst.txt")));
    REQUIRE(parsed.instance.has_value());
    CHECK(parsed.instance->graphs.size() == 4);
    CHECK(parsed.instance->labels.size() == 7);

    CliRun embed = run({"embed", dir.file("chi.txt"), dir.file("points.txt"),
                        dir.file("inst.txt"), "-o", dir.file("phi.txt")});
    CHECK(embed.status == 0);

    CliRun verify = run({"verify", dir.file("inst.txt"), dir.file("phi.txt")});
    CHECK(verify.status == 0);

    CliRun extract = run({"extract", dir.file("inst.txt"), dir.file("phi.txt"),
                          "--points-out", dir.file("back.txt"), "--chirotope-out",
                          dir.file("chi2.txt")});
    CHECK(extract.status == 0);
    CHECK(extract.err.find("equal to") != std::string::npos);
    CHECK(parse_chirotope(read_file(dir.file("chi2.txt"))) ==
          parse_chirotope(read_file(dir.file("chi.txt"))));
}

TEST_CASE("cli: verify rejects a perturbed placement, naming the failure") {
    TempDir dir;
    std::vector<Point> points = six_point_points();
    Chirotope chi = Chirotope::from_points(points);
    SgeInstance instance = reduce_to_sge(chi);
    Placement placement = embed_from_realization(chi, points, instance);
    std::swap(placement["3#1"], placement["4#1"]);
    write_file(dir.file("inst.txt"), serialize_instance(instance));
    write_file(dir.file("phi.txt"), serialize_placement(placement));

    CliRun verify = run({"verify", dir.file("inst.txt"), dir.file("phi.txt")});
    CHECK(verify.status == 1);
    CHECK(verify.err.find("member graph") != std::string::npos);
    CHECK(verify.err.find("cross") != std::string::npos);
}

TEST_CASE("cli: reduce demands a triangular hull unless asked to normalize") {
    TempDir dir;
    write_file(dir.file("square.txt"),
               serialize_chirotope(Chirotope::from_points(square_points())));

    CliRun plain = run({"reduce", dir.file("square.txt"), "-o", dir.file("inst.txt")});
    CHECK(plain.status == 1);

    CliRun normalized = run({"reduce", dir.file("square.txt"), "--normalize", "-o",
                             dir.file("inst.txt")});
    CHECK(normalized.status == 0);
    ParsedSge parsed = parse_sge(read_file(dir.file("inst.txt")));
    REQUIRE(parsed.instance.has_value());
    CHECK(parsed.instance->graphs.size() == 4);
    CHECK(parsed.instance->labels.size() == 7);
}

TEST_CASE("cli: ot-normalize reports the flip set and writes a triangular hull") {
    TempDir dir;
    write_file(dir.file("square.txt"),
               serialize_chirotope(Chirotope::from_points(square_points())));
    CliRun normalize =
        run({"ot-normalize", dir.file("square.txt"), "-o", dir.file("tri.txt")});
    CHECK(normalize.status == 0);
    Chirotope out = parse_chirotope(read_file(dir.file("tri.txt")));
    CHECK(convex_hull(out).size() == 3);
}

TEST_CASE("cli: ot-validate rejects corrupted sign data with exit 1") {
    TempDir dir;
    Chirotope chi = six_point_chirotope();
    // Flip the first sign whose flip is not a mutation, so validation
    // genuinely fails.
    std::string signs;
    for (int t = 0; t < chi.triple_count(); ++t) {
        signs = chi.sign_string();
        signs[t] = signs[t] == '+' ? '-' : '+';
        std::vector<std::int8_t> values;
        for (char c : signs) values.push_back(c == '+' ? std::int8_t{1} : std::int8_t{-1});
        if (!validate_chirotope(Chirotope(6, std::move(values))).ok()) break;
    }
    write_file(dir.file("bad.txt"), "chirotope v1\n6\n" + signs + "\n");
    CliRun validate = run({"ot-validate", dir.file("bad.txt")});
    CHECK(validate.status == 1);
    CHECK(validate.err.find("exchange") != std::string::npos);
}

TEST_CASE("cli: realize and solve-sge report absence with exit 1") {
    TempDir dir;
    write_file(dir.file("chi.txt"),
               serialize_chirotope(triangle_plus_interior_chirotope()));
    CliRun cramped = run({"realize", dir.file("chi.txt"), "--grid", "1", "-o",
                          dir.file("pts.txt")});
    CHECK(cramped.status == 1);

    CliRun fits = run({"realize", dir.file("chi.txt"), "--grid", "3", "-o",
                       dir.file("pts.txt")});
    CHECK(fits.status == 0);
    CHECK(Chirotope::from_points(parse_points(read_file(dir.file("pts.txt")))) ==
          triangle_plus_interior_chirotope());

    CliRun reduce = run({"reduce", dir.file("chi.txt"), "-o", dir.file("inst.txt")});
    REQUIRE(reduce.status == 0);
    // Seven labels cannot fit on the four points of the [0,1]^2 grid.
    CliRun solve = run({"solve-sge", dir.file("inst.txt"), "--grid", "1", "-o",
                        dir.file("phi.txt")});
    CHECK(solve.status == 1);
}

TEST_CASE("cli: solve-sge end to end on the smallest instance") {
    TempDir dir;
    write_file(dir.file("chi.txt"),
               serialize_chirotope(triangle_plus_interior_chirotope()));
    CliRun reduce = run({"reduce", dir.file("chi.txt"), "-o", dir.file("inst.txt")});
    REQUIRE(reduce.status == 0);
    CliRun solve = run({"solve-sge", dir.file("inst.txt"), "--grid", "6", "-o",
                        dir.file("phi.txt")});
    CHECK(solve.status == 0);
    CliRun verify = run({"verify", dir.file("inst.txt"), dir.file("phi.txt")});
    CHECK(verify.status == 0);
}

TEST_CASE("cli: format and usage errors exit 2") {
    TempDir dir;
    write_file(dir.file("bad.txt"), "chirotope v9\n3\n+\n");
    CHECK(run({"ot-validate", dir.file("bad.txt")}).status == 2);
    CHECK(run({"ot-validate", dir.file("missing.txt")}).status == 2);
    write_file(dir.file("short.txt"), "chirotope v1\n4\n+\n");
    CHECK(run({"ot-validate", dir.file("short.txt")}).status == 2);
    CHECK(run({"no-such-command"}).status == 2);
    CHECK(run({}).status == 2);
    CHECK(run({"ot-validate"}).status == 2);
}

TEST_CASE("cli: identical inputs and flags produce byte-identical outputs") {
    TempDir dir;
    write_file(dir.file("points.txt"), serialize_points(six_point_points()));
    for (std::string run_id : {"a", "b"}) {
        CHECK(run({"ot-from-points", dir.file("points.txt"), "-o",
                   dir.file("chi_" + run_id)})
                  .status == 0);
        CHECK(run({"reduce", dir.file("chi_" + run_id), "-o", dir.file("inst_" + run_id)})
                  .status == 0);
        CHECK(run({"embed", dir.file("chi_" + run_id), dir.file("points.txt"),
                   dir.file("inst_" + run_id), "-o", dir.file("phi_" + run_id)})
                  .status == 0);
    }
    CHECK(read_file(dir.file("chi_a")) == read_file(dir.file("chi_b")));
    CHECK(read_file(dir.file("inst_a")) == read_file(dir.file("inst_b")));
    CHECK(read_file(dir.file("phi_a")) == read_file(dir.file("phi_b")));
}

TEST_CASE("cli: help exits cleanly") {
    CliRun help = run({"--help"});
    CHECK(help.status == 0);
    CHECK(help.out.find("ot-validate") != std::string::npos);
}
