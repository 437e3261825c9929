#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "otsge/error.hpp"
#include "otsge/io.hpp"
#include "otsge/reduction.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <random>

using namespace otsge;
using namespace otsge::tests;

namespace {

Errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    throw std::logic_error("expected an error");
}

} // namespace

TEST_CASE("chirotope serialization round trips") {
    std::mt19937 rng(181);
    for (int trial = 0; trial < 15; ++trial) {
        int n = 3 + trial % 6;
        Chirotope chi = Chirotope::from_points(random_point_set(rng, n, 100));
        CHECK(parse_chirotope(serialize_chirotope(chi)) == chi);
    }
}

TEST_CASE("chirotope format is strict") {
    CHECK(code_of([] { parse_chirotope("chirotope v2\n3\n+\n"); }) == Errc::version_error);
    CHECK(code_of([] { parse_chirotope("placement v1\n"); }) == Errc::version_error);
    CHECK(code_of([] { parse_chirotope("chirotope v1\n4\n+++\n"); }) == Errc::format_error);
    CHECK(code_of([] { parse_chirotope("chirotope v1\n3\n0\n"); }) == Errc::format_error);
    CHECK(code_of([] { parse_chirotope("chirotope v1\n3\n+\n+\n"); }) == Errc::format_error);
    CHECK(code_of([] { parse_chirotope("chirotope v1\n2\n\n"); }) == Errc::format_error);
    CHECK(parse_chirotope("chirotope v1\n4\n+-+-\n").sign_string() == "+-+-");
}

TEST_CASE("points serialization round trips with rational coordinates") {
    std::vector<Point> points = {Point(0, 0), Point(rational(7, 2), rational(-1, 3)),
                                 Point(-5, 12)};
    CHECK(parse_points(serialize_points(points)) == points);
    CHECK(serialize_points(points) == "points v1\n0/1 0/1\n7/2 -1/3\n-5/1 12/1\n");
}

TEST_CASE("placement serialization is canonical and round trips") {
    Placement placement;
    placement["t1"] = Point(rational(2, 4), rational(6, -4));
    placement["a#1"] = Point(0, 3);
    std::string text = serialize_placement(placement);
    CHECK(text == "placement v1\na#1 0/1 3/1\nt1 1/2 -3/2\n");
    CHECK(parse_placement(text) == placement);
}

TEST_CASE("placement format rejects duplicates and junk") {
    CHECK(code_of([] { parse_placement("placement v1\na 0/1 0/1\na 1/1 1/1\n"); }) ==
          Errc::format_error);
    CHECK(code_of([] { parse_placement("placement v1\na 0/1\n"); }) == Errc::format_error);
    CHECK(code_of([] { parse_placement("placement v1\na x 0/1\n"); }) == Errc::format_error);
    CHECK(code_of([] { parse_placement("points v1\n"); }) == Errc::version_error);
}

TEST_CASE("instance serialization round trips") {
    SgeInstance instance = reduce_to_sge(six_point_chirotope());
    std::string text = serialize_instance(instance);
    ParsedSge parsed = parse_sge(text);
    REQUIRE(parsed.instance.has_value());
    CHECK(*parsed.instance == instance);
    CHECK(serialize_instance(*parsed.instance) == text);
}

TEST_CASE("reduction output is byte-identical across runs") {
    Chirotope chi = six_point_chirotope();
    CHECK(serialize_instance(reduce_to_sge(chi)) == serialize_instance(reduce_to_sge(chi)));
}

TEST_CASE("plain families round trip without instance headers") {
    LabeledGraph p1, p2;
    p1.name = "p1";
    p2.name = "p2";
    p1.labels = p2.labels = {"x", "y", "z"};
    p1.add_edge(0, 1);
    p2.add_edge(1, 2);
    std::string text = serialize_family(p1.labels, {p1, p2});
    ParsedSge parsed = parse_sge(text);
    CHECK_FALSE(parsed.instance.has_value());
    CHECK(parsed.labels == p1.labels);
    REQUIRE(parsed.graphs.size() == 2);
    CHECK(parsed.graphs[0] == p1);
    CHECK(parsed.graphs[1] == p2);
    CHECK(serialize_family(parsed.labels, parsed.graphs) == text);
}

TEST_CASE("sge format is strict") {
    CHECK(code_of([] { parse_sge("sge v7\n"); }) == Errc::version_error);
    CHECK(code_of([] { parse_sge("sge v1\nlabels a b\ngraph g\na b\n"); }) ==
          Errc::format_error); // missing n
    CHECK(code_of([] { parse_sge("sge v1\nn 1\nlabels a b\nhull 0 1 2\ngraph g\n"); }) ==
          Errc::format_error); // hull without source
    CHECK(code_of([] { parse_sge("sge v1\nn 2\nlabels a b\ngraph g\na b\n"); }) ==
          Errc::format_error); // wrong block count
    CHECK(code_of([] { parse_sge("sge v1\nn 1\nlabels a b\ngraph g\na c\n"); }) ==
          Errc::format_error); // undeclared endpoint
    CHECK(code_of([] { parse_sge("sge v1\nn 1\nlabels a b\ngraph g\na a\n"); }) ==
          Errc::format_error); // self-loop
    CHECK(code_of([] { parse_sge("sge v1\nn 1\nlabels a a\ngraph g\n"); }) ==
          Errc::format_error); // duplicate label
}

TEST_CASE("read_file reports unreadable paths") {
    CHECK(code_of([] { read_file("/nonexistent/path/file.txt"); }) == Errc::format_error);
}
