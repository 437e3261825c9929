#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "otsge/error.hpp"
#include "otsge/graph.hpp"

using namespace otsge;

namespace {

LabeledGraph graph_on(int n) {
    LabeledGraph g;
    for (int i = 0; i < n; ++i) g.labels.push_back(std::to_string(i));
    return g;
}

LabeledGraph complete_graph(int n) {
    LabeledGraph g = graph_on(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

} // namespace

TEST_CASE("edges are normalized, deduplicated, sorted") {
    LabeledGraph g = graph_on(4);
    g.add_edge(3, 1);
    g.add_edge(1, 3);
    g.add_edge(0, 2);
    CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});
    CHECK(g.has_edge(3, 1));
    CHECK_FALSE(g.has_edge(0, 1));
    CHECK_THROWS_AS(g.add_edge(2, 2), Error);
}

TEST_CASE("label-based edge helpers") {
    LabeledGraph g = graph_on(3);
    g.add_edge("0", "2");
    CHECK(g.has_edge("2", "0"));
    CHECK(g.index_of("1") == 1);
    CHECK(g.index_of("x") == -1);
    CHECK_THROWS_AS(g.add_edge("0", "x"), Error);
}

TEST_CASE("three-connectivity on small graphs") {
    CHECK(is_three_connected(complete_graph(4)));
    CHECK(is_three_connected(complete_graph(5)));

    LabeledGraph path = graph_on(4);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    path.add_edge(2, 3);
    CHECK_FALSE(is_three_connected(path));

    // Cycle: every pair of non-adjacent vertices is a 2-cut.
    LabeledGraph cycle = graph_on(5);
    for (int i = 0; i < 5; ++i) cycle.add_edge(i, (i + 1) % 5);
    CHECK_FALSE(is_three_connected(cycle));

    // Two K4 blocks sharing a pair of vertices: that pair is a 2-cut.
    LabeledGraph blocks = graph_on(6);
    for (int i : {0, 1, 2, 3})
        for (int j : {0, 1, 2, 3})
            if (i < j) blocks.add_edge(i, j);
    for (int i : {0, 1, 4, 5})
        for (int j : {0, 1, 4, 5})
            if (i < j) blocks.add_edge(i, j);
    CHECK_FALSE(is_three_connected(blocks));

    CHECK_THROWS_AS(is_three_connected(complete_graph(3)), Error);

    LabeledGraph disconnected = graph_on(5);
    disconnected.add_edge(0, 1);
    disconnected.add_edge(2, 3);
    CHECK_FALSE(is_three_connected(disconnected));
}
