#include <doctest.h>

#include "syzgraph/errors.hpp"
#include "syzgraph/graph.hpp"

using namespace syz;

namespace {

IndexGraph makeGraph(std::vector<int> verts, std::vector<std::pair<int, int>> edges) {
    IndexGraph g;
    g.verts = std::move(verts);
    g.edges = std::move(edges);
    g.normalize();
    return g;
}

} // namespace

TEST_CASE("normalize orients, sorts, and deduplicates") {
    IndexGraph g = makeGraph({3, 1, 2}, {{3, 1}, {1, 3}, {2, 3}});
    CHECK(g.verts == std::vector<int>{1, 2, 3});
    CHECK(g.edges == std::vector<std::pair<int, int>>{{1, 3}, {2, 3}});
    CHECK(g.hasEdge(3, 1));
    CHECK_FALSE(g.hasEdge(1, 2));
    CHECK(g.degreeOf(3) == 2);
    CHECK(g.neighborsOf(3) == std::vector<int>{1, 2});
}

TEST_CASE("single vertex and single edge classify as lines") {
    GraphShape one = classifyGraph(makeGraph({7}, {}));
    CHECK(one.tag == ShapeTag::Line);
    CHECK(one.witness == std::vector<int>{7});

    GraphShape two = classifyGraph(makeGraph({2, 5}, {{5, 2}}));
    CHECK(two.tag == ShapeTag::Line);
    CHECK(two.witness == std::vector<int>{2, 5});
}

TEST_CASE("path graph classifies as a line from the smaller endpoint") {
    GraphShape s = classifyGraph(makeGraph({1, 2, 3, 4}, {{2, 3}, {1, 4}, {2, 4}}));
    // path: 1 - 4 - 2 - 3; endpoints 1 and 3, start at 1
    CHECK(s.tag == ShapeTag::Line);
    CHECK(s.witness == std::vector<int>{1, 4, 2, 3});
}

TEST_CASE("connected 2-regular graphs are cycles, including the triangle") {
    GraphShape tri = classifyGraph(makeGraph({1, 2, 3}, {{1, 2}, {2, 3}, {1, 3}}));
    CHECK(tri.tag == ShapeTag::Cycle);
    CHECK(tri.cycleLength == 3);

    GraphShape sq = classifyGraph(makeGraph({1, 2, 3, 4}, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}));
    CHECK(sq.tag == ShapeTag::Cycle);
    CHECK(sq.cycleLength == 4);
    // starts at the smallest id, toward its smaller neighbor
    CHECK(sq.witness == std::vector<int>{1, 2, 3, 4});

    GraphShape sq2 = classifyGraph(makeGraph({1, 2, 3, 4}, {{1, 3}, {3, 2}, {2, 4}, {4, 1}}));
    CHECK(sq2.tag == ShapeTag::Cycle);
    CHECK(sq2.witness == std::vector<int>{1, 3, 2, 4});
}

TEST_CASE("complete graphs on four or more vertices") {
    GraphShape k4 = classifyGraph(
        makeGraph({1, 2, 3, 4}, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}));
    CHECK(k4.tag == ShapeTag::Complete);
}

TEST_CASE("trees that are not paths") {
    GraphShape star = classifyGraph(makeGraph({1, 2, 3, 4}, {{1, 2}, {1, 3}, {1, 4}}));
    CHECK(star.tag == ShapeTag::Tree);
    CHECK(star.witness.empty());
}

TEST_CASE("connected graphs with cycles that are neither cycles nor complete") {
    // K4 minus one edge
    GraphShape s =
        classifyGraph(makeGraph({1, 2, 3, 4}, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}));
    CHECK(s.tag == ShapeTag::ConnectedOther);
}

TEST_CASE("disconnected graphs") {
    GraphShape s = classifyGraph(makeGraph({1, 2, 3, 4}, {{1, 2}, {3, 4}}));
    CHECK(s.tag == ShapeTag::Disconnected);
    CHECK(classifyGraph(makeGraph({}, {})).tag == ShapeTag::Line); // empty graph
}

TEST_CASE("shape tag names are stable identifiers") {
    CHECK(shapeTagName(ShapeTag::Line) == "line");
    CHECK(shapeTagName(ShapeTag::Cycle) == "cycle");
    CHECK(shapeTagName(ShapeTag::Tree) == "tree");
    CHECK(shapeTagName(ShapeTag::Complete) == "complete");
    CHECK(shapeTagName(ShapeTag::ConnectedOther) == "connectedOther");
    CHECK(shapeTagName(ShapeTag::Disconnected) == "disconnected");
}

TEST_CASE("induced subgraph and tree paths") {
    IndexGraph g = makeGraph({1, 2, 3, 4, 5}, {{1, 2}, {2, 3}, {3, 4}, {3, 5}});
    IndexGraph sub = inducedSubgraph(g, {1, 2, 3});
    CHECK(sub.verts == std::vector<int>{1, 2, 3});
    CHECK(sub.edges == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
    CHECK_THROWS_AS(inducedSubgraph(g, {9}), input_error);

    CHECK(treePath(g, 1, 5) == std::vector<int>{1, 2, 3, 5});
    CHECK(treePath(g, 4, 4) == std::vector<int>{4});
    CHECK(isConnected(g));
    CHECK_FALSE(isConnected(makeGraph({1, 2}, {})));
}
