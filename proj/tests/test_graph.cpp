#include "pmforce/error.hpp"
#include "pmforce/generators.hpp"
#include "pmforce/graph.hpp"

#include <doctest.h>

#include <set>

using namespace pmforce;

namespace {

ErrorKind kind_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::ParseError;
}

} // namespace

TEST_CASE("graph construction rejects malformed input")
{
    CHECK(kind_of([] { Graph(3, {{0, 3}}); }) == ErrorKind::VertexOutOfRange);
    CHECK(kind_of([] { Graph(3, {{1, 1}}); }) == ErrorKind::SelfLoop);
    CHECK(kind_of([] { Graph(3, {{0, 1}, {1, 0}}); }) == ErrorKind::DuplicateEdge);
    CHECK(kind_of([] { Graph(2, {{0, 1}}, std::vector<Color>{Color::White, Color::White}); })
          == ErrorKind::BadColoring);
    CHECK(kind_of([] { Graph(2, {{0, 1}}, std::vector<Color>{Color::White}); }) == ErrorKind::BadColoring);
}

TEST_CASE("bipartition is computed when colours are absent")
{
    const Graph c6 = cycle_graph(6);
    REQUIRE(c6.is_bipartite());
    for (const Edge& e : c6.edges())
        CHECK(c6.color(e.u) != c6.color(e.v));
    CHECK_FALSE(c6.explicit_colors());

    const Graph c5 = cycle_graph(5);
    CHECK_FALSE(c5.is_bipartite());
    CHECK(kind_of([&] { (void)c5.color(0); }) == ErrorKind::NotBipartite);
}

TEST_CASE("incidence lists follow edge order")
{
    const Graph g(4, {{0, 1}, {2, 0}, {0, 3}});
    const auto inc = g.incident(0);
    REQUIRE(inc.size() == 3);
    CHECK(inc[0].edge == 0);
    CHECK(inc[1].edge == 1);
    CHECK(inc[2].neighbor == 3);
    CHECK(g.find_edge(3, 0) == 2);
    CHECK_FALSE(g.find_edge(1, 2));
    CHECK(g.max_degree() == 3);
}

TEST_CASE("rotation systems are checked against adjacency")
{
    CHECK(kind_of([] { Graph(3, {{0, 1}, {1, 2}}, std::nullopt, Rotation{{1}, {0}, {1}}); })
          == ErrorKind::BadRotation);
    CHECK(kind_of([] { Graph(3, {{0, 1}, {1, 2}}, std::nullopt, Rotation{{1}, {2, 0}}); })
          == ErrorKind::BadRotation);
    const Graph g(3, {{0, 1}, {1, 2}, {0, 2}}, std::nullopt, Rotation{{1, 2}, {2, 0}, {0, 1}});
    CHECK(g.clockwise_after(0, 2) == std::vector<Vertex>{1});
    CHECK(g.clockwise_after(1, 2) == std::vector<Vertex>{0});
}

TEST_CASE("dodecahedron is a cubic planar non-bipartite graph")
{
    const Graph d = dodecahedron();
    CHECK(d.vertex_count() == 20);
    CHECK(d.edge_count() == 30);
    for (int v = 0; v < 20; ++v)
        CHECK(d.degree(v) == 3);
    CHECK_FALSE(d.is_bipartite());
    REQUIRE(d.rotation());
    // Euler: a rotation system of a plane graph traces V - E + 2 faces.
    int faces = 0;
    std::set<std::pair<int, int>> used;
    for (const Edge& e : d.edges())
        for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
            if (used.count({a, b}))
                continue;
            ++faces;
            int x = a, y = b;
            while (!used.count({x, y})) {
                used.insert({x, y});
                const int z = d.clockwise_after(y, x).front();
                x = y;
                y = z;
            }
        }
    CHECK(faces == 12);
}

TEST_CASE("edge subgraph keeps colours and rotation")
{
    const Graph c6 = cycle_graph(6);
    const EdgeId keep[] = {0, 2, 4};
    const Graph sub = edge_subgraph(c6, keep);
    CHECK(sub.vertex_count() == 6);
    CHECK(sub.edge_count() == 3);
    REQUIRE(sub.rotation());
    for (int v = 0; v < 6; ++v)
        CHECK((*sub.rotation())[v].size() == 1);
}
