#include "oracles.hpp"

#include "pmforce/antiforcing.hpp"
#include "pmforce/error.hpp"
#include "pmforce/forcing.hpp"
#include "pmforce/generators.hpp"
#include "pmforce/hexsys.hpp"
#include "pmforce/verify.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace pmforce;

namespace {

ErrorKind build_error(std::vector<Cell> cells)
{
    try {
        (void)build_hex_system(std::move(cells));
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::ParseError;
}

} // namespace

TEST_CASE("single hexagon")
{
    const auto h = build_hex_system({{0, 0}});
    CHECK(h.graph().vertex_count() == 6);
    CHECK(h.graph().edge_count() == 6);
    CHECK(h.boundary_edges().size() == 6);
    int black = 0;
    for (int v = 0; v < 6; ++v)
        black += h.graph().color(v) == Color::Black;
    CHECK(black == 3);
}

TEST_CASE("vertex and edge counts follow Euler's formula")
{
    for (int n = 1; n <= 6; ++n)
        for (const auto& h : enumerate_hex_systems(n)) {
            const Graph& g = h.graph();
            CHECK(g.edge_count() - g.vertex_count() + 1 == n);
            REQUIRE(g.explicit_colors());
            for (const Edge& e : g.edges())
                CHECK(g.color(e.u) != g.color(e.v));
            for (int v = 0; v < g.vertex_count(); ++v) {
                const auto p = h.vertex_point(v);
                if (g.color(v) == Color::Black)
                    CHECK(((p.y % 3) + 3) % 3 == 2);
            }
        }
}

TEST_CASE("build errors")
{
    CHECK(build_error({}) == ErrorKind::Disconnected);
    CHECK(build_error({{0, 0}, {2, 0}}) == ErrorKind::Disconnected);
    // Coronene's ring without its centre.
    CHECK(build_error({{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}}) == ErrorKind::HasHole);
    CHECK(build_hex_system({{0, 0}, {0, 0}, {1, 0}}).cell_count() == 2);
}

TEST_CASE("triphenylene Clar and Fries numbers")
{
    const auto tri = std::get<HexSystem>(gen_named("triphenylene"));
    const auto cl = clar_number(tri);
    CHECK(cl.value == 3);
    CHECK(is_perfect(tri.graph(), cl.matching));
    const auto fr = fries_numbers(tri);
    CHECK(fr.fries_max == 4);
    CHECK(fr.fries_min == 1);
    CHECK(alternating_hexagons(tri, fr.max_matching).size() == 4);
    CHECK(is_all_kink_catahex(tri));
}

TEST_CASE("inner dual and catahex recognition")
{
    const auto tri = std::get<HexSystem>(gen_named("triphenylene"));
    const auto dual = inner_dual(tri);
    CHECK(dual.is_tree);
    CHECK(dual.edges.size() == 3);
    CHECK_FALSE(is_all_kink_catahex(gen_truncated_parallelogram(std::vector<int>{3})));
    CHECK_FALSE(is_all_kink_catahex(gen_truncated_parallelogram(std::vector<int>{2, 2})));
    CHECK(is_all_kink_catahex(build_hex_system({{0, 0}})));
}

TEST_CASE("truncated parallelogram recognition")
{
    for (auto rows : std::vector<std::vector<int>>{{1}, {4}, {3, 3}, {5, 5, 3, 2}, {5, 5, 5, 5}, {3, 2, 1}}) {
        const auto cells = truncated_parallelogram_cells(rows);
        for (int k = 0; k < 12; ++k) {
            const auto moved = transform_cells(cells, k);
            const auto got = truncated_parallelogram_rows(moved);
            REQUIRE(got);
            CHECK(*got == truncated_parallelogram_rows(cells));
        }
    }
    CHECK(*truncated_parallelogram_rows(truncated_parallelogram_cells(std::vector<int>{5, 5, 3, 2}))
          == std::vector<int>{5, 5, 3, 2});
    CHECK_FALSE(is_truncated_parallelogram(std::get<HexSystem>(gen_named("triphenylene"))));
}

TEST_CASE("anti-forcing edges of truncated parallelograms")
{
    CHECK(anti_forcing_edges(build_hex_system({{0, 0}}).graph()).size() == 6);
    for (int r = 2; r <= 5; ++r)
        CHECK(anti_forcing_edges(gen_truncated_parallelogram(std::vector<int>{r}).graph()).size() == 4);
    CHECK(anti_forcing_edges(gen_truncated_parallelogram(std::vector<int>{3, 3}).graph()).size() == 2);
    CHECK(anti_forcing_edges(gen_truncated_parallelogram(std::vector<int>{5, 5, 5, 5}).graph()).size() == 2);
    const auto h = gen_truncated_parallelogram(std::vector<int>{5, 5, 3, 2});
    CHECK(h.cell_count() == 15);
    const auto edges = anti_forcing_edges(h.graph());
    REQUIRE(edges.size() == 1);
    CHECK(h.is_boundary(edges[0]));
    CHECK(antiforcing_spectrum(h.graph()).min == 1);
}

TEST_CASE("tree independent domination agrees with brute force")
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 14)(rng);
        std::vector<std::pair<int, int>> edges;
        for (int v = 1; v < n; ++v)
            edges.push_back({std::uniform_int_distribution<int>(0, v - 1)(rng), v});
        const auto got = tree_independent_domination(n, edges);
        CHECK(got.value == oracle::independent_domination(n, edges));
        CHECK(static_cast<int>(got.nodes.size()) == got.value);
        CHECK(brute_force_independent_domination(n, edges) == got.value);
        std::vector<bool> in(n, false);
        for (int v : got.nodes)
            in[v] = true;
        for (auto [a, b] : edges)
            CHECK_FALSE((in[a] && in[b]));
    }
}

TEST_CASE("tree routines reject cycles")
{
    const std::vector<std::pair<int, int>> triangle{{0, 1}, {1, 2}, {2, 0}};
    CHECK_THROWS_AS(tree_independent_domination(3, triangle), Error);
}

TEST_CASE("tree matching and independence numbers")
{
    const std::vector<std::pair<int, int>> path{{0, 1}, {1, 2}, {2, 3}, {3, 4}};
    CHECK(tree_matching_number(5, path) == 2);
    CHECK(tree_independence_number(5, path) == 3);
    const std::vector<std::pair<int, int>> star{{0, 1}, {0, 2}, {0, 3}};
    CHECK(tree_matching_number(4, star) == 1);
    CHECK(tree_independence_number(4, star) == 3);
}

TEST_CASE("Sachs cuts are invariant")
{
    const auto h = gen_truncated_parallelogram(std::vector<int>{3, 2});
    const auto cuts = sachs_cuts(h);
    CHECK_FALSE(cuts.empty());
    for (const auto& cut : cuts) {
        const auto r = sachs_cut_check(h, cut);
        CHECK(r.invariant);
        CHECK(r.value >= 1);
    }
    const std::vector<EdgeId> bogus{0};
    CHECK_THROWS_AS(sachs_cut_check(h, bogus), Error);
}

TEST_CASE("normal components of perylene are naphthalenes")
{
    const auto per = std::get<HexSystem>(gen_named("perylene"));
    const auto pms = enumerate_perfect_matchings(per.graph());
    const auto comps = hex_normal_components(per, pms);
    REQUIRE(comps.size() == 2);
    for (const auto& c : comps) {
        CHECK(c.exact);
        CHECK(c.cells.size() == 2);
        CHECK(truncated_parallelogram_rows(c.cells) == std::vector<int>{2});
    }
    CHECK(antiforcing_spectrum(per.graph(), pms).min == 2);
}

TEST_CASE("hexagon rotation systems are plane")
{
    for (const auto& h : enumerate_hex_systems(4)) {
        const Graph& g = h.graph();
        REQUIRE(g.rotation());
        // Faces traced by the rotation: the cells plus the outer face.
        std::set<std::pair<int, int>> used;
        int faces = 0;
        for (const Edge& e : g.edges())
            for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
                if (used.count({a, b}))
                    continue;
                ++faces;
                int x = a, y = b;
                while (!used.count({x, y})) {
                    used.insert({x, y});
                    const int z = g.clockwise_after(y, x).front();
                    x = y;
                    y = z;
                }
            }
        CHECK(faces == h.cell_count() + 1);
    }
}
