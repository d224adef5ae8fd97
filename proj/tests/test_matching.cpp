#include "oracles.hpp"

#include "pmforce/error.hpp"
#include "pmforce/generators.hpp"
#include "pmforce/matching.hpp"

#include <doctest.h>

#include <random>

using namespace pmforce;

TEST_CASE("perfect matchings of small cycles")
{
    CHECK(enumerate_perfect_matchings(cycle_graph(4)).size() == 2);
    CHECK(enumerate_perfect_matchings(cycle_graph(6)).size() == 2);
    CHECK(enumerate_perfect_matchings(cycle_graph(5)).empty());
    CHECK(enumerate_perfect_matchings(Graph(0, {})).size() == 1);
}

TEST_CASE("triphenylene matching count agrees with the permanent")
{
    const auto tri = std::get<HexSystem>(gen_named("triphenylene"));
    const auto pms = enumerate_perfect_matchings(tri.graph());
    CHECK(pms.size() == 9);
    CHECK(oracle::ryser_permanent(oracle::biadjacency(tri.graph())) == 9);
    for (const auto& m : pms)
        CHECK(is_perfect(tri.graph(), m));
    CHECK(std::is_sorted(pms.begin(), pms.end()));
}

TEST_CASE("matching counts of truncated parallelograms agree with the permanent")
{
    for (auto rows : std::vector<std::vector<int>>{{3}, {2, 2}, {3, 2, 1}, {3, 3, 2}, {4, 2}}) {
        const auto h = gen_truncated_parallelogram(rows);
        CHECK(static_cast<long long>(enumerate_perfect_matchings(h.graph()).size())
              == oracle::ryser_permanent(oracle::biadjacency(h.graph())));
    }
}

TEST_CASE("dodecahedron matching count agrees with a reversed-order recount")
{
    const Graph d = dodecahedron();
    CHECK(enumerate_perfect_matchings(d).size() == 36);
    CHECK(oracle::count_matchings(d) == 36);
}

TEST_CASE("matching enumeration cap fails loudly")
{
    Limits limits;
    limits.max_matchings = 8;
    const auto tri = std::get<HexSystem>(gen_named("triphenylene"));
    try {
        (void)enumerate_perfect_matchings(tri.graph(), limits);
        FAIL("expected LimitExceeded");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::LimitExceeded);
    }
}

TEST_CASE("unique-matching test agrees with capped counting")
{
    std::mt19937 rng(20261018);
    int unique_seen = 0;
    for (int n = 1; n <= 5; ++n)
        for (const auto& h : enumerate_hex_systems(n)) {
            const Graph& g = h.graph();
            for (int trial = 0; trial < 4; ++trial) {
                std::vector<EdgeId> removed;
                const int k = std::uniform_int_distribution<int>(0, 4)(rng);
                for (int i = 0; i < k; ++i)
                    removed.push_back(std::uniform_int_distribution<int>(0, g.edge_count() - 1)(rng));
                std::sort(removed.begin(), removed.end());
                removed.erase(std::unique(removed.begin(), removed.end()), removed.end());
                const auto fast = has_unique_perfect_matching(g, removed);
                const long long count = oracle::count_matchings(g, removed);
                CHECK(fast.unique == (count == 1));
                CHECK(count_perfect_matchings(g, removed, 2) == static_cast<std::size_t>(std::min(count, 3LL)));
                if (fast.unique) {
                    ++unique_seen;
                    REQUIRE(fast.matching);
                    CHECK(is_perfect(g, *fast.matching));
                    for (EdgeId e : removed)
                        CHECK_FALSE(fast.matching->contains(e));
                }
            }
        }
    CHECK(unique_seen > 0);
}

TEST_CASE("unique-matching test on a non-bipartite graph")
{
    // Two triangles joined by a bridge: the bridge forces the rest.
    const Graph g(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}});
    const auto r = has_unique_perfect_matching(g);
    CHECK(r.unique);
    CHECK(r.matching == Matching({0, 3, 5}));
    CHECK(count_perfect_matchings(g, {}, 2) == 1);
    // Two pendants on one triangle vertex: none.
    const Graph h(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {0, 4}, {2, 5}});
    CHECK_FALSE(has_unique_perfect_matching(h).unique);
    CHECK(count_perfect_matchings(h, {}, 2) == 0);
    CHECK_FALSE(has_unique_perfect_matching(cycle_graph(5)).unique);
    // K4 has three perfect matchings.
    const Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK_FALSE(has_unique_perfect_matching(k4).unique);
    const EdgeId cut[] = {1, 2, 3, 4};
    CHECK(has_unique_perfect_matching(k4, cut).unique);
}

TEST_CASE("fixed edges and normal components of perylene")
{
    const auto per = std::get<HexSystem>(gen_named("perylene"));
    const auto pms = enumerate_perfect_matchings(per.graph());
    CHECK(pms.size() == 9);
    const auto fixed = edge_fixedness(per.graph(), pms);
    for (EdgeId e = 0; e < per.graph().edge_count(); ++e) {
        int in = 0;
        for (const auto& m : pms)
            in += m.contains(e);
        const auto expected = in == 0                           ? EdgeFixedness::FixedSingle
                              : in == static_cast<int>(pms.size()) ? EdgeFixedness::FixedDouble
                                                                   : EdgeFixedness::Free;
        CHECK(fixed[e] == expected);
    }
    const auto comps = normal_components(per.graph(), pms);
    REQUIRE(comps.size() == 2);
    for (const auto& c : comps)
        CHECK(enumerate_perfect_matchings(c.graph).size() == 3);
}

TEST_CASE("no perfect matching is reported")
{
    try {
        (void)edge_fixedness(cycle_graph(5));
        FAIL("expected NoPerfectMatching");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NoPerfectMatching);
    }
}
