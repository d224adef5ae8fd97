#include "oracles.hpp"

#include "pmforce/antiforcing.hpp"
#include "pmforce/error.hpp"
#include "pmforce/generators.hpp"

#include <doctest.h>

#include <map>

using namespace pmforce;

TEST_CASE("triphenylene anti-forcing spectrum")
{
    const auto tri = std::get<HexSystem>(gen_named("triphenylene"));
    const auto s = antiforcing_spectrum(tri.graph());
    CHECK(s.value_set == std::vector<int>{2, 3, 4});
    CHECK(anti_forcing_edges(tri.graph()).empty());
}

TEST_CASE("six-cycle")
{
    const Graph c6 = cycle_graph(6);
    for (const auto& m : enumerate_perfect_matchings(c6)) {
        CHECK(antiforcing_number(c6, m).value == 1);
        CHECK(max_compatible_alternating_set(c6, m).value == 1);
    }
    CHECK(anti_forcing_edges(c6).size() == 6);
}

TEST_CASE("anti-forcing numbers agree with the definition")
{
    std::vector<Graph> graphs{cycle_graph(4), dodecahedron()};
    for (int n = 1; n <= 4; ++n)
        for (const auto& h : enumerate_hex_systems(n))
            graphs.push_back(h.graph());
    for (const Graph& g : graphs) {
        const auto pms = enumerate_perfect_matchings(g);
        for (const auto& m : pms) {
            const auto opt = antiforcing_number(g, m);
            if (g.edge_count() <= 30)
                CHECK(opt.value == oracle::antiforcing_number(g, m, pms));
            CHECK(is_antiforcing_set(g, m, opt.witness));
            CHECK(is_antiforcing_set_by_uniqueness(g, m, opt.witness));
        }
    }
}

TEST_CASE("dodecahedron compatible sets")
{
    // Frozen from an independent enumeration of all 1168 alternating cycles:
    // without the crossing rule every matching admits 4 compatible cycles,
    // with it only 3, while af is 4 on 30 matchings and 5 on 6.
    const Graph d = dodecahedron();
    std::map<std::tuple<int, int, int>, int> seen;
    for (const auto& m : enumerate_perfect_matchings(d)) {
        const auto cycles = enumerate_alternating_cycles(d, m);
        const auto nc = max_compatible_alternating_set(d, m, cycles);
        const auto plain = max_compatible_alternating_set(d, m, cycles, Crossings::Allow);
        CHECK(is_valid_family(d, m, nc.family));
        CHECK(is_valid_family(d, m, plain.family));
        ++seen[{nc.value, plain.value, antiforcing_number(m, cycles).value}];
    }
    const std::map<std::tuple<int, int, int>, int> expected{{{3, 4, 4}, 30}, {{3, 4, 5}, 6}};
    CHECK(seen == expected);
}

TEST_CASE("crossing needs alternating sides around the shared edge")
{
    const Graph d = dodecahedron();
    const auto m = enumerate_perfect_matchings(d).front();
    const auto cycles = enumerate_alternating_cycles(d, m);
    const auto plain = max_compatible_alternating_set(d, m, cycles, Crossings::Allow);
    int crossing_pairs = 0;
    for (std::size_t i = 0; i < plain.family.cycles.size(); ++i)
        for (std::size_t j = i + 1; j < plain.family.cycles.size(); ++j) {
            const auto& a = plain.family.cycles[i];
            const auto& b = plain.family.cycles[j];
            CHECK(cycles_compatible(d, m, a, b));
            CHECK(cycles_cross(d, m, a, b) == cycles_cross(d, m, b, a));
            crossing_pairs += cycles_cross(d, m, a, b);
        }
    CHECK(crossing_pairs > 0);
    CHECK_FALSE(is_valid_family(d, m, {FamilyMode::Compatible, plain.family.cycles}));
}

TEST_CASE("anti-forcing sets must avoid the matching")
{
    const Graph c6 = cycle_graph(6);
    const auto m = enumerate_perfect_matchings(c6).front();
    const EdgeId s[] = {m.edge_ids()[0]};
    try {
        (void)is_antiforcing_set(c6, m, s);
        FAIL("expected IntersectsM");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::IntersectsM);
    }
}

TEST_CASE("feedback sets and dicycle packings on the contraction")
{
    for (int n = 1; n <= 5; ++n)
        for (const auto& h : enumerate_hex_systems(n)) {
            const Graph& g = h.graph();
            for (const auto& m : enumerate_perfect_matchings(g)) {
                const auto d = orient_and_contract(g, m);
                const auto fb = min_feedback_arc_set(d);
                const auto pack = max_arc_disjoint_dicycles(d);
                CHECK(fb.size() == pack.size());
                CHECK(static_cast<int>(fb.size()) == antiforcing_number(g, m).value);
            }
        }
}

TEST_CASE("smallest global anti-forcing set equals the minimum over matchings")
{
    for (int n = 1; n <= 4; ++n)
        for (const auto& h : enumerate_hex_systems(n)) {
            const Graph& g = h.graph();
            const auto pms = enumerate_perfect_matchings(g);
            if (pms.empty())
                continue;
            const int af = antiforcing_spectrum(g, pms).min;
            const auto direct = smallest_antiforcing_set(g, af);
            REQUIRE(direct);
            CHECK(static_cast<int>(direct->size()) == af);
            CHECK_FALSE(smallest_antiforcing_set(g, af - 1));
        }
}
