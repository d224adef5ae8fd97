#include "oracles.hpp"

#include "pmforce/antiforcing.hpp"
#include "pmforce/error.hpp"
#include "pmforce/forcing.hpp"
#include "pmforce/generators.hpp"

#include <doctest.h>

using namespace pmforce;

namespace {

ErrorKind kind_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::ParseError;
}

} // namespace

TEST_CASE("polyhex counts agree with an independent recount")
{
    // Frozen from the Redelmeier oracle below.
    const long long fixed[] = {1, 3, 11, 44, 186, 814};
    const long long hole_free[] = {1, 3, 11, 44, 186, 813};
    for (int n = 1; n <= 6; ++n) {
        const auto counts = oracle::redelmeier(n);
        CHECK(counts.fixed == fixed[n - 1]);
        CHECK(counts.hole_free == hole_free[n - 1]);
        CHECK(static_cast<long long>(enumerate_fixed_polyhexes(n).size()) == counts.fixed);
        CHECK(static_cast<long long>(enumerate_hex_systems(n).size()) == counts.hole_free);
    }
}

TEST_CASE("polyhex corpus is deterministic and normalized")
{
    const auto a = enumerate_fixed_polyhexes(5);
    const auto b = enumerate_fixed_polyhexes(5);
    CHECK(a == b);
    CHECK(std::is_sorted(a.begin(), a.end()));
    for (const auto& cells : a)
        CHECK(normalize_cells(cells) == cells);
}

TEST_CASE("corpus size guard")
{
    CHECK(kind_of([] { (void)enumerate_hex_systems(7); }) == ErrorKind::TooLarge);
    CHECK(enumerate_hex_systems(7, 7).size() == 3640);
}

TEST_CASE("truncated parallelogram layout")
{
    const auto cells = truncated_parallelogram_cells(std::vector<int>{5, 5, 3, 2});
    CHECK(cells.size() == 15);
    CHECK(std::count_if(cells.begin(), cells.end(), [](Cell c) { return c.r == 2; }) == 3);
    for (Cell c : cells)
        if (c.r == 3)
            CHECK(c.q >= 3);
    CHECK(kind_of([] { (void)truncated_parallelogram_cells(std::vector<int>{2, 3}); }) == ErrorKind::BadRowSequence);
    CHECK(kind_of([] { (void)truncated_parallelogram_cells(std::vector<int>{}); }) == ErrorKind::BadRowSequence);
    CHECK(kind_of([] { (void)truncated_parallelogram_cells(std::vector<int>{2, 0}); }) == ErrorKind::BadRowSequence);
}

TEST_CASE("named instances")
{
    CHECK(std::get<HexSystem>(gen_named("triphenylene")).cell_count() == 4);
    CHECK(std::get<Graph>(gen_named("C6")).edge_count() == 6);
    CHECK(std::get<Graph>(gen_named("c4")).vertex_count() == 4);
    CHECK(kind_of([] { (void)gen_named("naphthacene"); }) == ErrorKind::UnknownName);
    for (const auto& name : named_instances())
        CHECK_NOTHROW((void)gen_named(name));
}

TEST_CASE("glued presets have anti-forcing number two")
{
    const auto presets = glue_presets();
    REQUIRE(presets.size() == 4);
    int forcing_one = 0;
    for (const auto& spec : presets) {
        const auto glued = glue_af2(spec);
        const Graph& g = glued.system.graph();
        const auto pms = enumerate_perfect_matchings(g);
        CHECK(antiforcing_spectrum(g, pms).min == 2);
        CHECK_FALSE(is_truncated_parallelogram(glued.system));
        CHECK(glued.fused_path.size() % 2 == 1);
        for (auto f : edge_fixedness(g, pms))
            CHECK(f == EdgeFixedness::Free);
        forcing_one += forcing_spectrum(g, pms).min == 1;
    }
    CHECK(forcing_one >= 1);
}

TEST_CASE("invalid glues")
{
    // Two single hexagons meeting along two edges: even fused path.
    CHECK(kind_of([] { (void)glue_af2({"even", {2}, {2}, 1, {-1, 0}}); }) == ErrorKind::InvalidGlue);
    // Overlapping parts.
    CHECK(kind_of([] { (void)glue_af2({"overlap", {2}, {2}, 0, {0, 0}}); }) == ErrorKind::InvalidGlue);
    // Parts that do not touch.
    CHECK(kind_of([] { (void)glue_af2({"apart", {1}, {1}, 0, {5, 5}}); }) == ErrorKind::InvalidGlue);
}

TEST_CASE("a glue that yields a truncated parallelogram is built")
{
    // Two single hexagons side by side make a two-cell chain with af = 1.
    const auto glued = glue_af2({"chain", {1}, {1}, 0, {1, 0}});
    CHECK(is_truncated_parallelogram(glued.system));
    CHECK(antiforcing_spectrum(glued.system.graph()).min == 1);
}
