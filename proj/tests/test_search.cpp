#include "pmforce/search.hpp"

#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>

using namespace pmforce;

namespace {

bool hits_all(const std::vector<std::vector<int>>& family, const std::vector<int>& s)
{
    return std::all_of(family.begin(), family.end(), [&](const std::vector<int>& set) {
        return std::any_of(set.begin(), set.end(), [&](int x) { return std::find(s.begin(), s.end(), x) != s.end(); });
    });
}

} // namespace

TEST_CASE("minimum hitting set matches exhaustive search")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const int universe = std::uniform_int_distribution<int>(1, 10)(rng);
        const int count = std::uniform_int_distribution<int>(0, 8)(rng);
        std::vector<std::vector<int>> family;
        for (int i = 0; i < count; ++i) {
            std::vector<int> set;
            for (int x = 0; x < universe; ++x)
                if (rng() % 3 == 0)
                    set.push_back(x);
            if (set.empty())
                set.push_back(static_cast<int>(rng() % universe));
            family.push_back(set);
        }
        const auto got = min_hitting_set(family);
        CHECK(hits_all(family, got));
        CHECK(std::is_sorted(got.begin(), got.end()));
        // First hitting subset in (size, lexicographic) order.
        std::vector<int> expected;
        bool found = false;
        for (int k = 0; k <= universe && !found; ++k) {
            std::vector<bool> pick(universe, false);
            std::fill(pick.begin(), pick.begin() + k, true);
            do {
                std::vector<int> s;
                for (int x = 0; x < universe; ++x)
                    if (pick[x])
                        s.push_back(x);
                if (hits_all(family, s)) {
                    expected = s;
                    found = true;
                    break;
                }
            } while (std::prev_permutation(pick.begin(), pick.end()));
        }
        CHECK(got == expected);
    }
}

TEST_CASE("maximum independent family matches exhaustive search")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = std::uniform_int_distribution<int>(0, 12)(rng);
        ConflictGraph g(n);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (rng() % 3 == 0)
                    g.add(a, b);
        int best = 0;
        for (std::uint32_t s = 0; s < (1u << n); ++s) {
            bool ok = true;
            for (int a = 0; a < n && ok; ++a)
                for (int b = a + 1; b < n && ok; ++b)
                    ok = !((s >> a & 1u) && (s >> b & 1u) && g.conflicts(a, b));
            if (ok)
                best = std::max(best, std::popcount(s));
        }
        const auto got = max_independent_family(g);
        CHECK(static_cast<int>(got.size()) == best);
        for (std::size_t i = 0; i < got.size(); ++i)
            for (std::size_t j = i + 1; j < got.size(); ++j)
                CHECK_FALSE(g.conflicts(got[i], got[j]));
    }
}

TEST_CASE("overlap conflicts")
{
    const std::vector<std::vector<int>> sets{{1, 2}, {2, 3}, {4}};
    const auto g = overlap_conflicts(sets);
    CHECK(g.conflicts(0, 1));
    CHECK_FALSE(g.conflicts(0, 2));
    CHECK(max_independent_family(g) == std::vector<int>{0, 2});
}

TEST_CASE("empty inputs")
{
    CHECK(min_hitting_set({}).empty());
    CHECK(max_independent_family(ConflictGraph(0)).empty());
    const std::vector<std::vector<int>> bad{{}};
    CHECK_THROWS_AS(min_hitting_set(bad), std::invalid_argument);
}
