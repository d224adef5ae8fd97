#include "pmforce/antiforcing.hpp"

#include "pmforce/error.hpp"
#include "pmforce/search.hpp"

#include <algorithm>
#include <iterator>
#include <string>

namespace pmforce {

namespace {

std::vector<std::vector<int>> non_matching_parts(const Matching& m, std::span<const AltCycle> cycles)
{
    std::vector<std::vector<int>> sets;
    sets.reserve(cycles.size());
    for (const AltCycle& c : cycles) {
        auto& s = sets.emplace_back();
        std::copy_if(c.edges.begin(), c.edges.end(), std::back_inserter(s), [&](EdgeId e) { return !m.contains(e); });
    }
    return sets;
}

std::vector<std::vector<int>> matching_parts(const Matching& m, std::span<const AltCycle> cycles)
{
    std::vector<std::vector<int>> sets;
    sets.reserve(cycles.size());
    for (const AltCycle& c : cycles) {
        auto& s = sets.emplace_back();
        std::copy_if(c.edges.begin(), c.edges.end(), std::back_inserter(s), [&](EdgeId e) { return m.contains(e); });
    }
    return sets;
}

bool intersects(const std::vector<int>& a, const std::vector<int>& b)
{
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j)
            return true;
        if (*i < *j)
            ++i;
        else
            ++j;
    }
    return false;
}

void require_disjoint(const Matching& m, std::span<const EdgeId> s)
{
    for (EdgeId e : s)
        if (m.contains(e))
            throw Error(ErrorKind::IntersectsM, "edge " + std::to_string(e) + " belongs to the matching");
}

std::vector<std::vector<int>> sorted_arc_sets(std::span<const std::vector<int>> cycles)
{
    std::vector<std::vector<int>> sets(cycles.begin(), cycles.end());
    for (auto& s : sets)
        std::sort(s.begin(), s.end());
    return sets;
}

bool next_combination(std::vector<EdgeId>& pick, int universe)
{
    const int k = static_cast<int>(pick.size());
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == universe - k + i)
        --i;
    if (i < 0)
        return false;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
        pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    return true;
}

} // namespace

bool is_antiforcing_set(const Graph& g, const Matching& m, std::span<const EdgeId> s, const Limits& limits)
{
    require_disjoint(m, s);
    const auto cycles = enumerate_alternating_cycles(g, m, limits);
    return std::all_of(cycles.begin(), cycles.end(), [&](const AltCycle& c) {
        return std::any_of(s.begin(), s.end(),
                           [&](EdgeId e) { return std::binary_search(c.edges.begin(), c.edges.end(), e); });
    });
}

bool is_antiforcing_set_by_uniqueness(const Graph& g, const Matching& m, std::span<const EdgeId> s)
{
    require_disjoint(m, s);
    require_perfect(g, m);
    const auto result = has_unique_perfect_matching(g, s);
    return result.unique && result.matching == m;
}

EdgeSetOptimum antiforcing_number(const Graph& g, const Matching& m, const Limits& limits)
{
    const auto cycles = enumerate_alternating_cycles(g, m, limits);
    return antiforcing_number(m, cycles);
}

EdgeSetOptimum antiforcing_number(const Matching& m, std::span<const AltCycle> cycles)
{
    const auto sets = non_matching_parts(m, cycles);
    EdgeSetOptimum out;
    out.witness = min_hitting_set(sets);
    out.value = static_cast<int>(out.witness.size());
    return out;
}

CyclePacking max_compatible_alternating_set(const Graph& g, const Matching& m, const Limits& limits,
                                            Crossings crossings)
{
    const auto cycles = enumerate_alternating_cycles(g, m, limits);
    return max_compatible_alternating_set(g, m, cycles, crossings);
}

CyclePacking max_compatible_alternating_set(const Graph& g, const Matching& m, std::span<const AltCycle> cycles,
                                            Crossings crossings)
{
    const auto parts = non_matching_parts(m, cycles);
    ConflictGraph conflicts = overlap_conflicts(parts);
    const bool check_crossings = crossings == Crossings::ForbidIfEmbedded && g.rotation().has_value();
    if (check_crossings) {
        const auto mparts = matching_parts(m, cycles);
        for (std::size_t i = 0; i < cycles.size(); ++i)
            for (std::size_t j = i + 1; j < cycles.size(); ++j) {
                if (conflicts.conflicts(static_cast<int>(i), static_cast<int>(j)))
                    continue;
                if (!intersects(mparts[i], mparts[j]))
                    continue;
                if (cycles_cross(g, m, cycles[i], cycles[j]))
                    conflicts.add(static_cast<int>(i), static_cast<int>(j));
            }
    }
    const auto chosen = max_independent_family(conflicts);
    CyclePacking out;
    out.value = static_cast<int>(chosen.size());
    out.family.mode = check_crossings ? FamilyMode::Compatible : FamilyMode::CompatiblePlain;
    for (int i : chosen)
        out.family.cycles.push_back(cycles[static_cast<std::size_t>(i)]);
    return out;
}

Spectrum antiforcing_spectrum(const Graph& g, const Limits& limits)
{
    const auto matchings = enumerate_perfect_matchings(g, limits);
    return antiforcing_spectrum(g, matchings, limits);
}

Spectrum antiforcing_spectrum(const Graph& g, std::span<const Matching> matchings, const Limits& limits)
{
    if (matchings.empty())
        throw Error(ErrorKind::NoPerfectMatching, "graph has no perfect matching");
    std::vector<int> values;
    values.reserve(matchings.size());
    for (const Matching& m : matchings)
        values.push_back(antiforcing_number(g, m, limits).value);
    return make_spectrum(std::move(values));
}

std::vector<EdgeId> anti_forcing_edges(const Graph& g)
{
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const EdgeId removed[] = {e};
        if (has_unique_perfect_matching(g, removed).unique)
            out.push_back(e);
    }
    return out;
}

std::vector<int> min_feedback_arc_set(const ContractedDigraph& d, const Limits& limits)
{
    const auto cycles = enumerate_directed_cycles(d, limits);
    return min_hitting_set(sorted_arc_sets(cycles));
}

std::vector<std::vector<int>> max_arc_disjoint_dicycles(const ContractedDigraph& d, const Limits& limits)
{
    const auto cycles = enumerate_directed_cycles(d, limits);
    const auto chosen = max_independent_family(overlap_conflicts(sorted_arc_sets(cycles)));
    std::vector<std::vector<int>> out;
    for (int i : chosen)
        out.push_back(cycles[static_cast<std::size_t>(i)]);
    return out;
}

std::optional<std::vector<EdgeId>> smallest_antiforcing_set(const Graph& g, int max_size)
{
    const int m = g.edge_count();
    for (int k = 0; k <= std::min(max_size, m); ++k) {
        std::vector<EdgeId> pick(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
            pick[static_cast<std::size_t>(i)] = i;
        do {
            if (has_unique_perfect_matching(g, pick).unique)
                return pick;
        } while (next_combination(pick, m));
    }
    return std::nullopt;
}

} // namespace pmforce
