#include "pmforce/forcing.hpp"

#include "pmforce/error.hpp"
#include "pmforce/search.hpp"

#include <algorithm>
#include <iterator>
#include <string>
#include <utility>

namespace pmforce {

namespace {

std::vector<int> sorted_vertices(const AltCycle& c)
{
    std::vector<int> v = c.vertices;
    std::sort(v.begin(), v.end());
    return v;
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

void require_subset(const Matching& m, std::span<const EdgeId> s)
{
    for (EdgeId e : s)
        if (!m.contains(e))
            throw Error(ErrorKind::NotSubsetOfM, "edge " + std::to_string(e) + " is not in the matching");
}

} // namespace

Spectrum make_spectrum(std::vector<int> values)
{
    Spectrum s;
    s.values = std::move(values);
    if (!s.values.empty()) {
        s.min = *std::min_element(s.values.begin(), s.values.end());
        s.max = *std::max_element(s.values.begin(), s.values.end());
    }
    s.value_set = s.values;
    std::sort(s.value_set.begin(), s.value_set.end());
    s.value_set.erase(std::unique(s.value_set.begin(), s.value_set.end()), s.value_set.end());
    return s;
}

bool cycles_disjoint(const AltCycle& a, const AltCycle& b)
{
    const auto x = sorted_vertices(a);
    const auto y = sorted_vertices(b);
    std::vector<int> common;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(common));
    return common.empty();
}

bool cycles_compatible(const Graph& g, const Matching& m, const AltCycle& a, const AltCycle& b)
{
    std::vector<EdgeId> shared_edges;
    std::set_intersection(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(),
                          std::back_inserter(shared_edges));
    std::vector<Vertex> covered;
    for (EdgeId e : shared_edges) {
        if (!m.contains(e))
            return false;
        covered.push_back(g.edge(e).u);
        covered.push_back(g.edge(e).v);
    }
    std::sort(covered.begin(), covered.end());
    const auto x = sorted_vertices(a);
    const auto y = sorted_vertices(b);
    std::vector<Vertex> shared_vertices;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(shared_vertices));
    return std::includes(covered.begin(), covered.end(), shared_vertices.begin(), shared_vertices.end());
}

bool cycles_cross(const Graph& g, const Matching& m, const AltCycle& a, const AltCycle& b)
{
    auto in = [](const AltCycle& c, EdgeId e) { return std::binary_search(c.edges.begin(), c.edges.end(), e); };
    for (EdgeId e : a.edges) {
        if (!m.contains(e) || !in(b, e))
            continue;
        const Vertex x = g.edge(e).u;
        const Vertex y = g.edge(e).v;
        // Walk clockwise around the contracted edge: x's side, then y's side.
        std::vector<int> labels;
        for (auto [v, from] : {std::pair{x, y}, std::pair{y, x}})
            for (Vertex w : g.clockwise_after(v, from)) {
                const EdgeId f = *g.find_edge(v, w);
                const bool ia = in(a, f);
                const bool ib = in(b, f);
                if (ia && ib)
                    return false; // shared non-matching edge: touching, not crossing
                if (ia || ib)
                    labels.push_back(ia ? 0 : 1);
            }
        if (labels.size() == 4 && labels[0] != labels[1] && labels[1] != labels[2] && labels[2] != labels[3])
            return true;
    }
    return false;
}

bool is_valid_family(const Graph& g, const Matching& m, const CycleFamily& family)
{
    for (const AltCycle& c : family.cycles)
        if (!is_alternating_cycle(g, m, c))
            return false;
    for (std::size_t i = 0; i < family.cycles.size(); ++i)
        for (std::size_t j = i + 1; j < family.cycles.size(); ++j) {
            const AltCycle& a = family.cycles[i];
            const AltCycle& b = family.cycles[j];
            bool ok = false;
            switch (family.mode) {
            case FamilyMode::Disjoint: ok = cycles_disjoint(a, b); break;
            case FamilyMode::CompatiblePlain: ok = cycles_compatible(g, m, a, b); break;
            case FamilyMode::Compatible:
                ok = cycles_compatible(g, m, a, b) && !(g.rotation() && cycles_cross(g, m, a, b));
                break;
            }
            if (!ok || family.cycles[i] == family.cycles[j])
                return false;
        }
    return true;
}

bool is_forcing_set(const Graph& g, const Matching& m, std::span<const EdgeId> s, const Limits& limits)
{
    require_subset(m, s);
    const auto cycles = enumerate_alternating_cycles(g, m, limits);
    return std::all_of(cycles.begin(), cycles.end(), [&](const AltCycle& c) {
        return std::any_of(s.begin(), s.end(),
                           [&](EdgeId e) { return std::binary_search(c.edges.begin(), c.edges.end(), e); });
    });
}

bool is_forcing_set_by_uniqueness(const Graph& g, const Matching& m, std::span<const EdgeId> s)
{
    require_subset(m, s);
    require_perfect(g, m);
    // Fixing S deletes every other edge at its ends.
    std::vector<EdgeId> removed;
    for (EdgeId e : s)
        for (Vertex x : {g.edge(e).u, g.edge(e).v})
            for (const Incidence& inc : g.incident(x))
                if (std::find(s.begin(), s.end(), inc.edge) == s.end())
                    removed.push_back(inc.edge);
    std::sort(removed.begin(), removed.end());
    removed.erase(std::unique(removed.begin(), removed.end()), removed.end());
    const auto result = has_unique_perfect_matching(g, removed);
    return result.unique && result.matching == m;
}

EdgeSetOptimum forcing_number(const Graph& g, const Matching& m, const Limits& limits)
{
    const auto cycles = enumerate_alternating_cycles(g, m, limits);
    return forcing_number(m, cycles);
}

EdgeSetOptimum forcing_number(const Matching& m, std::span<const AltCycle> cycles)
{
    const auto sets = matching_parts(m, cycles);
    EdgeSetOptimum out;
    out.witness = min_hitting_set(sets);
    out.value = static_cast<int>(out.witness.size());
    return out;
}

CyclePacking max_disjoint_alternating_cycles(const Graph& g, const Matching& m, const Limits& limits)
{
    const auto cycles = enumerate_alternating_cycles(g, m, limits);
    return max_disjoint_alternating_cycles(cycles);
}

CyclePacking max_disjoint_alternating_cycles(std::span<const AltCycle> cycles)
{
    std::vector<std::vector<int>> vertex_sets;
    vertex_sets.reserve(cycles.size());
    for (const AltCycle& c : cycles)
        vertex_sets.push_back(sorted_vertices(c));
    const auto chosen = max_independent_family(overlap_conflicts(vertex_sets));
    CyclePacking out;
    out.value = static_cast<int>(chosen.size());
    out.family.mode = FamilyMode::Disjoint;
    for (int i : chosen)
        out.family.cycles.push_back(cycles[static_cast<std::size_t>(i)]);
    return out;
}

Spectrum forcing_spectrum(const Graph& g, const Limits& limits)
{
    const auto matchings = enumerate_perfect_matchings(g, limits);
    return forcing_spectrum(g, matchings, limits);
}

Spectrum forcing_spectrum(const Graph& g, std::span<const Matching> matchings, const Limits& limits)
{
    if (matchings.empty())
        throw Error(ErrorKind::NoPerfectMatching, "graph has no perfect matching");
    std::vector<int> values;
    values.reserve(matchings.size());
    for (const Matching& m : matchings)
        values.push_back(forcing_number(g, m, limits).value);
    return make_spectrum(std::move(values));
}

} // namespace pmforce
