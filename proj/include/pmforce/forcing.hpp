#pragma once

#include "pmforce/cycles.hpp"
#include "pmforce/graph.hpp"
#include "pmforce/matching.hpp"

#include <span>
#include <vector>

namespace pmforce {

enum class FamilyMode {
    Disjoint,        // pairwise vertex-disjoint
    Compatible,      // no shared edge outside the matching; no crossing when the graph is embedded
    CompatiblePlain, // no shared edge outside the matching
};

struct CycleFamily {
    FamilyMode mode = FamilyMode::Disjoint;
    std::vector<AltCycle> cycles;
};

/// Optimal value with the lexicographically least optimal edge set.
struct EdgeSetOptimum {
    int value = 0;
    std::vector<EdgeId> witness;
};

struct CyclePacking {
    int value = 0;
    CycleFamily family;
};

/// Per-matching values in canonical matching order, with summary statistics.
struct Spectrum {
    std::vector<int> values;
    int min = 0;
    int max = 0;
    std::vector<int> value_set;
};

Spectrum make_spectrum(std::vector<int> values);

[[nodiscard]] bool cycles_disjoint(const AltCycle& a, const AltCycle& b);
/// Every shared edge lies in m and every shared vertex is an end of a shared m-edge.
[[nodiscard]] bool cycles_compatible(const Graph& g, const Matching& m, const AltCycle& a, const AltCycle& b);
/// Two cycles cross if they share an m-edge e and, around e in the embedding,
/// the four cycle edges at the ends of e alternate between a and b.
/// Needs a rotation system (BadRotation otherwise).
[[nodiscard]] bool cycles_cross(const Graph& g, const Matching& m, const AltCycle& a, const AltCycle& b);
/// Each member alternates and members satisfy the family's pairwise predicate.
[[nodiscard]] bool is_valid_family(const Graph& g, const Matching& m, const CycleFamily& family);

/// S must be a subset of m (NotSubsetOfM). True iff S meets every m-alternating cycle.
[[nodiscard]] bool is_forcing_set(const Graph& g, const Matching& m, std::span<const EdgeId> s,
                                  const Limits& limits = {});
/// Independent route: m is the only perfect matching containing S.
[[nodiscard]] bool is_forcing_set_by_uniqueness(const Graph& g, const Matching& m, std::span<const EdgeId> s);

EdgeSetOptimum forcing_number(const Graph& g, const Matching& m, const Limits& limits = {});
EdgeSetOptimum forcing_number(const Matching& m, std::span<const AltCycle> cycles);

CyclePacking max_disjoint_alternating_cycles(const Graph& g, const Matching& m, const Limits& limits = {});
CyclePacking max_disjoint_alternating_cycles(std::span<const AltCycle> cycles);

Spectrum forcing_spectrum(const Graph& g, const Limits& limits = {});
Spectrum forcing_spectrum(const Graph& g, std::span<const Matching> matchings, const Limits& limits = {});

} // namespace pmforce
