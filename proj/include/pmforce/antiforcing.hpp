#pragma once

#include "pmforce/cycles.hpp"
#include "pmforce/forcing.hpp"

#include <optional>
#include <span>
#include <vector>

namespace pmforce {

/// S must avoid m (IntersectsM). True iff S meets every m-alternating cycle.
[[nodiscard]] bool is_antiforcing_set(const Graph& g, const Matching& m, std::span<const EdgeId> s,
                                      const Limits& limits = {});
/// Independent route: g - S has m as its unique perfect matching.
[[nodiscard]] bool is_antiforcing_set_by_uniqueness(const Graph& g, const Matching& m, std::span<const EdgeId> s);

EdgeSetOptimum antiforcing_number(const Graph& g, const Matching& m, const Limits& limits = {});
EdgeSetOptimum antiforcing_number(const Matching& m, std::span<const AltCycle> cycles);

enum class Crossings {
    ForbidIfEmbedded, // crossing pairs conflict whenever g has a rotation system
    Allow,
};

/// Largest set of m-alternating cycles pairwise sharing no edge outside m
/// (for alternating cycles that is all of `cycles_compatible`: a shared vertex
/// always brings its matched edge along), and by default pairwise non-crossing.
CyclePacking max_compatible_alternating_set(const Graph& g, const Matching& m, const Limits& limits = {},
                                            Crossings crossings = Crossings::ForbidIfEmbedded);
CyclePacking max_compatible_alternating_set(const Graph& g, const Matching& m, std::span<const AltCycle> cycles,
                                            Crossings crossings = Crossings::ForbidIfEmbedded);

Spectrum antiforcing_spectrum(const Graph& g, const Limits& limits = {});
Spectrum antiforcing_spectrum(const Graph& g, std::span<const Matching> matchings, const Limits& limits = {});

/// Edges e such that g - e has exactly one perfect matching.
std::vector<EdgeId> anti_forcing_edges(const Graph& g);

/// Minimum arc set meeting every directed cycle (arc indices, lexicographically least).
std::vector<int> min_feedback_arc_set(const ContractedDigraph& d, const Limits& limits = {});
/// Largest family of pairwise arc-disjoint directed cycles (arc-index lists).
std::vector<std::vector<int>> max_arc_disjoint_dicycles(const ContractedDigraph& d, const Limits& limits = {});

/// Smallest edge set S (any edges) with g - S having a unique perfect matching,
/// by exhaustive search over sizes 0..max_size; nullopt if none that small.
std::optional<std::vector<EdgeId>> smallest_antiforcing_set(const Graph& g, int max_size);

} // namespace pmforce
