#pragma once

#include "pmforce/graph.hpp"
#include "pmforce/matching.hpp"

#include <compare>
#include <vector>

namespace pmforce {

/// Cycle alternating between matching and non-matching edges.
///
/// `vertices` is in canonical rotation: the smallest vertex first, then its
/// smaller cycle neighbour. `edges` holds the cycle's edge ids, sorted.
struct AltCycle {
    std::vector<Vertex> vertices;
    std::vector<EdgeId> edges;

    [[nodiscard]] std::size_t length() const noexcept { return vertices.size(); }

    friend bool operator==(const AltCycle&, const AltCycle&) = default;
};

/// Orders by (length, vertex sequence).
bool operator<(const AltCycle& a, const AltCycle& b);

/// All M-alternating cycles of g, canonical and sorted. Throws NotPerfect and
/// LimitExceeded (cycle cap).
std::vector<AltCycle> enumerate_alternating_cycles(const Graph& g, const Matching& m, const Limits& limits = {});

/// Edge-by-edge check that `c` is a cycle of g alternating with respect to m.
[[nodiscard]] bool is_alternating_cycle(const Graph& g, const Matching& m, const AltCycle& c);

/// Splits an edge set whose vertices all have degree 0 or 2 into cycles.
std::vector<AltCycle> decompose_into_cycles(const Graph& g, std::span<const EdgeId> edges);

/// Edge ids of the symmetric difference of two matchings, sorted.
std::vector<EdgeId> symmetric_difference(const Matching& a, const Matching& b);

struct Arc {
    int from = 0;
    int to = 0;
    EdgeId source = 0; // non-matching edge of the original graph
};

/// Digraph obtained by orienting matching edges white->black, other edges
/// black->white, then contracting every matching edge. Node i is the i-th
/// edge of the matching (in edge-id order).
struct ContractedDigraph {
    int node_count = 0;
    std::vector<EdgeId> node_edge;
    std::vector<Arc> arcs;
};

ContractedDigraph orient_and_contract(const Graph& g, const Matching& m);

/// Simple directed cycles as arc-index lists, parallel arcs giving distinct
/// cycles. Each list starts at the arc leaving the cycle's smallest node.
std::vector<std::vector<int>> enumerate_directed_cycles(const ContractedDigraph& d, const Limits& limits = {});

} // namespace pmforce
