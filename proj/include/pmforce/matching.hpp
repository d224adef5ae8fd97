#pragma once

#include "pmforce/graph.hpp"

#include <compare>
#include <optional>
#include <span>
#include <vector>

namespace pmforce {

/// Edge subset of a parent graph, stored as sorted unique edge ids.
class Matching {
public:
    Matching() = default;
    explicit Matching(std::vector<EdgeId> edge_ids);

    [[nodiscard]] std::span<const EdgeId> edge_ids() const noexcept { return edges_; }
    [[nodiscard]] std::size_t size() const noexcept { return edges_.size(); }
    [[nodiscard]] bool contains(EdgeId e) const noexcept;

    friend bool operator==(const Matching&, const Matching&) = default;
    friend auto operator<=>(const Matching&, const Matching&) = default;

private:
    std::vector<EdgeId> edges_;
};

[[nodiscard]] bool is_matching(const Graph& g, const Matching& m);
[[nodiscard]] bool is_perfect(const Graph& g, const Matching& m);
/// Throws NotPerfect unless m is a perfect matching of g.
void require_perfect(const Graph& g, const Matching& m);

/// mate[v] = the vertex matched to v, or -1 if v is exposed.
std::vector<Vertex> mates(const Graph& g, const Matching& m);

/// Every perfect matching exactly once, sorted lexicographically by edge ids.
std::vector<Matching> enumerate_perfect_matchings(const Graph& g, const Limits& limits = {});

/// Counts perfect matchings avoiding `removed` edges, stopping once `cap` is
/// exceeded (the returned count is then cap + 1).
std::size_t count_perfect_matchings(const Graph& g, std::span<const EdgeId> removed, std::size_t cap);

struct UniqueMatchingResult {
    bool unique = false;
    std::optional<Matching> matching;
};

/// Pendant-edge elimination; a bipartite graph that stalls with minimum
/// degree two has zero or several perfect matchings. Non-bipartite stalls fall
/// back to enumeration capped at two.
UniqueMatchingResult has_unique_perfect_matching(const Graph& g);
/// Same test on g with the `removed` edges deleted.
UniqueMatchingResult has_unique_perfect_matching(const Graph& g, std::span<const EdgeId> removed);

enum class EdgeFixedness { FixedSingle, FixedDouble, Free };

std::vector<EdgeFixedness> edge_fixedness(const Graph& g, const Limits& limits = {});
std::vector<EdgeFixedness> edge_fixedness(const Graph& g, std::span<const Matching> matchings);

struct NormalComponent {
    std::vector<Vertex> vertices; // sorted, ids in the parent graph
    std::vector<EdgeId> edges;    // sorted, ids in the parent graph
    Graph graph;                  // free edges only, vertices relabelled by rank in `vertices`
};

/// Connected components of the subgraph formed by free edges.
std::vector<NormalComponent> normal_components(const Graph& g, const Limits& limits = {});
std::vector<NormalComponent> normal_components(const Graph& g, std::span<const Matching> matchings);

} // namespace pmforce
