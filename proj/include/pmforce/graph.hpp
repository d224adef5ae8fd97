#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace pmforce {

using Vertex = int;
using EdgeId = int;

enum class Color : std::uint8_t { White = 0, Black = 1 };

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    [[nodiscard]] Vertex other(Vertex w) const noexcept { return w == u ? v : u; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Clockwise neighbour order around every vertex of a plane embedding.
using Rotation = std::vector<std::vector<Vertex>>;

struct Incidence {
    Vertex neighbor;
    EdgeId edge;
};

// Caps on exponential enumerations. Exceeding one raises LimitExceeded.
struct Limits {
    std::size_t max_matchings = 1'000'000;
    std::size_t max_cycles = 1'000'000;
};

/// Simple undirected graph with edge ids assigned in input order.
///
/// Colors supplied at construction are validated as a proper 2-coloring and
/// kept verbatim (they round-trip through the text format). When none are
/// supplied, a bipartition is still computed if one exists, so bipartite-only
/// operations work on plain edge lists too.
///
/// An optional rotation system records a plane embedding supplied by the
/// caller (generators know theirs); it is checked for consistency with the
/// adjacency but planarity itself is not tested.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges, std::optional<std::vector<Color>> colors = std::nullopt,
          std::optional<Rotation> rotation = std::nullopt);

    [[nodiscard]] int vertex_count() const noexcept { return n_; }
    [[nodiscard]] int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    [[nodiscard]] const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
    [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }

    /// Incident edges of v, ordered by edge id.
    [[nodiscard]] std::span<const Incidence> incident(Vertex v) const
    {
        return adjacency_.at(static_cast<std::size_t>(v));
    }
    [[nodiscard]] int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }
    [[nodiscard]] int max_degree() const noexcept;
    [[nodiscard]] std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;

    [[nodiscard]] bool is_bipartite() const noexcept { return bipartition_.has_value(); }
    [[nodiscard]] const std::optional<std::vector<Color>>& explicit_colors() const noexcept { return colors_; }
    /// Explicit colors if given, otherwise the BFS 2-coloring; empty for non-bipartite graphs.
    [[nodiscard]] const std::optional<std::vector<Color>>& bipartition() const noexcept { return bipartition_; }
    [[nodiscard]] Color color(Vertex v) const;

    [[nodiscard]] const std::optional<Rotation>& rotation() const noexcept { return rotation_; }
    /// Neighbours of v clockwise, starting just after `from`. Needs a rotation system.
    [[nodiscard]] std::vector<Vertex> clockwise_after(Vertex v, Vertex from) const;

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.n_ == b.n_ && a.edges_ == b.edges_ && a.colors_ == b.colors_ && a.rotation_ == b.rotation_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::optional<std::vector<Color>> colors_;
    std::optional<std::vector<Color>> bipartition_;
    std::optional<Rotation> rotation_;
    std::vector<std::vector<Incidence>> adjacency_;
};

Graph build_graph(int n, std::vector<Edge> edges, std::optional<std::vector<Color>> colors = std::nullopt,
                  std::optional<Rotation> rotation = std::nullopt);

/// Rotation system of a straight-line drawing: neighbours sorted clockwise by angle.
Rotation rotation_from_coordinates(const Graph& g, std::span<const std::pair<double, double>> xy);

/// BFS 2-coloring; nullopt when an odd cycle exists.
std::optional<std::vector<Color>> two_coloring(int n, std::span<const Edge> edges);

/// Sub-graph keeping the listed edges (by id, in that order); vertices are kept.
Graph edge_subgraph(const Graph& g, std::span<const EdgeId> keep);

} // namespace pmforce
