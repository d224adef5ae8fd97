#include "pmforce/graph.hpp"

#include "pmforce/error.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <string>
#include <utility>

namespace pmforce {

namespace {

std::string edge_text(EdgeId id, const Edge& e)
{
    return "edge " + std::to_string(id) + " (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

} // namespace

Graph::Graph(int n, std::vector<Edge> edges, std::optional<std::vector<Color>> colors,
             std::optional<Rotation> rotation)
    : n_(n), edges_(std::move(edges)), colors_(std::move(colors)), rotation_(std::move(rotation))
{
    if (n_ < 0)
        throw Error(ErrorKind::VertexOutOfRange, "negative vertex count");

    std::set<std::pair<Vertex, Vertex>> seen;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        const auto id = static_cast<EdgeId>(i);
        if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_)
            throw Error(ErrorKind::VertexOutOfRange, edge_text(id, e));
        if (e.u == e.v)
            throw Error(ErrorKind::SelfLoop, edge_text(id, e));
        if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second)
            throw Error(ErrorKind::DuplicateEdge, edge_text(id, e));
    }

    if (colors_) {
        if (static_cast<int>(colors_->size()) != n_)
            throw Error(ErrorKind::BadColoring, "color count " + std::to_string(colors_->size())
                                                    + " != vertex count " + std::to_string(n_));
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            const Edge& e = edges_[i];
            if ((*colors_)[static_cast<std::size_t>(e.u)] == (*colors_)[static_cast<std::size_t>(e.v)])
                throw Error(ErrorKind::BadColoring, edge_text(static_cast<EdgeId>(i), e) + " joins equal colors");
        }
        bipartition_ = colors_;
    } else {
        bipartition_ = two_coloring(n_, edges_);
    }

    adjacency_.assign(static_cast<std::size_t>(n_), {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        adjacency_[static_cast<std::size_t>(e.u)].push_back({e.v, static_cast<EdgeId>(i)});
        adjacency_[static_cast<std::size_t>(e.v)].push_back({e.u, static_cast<EdgeId>(i)});
    }

    if (rotation_) {
        if (static_cast<int>(rotation_->size()) != n_)
            throw Error(ErrorKind::BadRotation, "rotation covers " + std::to_string(rotation_->size())
                                                    + " of " + std::to_string(n_) + " vertices");
        for (Vertex v = 0; v < n_; ++v) {
            std::vector<Vertex> listed = (*rotation_)[static_cast<std::size_t>(v)];
            std::vector<Vertex> actual;
            for (const Incidence& inc : adjacency_[static_cast<std::size_t>(v)])
                actual.push_back(inc.neighbor);
            std::sort(listed.begin(), listed.end());
            std::sort(actual.begin(), actual.end());
            if (listed != actual)
                throw Error(ErrorKind::BadRotation, "rotation at vertex " + std::to_string(v)
                                                        + " does not list exactly its neighbours");
        }
    }
}

std::vector<Vertex> Graph::clockwise_after(Vertex v, Vertex from) const
{
    if (!rotation_)
        throw Error(ErrorKind::BadRotation, "graph has no rotation system");
    const auto& order = (*rotation_).at(static_cast<std::size_t>(v));
    const auto it = std::find(order.begin(), order.end(), from);
    if (it == order.end())
        throw Error(ErrorKind::BadRotation, std::to_string(from) + " is not adjacent to " + std::to_string(v));
    std::vector<Vertex> out(it + 1, order.end());
    out.insert(out.end(), order.begin(), it);
    return out;
}

int Graph::max_degree() const noexcept
{
    std::size_t best = 0;
    for (const auto& adj : adjacency_)
        best = std::max(best, adj.size());
    return static_cast<int>(best);
}

std::optional<EdgeId> Graph::find_edge(Vertex a, Vertex b) const
{
    if (a < 0 || b < 0 || a >= n_ || b >= n_)
        return std::nullopt;
    for (const Incidence& inc : incident(a))
        if (inc.neighbor == b)
            return inc.edge;
    return std::nullopt;
}

Color Graph::color(Vertex v) const
{
    if (!bipartition_)
        throw Error(ErrorKind::NotBipartite, "graph has no 2-coloring");
    return bipartition_->at(static_cast<std::size_t>(v));
}

Graph build_graph(int n, std::vector<Edge> edges, std::optional<std::vector<Color>> colors,
                  std::optional<Rotation> rotation)
{
    return Graph(n, std::move(edges), std::move(colors), std::move(rotation));
}

Rotation rotation_from_coordinates(const Graph& g, std::span<const std::pair<double, double>> xy)
{
    Rotation rot(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto& order = rot[static_cast<std::size_t>(v)];
        for (const Incidence& inc : g.incident(v))
            order.push_back(inc.neighbor);
        const auto [x0, y0] = xy[static_cast<std::size_t>(v)];
        auto angle = [&](Vertex w) {
            const auto [x, y] = xy[static_cast<std::size_t>(w)];
            return std::atan2(y - y0, x - x0);
        };
        // clockwise = decreasing angle
        std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return angle(a) > angle(b); });
    }
    return rot;
}

std::optional<std::vector<Color>> two_coloring(int n, std::span<const Edge> edges)
{
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
    for (const Edge& e : edges) {
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    for (Vertex root = 0; root < n; ++root) {
        if (side[static_cast<std::size_t>(root)] != -1)
            continue;
        side[static_cast<std::size_t>(root)] = 0;
        std::queue<Vertex> queue;
        queue.push(root);
        while (!queue.empty()) {
            const Vertex x = queue.front();
            queue.pop();
            for (Vertex y : adj[static_cast<std::size_t>(x)]) {
                auto& sy = side[static_cast<std::size_t>(y)];
                if (sy == -1) {
                    sy = 1 - side[static_cast<std::size_t>(x)];
                    queue.push(y);
                } else if (sy == side[static_cast<std::size_t>(x)]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::vector<Color> colors;
    colors.reserve(side.size());
    for (int s : side)
        colors.push_back(s == 0 ? Color::White : Color::Black);
    return colors;
}

Graph edge_subgraph(const Graph& g, std::span<const EdgeId> keep)
{
    std::vector<Edge> edges;
    edges.reserve(keep.size());
    for (EdgeId e : keep)
        edges.push_back(g.edge(e));
    std::optional<Rotation> rotation;
    if (g.rotation()) {
        rotation.emplace(static_cast<std::size_t>(g.vertex_count()));
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            for (Vertex w : (*g.rotation())[static_cast<std::size_t>(v)]) {
                const auto e = g.find_edge(v, w);
                if (std::find(keep.begin(), keep.end(), *e) != keep.end())
                    (*rotation)[static_cast<std::size_t>(v)].push_back(w);
            }
    }
    return Graph(g.vertex_count(), std::move(edges), g.explicit_colors(), std::move(rotation));
}

} // namespace pmforce
