#include "pmforce/matching.hpp"

#include "pmforce/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

namespace pmforce {

namespace {

class PerfectMatchingSearch {
public:
    PerfectMatchingSearch(const Graph& g, std::span<const EdgeId> removed)
        : g_(g), removed_(static_cast<std::size_t>(g.edge_count()), 0),
          covered_(static_cast<std::size_t>(g.vertex_count()), 0)
    {
        for (EdgeId e : removed)
            removed_.at(static_cast<std::size_t>(e)) = 1;
    }

    // Calls visit(chosen) per perfect matching until it returns false.
    template <class Visit>
    void run(Visit&& visit)
    {
        if (g_.vertex_count() % 2 != 0)
            return;
        chosen_.clear();
        descend(0, visit);
    }

private:
    template <class Visit>
    bool descend(Vertex from, Visit& visit)
    {
        Vertex v = from;
        while (v < g_.vertex_count() && covered_[static_cast<std::size_t>(v)])
            ++v;
        if (v == g_.vertex_count())
            return visit(std::as_const(chosen_));

        covered_[static_cast<std::size_t>(v)] = 1;
        for (const Incidence& inc : g_.incident(v)) {
            if (removed_[static_cast<std::size_t>(inc.edge)] || covered_[static_cast<std::size_t>(inc.neighbor)])
                continue;
            covered_[static_cast<std::size_t>(inc.neighbor)] = 1;
            chosen_.push_back(inc.edge);
            const bool more = descend(v + 1, visit);
            chosen_.pop_back();
            covered_[static_cast<std::size_t>(inc.neighbor)] = 0;
            if (!more) {
                covered_[static_cast<std::size_t>(v)] = 0;
                return false;
            }
        }
        covered_[static_cast<std::size_t>(v)] = 0;
        return true;
    }

    const Graph& g_;
    std::vector<char> removed_;
    std::vector<char> covered_;
    std::vector<EdgeId> chosen_;
};

} // namespace

Matching::Matching(std::vector<EdgeId> edge_ids) : edges_(std::move(edge_ids))
{
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Matching::contains(EdgeId e) const noexcept
{
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool is_matching(const Graph& g, const Matching& m)
{
    std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
    for (EdgeId e : m.edge_ids()) {
        if (e < 0 || e >= g.edge_count())
            return false;
        const Edge& edge = g.edge(e);
        for (Vertex x : {edge.u, edge.v}) {
            if (used[static_cast<std::size_t>(x)])
                return false;
            used[static_cast<std::size_t>(x)] = 1;
        }
    }
    return true;
}

bool is_perfect(const Graph& g, const Matching& m)
{
    return is_matching(g, m) && 2 * static_cast<int>(m.size()) == g.vertex_count();
}

void require_perfect(const Graph& g, const Matching& m)
{
    if (!is_perfect(g, m))
        throw Error(ErrorKind::NotPerfect, "matching of size " + std::to_string(m.size())
                                               + " is not perfect on " + std::to_string(g.vertex_count())
                                               + " vertices");
}

std::vector<Vertex> mates(const Graph& g, const Matching& m)
{
    std::vector<Vertex> mate(static_cast<std::size_t>(g.vertex_count()), -1);
    for (EdgeId e : m.edge_ids()) {
        const Edge& edge = g.edge(e);
        mate[static_cast<std::size_t>(edge.u)] = edge.v;
        mate[static_cast<std::size_t>(edge.v)] = edge.u;
    }
    return mate;
}

std::vector<Matching> enumerate_perfect_matchings(const Graph& g, const Limits& limits)
{
    std::vector<Matching> out;
    PerfectMatchingSearch search(g, {});
    search.run([&](const std::vector<EdgeId>& chosen) {
        if (out.size() >= limits.max_matchings)
            throw Error(ErrorKind::LimitExceeded,
                        "more than " + std::to_string(limits.max_matchings) + " perfect matchings");
        out.emplace_back(chosen);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t count_perfect_matchings(const Graph& g, std::span<const EdgeId> removed, std::size_t cap)
{
    std::size_t count = 0;
    PerfectMatchingSearch search(g, removed);
    search.run([&](const std::vector<EdgeId>&) { return ++count <= cap; });
    return count;
}

UniqueMatchingResult has_unique_perfect_matching(const Graph& g)
{
    return has_unique_perfect_matching(g, {});
}

UniqueMatchingResult has_unique_perfect_matching(const Graph& g, std::span<const EdgeId> removed)
{
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<char> gone(static_cast<std::size_t>(g.edge_count()), 0);
    for (EdgeId e : removed)
        gone.at(static_cast<std::size_t>(e)) = 1;

    std::vector<int> degree(n, 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (gone[static_cast<std::size_t>(e)])
            continue;
        ++degree[static_cast<std::size_t>(g.edge(e).u)];
        ++degree[static_cast<std::size_t>(g.edge(e).v)];
    }

    std::vector<char> alive(n, 1);
    std::deque<Vertex> pendant;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (degree[static_cast<std::size_t>(v)] == 0)
            return {};
        if (degree[static_cast<std::size_t>(v)] == 1)
            pendant.push_back(v);
    }

    std::vector<EdgeId> forced;
    std::size_t remaining = n;
    // Removes a matched pair; false if some surviving vertex loses its last edge.
    auto take_pair = [&](Vertex a, Vertex b) -> bool {
        alive[static_cast<std::size_t>(a)] = alive[static_cast<std::size_t>(b)] = 0;
        remaining -= 2;
        for (Vertex x : {a, b}) {
            for (const Incidence& inc : g.incident(x)) {
                if (gone[static_cast<std::size_t>(inc.edge)])
                    continue;
                gone[static_cast<std::size_t>(inc.edge)] = 1;
                auto& d = degree[static_cast<std::size_t>(inc.neighbor)];
                --d;
                if (!alive[static_cast<std::size_t>(inc.neighbor)])
                    continue;
                if (d == 0)
                    return false;
                if (d == 1)
                    pendant.push_back(inc.neighbor);
            }
        }
        return true;
    };

    while (!pendant.empty()) {
        const Vertex v = pendant.front();
        pendant.pop_front();
        if (!alive[static_cast<std::size_t>(v)])
            continue;
        const Incidence* only = nullptr;
        for (const Incidence& inc : g.incident(v))
            if (!gone[static_cast<std::size_t>(inc.edge)])
                only = &inc;
        if (only == nullptr)
            return {};
        forced.push_back(only->edge);
        if (!take_pair(v, only->neighbor))
            return {};
    }

    if (remaining == 0)
        return {true, Matching(std::move(forced))};
    if (g.is_bipartite())
        return {};

    // Non-bipartite stall: the remainder may still have exactly one perfect matching.
    std::vector<EdgeId> excluded;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edge(e);
        if (gone[static_cast<std::size_t>(e)] || !alive[static_cast<std::size_t>(edge.u)]
            || !alive[static_cast<std::size_t>(edge.v)])
            excluded.push_back(e);
    }
    std::vector<Vertex> relabel(n, -1);
    std::vector<Vertex> original;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (alive[static_cast<std::size_t>(v)]) {
            relabel[static_cast<std::size_t>(v)] = static_cast<Vertex>(original.size());
            original.push_back(v);
        }
    std::vector<Edge> rest_edges;
    std::vector<EdgeId> rest_ids;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (std::binary_search(excluded.begin(), excluded.end(), e))
            continue;
        const Edge& edge = g.edge(e);
        rest_edges.push_back({relabel[static_cast<std::size_t>(edge.u)], relabel[static_cast<std::size_t>(edge.v)]});
        rest_ids.push_back(e);
    }
    const Graph rest(static_cast<int>(original.size()), std::move(rest_edges));
    std::optional<std::vector<EdgeId>> found;
    std::size_t count = 0;
    PerfectMatchingSearch search(rest, {});
    search.run([&](const std::vector<EdgeId>& chosen) {
        if (++count == 1) {
            found.emplace();
            for (EdgeId e : chosen)
                found->push_back(rest_ids[static_cast<std::size_t>(e)]);
        }
        return count < 2;
    });
    if (count != 1)
        return {};
    forced.insert(forced.end(), found->begin(), found->end());
    return {true, Matching(std::move(forced))};
}

std::vector<EdgeFixedness> edge_fixedness(const Graph& g, const Limits& limits)
{
    const auto matchings = enumerate_perfect_matchings(g, limits);
    return edge_fixedness(g, matchings);
}

std::vector<EdgeFixedness> edge_fixedness(const Graph& g, std::span<const Matching> matchings)
{
    if (matchings.empty())
        throw Error(ErrorKind::NoPerfectMatching, "graph has no perfect matching");
    std::vector<std::size_t> hits(static_cast<std::size_t>(g.edge_count()), 0);
    for (const Matching& m : matchings)
        for (EdgeId e : m.edge_ids())
            ++hits[static_cast<std::size_t>(e)];
    std::vector<EdgeFixedness> labels;
    labels.reserve(hits.size());
    for (std::size_t h : hits) {
        if (h == 0)
            labels.push_back(EdgeFixedness::FixedSingle);
        else if (h == matchings.size())
            labels.push_back(EdgeFixedness::FixedDouble);
        else
            labels.push_back(EdgeFixedness::Free);
    }
    return labels;
}

std::vector<NormalComponent> normal_components(const Graph& g, const Limits& limits)
{
    const auto matchings = enumerate_perfect_matchings(g, limits);
    return normal_components(g, matchings);
}

std::vector<NormalComponent> normal_components(const Graph& g, std::span<const Matching> matchings)
{
    const auto labels = edge_fixedness(g, matchings);
    const auto n = static_cast<std::size_t>(g.vertex_count());

    // union-find over free edges
    std::vector<Vertex> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    std::vector<char> touched(n, 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (labels[static_cast<std::size_t>(e)] != EdgeFixedness::Free)
            continue;
        const Edge& edge = g.edge(e);
        touched[static_cast<std::size_t>(edge.u)] = touched[static_cast<std::size_t>(edge.v)] = 1;
        const Vertex a = find(edge.u);
        const Vertex b = find(edge.v);
        if (a != b)
            parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }

    std::vector<int> slot(n, -1);
    std::vector<NormalComponent> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (!touched[static_cast<std::size_t>(v)])
            continue;
        const Vertex root = find(v);
        if (slot[static_cast<std::size_t>(root)] == -1) {
            slot[static_cast<std::size_t>(root)] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[static_cast<std::size_t>(slot[static_cast<std::size_t>(root)])].vertices.push_back(v);
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (labels[static_cast<std::size_t>(e)] == EdgeFixedness::Free)
            out[static_cast<std::size_t>(slot[static_cast<std::size_t>(find(g.edge(e).u))])].edges.push_back(e);

    for (NormalComponent& comp : out) {
        std::vector<Vertex> rank(n, -1);
        for (std::size_t i = 0; i < comp.vertices.size(); ++i)
            rank[static_cast<std::size_t>(comp.vertices[i])] = static_cast<Vertex>(i);
        std::vector<Edge> edges;
        for (EdgeId e : comp.edges)
            edges.push_back({rank[static_cast<std::size_t>(g.edge(e).u)], rank[static_cast<std::size_t>(g.edge(e).v)]});
        std::optional<std::vector<Color>> colors;
        if (g.bipartition()) {
            colors.emplace();
            for (Vertex v : comp.vertices)
                colors->push_back(g.color(v));
        }
        comp.graph = Graph(static_cast<int>(comp.vertices.size()), std::move(edges), std::move(colors));
    }
    return out;
}

} // namespace pmforce
