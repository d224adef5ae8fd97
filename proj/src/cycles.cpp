#include "pmforce/cycles.hpp"

#include "pmforce/error.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <string>

namespace pmforce {

bool operator<(const AltCycle& a, const AltCycle& b)
{
    if (a.vertices.size() != b.vertices.size())
        return a.vertices.size() < b.vertices.size();
    return a.vertices < b.vertices;
}

namespace {

void throw_cycle_cap(const Limits& limits)
{
    throw Error(ErrorKind::LimitExceeded, "more than " + std::to_string(limits.max_cycles) + " cycles");
}

// Alternating paths s -> mate(s) -> ... where every vertex after s is larger
// than s; each cycle is met once, in the direction leaving s by its matching edge.
class AlternatingWalk {
public:
    AlternatingWalk(const Graph& g, const Matching& m, const Limits& limits)
        : g_(g), limits_(limits), mate_(mates(g, m)), mate_edge_(static_cast<std::size_t>(g.vertex_count()), -1),
          on_path_(static_cast<std::size_t>(g.vertex_count()), 0)
    {
        for (EdgeId e : m.edge_ids()) {
            mate_edge_[static_cast<std::size_t>(g.edge(e).u)] = e;
            mate_edge_[static_cast<std::size_t>(g.edge(e).v)] = e;
        }
    }

    std::vector<AltCycle> run()
    {
        for (Vertex s = 0; s < g_.vertex_count(); ++s) {
            start_ = s;
            const Vertex t = mate_[static_cast<std::size_t>(s)];
            if (t < s)
                continue;
            path_ = {s, t};
            edges_ = {mate_edge_[static_cast<std::size_t>(s)]};
            on_path_[static_cast<std::size_t>(s)] = on_path_[static_cast<std::size_t>(t)] = 1;
            extend();
            on_path_[static_cast<std::size_t>(s)] = on_path_[static_cast<std::size_t>(t)] = 0;
        }
        std::sort(found_.begin(), found_.end());
        return std::move(found_);
    }

private:
    void extend()
    {
        const Vertex x = path_.back();
        for (const Incidence& inc : g_.incident(x)) {
            if (inc.edge == mate_edge_[static_cast<std::size_t>(x)])
                continue;
            const Vertex y = inc.neighbor;
            if (y == start_) {
                record(inc.edge);
                continue;
            }
            if (y < start_ || on_path_[static_cast<std::size_t>(y)])
                continue;
            const Vertex z = mate_[static_cast<std::size_t>(y)];
            if (z < start_ || on_path_[static_cast<std::size_t>(z)])
                continue;
            path_.push_back(y);
            path_.push_back(z);
            edges_.push_back(inc.edge);
            edges_.push_back(mate_edge_[static_cast<std::size_t>(y)]);
            on_path_[static_cast<std::size_t>(y)] = on_path_[static_cast<std::size_t>(z)] = 1;
            extend();
            on_path_[static_cast<std::size_t>(y)] = on_path_[static_cast<std::size_t>(z)] = 0;
            edges_.resize(edges_.size() - 2);
            path_.resize(path_.size() - 2);
        }
    }

    void record(EdgeId closing)
    {
        if (found_.size() >= limits_.max_cycles)
            throw_cycle_cap(limits_);
        AltCycle c;
        c.vertices = path_;
        if (c.vertices.back() < c.vertices[1])
            std::reverse(c.vertices.begin() + 1, c.vertices.end());
        c.edges = edges_;
        c.edges.push_back(closing);
        std::sort(c.edges.begin(), c.edges.end());
        found_.push_back(std::move(c));
    }

    const Graph& g_;
    const Limits& limits_;
    std::vector<Vertex> mate_;
    std::vector<EdgeId> mate_edge_;
    std::vector<char> on_path_;
    Vertex start_ = 0;
    std::vector<Vertex> path_;
    std::vector<EdgeId> edges_;
    std::vector<AltCycle> found_;
};

} // namespace

std::vector<AltCycle> enumerate_alternating_cycles(const Graph& g, const Matching& m, const Limits& limits)
{
    require_perfect(g, m);
    return AlternatingWalk(g, m, limits).run();
}

bool is_alternating_cycle(const Graph& g, const Matching& m, const AltCycle& c)
{
    const std::size_t len = c.vertices.size();
    if (len < 4 || len % 2 != 0 || c.edges.size() != len)
        return false;
    std::vector<Vertex> sorted = c.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    std::vector<EdgeId> walked;
    bool first_in_m = false;
    for (std::size_t i = 0; i < len; ++i) {
        const auto e = g.find_edge(c.vertices[i], c.vertices[(i + 1) % len]);
        if (!e)
            return false;
        if (i == 0)
            first_in_m = m.contains(*e);
        if (m.contains(*e) != ((i % 2 == 0) == first_in_m))
            return false;
        walked.push_back(*e);
    }
    std::sort(walked.begin(), walked.end());
    return walked == c.edges;
}

std::vector<AltCycle> decompose_into_cycles(const Graph& g, std::span<const EdgeId> edges)
{
    std::vector<std::vector<std::pair<Vertex, EdgeId>>> adj(static_cast<std::size_t>(g.vertex_count()));
    for (EdgeId e : edges) {
        adj[static_cast<std::size_t>(g.edge(e).u)].emplace_back(g.edge(e).v, e);
        adj[static_cast<std::size_t>(g.edge(e).v)].emplace_back(g.edge(e).u, e);
    }
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<AltCycle> out;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (seen[static_cast<std::size_t>(s)] || adj[static_cast<std::size_t>(s)].empty())
            continue;
        if (adj[static_cast<std::size_t>(s)].size() != 2)
            throw std::invalid_argument("edge set is not a disjoint union of cycles");
        AltCycle c;
        Vertex prev = -1;
        Vertex cur = s;
        do {
            seen[static_cast<std::size_t>(cur)] = 1;
            c.vertices.push_back(cur);
            const auto& nb = adj[static_cast<std::size_t>(cur)];
            if (nb.size() != 2)
                throw std::invalid_argument("edge set is not a disjoint union of cycles");
            const auto& step = nb[0].first != prev ? nb[0] : nb[1];
            c.edges.push_back(step.second);
            prev = cur;
            cur = step.first;
        } while (cur != s);
        if (c.vertices.back() < c.vertices[1])
            std::reverse(c.vertices.begin() + 1, c.vertices.end());
        std::sort(c.edges.begin(), c.edges.end());
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<EdgeId> symmetric_difference(const Matching& a, const Matching& b)
{
    std::vector<EdgeId> out;
    std::set_symmetric_difference(a.edge_ids().begin(), a.edge_ids().end(), b.edge_ids().begin(),
                                  b.edge_ids().end(), std::back_inserter(out));
    return out;
}

ContractedDigraph orient_and_contract(const Graph& g, const Matching& m)
{
    if (!g.is_bipartite())
        throw Error(ErrorKind::NotBipartite, "orientation needs a 2-colored graph");
    require_perfect(g, m);

    ContractedDigraph d;
    d.node_count = static_cast<int>(m.size());
    d.node_edge.assign(m.edge_ids().begin(), m.edge_ids().end());
    std::vector<int> node_of(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int i = 0; i < d.node_count; ++i) {
        const Edge& e = g.edge(d.node_edge[static_cast<std::size_t>(i)]);
        node_of[static_cast<std::size_t>(e.u)] = node_of[static_cast<std::size_t>(e.v)] = i;
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (m.contains(e))
            continue;
        const Edge& edge = g.edge(e);
        const Vertex black = g.color(edge.u) == Color::Black ? edge.u : edge.v;
        const Vertex white = edge.other(black);
        d.arcs.push_back({node_of[static_cast<std::size_t>(black)], node_of[static_cast<std::size_t>(white)], e});
    }
    return d;
}

std::vector<std::vector<int>> enumerate_directed_cycles(const ContractedDigraph& d, const Limits& limits)
{
    std::vector<std::vector<int>> out_arcs(static_cast<std::size_t>(d.node_count));
    for (std::size_t a = 0; a < d.arcs.size(); ++a)
        out_arcs[static_cast<std::size_t>(d.arcs[a].from)].push_back(static_cast<int>(a));

    std::vector<std::vector<int>> cycles;
    std::vector<char> on_path(static_cast<std::size_t>(d.node_count), 0);
    std::vector<int> path;
    int start = 0;

    auto walk = [&](auto&& self, int node) -> void {
        for (int a : out_arcs[static_cast<std::size_t>(node)]) {
            const int to = d.arcs[static_cast<std::size_t>(a)].to;
            if (to == start) {
                if (cycles.size() >= limits.max_cycles)
                    throw_cycle_cap(limits);
                path.push_back(a);
                cycles.push_back(path);
                path.pop_back();
                continue;
            }
            if (to < start || on_path[static_cast<std::size_t>(to)])
                continue;
            on_path[static_cast<std::size_t>(to)] = 1;
            path.push_back(a);
            self(self, to);
            path.pop_back();
            on_path[static_cast<std::size_t>(to)] = 0;
        }
    };

    for (start = 0; start < d.node_count; ++start) {
        on_path[static_cast<std::size_t>(start)] = 1;
        walk(walk, start);
        on_path[static_cast<std::size_t>(start)] = 0;
    }
    return cycles;
}

} // namespace pmforce
