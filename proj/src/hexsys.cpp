#include "pmforce/hexsys.hpp"

#include "pmforce/error.hpp"
#include "pmforce/search.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <queue>
#include <string>

namespace pmforce {

namespace {

constexpr std::array<LatticePoint, 6> kCorner{{{1, 1}, {0, 2}, {-1, 1}, {-1, -1}, {0, -2}, {1, -1}}};

Cell operator+(Cell a, Cell b) { return {a.q + b.q, a.r + b.r}; }

std::string cell_text(Cell c) { return "(" + std::to_string(c.q) + "," + std::to_string(c.r) + ")"; }

std::vector<std::vector<int>> tree_children(int n, std::span<const std::pair<int, int>> edges,
                                            std::vector<int>& order)
{
    if (n <= 0 || static_cast<int>(edges.size()) != n - 1)
        throw Error(ErrorKind::NotATree, std::to_string(n) + " nodes with " + std::to_string(edges.size()) + " edges");
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n || a == b)
            throw Error(ErrorKind::NotATree, "bad edge");
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    std::vector<std::vector<int>> children(static_cast<std::size_t>(n));
    std::vector<int> parent(static_cast<std::size_t>(n), -2);
    parent[0] = -1;
    order.clear();
    order.push_back(0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        const int v = order[i];
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (w == parent[static_cast<std::size_t>(v)])
                continue;
            if (parent[static_cast<std::size_t>(w)] != -2)
                throw Error(ErrorKind::NotATree, "cycle through node " + std::to_string(w));
            parent[static_cast<std::size_t>(w)] = v;
            children[static_cast<std::size_t>(v)].push_back(w);
            order.push_back(w);
        }
    }
    if (static_cast<int>(order.size()) != n)
        throw Error(ErrorKind::NotATree, "disconnected");
    return children;
}

} // namespace

LatticePoint cell_corner(Cell c, int i)
{
    return {2 * c.q + c.r + kCorner[static_cast<std::size_t>(i)].x, 3 * c.r + kCorner[static_cast<std::size_t>(i)].y};
}

std::optional<int> HexSystem::cell_index(Cell c) const
{
    const auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
    if (it == cells_.end() || *it != c)
        return std::nullopt;
    return static_cast<int>(it - cells_.begin());
}

std::vector<EdgeId> HexSystem::boundary_edges() const
{
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < graph_.edge_count(); ++e)
        if (is_boundary(e))
            out.push_back(e);
    return out;
}

HexSystem build_hex_system(std::vector<Cell> cells)
{
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    if (cells.empty())
        throw Error(ErrorKind::Disconnected, "empty cell set");

    std::vector<char> reached(cells.size(), 0);
    std::queue<std::size_t> queue;
    queue.push(0);
    reached[0] = 1;
    std::size_t count = 1;
    while (!queue.empty()) {
        const Cell c = cells[queue.front()];
        queue.pop();
        for (Cell d : kSideNeighbor) {
            const auto it = std::lower_bound(cells.begin(), cells.end(), c + d);
            if (it == cells.end() || *it != c + d)
                continue;
            const auto j = static_cast<std::size_t>(it - cells.begin());
            if (!reached[j]) {
                reached[j] = 1;
                ++count;
                queue.push(j);
            }
        }
    }
    if (count != cells.size()) {
        const auto stray = static_cast<std::size_t>(std::find(reached.begin(), reached.end(), 0) - reached.begin());
        throw Error(ErrorKind::Disconnected, "cell " + cell_text(cells[stray]) + " is not connected to "
                                                 + cell_text(cells[0]));
    }

    std::map<LatticePoint, Vertex> ids;
    for (Cell c : cells)
        for (int i = 0; i < 6; ++i)
            ids.emplace(cell_corner(c, i), 0);
    HexSystem h;
    for (auto& [point, id] : ids) {
        id = static_cast<Vertex>(h.points_.size());
        h.points_.push_back(point);
    }

    std::map<std::pair<Vertex, Vertex>, std::vector<std::pair<int, int>>> sides; // edge -> (cell, side)
    h.faces_.resize(cells.size());
    for (std::size_t k = 0; k < cells.size(); ++k) {
        for (int i = 0; i < 6; ++i)
            h.faces_[k][static_cast<std::size_t>(i)] = ids.at(cell_corner(cells[k], i));
        for (int i = 0; i < 6; ++i) {
            const Vertex a = h.faces_[k][static_cast<std::size_t>(i)];
            const Vertex b = h.faces_[k][static_cast<std::size_t>((i + 1) % 6)];
            sides[{std::min(a, b), std::max(a, b)}].emplace_back(static_cast<int>(k), i);
        }
    }

    std::vector<Edge> edges;
    h.face_edges_.resize(cells.size());
    for (const auto& [ends, owners] : sides) {
        const auto id = static_cast<EdgeId>(edges.size());
        edges.push_back({ends.first, ends.second});
        std::array<int, 2> cellpair{owners[0].first, owners.size() > 1 ? owners[1].first : -1};
        h.edge_cells_.push_back(cellpair);
        for (auto [k, i] : owners)
            h.face_edges_[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] = id;
    }

    const auto vertices = static_cast<int>(h.points_.size());
    const auto bounded_faces = static_cast<int>(edges.size()) - vertices + 1;
    if (bounded_faces != static_cast<int>(cells.size()))
        throw Error(ErrorKind::HasHole, std::to_string(bounded_faces - static_cast<int>(cells.size()))
                                            + " bounded face(s) are not cells");

    std::vector<Color> colors;
    colors.reserve(h.points_.size());
    for (const LatticePoint& p : h.points_)
        colors.push_back(((p.y % 3) + 3) % 3 == 2 ? Color::Black : Color::White);

    // Lattice (x, y) maps to the plane as (x*sqrt(3)/2, y/2).
    std::vector<std::pair<double, double>> xy;
    xy.reserve(h.points_.size());
    for (const LatticePoint& p : h.points_)
        xy.emplace_back(p.x * std::sqrt(3.0) / 2.0, p.y / 2.0);
    const Graph plain(vertices, edges, colors);
    auto rotation = rotation_from_coordinates(plain, xy);

    h.cells_ = std::move(cells);
    h.graph_ = Graph(vertices, std::move(edges), std::move(colors), std::move(rotation));
    return h;
}

std::vector<int> alternating_hexagons(const HexSystem& h, const Matching& m)
{
    std::vector<int> out;
    for (int k = 0; k < h.cell_count(); ++k) {
        const auto& f = h.face_edges(k);
        const bool even = m.contains(f[0]) && m.contains(f[2]) && m.contains(f[4]);
        const bool odd = m.contains(f[1]) && m.contains(f[3]) && m.contains(f[5]);
        if (even || odd)
            out.push_back(k);
    }
    return out;
}

namespace {

// Alternating hexagons that share a vertex necessarily share an edge.
std::vector<int> max_disjoint_hexagons(const HexSystem& h, std::span<const int> hexes)
{
    ConflictGraph conflicts(static_cast<int>(hexes.size()));
    for (std::size_t a = 0; a < hexes.size(); ++a)
        for (std::size_t b = a + 1; b < hexes.size(); ++b) {
            const auto& fa = h.face_vertices(hexes[a]);
            const auto& fb = h.face_vertices(hexes[b]);
            if (std::any_of(fa.begin(), fa.end(), [&](Vertex v) { return std::find(fb.begin(), fb.end(), v) != fb.end(); }))
                conflicts.add(static_cast<int>(a), static_cast<int>(b));
        }
    std::vector<int> out;
    for (int i : max_independent_family(conflicts))
        out.push_back(hexes[static_cast<std::size_t>(i)]);
    return out;
}

} // namespace

ClarResult clar_number(const HexSystem& h, const Limits& limits)
{
    const auto matchings = enumerate_perfect_matchings(h.graph(), limits);
    return clar_number(h, matchings);
}

ClarResult clar_number(const HexSystem& h, std::span<const Matching> matchings)
{
    if (matchings.empty())
        throw Error(ErrorKind::NoPerfectMatching, "hexagonal system has no perfect matching");
    ClarResult best;
    best.value = -1;
    for (const Matching& m : matchings) {
        const auto hexes = alternating_hexagons(h, m);
        if (static_cast<int>(hexes.size()) <= best.value)
            continue;
        auto chosen = max_disjoint_hexagons(h, hexes);
        if (static_cast<int>(chosen.size()) > best.value) {
            best.value = static_cast<int>(chosen.size());
            best.matching = m;
            best.hexagons = std::move(chosen);
        }
    }
    return best;
}

FriesResult fries_numbers(const HexSystem& h, const Limits& limits)
{
    const auto matchings = enumerate_perfect_matchings(h.graph(), limits);
    return fries_numbers(h, matchings);
}

FriesResult fries_numbers(const HexSystem& h, std::span<const Matching> matchings)
{
    if (matchings.empty())
        throw Error(ErrorKind::NoPerfectMatching, "hexagonal system has no perfect matching");
    FriesResult out;
    out.fries_max = -1;
    out.fries_min = std::numeric_limits<int>::max();
    for (const Matching& m : matchings) {
        auto hexes = alternating_hexagons(h, m);
        const auto count = static_cast<int>(hexes.size());
        if (count > out.fries_max) {
            out.fries_max = count;
            out.max_matching = m;
            out.max_hexagons = hexes;
        }
        if (count < out.fries_min) {
            out.fries_min = count;
            out.min_matching = m;
            out.min_hexagons = std::move(hexes);
        }
    }
    return out;
}

InnerDual inner_dual(const HexSystem& h)
{
    InnerDual d;
    d.cells.assign(h.cells().begin(), h.cells().end());
    d.adjacency.resize(d.cells.size());
    for (int k = 0; k < h.cell_count(); ++k)
        for (Cell off : kSideNeighbor) {
            const auto j = h.cell_index(d.cells[static_cast<std::size_t>(k)] + off);
            if (j && *j > k) {
                d.edges.emplace_back(k, *j);
                d.adjacency[static_cast<std::size_t>(k)].push_back(*j);
                d.adjacency[static_cast<std::size_t>(*j)].push_back(k);
            }
        }
    // cells are connected, so a tree is exactly n - 1 edges
    d.is_tree = static_cast<int>(d.edges.size()) == d.node_count() - 1;
    return d;
}

bool is_all_kink_catahex(const HexSystem& h)
{
    if (!inner_dual(h).is_tree)
        return false;
    for (Cell c : h.cells())
        for (int i = 0; i < 3; ++i)
            if (h.cell_index(c + kSideNeighbor[static_cast<std::size_t>(i)])
                && h.cell_index(c + kSideNeighbor[static_cast<std::size_t>(i + 3)]))
                return false;
    return true;
}

HexLabels hex_labels(const HexSystem& h, const std::optional<Matching>& m)
{
    HexLabels out;
    for (int k = 0; k < h.cell_count(); ++k) {
        int cls = -1;
        for (int i = 0; i < 6; ++i) {
            if (h.is_boundary(h.face_edges(k)[static_cast<std::size_t>(i)]))
                continue;
            const int parity = i % 2;
            cls = cls == -1 ? parity : (cls == parity ? cls : -2);
        }
        out.fusing_class.push_back(cls);
    }
    if (m) {
        out.alternating.assign(static_cast<std::size_t>(h.cell_count()), false);
        for (int k : alternating_hexagons(h, *m))
            out.alternating[static_cast<std::size_t>(k)] = true;
    }
    return out;
}

Cell transform_cell(Cell c, int symmetry)
{
    if (symmetry >= 6)
        c = {c.r, c.q};
    for (int i = 0; i < symmetry % 6; ++i)
        c = {-c.r, c.q + c.r};
    return c;
}

std::vector<Cell> transform_cells(std::span<const Cell> cells, int symmetry)
{
    std::vector<Cell> out;
    out.reserve(cells.size());
    for (Cell c : cells)
        out.push_back(transform_cell(c, symmetry));
    return out;
}

std::vector<Cell> normalize_cells(std::span<const Cell> cells)
{
    std::vector<Cell> out(cells.begin(), cells.end());
    if (out.empty())
        return out;
    int qmin = out[0].q;
    int rmin = out[0].r;
    for (Cell c : out) {
        qmin = std::min(qmin, c.q);
        rmin = std::min(rmin, c.r);
    }
    for (Cell& c : out)
        c = {c.q - qmin, c.r - rmin};
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Rows r = 0..k-1, each a contiguous q-run ending at the same column, lengths non-increasing.
std::optional<std::vector<int>> standard_rows(std::span<const Cell> cells)
{
    std::map<int, std::vector<int>> rows;
    for (Cell c : cells)
        rows[c.r].push_back(c.q);
    std::vector<int> lengths;
    int expected_r = rows.begin()->first;
    std::optional<int> right;
    for (auto& [r, qs] : rows) {
        if (r != expected_r++)
            return std::nullopt;
        std::sort(qs.begin(), qs.end());
        if (qs.back() - qs.front() + 1 != static_cast<int>(qs.size()))
            return std::nullopt;
        if (right && *right != qs.back())
            return std::nullopt;
        right = qs.back();
        if (!lengths.empty() && lengths.back() < static_cast<int>(qs.size()))
            return std::nullopt;
        lengths.push_back(static_cast<int>(qs.size()));
    }
    return lengths;
}

} // namespace

std::optional<std::vector<int>> truncated_parallelogram_rows(std::span<const Cell> cells)
{
    if (cells.empty())
        return std::nullopt;
    std::optional<std::vector<int>> best;
    for (int k = 0; k < 12; ++k) {
        const auto image = transform_cells(cells, k);
        auto rows = standard_rows(image);
        if (rows && (!best || *best < *rows))
            best = std::move(rows);
    }
    return best;
}

TreeDomination tree_independent_domination(int n, std::span<const std::pair<int, int>> edges)
{
    std::vector<int> order;
    const auto children = tree_children(n, edges, order);
    constexpr long long kInf = std::numeric_limits<int>::max();

    // in: v chosen; dom: v not chosen, dominated by a child; open: v not chosen and
    // undominated below (its parent must be chosen).
    std::vector<long long> in(static_cast<std::size_t>(n)), dom(static_cast<std::size_t>(n)),
        open(static_cast<std::size_t>(n));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const auto v = static_cast<std::size_t>(*it);
        long long take = 1;
        long long base = 0;
        long long extra = kInf;
        long long closed = 0;
        for (int c : children[v]) {
            const auto u = static_cast<std::size_t>(c);
            take += std::min(dom[u], open[u]);
            base += std::min(in[u], dom[u]);
            extra = std::min(extra, std::max(0LL, in[u] - dom[u]));
            closed += dom[u];
        }
        in[v] = std::min(take, kInf);
        dom[v] = children[v].empty() ? kInf : std::min(base + extra, kInf);
        open[v] = std::min(closed, kInf);
    }

    TreeDomination out;
    enum class State { In, Dom, Open };
    std::vector<State> state(static_cast<std::size_t>(n));
    state[0] = in[0] <= dom[0] ? State::In : State::Dom;
    out.value = static_cast<int>(std::min(in[0], dom[0]));
    for (int vi : order) {
        const auto v = static_cast<std::size_t>(vi);
        const auto& kids = children[v];
        switch (state[v]) {
        case State::In:
            for (int c : kids)
                state[static_cast<std::size_t>(c)] =
                    dom[static_cast<std::size_t>(c)] <= open[static_cast<std::size_t>(c)] ? State::Dom : State::Open;
            break;
        case State::Open:
            for (int c : kids)
                state[static_cast<std::size_t>(c)] = State::Dom;
            break;
        case State::Dom: {
            bool any_in = false;
            int forced = -1;
            long long forced_cost = kInf;
            for (int c : kids) {
                const auto u = static_cast<std::size_t>(c);
                if (in[u] <= dom[u]) {
                    state[u] = State::In;
                    any_in = true;
                } else {
                    state[u] = State::Dom;
                    if (in[u] - dom[u] < forced_cost) {
                        forced_cost = in[u] - dom[u];
                        forced = c;
                    }
                }
            }
            if (!any_in)
                state[static_cast<std::size_t>(forced)] = State::In;
            break;
        }
        }
    }
    for (int v = 0; v < n; ++v)
        if (state[static_cast<std::size_t>(v)] == State::In)
            out.nodes.push_back(v);
    return out;
}

TreeDomination tree_independent_domination(const InnerDual& dual)
{
    return tree_independent_domination(dual.node_count(), dual.edges);
}

int tree_matching_number(int n, std::span<const std::pair<int, int>> edges)
{
    std::vector<int> order;
    const auto children = tree_children(n, edges, order);
    std::vector<char> matched(static_cast<std::size_t>(n), 0);
    int size = 0;
    // leaves upward: match a vertex with its parent when both are free
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v)
        for (int c : children[static_cast<std::size_t>(v)])
            parent[static_cast<std::size_t>(c)] = v;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int v = *it;
        const int p = parent[static_cast<std::size_t>(v)];
        if (p >= 0 && !matched[static_cast<std::size_t>(v)] && !matched[static_cast<std::size_t>(p)]) {
            matched[static_cast<std::size_t>(v)] = matched[static_cast<std::size_t>(p)] = 1;
            ++size;
        }
    }
    return size;
}

int tree_independence_number(int n, std::span<const std::pair<int, int>> edges)
{
    std::vector<int> order;
    const auto children = tree_children(n, edges, order);
    std::vector<int> with(static_cast<std::size_t>(n), 1), without(static_cast<std::size_t>(n), 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const auto v = static_cast<std::size_t>(*it);
        for (int c : children[v]) {
            with[v] += without[static_cast<std::size_t>(c)];
            without[v] += std::max(with[static_cast<std::size_t>(c)], without[static_cast<std::size_t>(c)]);
        }
    }
    return std::max(with[0], without[0]);
}

std::vector<std::vector<EdgeId>> sachs_cuts(const HexSystem& h)
{
    std::vector<std::vector<EdgeId>> cuts;
    for (EdgeId start : h.boundary_edges()) {
        std::vector<EdgeId> chain{start};
        EdgeId cur = start;
        int cell = h.edge_cells(start)[0];
        while (true) {
            const auto& f = h.face_edges(cell);
            const auto side = static_cast<std::size_t>(std::find(f.begin(), f.end(), cur) - f.begin());
            cur = f[(side + 3) % 6];
            chain.push_back(cur);
            if (h.is_boundary(cur))
                break;
            const auto& owners = h.edge_cells(cur);
            cell = owners[0] == cell ? owners[1] : owners[0];
        }
        std::sort(chain.begin(), chain.end());
        cuts.push_back(std::move(chain));
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    return cuts;
}

CutInvariance sachs_cut_check(const HexSystem& h, std::span<const EdgeId> cut, const Limits& limits)
{
    const auto matchings = enumerate_perfect_matchings(h.graph(), limits);
    return sachs_cut_check(h, cut, matchings);
}

CutInvariance sachs_cut_check(const HexSystem& h, std::span<const EdgeId> cut, std::span<const Matching> matchings)
{
    std::vector<EdgeId> sorted(cut.begin(), cut.end());
    std::sort(sorted.begin(), sorted.end());
    const auto cuts = sachs_cuts(h);
    if (!std::binary_search(cuts.begin(), cuts.end(), sorted))
        throw Error(ErrorKind::NotAValidCut, "edge set of size " + std::to_string(cut.size())
                                                 + " is not a maximal parallel boundary-to-boundary chain");
    if (matchings.empty())
        throw Error(ErrorKind::NoPerfectMatching, "hexagonal system has no perfect matching");
    CutInvariance out;
    for (const Matching& m : matchings)
        out.per_matching.push_back(static_cast<int>(
            std::count_if(sorted.begin(), sorted.end(), [&](EdgeId e) { return m.contains(e); })));
    out.value = out.per_matching.front();
    out.invariant = std::all_of(out.per_matching.begin(), out.per_matching.end(),
                                [&](int v) { return v == out.value; });
    return out;
}

std::vector<HexComponent> hex_normal_components(const HexSystem& h, std::span<const Matching> matchings)
{
    std::vector<HexComponent> out;
    for (const NormalComponent& comp : normal_components(h.graph(), matchings)) {
        HexComponent hc;
        std::vector<EdgeId> covered;
        for (int k = 0; k < h.cell_count(); ++k) {
            const auto& f = h.face_edges(k);
            if (std::all_of(f.begin(), f.end(), [&](EdgeId e) {
                    return std::binary_search(comp.edges.begin(), comp.edges.end(), e);
                })) {
                hc.cells.push_back(h.cells()[static_cast<std::size_t>(k)]);
                covered.insert(covered.end(), f.begin(), f.end());
            }
        }
        std::sort(covered.begin(), covered.end());
        covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
        hc.exact = covered == comp.edges;
        out.push_back(std::move(hc));
    }
    return out;
}

} // namespace pmforce
