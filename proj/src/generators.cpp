#include "pmforce/generators.hpp"

#include "pmforce/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <map>
#include <set>

namespace pmforce {

std::vector<Cell> truncated_parallelogram_cells(std::span<const int> rows)
{
    if (rows.empty())
        throw Error(ErrorKind::BadRowSequence, "no rows");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] < 1 || (i > 0 && rows[i] > rows[i - 1]))
            throw Error(ErrorKind::BadRowSequence, "row lengths must be positive and non-increasing");
    }
    const int width = rows.front();
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int q = width - rows[i]; q < width; ++q)
            cells.push_back({q, static_cast<int>(i)});
    std::sort(cells.begin(), cells.end());
    return cells;
}

HexSystem gen_truncated_parallelogram(std::span<const int> rows)
{
    return build_hex_system(truncated_parallelogram_cells(rows));
}

Graph cycle_graph(int n)
{
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.push_back({i, (i + 1) % n});
    Rotation rotation(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        rotation[static_cast<std::size_t>(i)] = {(i + 1) % n, (i + n - 1) % n};
    return Graph(n, std::move(edges), std::nullopt, std::move(rotation));
}

Graph dodecahedron()
{
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i)
        edges.push_back({i, (i + 1) % 5});
    for (int i = 0; i < 5; ++i)
        edges.push_back({i, 5 + 2 * i});
    for (int j = 0; j < 10; ++j)
        edges.push_back({5 + j, 5 + (j + 1) % 10});
    for (int i = 0; i < 5; ++i)
        edges.push_back({6 + 2 * i, 15 + i});
    for (int i = 0; i < 5; ++i)
        edges.push_back({15 + i, 15 + (i + 1) % 5});

    // Concentric drawing: outer pentagon, ten-ring, inner pentagon.
    std::vector<std::pair<double, double>> xy(20);
    auto place = [&](int v, double radius, double degrees) {
        const double t = degrees * std::numbers::pi / 180.0;
        xy[static_cast<std::size_t>(v)] = {radius * std::cos(t), radius * std::sin(t)};
    };
    for (int i = 0; i < 5; ++i) {
        place(i, 3.0, 72.0 * i);
        place(15 + i, 1.0, 72.0 * i + 36.0);
    }
    for (int j = 0; j < 10; ++j)
        place(5 + j, 2.0, 36.0 * j);
    const Graph plain(20, edges);
    auto rotation = rotation_from_coordinates(plain, xy);
    return Graph(20, std::move(edges), std::nullopt, std::move(rotation));
}

Instance gen_named(std::string_view name)
{
    if (name == "triphenylene")
        return build_hex_system({{0, 0}, {-1, 1}, {0, -1}, {1, 0}});
    if (name == "perylene")
        return build_hex_system({{0, 0}, {0, 1}, {-1, 1}, {0, -1}, {1, -1}});
    if (name == "dodecahedron")
        return dodecahedron();
    if (name == "C4" || name == "c4")
        return cycle_graph(4);
    if (name == "C6" || name == "c6")
        return cycle_graph(6);
    throw Error(ErrorKind::UnknownName, std::string(name));
}

std::vector<std::string> named_instances()
{
    return {"triphenylene", "perylene", "dodecahedron", "C4", "C6"};
}

std::vector<std::vector<Cell>> enumerate_fixed_polyhexes(int n)
{
    if (n < 1)
        return {};
    std::set<std::vector<Cell>> level{{{0, 0}}};
    for (int size = 1; size < n; ++size) {
        std::set<std::vector<Cell>> next;
        for (const auto& poly : level) {
            for (Cell c : poly)
                for (Cell d : kSideNeighbor) {
                    const Cell grown{c.q + d.q, c.r + d.r};
                    if (std::binary_search(poly.begin(), poly.end(), grown))
                        continue;
                    std::vector<Cell> bigger = poly;
                    bigger.push_back(grown);
                    next.insert(normalize_cells(bigger));
                }
        }
        level = std::move(next);
    }
    return {level.begin(), level.end()};
}

std::vector<HexSystem> enumerate_hex_systems(int n, int max_cells)
{
    if (n > max_cells)
        throw Error(ErrorKind::TooLarge, std::to_string(n) + " cells exceeds the corpus limit of "
                                             + std::to_string(max_cells));
    std::vector<HexSystem> out;
    for (auto& cells : enumerate_fixed_polyhexes(n)) {
        try {
            out.push_back(build_hex_system(std::move(cells)));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::HasHole)
                throw;
        }
    }
    return out;
}

GlueResult glue_af2(const GlueSpec& spec)
{
    const auto t1 = truncated_parallelogram_cells(spec.rows1);
    std::vector<Cell> t2;
    for (Cell c : transform_cells(truncated_parallelogram_cells(spec.rows2), spec.symmetry))
        t2.push_back({c.q + spec.offset.q, c.r + spec.offset.r});
    std::sort(t2.begin(), t2.end());

    for (Cell c : t2)
        if (std::binary_search(t1.begin(), t1.end(), c))
            throw Error(ErrorKind::InvalidGlue, spec.name + ": the two parts overlap");

    // Shared lattice edges between a T1 cell and a T2 cell.
    std::map<LatticePoint, std::vector<LatticePoint>> path_adj;
    std::size_t shared = 0;
    for (Cell c : t1)
        for (int i = 0; i < 6; ++i) {
            const Cell d{c.q + kSideNeighbor[static_cast<std::size_t>(i)].q,
                         c.r + kSideNeighbor[static_cast<std::size_t>(i)].r};
            if (!std::binary_search(t2.begin(), t2.end(), d))
                continue;
            const LatticePoint a = cell_corner(c, i);
            const LatticePoint b = cell_corner(c, (i + 1) % 6);
            path_adj[a].push_back(b);
            path_adj[b].push_back(a);
            ++shared;
        }
    if (shared == 0)
        throw Error(ErrorKind::InvalidGlue, spec.name + ": the parts share no edge");

    std::vector<LatticePoint> ends;
    for (const auto& [p, nb] : path_adj) {
        if (nb.size() > 2)
            throw Error(ErrorKind::InvalidGlue, spec.name + ": fused boundary branches");
        if (nb.size() == 1)
            ends.push_back(p);
    }
    if (ends.size() != 2)
        throw Error(ErrorKind::InvalidGlue, spec.name + ": fused boundary is not a single path");

    std::vector<LatticePoint> walk{ends[0]};
    while (walk.size() <= shared) {
        const auto& nb = path_adj.at(walk.back());
        const LatticePoint next = (walk.size() >= 2 && nb[0] == walk[walk.size() - 2]) ? nb.back() : nb[0];
        if (walk.size() >= 2 && next == walk[walk.size() - 2])
            break;
        walk.push_back(next);
    }
    if (walk.size() != shared + 1 || walk.back() != ends[1])
        throw Error(ErrorKind::InvalidGlue, spec.name + ": fused boundary is not a single path");
    if (shared % 2 == 0)
        throw Error(ErrorKind::InvalidGlue, spec.name + ": fused path has even length " + std::to_string(shared));

    std::vector<Cell> cells = t1;
    cells.insert(cells.end(), t2.begin(), t2.end());
    GlueResult out;
    try {
        out.system = build_hex_system(std::move(cells));
    } catch (const Error& e) {
        throw Error(ErrorKind::InvalidGlue, spec.name + ": " + e.what());
    }

    std::map<LatticePoint, Vertex> vertex_of;
    for (Vertex v = 0; v < out.system.graph().vertex_count(); ++v)
        vertex_of[out.system.vertex_point(v)] = v;
    for (std::size_t i = 0; i + 1 < walk.size(); ++i)
        out.fused_path.push_back(*out.system.graph().find_edge(vertex_of.at(walk[i]), vertex_of.at(walk[i + 1])));
    return out;
}

std::vector<GlueSpec> glue_presets()
{
    // Found by exhaustive search over small parts; all four are normal, not
    // truncated parallelograms, and have af = 2. glue-d also has f = 1.
    return {
        {"glue-a", {2, 2}, {3, 2}, 0, {-3, 1}},
        {"glue-b", {3, 3}, {2, 1}, 3, {3, -1}},
        {"glue-c", {3, 3}, {3, 2, 1}, 0, {-3, -1}},
        {"glue-d", {3, 3}, {2, 2, 1}, 4, {3, 0}},
    };
}

} // namespace pmforce
