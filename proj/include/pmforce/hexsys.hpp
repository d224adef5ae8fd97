#pragma once

#include "pmforce/graph.hpp"
#include "pmforce/matching.hpp"

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace pmforce {

/// Axial coordinate of a hexagonal cell.
struct Cell {
    int q = 0;
    int r = 0;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Exact integer lattice point. A cell (q, r) has centre (2q + r, 3r) and its
/// corners at the centre plus (1,1), (0,2), (-1,1), (-1,-1), (0,-2), (1,-1),
/// in that cyclic order. Larger y is higher; (0,2) is the peak.
struct LatticePoint {
    int x = 0;
    int y = 0;

    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

LatticePoint cell_corner(Cell c, int i);

/// Neighbour across face side i (side i joins corners i and i+1).
inline constexpr std::array<Cell, 6> kSideNeighbor{{{0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}, {1, 0}}};

class HexSystem {
public:
    [[nodiscard]] std::span<const Cell> cells() const noexcept { return cells_; }
    [[nodiscard]] int cell_count() const noexcept { return static_cast<int>(cells_.size()); }
    [[nodiscard]] const Graph& graph() const noexcept { return graph_; }
    [[nodiscard]] std::optional<int> cell_index(Cell c) const;

    [[nodiscard]] const std::array<Vertex, 6>& face_vertices(int cell) const { return faces_.at(static_cast<std::size_t>(cell)); }
    [[nodiscard]] const std::array<EdgeId, 6>& face_edges(int cell) const { return face_edges_.at(static_cast<std::size_t>(cell)); }
    /// Cells on either side of an edge; -1 marks the outer face.
    [[nodiscard]] const std::array<int, 2>& edge_cells(EdgeId e) const { return edge_cells_.at(static_cast<std::size_t>(e)); }
    [[nodiscard]] bool is_boundary(EdgeId e) const { return edge_cells(e)[1] == -1; }
    [[nodiscard]] std::vector<EdgeId> boundary_edges() const;
    [[nodiscard]] LatticePoint vertex_point(Vertex v) const { return points_.at(static_cast<std::size_t>(v)); }

    friend bool operator==(const HexSystem& a, const HexSystem& b) { return a.cells_ == b.cells_; }

private:
    friend HexSystem build_hex_system(std::vector<Cell> cells);

    std::vector<Cell> cells_;
    Graph graph_;
    std::vector<LatticePoint> points_;
    std::vector<std::array<Vertex, 6>> faces_;
    std::vector<std::array<EdgeId, 6>> face_edges_;
    std::vector<std::array<int, 2>> edge_cells_;
};

/// Throws Disconnected (including empty input) and HasHole. Duplicates collapse.
HexSystem build_hex_system(std::vector<Cell> cells);

/// Cells whose face is m-alternating, by index.
std::vector<int> alternating_hexagons(const HexSystem& h, const Matching& m);

struct ClarResult {
    int value = 0;
    Matching matching;
    std::vector<int> hexagons;
};

ClarResult clar_number(const HexSystem& h, const Limits& limits = {});
ClarResult clar_number(const HexSystem& h, std::span<const Matching> matchings);

struct FriesResult {
    int fries_max = 0;
    int fries_min = 0;
    Matching max_matching;
    std::vector<int> max_hexagons;
    Matching min_matching;
    std::vector<int> min_hexagons;
};

FriesResult fries_numbers(const HexSystem& h, const Limits& limits = {});
FriesResult fries_numbers(const HexSystem& h, std::span<const Matching> matchings);

struct InnerDual {
    std::vector<Cell> cells;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adjacency;
    bool is_tree = false;

    [[nodiscard]] int node_count() const noexcept { return static_cast<int>(cells.size()); }
};

InnerDual inner_dual(const HexSystem& h);

bool is_all_kink_catahex(const HexSystem& h);

/// Per-cell fusing class for catacondensed systems and, given a matching, the
/// alternating flags. Class 0/1: all fused sides of the cell have even/odd
/// index; -1: no fused side; -2: mixed parities.
struct HexLabels {
    std::vector<int> fusing_class;
    std::vector<bool> alternating;
};

HexLabels hex_labels(const HexSystem& h, const std::optional<Matching>& m = std::nullopt);

/// Image of a cell under lattice symmetry k in [0, 12): reflection (q,r)->(r,q)
/// when k >= 6, then k mod 6 rotations by 60 degrees.
Cell transform_cell(Cell c, int symmetry);
std::vector<Cell> transform_cells(std::span<const Cell> cells, int symmetry);
/// Sorted translate with minimum q and minimum r equal to zero.
std::vector<Cell> normalize_cells(std::span<const Cell> cells);

/// Row lengths (n1 >= ... >= nk) when the cells form a truncated parallelogram
/// under some lattice symmetry; the lexicographically greatest row vector over
/// all matching symmetries.
std::optional<std::vector<int>> truncated_parallelogram_rows(std::span<const Cell> cells);
inline std::optional<std::vector<int>> is_truncated_parallelogram(const HexSystem& h)
{
    return truncated_parallelogram_rows(h.cells());
}

struct TreeDomination {
    int value = 0;
    std::vector<int> nodes;
};

/// Independent domination number of a tree by rooted dynamic programming.
/// Throws NotATree.
TreeDomination tree_independent_domination(int n, std::span<const std::pair<int, int>> edges);
TreeDomination tree_independent_domination(const InnerDual& dual);

int tree_matching_number(int n, std::span<const std::pair<int, int>> edges);
int tree_independence_number(int n, std::span<const std::pair<int, int>> edges);

/// Maximal chains of parallel edges, consecutive ones opposite in a common
/// hexagon, both ends on the boundary. Each cut is returned as sorted edge ids.
std::vector<std::vector<EdgeId>> sachs_cuts(const HexSystem& h);

struct CutInvariance {
    bool invariant = false;
    int value = 0;              // |cut ∩ M| for the first perfect matching
    std::vector<int> per_matching;
};

/// Throws NotAValidCut if `cut` is not one of sachs_cuts(h), NoPerfectMatching.
CutInvariance sachs_cut_check(const HexSystem& h, std::span<const EdgeId> cut, const Limits& limits = {});
CutInvariance sachs_cut_check(const HexSystem& h, std::span<const EdgeId> cut, std::span<const Matching> matchings);

/// A normal component read back as cells: those whose six sides are all in it.
/// `exact` holds when those cells' edges are precisely the component's edges.
struct HexComponent {
    std::vector<Cell> cells;
    bool exact = false;
};

std::vector<HexComponent> hex_normal_components(const HexSystem& h, std::span<const Matching> matchings);

} // namespace pmforce
