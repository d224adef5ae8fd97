#pragma once

#include "pmforce/graph.hpp"
#include "pmforce/hexsys.hpp"

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace pmforce {

using Instance = std::variant<Graph, HexSystem>;

/// Cells of H(n1, ..., nk): row i sits at r = i and spans q in [n1 - ni, n1 - 1].
/// Throws BadRowSequence unless n1 >= ... >= nk >= 1 and k >= 1.
std::vector<Cell> truncated_parallelogram_cells(std::span<const int> rows);
HexSystem gen_truncated_parallelogram(std::span<const int> rows);

Graph cycle_graph(int n);

/// Dodecahedron with vertices 0-4 on the outer pentagon, 5-14 on the middle
/// ten-cycle (outer i joins 5 + 2i) and 15-19 on the inner pentagon (inner
/// 15 + i joins 6 + 2i).
Graph dodecahedron();

/// Names: triphenylene, perylene, dodecahedron, C4, C6. Throws UnknownName.
Instance gen_named(std::string_view name);
std::vector<std::string> named_instances();

/// Fixed polyhexes (translation classes) with n cells, holes included, normalized and sorted.
std::vector<std::vector<Cell>> enumerate_fixed_polyhexes(int n);

/// Hole-free fixed polyhexes with n cells. Throws TooLarge when n > max_cells.
std::vector<HexSystem> enumerate_hex_systems(int n, int max_cells = 6);

/// Two truncated parallelograms glued along a shared boundary path. T1 keeps
/// the standard layout; T2 is mapped by lattice symmetry `symmetry` and then
/// translated by `offset`.
struct GlueSpec {
    std::string name;
    std::vector<int> rows1;
    std::vector<int> rows2;
    int symmetry = 0;
    Cell offset;
};

struct GlueResult {
    HexSystem system;
    std::vector<EdgeId> fused_path; // edge ids in path order
};

/// Throws InvalidGlue on overlap, a fused boundary that is not a single path
/// of odd length, or a union with a hole.
GlueResult glue_af2(const GlueSpec& spec);

/// Four glued systems in the style of the classic af = 2 construction examples.
std::vector<GlueSpec> glue_presets();

} // namespace pmforce
