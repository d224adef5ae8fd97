#pragma once

#include "pmforce/generators.hpp"
#include "pmforce/graph.hpp"
#include "pmforce/hexsys.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace pmforce {

/// .graph text:
///   p <n> <m>
///   e <u> <v>          (m lines, 0-based)
///   c <v> <0|1>        (optional, all vertices or none; 1 = black)
///   r <v> <w1> ... <wk> (optional clockwise rotation, all vertices or none)
/// '#' starts a comment. Malformed input throws ParseError naming the line.
Graph parse_graph(std::string_view text);
std::string write_graph(const Graph& g);

/// .hex text: one "<q> <r>" per line, any order, duplicates rejected.
std::vector<Cell> parse_hex_cells(std::string_view text);
HexSystem parse_hex(std::string_view text);
/// Sorted cells, one per line, no header.
std::string write_hex(const HexSystem& h);
std::string write_hex_cells(std::vector<Cell> cells);

/// Dispatches on the extension (.graph or .hex).
Instance read_instance(const std::filesystem::path& path);
std::string write_instance(const Instance& x);
std::string instance_extension(const Instance& x);

/// 64-bit FNV-1a, used to fingerprint serialized instances.
std::uint64_t fnv1a(std::string_view bytes);

} // namespace pmforce
