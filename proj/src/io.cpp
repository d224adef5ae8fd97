#include "pmforce/io.hpp"

#include "pmforce/error.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace pmforce {

namespace {

struct Line {
    int number = 0;
    std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text)
{
    std::vector<Line> out;
    int number = 0;
    while (!text.empty()) {
        ++number;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        Line parsed{number, {}};
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                ++i;
            const std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
                ++i;
            if (i > start)
                parsed.tokens.push_back(line.substr(start, i - start));
        }
        if (!parsed.tokens.empty())
            out.push_back(std::move(parsed));
    }
    return out;
}

[[noreturn]] void fail(int line, const std::string& msg)
{
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + msg);
}

int to_int(const Line& l, std::string_view tok)
{
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        fail(l.number, "expected an integer, got '" + std::string(tok) + "'");
    return value;
}

void expect_arity(const Line& l, std::size_t n)
{
    if (l.tokens.size() != n)
        fail(l.number, "expected " + std::to_string(n - 1) + " field(s) after '" + std::string(l.tokens[0]) + "'");
}

} // namespace

Graph parse_graph(std::string_view text)
{
    const auto lines = tokenize(text);
    if (lines.empty() || lines[0].tokens[0] != "p")
        fail(lines.empty() ? 1 : lines[0].number, "missing 'p <n> <m>' header");
    expect_arity(lines[0], 3);
    const int n = to_int(lines[0], lines[0].tokens[1]);
    const int m = to_int(lines[0], lines[0].tokens[2]);
    if (n < 0 || m < 0)
        fail(lines[0].number, "negative size");

    auto vertex = [&](const Line& l, std::string_view tok) {
        const int v = to_int(l, tok);
        if (v < 0 || v >= n)
            fail(l.number, "vertex " + std::to_string(v) + " out of range");
        return v;
    };

    std::vector<Edge> edges;
    std::vector<std::optional<Color>> colors(static_cast<std::size_t>(n));
    Rotation rotation(static_cast<std::size_t>(n));
    std::vector<bool> rotated(static_cast<std::size_t>(n), false);
    int color_lines = 0;
    int rotation_lines = 0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        const std::string_view kind = l.tokens[0];
        if (kind == "e") {
            expect_arity(l, 3);
            edges.push_back({vertex(l, l.tokens[1]), vertex(l, l.tokens[2])});
        } else if (kind == "c") {
            expect_arity(l, 3);
            const int v = vertex(l, l.tokens[1]);
            const int c = to_int(l, l.tokens[2]);
            if (c != 0 && c != 1)
                fail(l.number, "color must be 0 or 1");
            if (colors[static_cast<std::size_t>(v)])
                fail(l.number, "vertex " + std::to_string(v) + " colored twice");
            colors[static_cast<std::size_t>(v)] = c == 1 ? Color::Black : Color::White;
            ++color_lines;
        } else if (kind == "r") {
            if (l.tokens.size() < 2)
                fail(l.number, "expected a vertex after 'r'");
            const int v = vertex(l, l.tokens[1]);
            if (rotated[static_cast<std::size_t>(v)])
                fail(l.number, "vertex " + std::to_string(v) + " rotated twice");
            rotated[static_cast<std::size_t>(v)] = true;
            for (std::size_t k = 2; k < l.tokens.size(); ++k)
                rotation[static_cast<std::size_t>(v)].push_back(vertex(l, l.tokens[k]));
            ++rotation_lines;
        } else if (kind == "p") {
            fail(l.number, "duplicate 'p' header");
        } else {
            fail(l.number, "unknown line type '" + std::string(kind) + "'");
        }
    }
    if (static_cast<int>(edges.size()) != m)
        fail(lines[0].number, "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    if (color_lines != 0 && color_lines != n)
        fail(lines.back().number, "colors given for " + std::to_string(color_lines) + " of " + std::to_string(n) + " vertices");
    if (rotation_lines != 0 && rotation_lines != n)
        fail(lines.back().number,
             "rotation given for " + std::to_string(rotation_lines) + " of " + std::to_string(n) + " vertices");

    std::optional<std::vector<Color>> explicit_colors;
    if (color_lines != 0) {
        explicit_colors.emplace();
        for (const auto& c : colors)
            explicit_colors->push_back(*c);
    }
    std::optional<Rotation> explicit_rotation;
    if (rotation_lines != 0)
        explicit_rotation = std::move(rotation);
    return Graph(n, std::move(edges), std::move(explicit_colors), std::move(explicit_rotation));
}

std::string write_graph(const Graph& g)
{
    std::ostringstream out;
    out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges())
        out << "e " << e.u << ' ' << e.v << '\n';
    if (const auto& colors = g.explicit_colors())
        for (std::size_t v = 0; v < colors->size(); ++v)
            out << "c " << v << ' ' << ((*colors)[v] == Color::Black ? 1 : 0) << '\n';
    if (const auto& rotation = g.rotation())
        for (std::size_t v = 0; v < rotation->size(); ++v) {
            out << "r " << v;
            for (Vertex w : (*rotation)[v])
                out << ' ' << w;
            out << '\n';
        }
    return out.str();
}

std::vector<Cell> parse_hex_cells(std::string_view text)
{
    std::vector<Cell> cells;
    std::vector<std::pair<Cell, int>> seen;
    for (const Line& l : tokenize(text)) {
        if (l.tokens.size() != 2)
            fail(l.number, "expected '<q> <r>'");
        const Cell c{to_int(l, l.tokens[0]), to_int(l, l.tokens[1])};
        cells.push_back(c);
        seen.emplace_back(c, l.number);
    }
    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 1; i < seen.size(); ++i)
        if (seen[i].first == seen[i - 1].first)
            fail(std::max(seen[i].second, seen[i - 1].second),
                 "duplicate cell " + std::to_string(seen[i].first.q) + " " + std::to_string(seen[i].first.r));
    if (cells.empty())
        fail(1, "no cells");
    return cells;
}

HexSystem parse_hex(std::string_view text)
{
    return build_hex_system(parse_hex_cells(text));
}

std::string write_hex_cells(std::vector<Cell> cells)
{
    std::sort(cells.begin(), cells.end());
    std::ostringstream out;
    for (Cell c : cells)
        out << c.q << ' ' << c.r << '\n';
    return out.str();
}

std::string write_hex(const HexSystem& h)
{
    return write_hex_cells({h.cells().begin(), h.cells().end()});
}

Instance read_instance(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::ParseError, "cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const auto ext = path.extension();
    if (ext == ".graph")
        return parse_graph(text);
    if (ext == ".hex")
        return parse_hex(text);
    throw Error(ErrorKind::ParseError, path.string() + ": expected a .graph or .hex file");
}

std::string write_instance(const Instance& x)
{
    if (const auto* h = std::get_if<HexSystem>(&x))
        return write_hex(*h);
    return write_graph(std::get<Graph>(x));
}

std::string instance_extension(const Instance& x)
{
    return std::holds_alternative<HexSystem>(x) ? ".hex" : ".graph";
}

std::uint64_t fnv1a(std::string_view bytes)
{
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace pmforce
