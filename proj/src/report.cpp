#include "pmforce/report.hpp"

#include "pmforce/antiforcing.hpp"
#include "pmforce/error.hpp"
#include "pmforce/forcing.hpp"
#include "pmforce/hexsys.hpp"
#include "pmforce/io.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>

namespace pmforce {

namespace {

const Graph& graph_of(const Instance& x)
{
    if (const auto* h = std::get_if<HexSystem>(&x))
        return h->graph();
    return std::get<Graph>(x);
}

Json edge_list(std::span<const EdgeId> ids)
{
    return Json(std::vector<EdgeId>(ids.begin(), ids.end()));
}

Json spectrum_json(const Spectrum& s)
{
    Json j;
    j["values"] = s.values;
    j["value_set"] = s.value_set;
    j["min"] = s.min;
    j["max"] = s.max;
    return j;
}

Json cycles_json(const std::vector<AltCycle>& cycles)
{
    Json out = Json::array();
    for (const AltCycle& c : cycles)
        out.push_back(c.vertices);
    return out;
}

// Lazily shared matchings and per-matching cycles for one report.
class Context {
public:
    Context(const Instance& x, const Limits& limits) : x_(x), g_(graph_of(x)), limits_(limits) {}

    const Graph& graph() const { return g_; }
    const Limits& limits() const { return limits_; }

    const HexSystem& hex(std::string_view name) const
    {
        const auto* h = std::get_if<HexSystem>(&x_);
        if (!h)
            throw Error(ErrorKind::Inapplicable, std::string(name) + " needs a hexagonal system");
        return *h;
    }

    const std::vector<Matching>& matchings()
    {
        if (!matchings_)
            matchings_ = enumerate_perfect_matchings(g_, limits_);
        return *matchings_;
    }

    const std::vector<Matching>& nonempty_matchings()
    {
        if (matchings().empty())
            throw Error(ErrorKind::NoPerfectMatching, "graph has no perfect matching");
        return matchings();
    }

    const std::vector<AltCycle>& cycles(std::size_t i)
    {
        auto it = cycles_.find(i);
        if (it == cycles_.end())
            it = cycles_.emplace(i, enumerate_alternating_cycles(g_, matchings()[i], limits_)).first;
        return it->second;
    }

    // Per-matching optimum, memoized by kind.
    const std::vector<EdgeSetOptimum>& optima(bool anti)
    {
        auto& slot = anti ? af_ : f_;
        if (!slot) {
            slot.emplace();
            const auto& ms = nonempty_matchings();
            for (std::size_t i = 0; i < ms.size(); ++i)
                slot->push_back(anti ? antiforcing_number(ms[i], cycles(i)) : forcing_number(ms[i], cycles(i)));
        }
        return *slot;
    }

private:
    const Instance& x_;
    const Graph& g_;
    Limits limits_;
    std::optional<std::vector<Matching>> matchings_;
    std::map<std::size_t, std::vector<AltCycle>> cycles_;
    std::optional<std::vector<EdgeSetOptimum>> f_;
    std::optional<std::vector<EdgeSetOptimum>> af_;
};

struct Computed {
    Json value;
    Json witness;
};

Computed extreme(Context& ctx, bool anti, bool want_max)
{
    const auto& opt = ctx.optima(anti);
    std::size_t best = 0;
    for (std::size_t i = 1; i < opt.size(); ++i)
        if (want_max ? opt[i].value > opt[best].value : opt[i].value < opt[best].value)
            best = i;
    Json w;
    w["matching"] = edge_list(ctx.matchings()[best].edge_ids());
    w["set"] = opt[best].witness;
    return {opt[best].value, w};
}

Computed spectrum(Context& ctx, bool anti)
{
    std::vector<int> values;
    for (const auto& o : ctx.optima(anti))
        values.push_back(o.value);
    return {spectrum_json(make_spectrum(std::move(values))), nullptr};
}

Computed packing(Context& ctx, const std::function<CyclePacking(std::size_t)>& solve)
{
    const auto& ms = ctx.nonempty_matchings();
    std::vector<int> values;
    Json families = Json::array();
    for (std::size_t i = 0; i < ms.size(); ++i) {
        const CyclePacking p = solve(i);
        values.push_back(p.value);
        families.push_back(cycles_json(p.family.cycles));
    }
    Json w;
    w["families"] = std::move(families);
    return {spectrum_json(make_spectrum(std::move(values))), w};
}

Computed fries_entry(Context& ctx, bool want_max)
{
    const auto r = fries_numbers(ctx.hex(want_max ? "fries" : "fries_min"), ctx.nonempty_matchings());
    Json w;
    w["matching"] = edge_list(want_max ? r.max_matching.edge_ids() : r.min_matching.edge_ids());
    w["hexagons"] = want_max ? r.max_hexagons : r.min_hexagons;
    return {want_max ? r.fries_max : r.fries_min, w};
}

Computed compute_one(Context& ctx, std::string_view name)
{
    const Graph& g = ctx.graph();
    if (name == "pm_count")
        return {ctx.matchings().size(), nullptr};
    if (name == "f")
        return extreme(ctx, false, false);
    if (name == "F")
        return extreme(ctx, false, true);
    if (name == "af")
        return extreme(ctx, true, false);
    if (name == "Af")
        return extreme(ctx, true, true);
    if (name == "f_spectrum")
        return spectrum(ctx, false);
    if (name == "af_spectrum")
        return spectrum(ctx, true);
    if (name == "c")
        return packing(ctx, [&](std::size_t i) { return max_disjoint_alternating_cycles(ctx.cycles(i)); });
    if (name == "c_prime" || name == "c_prime_plain") {
        const auto mode = name == "c_prime" ? Crossings::ForbidIfEmbedded : Crossings::Allow;
        return packing(ctx, [&](std::size_t i) {
            return max_compatible_alternating_set(g, ctx.matchings()[i], ctx.cycles(i), mode);
        });
    }
    if (name == "anti_forcing_edges") {
        const auto edges = anti_forcing_edges(g);
        return {edges.size(), Json{{"edges", edges}}};
    }
    if (name == "normal_components") {
        const auto comps = normal_components(g, ctx.nonempty_matchings());
        Json w = Json::array();
        for (const auto& c : comps)
            w.push_back(c.edges);
        return {comps.size(), Json{{"components", w}}};
    }
    if (name == "clar") {
        const auto r = clar_number(ctx.hex(name), ctx.nonempty_matchings());
        Json w;
        w["matching"] = edge_list(r.matching.edge_ids());
        w["hexagons"] = r.hexagons;
        return {r.value, w};
    }
    if (name == "fries")
        return fries_entry(ctx, true);
    if (name == "fries_min")
        return fries_entry(ctx, false);
    if (name == "truncated_parallelogram") {
        const auto rows = is_truncated_parallelogram(ctx.hex(name));
        return {rows ? Json(*rows) : Json(nullptr), nullptr};
    }
    if (name == "all_kink_catahex")
        return {is_all_kink_catahex(ctx.hex(name)), nullptr};
    if (name == "dual_independent_domination") {
        const auto dual = inner_dual(ctx.hex(name));
        if (!dual.is_tree)
            throw Error(ErrorKind::Inapplicable, "inner dual is not a tree");
        const auto r = tree_independent_domination(dual);
        return {r.value, Json{{"nodes", r.nodes}}};
    }
    throw Error(ErrorKind::UnknownName, "unknown invariant '" + std::string(name) + "'");
}

std::vector<EdgeId> ids(const Json& j)
{
    return j.get<std::vector<EdgeId>>();
}

} // namespace

const std::vector<std::string>& invariant_names()
{
    static const std::vector<std::string> names{
        "pm_count", "f", "F", "af", "Af", "f_spectrum", "af_spectrum", "c", "c_prime", "c_prime_plain",
        "anti_forcing_edges", "normal_components", "clar", "fries", "fries_min", "truncated_parallelogram",
        "all_kink_catahex", "dual_independent_domination"};
    return names;
}

bool is_hex_only(std::string_view name)
{
    return name == "clar" || name == "fries" || name == "fries_min" || name == "truncated_parallelogram"
           || name == "all_kink_catahex" || name == "dual_independent_domination";
}

Json instance_header(const Instance& x, std::string_view id)
{
    const Graph& g = graph_of(x);
    char hash[24];
    std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(fnv1a(write_instance(x))));
    Json j;
    j["id"] = id;
    j["kind"] = std::holds_alternative<HexSystem>(x) ? "hex" : "graph";
    j["vertices"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["hash"] = std::string("fnv1a64:") + hash;
    return j;
}

Json compute_report(const Instance& x, std::string_view id, std::span<const std::string> names, const Limits& limits)
{
    for (const auto& name : names)
        if (std::find(invariant_names().begin(), invariant_names().end(), name) == invariant_names().end())
            throw Error(ErrorKind::UnknownName, "unknown invariant '" + name + "'");
    Context ctx(x, limits);
    Json report;
    report["instance"] = instance_header(x, id);
    report["invariants"] = Json::array();
    for (const auto& name : names) {
        const auto start = std::chrono::steady_clock::now();
        Computed c = compute_one(ctx, name);
        const std::chrono::duration<double, std::milli> took = std::chrono::steady_clock::now() - start;
        Json entry;
        entry["name"] = name;
        entry["value"] = std::move(c.value);
        entry["witness"] = std::move(c.witness);
        entry["runtime_ms"] = took.count();
        report["invariants"].push_back(std::move(entry));
    }
    return report;
}

std::vector<std::string> validate_witnesses(const Instance& x, const Json& report)
{
    const Graph& g = graph_of(x);
    const auto* h = std::get_if<HexSystem>(&x);
    std::vector<std::string> problems;
    auto complain = [&](const std::string& name, const std::string& msg) { problems.push_back(name + ": " + msg); };

    auto perfect = [&](const std::string& name, const Json& w) -> std::optional<Matching> {
        Matching m(ids(w.at("matching")));
        if (!is_perfect(g, m)) {
            complain(name, "witness matching is not perfect");
            return std::nullopt;
        }
        return m;
    };

    for (const Json& entry : report.at("invariants")) {
        const std::string name = entry.at("name");
        const Json& value = entry.at("value");
        const Json& w = entry.at("witness");
        try {
            if (name == "f" || name == "F" || name == "af" || name == "Af") {
                const auto m = perfect(name, w);
                if (!m)
                    continue;
                const auto set = ids(w.at("set"));
                const bool anti = name == "af" || name == "Af";
                const bool ok = anti ? is_antiforcing_set_by_uniqueness(g, *m, set)
                                     : is_forcing_set_by_uniqueness(g, *m, set);
                if (!ok)
                    complain(name, "witness set does not force the matching");
                const int best = anti ? antiforcing_number(g, *m).value : forcing_number(g, *m).value;
                if (static_cast<int>(set.size()) != value.get<int>() || best != value.get<int>())
                    complain(name, "witness size disagrees with the value");
            } else if (name == "anti_forcing_edges") {
                const auto edges = ids(w.at("edges"));
                if (static_cast<int>(edges.size()) != value.get<int>())
                    complain(name, "edge count disagrees with the value");
                for (EdgeId e : edges) {
                    const EdgeId removed[] = {e};
                    if (!has_unique_perfect_matching(g, removed).unique)
                        complain(name, "edge " + std::to_string(e) + " is not an anti-forcing edge");
                }
            } else if (name == "clar" && h) {
                const auto m = perfect(name, w);
                if (!m)
                    continue;
                const auto hexes = w.at("hexagons").get<std::vector<int>>();
                const auto alt = alternating_hexagons(*h, *m);
                std::vector<Vertex> seen;
                for (int c : hexes) {
                    if (!std::binary_search(alt.begin(), alt.end(), c))
                        complain(name, "hexagon " + std::to_string(c) + " is not alternating");
                    for (Vertex v : h->face_vertices(c))
                        seen.push_back(v);
                }
                std::sort(seen.begin(), seen.end());
                if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
                    complain(name, "witness hexagons are not disjoint");
                if (static_cast<int>(hexes.size()) != value.get<int>())
                    complain(name, "witness size disagrees with the value");
            } else if ((name == "fries" || name == "fries_min") && h) {
                const auto m = perfect(name, w);
                if (!m)
                    continue;
                const auto hexes = w.at("hexagons").get<std::vector<int>>();
                if (hexes != alternating_hexagons(*h, *m) || static_cast<int>(hexes.size()) != value.get<int>())
                    complain(name, "witness hexagons are not the alternating ones");
            } else if (name == "c" || name == "c_prime" || name == "c_prime_plain") {
                const auto matchings = enumerate_perfect_matchings(g);
                const auto& families = w.at("families");
                const auto& values = value.at("values");
                if (families.size() != matchings.size()) {
                    complain(name, "one family per perfect matching expected");
                    continue;
                }
                const FamilyMode mode = name == "c"         ? FamilyMode::Disjoint
                                        : name == "c_prime" ? FamilyMode::Compatible
                                                            : FamilyMode::CompatiblePlain;
                for (std::size_t i = 0; i < matchings.size(); ++i) {
                    CycleFamily fam{mode, {}};
                    for (const Json& vs : families[i]) {
                        AltCycle c;
                        c.vertices = vs.get<std::vector<Vertex>>();
                        for (std::size_t k = 0; k < c.vertices.size(); ++k) {
                            const auto e = g.find_edge(c.vertices[k], c.vertices[(k + 1) % c.vertices.size()]);
                            if (e)
                                c.edges.push_back(*e);
                        }
                        std::sort(c.edges.begin(), c.edges.end());
                        fam.cycles.push_back(std::move(c));
                    }
                    if (!is_valid_family(g, matchings[i], fam)
                        || static_cast<int>(fam.cycles.size()) != values[i].get<int>())
                        complain(name, "family for matching " + std::to_string(i) + " does not re-validate");
                }
            }
        } catch (const std::exception& e) {
            complain(name, std::string("malformed witness: ") + e.what());
        }
    }
    return problems;
}

} // namespace pmforce
