#include "pmforce/verify.hpp"

#include "pmforce/antiforcing.hpp"
#include "pmforce/error.hpp"
#include "pmforce/forcing.hpp"
#include "pmforce/hexsys.hpp"
#include "pmforce/io.hpp"

#include <algorithm>
#include <bit>

namespace pmforce {

namespace {

const Graph& graph_of(const Instance& x)
{
    if (const auto* h = std::get_if<HexSystem>(&x))
        return h->graph();
    return std::get<Graph>(x);
}

std::string join(std::span<const int> xs)
{
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i)
        s += (i ? "," : "") + std::to_string(xs[i]);
    return s;
}

// Non-increasing positive sequences with sum at most `budget`.
void row_sequences(int budget, int cap, std::vector<int>& prefix, std::vector<std::vector<int>>& out)
{
    for (int x = std::min(budget, cap); x >= 1; --x) {
        prefix.push_back(x);
        out.push_back(prefix);
        row_sequences(budget - x, x, prefix, out);
        prefix.pop_back();
    }
}

// Collects failures for one instance.
class Check {
public:
    explicit Check(const CorpusEntry& e) : entry_(e) {}

    void expect(bool ok, const std::string& what, Json extra = nullptr)
    {
        if (ok)
            return;
        if (!failed_) {
            counterexample_["instance"] = instance_header(entry_.instance, entry_.id);
            counterexample_["text"] = write_instance(entry_.instance);
            counterexample_["violations"] = Json::array();
        }
        failed_ = true;
        Json v;
        v["check"] = what;
        if (!extra.is_null())
            v["data"] = std::move(extra);
        counterexample_["violations"].push_back(std::move(v));
    }

    void skip(std::string why)
    {
        skipped_ = true;
        detail_ = std::move(why);
    }

    CheckOutcome outcome() const
    {
        CheckOutcome o;
        o.instance = entry_.id;
        if (failed_) {
            o.status = Status::Fail;
            o.detail = counterexample_["violations"][0]["check"];
            o.counterexample = counterexample_;
        } else if (skipped_) {
            o.status = Status::Skipped;
            o.detail = detail_;
        }
        return o;
    }

private:
    const CorpusEntry& entry_;
    bool failed_ = false;
    bool skipped_ = false;
    std::string detail_;
    Json counterexample_;
};

Json pm_json(const Matching& m, std::size_t index)
{
    Json j;
    j["matching_index"] = index;
    j["matching"] = std::vector<EdgeId>(m.edge_ids().begin(), m.edge_ids().end());
    return j;
}

using SuiteBody = void (*)(const CorpusEntry&, const std::vector<Matching>&, const SuiteOptions&, Check&);

// Corpus selectors.
std::vector<CorpusEntry> hex_corpus(const SuiteOptions& o)
{
    auto out = polyhex_corpus(o.max_cells);
    for (auto& e : named_corpus())
        if (std::holds_alternative<HexSystem>(e.instance))
            out.push_back(std::move(e));
    for (auto& e : preset_corpus())
        out.push_back(std::move(e));
    return out;
}

std::vector<CorpusEntry> full_corpus(const SuiteOptions& o)
{
    auto out = polyhex_corpus(o.max_cells);
    for (auto& e : named_corpus())
        out.push_back(std::move(e));
    for (auto& e : preset_corpus())
        out.push_back(std::move(e));
    return out;
}

std::vector<CorpusEntry> planar_bipartite_corpus(const SuiteOptions& o)
{
    std::vector<CorpusEntry> out;
    for (auto& e : full_corpus(o))
        if (graph_of(e.instance).is_bipartite())
            out.push_back(std::move(e));
    for (auto& e : truncated_parallelogram_corpus(o.max_tp_cells))
        out.push_back(std::move(e));
    return out;
}

void packing_vs_forcing(const CorpusEntry& e, const std::vector<Matching>& pms, const SuiteOptions& o, Check& ck)
{
    const Graph& g = graph_of(e.instance);
    // Equality is only claimed for plane bipartite graphs.
    const bool equality = g.is_bipartite() && g.rotation().has_value();
    for (std::size_t i = 0; i < pms.size(); ++i) {
        const auto cycles = enumerate_alternating_cycles(g, pms[i], o.limits);
        const int c = max_disjoint_alternating_cycles(cycles).value;
        const int f = forcing_number(pms[i], cycles).value;
        Json d = pm_json(pms[i], i);
        d["c"] = c;
        d["f"] = f;
        ck.expect(c <= f, "c(M) <= f(G,M)", d);
        if (equality)
            ck.expect(c == f, "c(M) == f(G,M) on a plane bipartite graph", d);
    }
}

void max_forcing_vs_clar(const CorpusEntry& e, const std::vector<Matching>& pms, const SuiteOptions&, Check& ck)
{
    const auto& h = std::get<HexSystem>(e.instance);
    const int big_f = forcing_spectrum(h.graph(), pms).max;
    const int cl = clar_number(h, pms).value;
    ck.expect(big_f == cl, "F(H) == cl(H)", Json{{"F", big_f}, {"cl", cl}});
}

void forcing_sandwich(const CorpusEntry& e, const std::vector<Matching>& pms, const SuiteOptions& o, Check& ck)
{
    const Graph& g = graph_of(e.instance);
    const int delta = g.max_degree();
    for (std::size_t i = 0; i < pms.size(); ++i) {
        const auto cycles = enumerate_alternating_cycles(g, pms[i], o.limits);
        const int f = forcing_number(pms[i], cycles).value;
        const int af = antiforcing_number(pms[i], cycles).value;
        Json d = pm_json(pms[i], i);
        d["f"] = f;
        d["af"] = af;
        d["max_degree"] = delta;
        ck.expect(f <= af && af <= (delta - 1) * f, "f <= af <= (max_degree - 1) f", d);
    }
}

void compatible_lower_bound(const CorpusEntry& e, const std::vector<Matching>& pms, const SuiteOptions& o, Check& ck)
{
    const Graph& g = graph_of(e.instance);
    int af_min = -1;
    for (std::size_t i = 0; i < pms.size(); ++i) {
        const auto cycles = enumerate_alternating_cycles(g, pms[i], o.limits);
        const int af = antiforcing_number(pms[i], cycles).value;
        af_min = af_min < 0 ? af : std::min(af_min, af);
        for (const auto mode : {Crossings::ForbidIfEmbedded, Crossings::Allow}) {
            const auto packing = max_compatible_alternating_set(g, pms[i], cycles, mode);
            Json d = pm_json(pms[i], i);
            d["af"] = af;
            d["c_prime"] = packing.value;
            d["plain"] = mode == Crossings::Allow;
            ck.expect(packing.value <= af, "af(G,M) >= c'(M)", d);
            ck.expect(is_valid_family(g, pms[i], packing.family), "compatible family re-validates", d);
        }
    }
    // Global anti-forcing sets by direct search, kept to small af.
    if (af_min >= 0 && af_min <= 3) {
        const auto direct = smallest_antiforcing_set(g, af_min);
        ck.expect(direct && static_cast<int>(direct->size()) == af_min,
                  "min af over matchings == smallest anti-forcing set of G", Json{{"af", af_min}});
    }
}

void minimax_compatible(const CorpusEntry& e, const std::vector<Matching>& pms, const SuiteOptions& o, Check& ck)
{
    const Graph& g = graph_of(e.instance);
    for (std::size_t i = 0; i < pms.size(); ++i) {
        const auto cycles = enumerate_alternating_cycles(g, pms[i], o.limits);
        const int af = antiforcing_number(pms[i], cycles).value;
        const int cp = max_compatible_alternating_set(g, pms[i], cycles).value;
        const int cp_plain = max_compatible_alternating_set(g, pms[i], cycles, Crossings::Allow).value;
        const auto d = orient_and_contract(g, pms[i]);
        const auto dicycles = enumerate_directed_cycles(d, o.limits);
        const auto feedback = min_feedback_arc_set(d, o.limits);
        const auto packing = max_arc_disjoint_dicycles(d, o.limits);
        Json data = pm_json(pms[i], i);
        data["af"] = af;
        data["c_prime"] = cp;
        data["c_prime_plain"] = cp_plain;
        data["feedback"] = feedback.size();
        data["dicycle_packing"] = packing.size();
        data["cycles"] = cycles.size();
        data["dicycles"] = dicycles.size();
        ck.expect(af == cp && af == cp_plain, "af(G,M) == c'(M)", data);
        ck.expect(static_cast<int>(feedback.size()) == af
                      && static_cast<int>(packing.size()) == static_cast<int>(feedback.size()),
                  "min feedback set == max arc-disjoint dicycles == af", data);
        ck.expect(dicycles.size() == cycles.size(), "dicycles of the contraction == alternating cycles", data);
    }
}

void max_antiforcing_vs_fries(const CorpusEntry& e, const std::vector<Matching>& pms, const SuiteOptions&, Check& ck)
{
    const auto& h = std::get<HexSystem>(e.instance);
    const int big_af = antiforcing_spectrum(h.graph(), pms).max;
    const int fries = fries_numbers(h, pms).fries_max;
    ck.expect(big_af == fries, "Af(H) == Fries(H)", Json{{"Af", big_af}, {"Fries", fries}});
}

void clar_fries_bounds(const CorpusEntry& e, const std::vector<Matching>& pms, const SuiteOptions&, Check& ck)
{
    const auto& h = std::get<HexSystem>(e.instance);
    const int cl = clar_number(h, pms).value;
    const int fries = fries_numbers(h, pms).fries_max;
    ck.expect(cl <= fries && fries <= 2 * cl, "cl <= Fries <= 2 cl", Json{{"cl", cl}, {"Fries", fries}});
}

void fries_equals_cells(const CorpusEntry& e, const std::vector<Matching>& pms, const SuiteOptions&, Check& ck)
{
    const auto& h = std::get<HexSystem>(e.instance);
    const int fries = fries_numbers(h, pms).fries_max;
    const bool kink = is_all_kink_catahex(h);
    const Json d{{"Fries", fries}, {"cells", h.cell_count()}, {"all_kink", kink}};
    ck.expect(fries <= h.cell_count(), "Fries <= n", d);
    ck.expect((fries == h.cell_count()) == kink, "Fries == n iff all-kink catahex", d);
}

void all_kink_max_antiforcing(const CorpusEntry& e, const std::vector<Matching>& pms, const SuiteOptions&, Check& ck)
{
    const auto& h = std::get<HexSystem>(e.instance);
    if (!is_all_kink_catahex(h)) {
        ck.skip("not an all-kink catahex");
        return;
    }
    const auto dual = inner_dual(h);
    const int n = dual.node_count();
    const int nu = tree_matching_number(n, dual.edges);
    const int alpha = tree_independence_number(n, dual.edges);
    const int big_af = antiforcing_spectrum(h.graph(), pms).max;
    const int big_f = forcing_spectrum(h.graph(), pms).max;
    const Json d{{"Af", big_af}, {"F", big_f}, {"nu", nu}, {"alpha", alpha}, {"n", n}};
    ck.expect((big_af == 2 * big_f) == (2 * nu == n), "Af == 2F iff the inner dual has a perfect matching", d);
    ck.expect(nu + alpha == n, "nu + alpha == n on the inner dual", d);
}

void all_kink_min_forcing(const CorpusEntry& e, const std::vector<Matching>& pms, const SuiteOptions&, Check& ck)
{
    const auto& h = std::get<HexSystem>(e.instance);
    if (!is_all_kink_catahex(h)) {
        ck.skip("not an all-kink catahex");
        return;
    }
    const auto dual = inner_dual(h);
    const int i_dp = tree_independent_domination(dual).value;
    const int i_bf = brute_force_independent_domination(dual.node_count(), dual.edges);
    const int f = forcing_spectrum(h.graph(), pms).min;
    const int fries_min = fries_numbers(h, pms).fries_min;
    const Json d{{"f", f}, {"i_dp", i_dp}, {"i_brute", i_bf}, {"fries_min", fries_min}};
    ck.expect(i_dp == i_bf, "tree DP i(T) == brute force", d);
    ck.expect(f == i_dp && i_dp == fries_min, "f(H) == i(H*) == fries(H)", d);
}

bool congruent(std::span<const Cell> a, std::span<const Cell> b)
{
    const auto target = normalize_cells(b);
    for (int k = 0; k < 12; ++k)
        if (normalize_cells(transform_cells(a, k)) == target)
            return true;
    return false;
}

int expected_af_edges(std::span<const int> rows)
{
    const int cells = [&] {
        int s = 0;
        for (int x : rows)
            s += x;
        return s;
    }();
    if (cells == 1)
        return 6;
    if (rows.size() == 1 || rows.front() == 1)
        return 4;
    if (std::all_of(rows.begin(), rows.end(), [&](int x) { return x == rows.front(); }))
        return 2;
    return 1;
}

void single_antiforcing(const CorpusEntry& e, const std::vector<Matching>& pms, const SuiteOptions&, Check& ck)
{
    const auto& h = std::get<HexSystem>(e.instance);
    const int af = antiforcing_spectrum(h.graph(), pms).min;
    const auto rows = is_truncated_parallelogram(h);
    Json d{{"af", af}, {"rows", rows ? Json(*rows) : Json(nullptr)}};
    ck.expect((af == 1) == rows.has_value(), "af(H) == 1 iff truncated parallelogram", d);
    if (rows) {
        const int count = static_cast<int>(anti_forcing_edges(h.graph()).size());
        const int expected = expected_af_edges(*rows);
        d["anti_forcing_edges"] = count;
        d["expected"] = expected;
        ck.expect(count == expected, "anti-forcing edge count by shape", d);
    }
    // Several row vectors can describe one shape, so compare shapes.
    if (rows && e.id.starts_with("trunc-para/"))
        ck.expect(congruent(h.cells(), truncated_parallelogram_cells(*rows)), "recognized rows rebuild the shape", d);
}

void two_normal_components(const CorpusEntry& e, const std::vector<Matching>& pms, const SuiteOptions&, Check& ck)
{
    const auto& h = std::get<HexSystem>(e.instance);
    const auto fixed = edge_fixedness(h.graph(), pms);
    if (std::find(fixed.begin(), fixed.end(), EdgeFixedness::FixedSingle) == fixed.end()) {
        ck.skip("no fixed single edge");
        return;
    }
    const int af = antiforcing_spectrum(h.graph(), pms).min;
    const auto comps = hex_normal_components(h, pms);
    int tp = 0;
    for (const auto& c : comps)
        if (c.exact && truncated_parallelogram_rows(c.cells))
            ++tp;
    const bool shape = comps.size() == 2 && tp == 2;
    ck.expect((af == 2) == shape, "af == 2 iff exactly two normal components, both truncated parallelograms",
              Json{{"af", af}, {"components", comps.size()}, {"truncated_parallelograms", tp}});
}

void cut_invariance(const CorpusEntry& e, const std::vector<Matching>& pms, const SuiteOptions&, Check& ck)
{
    const auto& h = std::get<HexSystem>(e.instance);
    for (const auto& cut : sachs_cuts(h)) {
        const auto r = sachs_cut_check(h, cut, pms);
        ck.expect(r.invariant, "|cut ∩ M| is the same for every perfect matching",
                  Json{{"cut", cut}, {"per_matching", r.per_matching}});
    }
}

struct Suite {
    std::string id;
    std::vector<CorpusEntry> (*corpus)(const SuiteOptions&);
    SuiteBody body;
};

const std::vector<Suite>& suites()
{
    static const std::vector<Suite> all{
        {"thm2", full_corpus, packing_vs_forcing},
        {"thm3", hex_corpus, max_forcing_vs_clar},
        {"thm5", full_corpus, forcing_sandwich},
        {"lem8", full_corpus, compatible_lower_bound},
        {"thm9", planar_bipartite_corpus, minimax_compatible},
        {"thm11", hex_corpus, max_antiforcing_vs_fries},
        {"cor12", hex_corpus, clar_fries_bounds},
        {"thm13", hex_corpus, fries_equals_cells},
        {"thm14", hex_corpus, all_kink_max_antiforcing},
        {"thm15", hex_corpus, all_kink_min_forcing},
        {"thm16",
         [](const SuiteOptions& o) {
             auto out = hex_corpus(o);
             for (auto& e : truncated_parallelogram_corpus(o.max_tp_cells))
                 out.push_back(std::move(e));
             return out;
         },
         single_antiforcing},
        {"thm20", hex_corpus, two_normal_components},
        {"lem19", hex_corpus, cut_invariance},
    };
    return all;
}

} // namespace

std::vector<CorpusEntry> polyhex_corpus(int max_cells)
{
    std::vector<CorpusEntry> out;
    for (int n = 1; n <= max_cells; ++n) {
        auto systems = enumerate_hex_systems(n, max_cells);
        for (std::size_t i = 0; i < systems.size(); ++i)
            out.push_back({"polyhex/" + std::to_string(n) + "/" + std::to_string(i), std::move(systems[i])});
    }
    return out;
}

std::vector<CorpusEntry> named_corpus()
{
    std::vector<CorpusEntry> out;
    for (const auto& name : named_instances())
        out.push_back({"named/" + name, gen_named(name)});
    return out;
}

std::vector<CorpusEntry> preset_corpus()
{
    std::vector<CorpusEntry> out;
    for (const auto& spec : glue_presets())
        out.push_back({"preset/" + spec.name, glue_af2(spec).system});
    return out;
}

std::vector<CorpusEntry> truncated_parallelogram_corpus(int max_cells)
{
    std::vector<std::vector<int>> seqs;
    std::vector<int> prefix;
    row_sequences(max_cells, max_cells, prefix, seqs);
    std::sort(seqs.begin(), seqs.end());
    std::vector<CorpusEntry> out;
    for (const auto& rows : seqs)
        out.push_back({"trunc-para/" + join(rows), gen_truncated_parallelogram(rows)});
    return out;
}

const std::vector<std::string>& suite_ids()
{
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& s : suites())
            v.push_back(s.id);
        return v;
    }();
    return ids;
}

SuiteSummary run_suite(std::string_view id, const SuiteOptions& options,
                       const std::function<void(const CheckOutcome&)>& sink)
{
    const auto it = std::find_if(suites().begin(), suites().end(), [&](const Suite& s) { return s.id == id; });
    if (it == suites().end())
        throw Error(ErrorKind::UnknownSuite, "unknown suite '" + std::string(id) + "'");
    SuiteSummary summary;
    summary.suite = it->id;
    for (const CorpusEntry& entry : it->corpus(options)) {
        Check ck(entry);
        const auto pms = enumerate_perfect_matchings(graph_of(entry.instance), options.limits);
        if (pms.empty())
            ck.skip("no perfect matching");
        else
            it->body(entry, pms, options, ck);
        const CheckOutcome outcome = ck.outcome();
        switch (outcome.status) {
        case Status::Pass: ++summary.passed; break;
        case Status::Skipped: ++summary.skipped; break;
        case Status::Fail:
            ++summary.failed;
            summary.failures.push_back(outcome);
            break;
        }
        if (sink)
            sink(outcome);
    }
    return summary;
}

int brute_force_independent_domination(int n, std::span<const std::pair<int, int>> edges)
{
    if (n > 24)
        throw Error(ErrorKind::TooLarge, "brute force limited to 24 vertices");
    std::vector<std::uint32_t> closed(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        closed[static_cast<std::size_t>(v)] = 1u << v;
    for (auto [a, b] : edges) {
        closed[static_cast<std::size_t>(a)] |= 1u << b;
        closed[static_cast<std::size_t>(b)] |= 1u << a;
    }
    const std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
    int best = n;
    for (std::uint32_t s = 0; s <= all; ++s) {
        std::uint32_t dominated = 0;
        bool independent = true;
        for (int v = 0; v < n && independent; ++v)
            if (s >> v & 1u) {
                independent = (closed[static_cast<std::size_t>(v)] & s) == (1u << v);
                dominated |= closed[static_cast<std::size_t>(v)];
            }
        if (independent && dominated == all)
            best = std::min(best, std::popcount(s));
        if (s == all)
            break;
    }
    return best;
}

} // namespace pmforce
