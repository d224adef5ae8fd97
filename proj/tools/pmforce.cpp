#include "pmforce/error.hpp"
#include "pmforce/generators.hpp"
#include "pmforce/io.hpp"
#include "pmforce/report.hpp"
#include "pmforce/verify.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace pmforce;

namespace {

enum Exit : int {
    kOk = 0,
    kFailed = 1,
    kParse = 2,
    kInapplicable = 3,
    kCap = 4,
    kUsage = 5,
};

int exit_code(ErrorKind k)
{
    switch (k) {
    case ErrorKind::LimitExceeded: return kCap;
    case ErrorKind::Inapplicable:
    case ErrorKind::NoPerfectMatching:
    case ErrorKind::NotBipartite: return kInapplicable;
    case ErrorKind::UnknownName:
    case ErrorKind::UnknownSuite:
    case ErrorKind::BadRowSequence:
    case ErrorKind::TooLarge:
    case ErrorKind::InvalidGlue: return kUsage;
    default: return kFailed;
    }
}

void emit(const std::string& text, const std::string& out)
{
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f)
        throw Error(ErrorKind::ParseError, "cannot write " + out);
    f << text;
}

std::vector<int> parse_rows(const std::string& s)
{
    std::vector<int> rows;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            std::size_t used = 0;
            rows.push_back(std::stoi(tok, &used));
            if (used != tok.size())
                throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw Error(ErrorKind::BadRowSequence, "bad row length '" + tok + "'");
        }
    }
    return rows;
}

struct Caps {
    std::size_t max_matchings = Limits{}.max_matchings;
    std::size_t max_cycles = Limits{}.max_cycles;
    unsigned seed = 0; // reserved

    Limits limits() const { return {max_matchings, max_cycles}; }
};

void add_caps(CLI::App* cmd, Caps& caps)
{
    cmd->add_option("--max-matchings", caps.max_matchings, "Perfect-matching enumeration cap");
    cmd->add_option("--max-cycles", caps.max_cycles, "Alternating-cycle enumeration cap");
    cmd->add_option("--seed", caps.seed, "Reserved");
}

int run_compute(const std::string& in, const std::vector<std::string>& inv, const std::string& id,
                const std::string& out, const Caps& caps)
{
    Instance x;
    try {
        x = read_instance(in);
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return kParse;
    }
    const Json report = compute_report(x, id.empty() ? fs::path(in).stem().string() : id, inv, caps.limits());
    emit(report.dump(2) + "\n", out);
    return kOk;
}

int run_verify(const std::string& suite, int max_cells, bool quiet, const Caps& caps)
{
    SuiteOptions options;
    options.max_cells = max_cells;
    options.limits = caps.limits();
    const auto summary = run_suite(suite, options, [&](const CheckOutcome& o) {
        switch (o.status) {
        case Status::Pass:
            if (!quiet)
                std::cout << "PASS " << o.instance << '\n';
            break;
        case Status::Skipped:
            if (!quiet)
                std::cout << "SKIP " << o.instance << " (" << o.detail << ")\n";
            break;
        case Status::Fail:
            std::cout << "FAIL " << o.instance << ": " << o.detail << '\n' << o.counterexample.dump() << '\n';
            break;
        }
    });
    std::cout << summary.suite << ": " << summary.passed << " passed, " << summary.failed << " failed, "
              << summary.skipped << " skipped\n";
    return summary.ok() ? kOk : kFailed;
}

int run_generate(const std::string& family, const std::string& param, const std::string& out, int max_cells)
{
    if (family == "trunc-para") {
        emit(write_hex(gen_truncated_parallelogram(parse_rows(param))), out);
        return kOk;
    }
    if (family == "named") {
        emit(write_instance(gen_named(param)), out);
        return kOk;
    }
    if (family == "glue") {
        for (const auto& spec : glue_presets())
            if (spec.name == param) {
                emit(write_hex(glue_af2(spec).system), out);
                return kOk;
            }
        throw Error(ErrorKind::UnknownName, "unknown glue preset '" + param + "'");
    }
    if (family == "polyhex-corpus") {
        int n = 0;
        try {
            n = std::stoi(param);
        } catch (const std::exception&) {
            throw Error(ErrorKind::TooLarge, "expected a cell count, got '" + param + "'");
        }
        const auto systems = enumerate_hex_systems(n, max_cells);
        if (out.empty()) {
            for (std::size_t i = 0; i < systems.size(); ++i)
                std::cout << "# polyhex/" << n << '/' << i << '\n' << write_hex(systems[i]);
            return kOk;
        }
        fs::create_directories(out);
        for (std::size_t i = 0; i < systems.size(); ++i) {
            char name[32];
            std::snprintf(name, sizeof name, "polyhex-%d-%05zu.hex", n, i);
            emit(write_hex(systems[i]), (fs::path(out) / name).string());
        }
        std::cout << systems.size() << " files written to " << out << '\n';
        return kOk;
    }
    throw Error(ErrorKind::UnknownName, "unknown family '" + family + "'");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Forcing and anti-forcing numbers of perfect matchings"};
    app.require_subcommand(1);
    Caps caps;

    auto* compute = app.add_subcommand("compute", "Compute invariants of a .graph or .hex file");
    std::string in, out, id;
    std::vector<std::string> inv;
    compute->add_option("--in", in, "Input file")->required();
    compute->add_option("--inv", inv, "Comma-separated invariants")->required()->delimiter(',');
    compute->add_option("--out", out, "Write the report here instead of stdout");
    compute->add_option("--id", id, "Instance id (default: file stem)");
    add_caps(compute, caps);

    auto* verify = app.add_subcommand("verify", "Run a check suite over its corpus");
    std::string suite;
    int max_cells = 6;
    bool quiet = false;
    verify->add_option("--suite", suite, "Suite id")->required();
    verify->add_option("--max-cells", max_cells, "Largest polyhex in the corpus");
    verify->add_flag("--quiet", quiet, "Only print failures and the summary");
    add_caps(verify, caps);

    auto* generate = app.add_subcommand("generate", "Write a generated instance");
    std::string family, param, gen_out;
    int gen_max_cells = 8;
    generate->add_option("family", family, "trunc-para | named | glue | polyhex-corpus")->required();
    generate->add_option("param", param, "Rows, name, preset or cell count")->required();
    generate->add_option("--out", gen_out, "Output file (directory for polyhex-corpus)");
    generate->add_option("--max-cells", gen_max_cells, "Largest corpus size allowed");
    add_caps(generate, caps);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*compute)
            return run_compute(in, inv, id, out, caps);
        if (*verify)
            return run_verify(suite, max_cells, quiet, caps);
        return run_generate(family, param, gen_out, gen_max_cells);
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return kFailed;
    }
}
