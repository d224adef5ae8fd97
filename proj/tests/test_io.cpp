#include "pmforce/error.hpp"
#include "pmforce/generators.hpp"
#include "pmforce/io.hpp"
#include "pmforce/report.hpp"

#include <doctest.h>

#include <string>

using namespace pmforce;

namespace {

std::string parse_error(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::ParseError)
            return e.what();
        return "other";
    }
    return "none";
}

} // namespace

TEST_CASE("graph format round trip")
{
    for (const auto& name : {"dodecahedron", "C4", "C6"}) {
        const Graph g = std::get<Graph>(gen_named(name));
        const std::string text = write_graph(g);
        const Graph back = parse_graph(text);
        CHECK(back == g);
        CHECK(write_graph(back) == text);
    }
    const Graph colored(2, {{0, 1}}, std::vector<Color>{Color::Black, Color::White});
    CHECK(write_graph(colored) == "p 2 1\ne 0 1\nc 0 1\nc 1 0\n");
    CHECK(parse_graph(write_graph(colored)) == colored);
}

TEST_CASE("graph format details")
{
    const Graph g = parse_graph("# a path\np 3 2\n\ne 0 1  # first\ne 1 2\n");
    CHECK(g.edge_count() == 2);
    CHECK(write_graph(g) == "p 3 2\ne 0 1\ne 1 2\n");
    const std::string dodeca = write_graph(dodecahedron());
    CHECK(std::count(dodeca.begin(), dodeca.end(), 'e') >= 30);
}

TEST_CASE("graph parse errors name the line")
{
    CHECK(parse_error([] { parse_graph(""); }).find("line 1") != std::string::npos);
    CHECK(parse_error([] { parse_graph("e 0 1\n"); }).find("header") != std::string::npos);
    CHECK(parse_error([] { parse_graph("p 2 1\ne 0 x\n"); }).find("line 2") != std::string::npos);
    CHECK(parse_error([] { parse_graph("p 2 1\ne 0 5\n"); }).find("out of range") != std::string::npos);
    CHECK(parse_error([] { parse_graph("p 2 2\ne 0 1\n"); }).find("declares 2") != std::string::npos);
    CHECK(parse_error([] { parse_graph("p 2 1\ne 0 1\nq 1\n"); }).find("line 3") != std::string::npos);
    CHECK(parse_error([] { parse_graph("p 2 1\ne 0 1\nc 0 1\n"); }).find("colors") != std::string::npos);
    CHECK(parse_error([] { parse_graph("p 2 1\ne 0 1\nc 0 2\nc 1 0\n"); }).find("0 or 1") != std::string::npos);
    CHECK(parse_error([] { parse_graph("p 2 1\ne 0 1\n"); }) == "none");
    CHECK(parse_error([] { parse_graph("p 2 2\ne 0 1\ne 1 0\n"); }) == "other");
}

TEST_CASE("hex format round trip")
{
    const auto h = gen_truncated_parallelogram(std::vector<int>{5, 5, 3, 2});
    const std::string text = write_hex(h);
    CHECK(std::count(text.begin(), text.end(), '\n') == 15);
    const auto back = parse_hex(text);
    CHECK(back == h);
    CHECK(write_hex(back) == text);
    CHECK(parse_hex("1 0\n# comment\n0 0\n") == parse_hex("0 0\n1 0\n"));
}

TEST_CASE("hex parse errors")
{
    CHECK(parse_error([] { parse_hex("0 0\n0 0\n"); }).find("duplicate") != std::string::npos);
    CHECK(parse_error([] { parse_hex("0 0\n1\n"); }).find("line 2") != std::string::npos);
    CHECK(parse_error([] { parse_hex("# nothing\n"); }).find("no cells") != std::string::npos);
    CHECK(parse_error([] { parse_hex("0 0\n5 5\n"); }) == "other");
}

TEST_CASE("fnv1a reference values")
{
    CHECK(fnv1a("") == 14695981039346656037ULL);
    CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
}

TEST_CASE("reports carry re-validating witnesses")
{
    const Instance tri = gen_named("triphenylene");
    const std::vector<std::string> names{"f", "F", "af", "Af", "f_spectrum", "af_spectrum", "c", "c_prime",
                                         "clar", "fries", "fries_min", "anti_forcing_edges"};
    const Json report = compute_report(tri, "triphenylene", names);
    CHECK(report["instance"]["kind"] == "hex");
    REQUIRE(report["invariants"].size() == names.size());
    for (std::size_t i = 0; i < names.size(); ++i)
        CHECK(report["invariants"][i]["name"] == names[i]);
    CHECK(report["invariants"][5]["value"]["value_set"] == Json::parse("[2,3,4]"));
    CHECK(validate_witnesses(tri, report).empty());

    Json tampered = report;
    tampered["invariants"][2]["witness"]["set"] = Json::array();
    CHECK_FALSE(validate_witnesses(tri, tampered).empty());
}

TEST_CASE("report replay reproduces values")
{
    const Instance d = gen_named("dodecahedron");
    const std::vector<std::string> names{"f_spectrum", "af", "c_prime"};
    const Json a = compute_report(d, "d", names);
    const Json b = compute_report(parse_graph(write_graph(std::get<Graph>(d))), "d", names);
    CHECK(a["instance"] == b["instance"]);
    for (std::size_t i = 0; i < names.size(); ++i) {
        CHECK(a["invariants"][i]["value"] == b["invariants"][i]["value"]);
        CHECK(a["invariants"][i]["witness"] == b["invariants"][i]["witness"]);
    }
    CHECK(validate_witnesses(d, a).empty());
}

TEST_CASE("inapplicable and unknown invariants")
{
    const Instance c6 = gen_named("C6");
    const std::vector<std::string> clar{"clar"};
    const std::vector<std::string> bogus{"tau"};
    try {
        (void)compute_report(c6, "c6", clar);
        FAIL("expected Inapplicable");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Inapplicable);
    }
    try {
        (void)compute_report(c6, "c6", bogus);
        FAIL("expected UnknownName");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownName);
    }
}
