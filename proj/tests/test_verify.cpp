#include "pmforce/error.hpp"
#include "pmforce/verify.hpp"

#include <doctest.h>

using namespace pmforce;

TEST_CASE("every suite passes on a small corpus")
{
    SuiteOptions o;
    o.max_cells = 4;
    o.max_tp_cells = 6;
    for (const auto& id : suite_ids()) {
        int reported = 0;
        const auto s = run_suite(id, o, [&](const CheckOutcome&) { ++reported; });
        CAPTURE(id);
        CHECK(s.ok());
        CHECK(s.passed > 0);
        CHECK(reported == s.passed + s.failed + s.skipped);
    }
}

TEST_CASE("unknown suite")
{
    try {
        (void)run_suite("thm99");
        FAIL("expected UnknownSuite");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownSuite);
    }
}

TEST_CASE("corpora")
{
    CHECK(polyhex_corpus(3).size() == 15);
    CHECK(truncated_parallelogram_corpus(4).size() == 11);
    CHECK(truncated_parallelogram_corpus(12).size() == 271);
    CHECK(preset_corpus().size() == 4);
    CHECK(named_corpus().size() == 5);
}
