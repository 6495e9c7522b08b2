#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gausssum/render.hpp"

using namespace gausssum;

TEST_CASE("table json round-trips byte-identically for every kind") {
    for (const TableOptions& opt :
         {TableOptions{"lemma1", 16, 3, 4, 1, kDefaultSumBound},
          TableOptions{"prop10", 8, 7, 5, 3, kDefaultSumBound},
          TableOptions{"prop11", 8, 3, 6, 3, kDefaultSumBound},
          TableOptions{"reflection", 8, 3, 4, 1, kDefaultSumBound}}) {
        const std::string text = make_table(opt).dump();
        const std::string again = ordered_json::parse(text).dump();
        CHECK(text == again);
    }
}

TEST_CASE("lemma1 table rows follow the four-case pattern") {
    const ordered_json t = make_table({"lemma1", 8, 3, 4, 1, kDefaultSumBound});
    REQUIRE(t.at("rows").size() == 8);
    CHECK(t.at("rows")[0].at("exact").at("kind") == "root8");   // a=1 -> 1
    CHECK(t.at("rows")[1].at("exact").at("kind") == "zero");    // a=2 -> 0
    CHECK(t.at("rows")[2].at("exact").at("octant") == 2);       // a=3 -> i
    CHECK(t.at("rows")[3].at("exact").at("radicand") == 2);     // a=4 -> 1+i
    // columns fixed: inputs, exact, re, im
    CHECK(t.at("columns") == ordered_json({"a", "exact", "re", "im"}));
}

TEST_CASE("reflection table is the constant 1 column for odd p") {
    const ordered_json t = make_table({"reflection", 8, 3, 4, 1, kDefaultSumBound});
    for (const auto& row : t.at("rows")) {
        CHECK(row.at("exact").at("coeff") == "1");
        CHECK(row.at("exact").at("radicand") == 1);
        CHECK(row.at("exact").at("octant") == 0);
    }
}

TEST_CASE("csv rendering is deterministic and quotes the json cell") {
    const ordered_json t = make_table({"lemma1", 4, 3, 4, 1, kDefaultSumBound});
    const std::string csv1 = table_to_csv(t);
    const std::string csv2 = table_to_csv(make_table({"lemma1", 4, 3, 4, 1, kDefaultSumBound}));
    CHECK(csv1 == csv2);
    CHECK(csv1.rfind("a,exact,re,im\n", 0) == 0);
    CHECK(csv1.find("\"{\"\"kind\"\"") != std::string::npos);
    // 4 rows + header
    CHECK(std::count(csv1.begin(), csv1.end(), '\n') == 5);
}

TEST_CASE("unknown table kind is rejected") {
    CHECK_THROWS_AS(make_table({"nope", 4, 3, 4, 1, kDefaultSumBound}),
                    std::invalid_argument);
}

TEST_CASE("report json carries the verdict fields") {
    const VerificationReport rep = verify_ls(3, 1);
    const ordered_json j = report_to_json(rep);
    CHECK(j.at("pass") == true);
    CHECK(j.at("exact").at("octant") == 2);
    CHECK(j.at("failing_step").is_null());
    CHECK(j.at("tolerance") == 1e-6);
}
