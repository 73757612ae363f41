#include <doctest.h>

#include <string>
#include <vector>

#include "shodlab/errors.hpp"
#include "shodlab/io.hpp"

using namespace shodlab;

namespace {

std::vector<std::string> keys(const io::Json& object) {
    std::vector<std::string> out;
    for (auto it = object.begin(); it != object.end(); ++it) out.push_back(it.key());
    return out;
}

}  // namespace

TEST_CASE("integer lists") {
    CHECK(io::parse_int_list("4,3,3,2,1") == std::vector<int>{4, 3, 3, 2, 1});
    CHECK(io::parse_int_list(" 4 3  3 2 1 ") == std::vector<int>{4, 3, 3, 2, 1});
    CHECK(io::parse_int_list("4, 3,3 ,2,1") == std::vector<int>{4, 3, 3, 2, 1});
    CHECK(io::parse_int_list("").empty());
    CHECK_THROWS_AS(io::parse_int_list("4,,3"), ParseError);
    CHECK_THROWS_AS(io::parse_int_list(",4"), ParseError);
    CHECK_THROWS_AS(io::parse_int_list("4,"), ParseError);
    CHECK_THROWS_AS(io::parse_int_list("4,x"), ParseError);
    CHECK_THROWS_AS(io::parse_int_list("4.5"), ParseError);
    CHECK_THROWS_AS(io::parse_int_list("99999999999"), ParseError);
}

TEST_CASE("path parsing") {
    const DyckPath p = io::parse_area("4,3,3,2,1");
    CHECK(p.steps() == "UUUDDUDD");
    CHECK(io::parse_steps(" UUUDDUDD\n") == p);
    CHECK(io::parse_path("UUUDDUDD") == p);
    CHECK(io::parse_path("4 3 3 2 1") == p);
    CHECK(io::parse_path("1") == DyckPath{});

    CHECK_THROWS_AS(io::parse_area("2,1,5"), InvalidAreaSequence);
    CHECK_THROWS_AS(io::parse_area(""), InvalidAreaSequence);
    CHECK_THROWS_AS(io::parse_steps("UDD"), InvalidStepWord);
    CHECK_THROWS_AS(io::parse_steps("UXDD"), InvalidStepWord);
    CHECK_THROWS_AS(io::parse_path("UD1"), ParseError);

    try {
        io::parse_area("2,1,5");
        FAIL("expected InvalidAreaSequence");
    } catch (const InvalidAreaSequence& e) {
        CHECK(e.rule() == InvalidAreaSequence::Rule::EntryBelowTwo);
        CHECK(e.index() == 1);
    }
}

TEST_CASE("module points, kinds and permutations") {
    CHECK(io::parse_module_point("2,1") == ModulePoint{2, 1});
    CHECK(io::parse_module_point(" 0 , 3 ") == ModulePoint{0, 3});
    CHECK_THROWS_AS(io::parse_module_point("2"), ParseError);
    CHECK_THROWS_AS(io::parse_module_point("1,2,3"), ParseError);

    CHECK(io::parse_kind("proj") == ResolutionKind::Projective);
    CHECK(io::parse_kind("injective") == ResolutionKind::Injective);
    CHECK_THROWS_AS(io::parse_kind("flat"), ParseError);

    const Permutation expected({4, 2, 3, 5, 1});
    CHECK(io::parse_permutation("4 2 3 5 1") == expected);
    CHECK(io::parse_permutation("4,2,3,5,1") == expected);
    CHECK(io::parse_permutation("42351") == expected);
    CHECK(io::parse_permutation("1") == Permutation::identity(1));
    CHECK(io::parse_permutation("10 9 8 7 6 5 4 3 2 1") == Permutation::decreasing(10));
    CHECK_THROWS_AS(io::parse_permutation(""), ParseError);
    CHECK_THROWS_AS(io::parse_permutation("4 2 2"), InvalidPermutation);
    CHECK_THROWS_AS(io::parse_permutation("4a"), ParseError);

    const auto patterns = io::parse_patterns("132,4321,4231");
    REQUIRE(patterns.size() == 3);
    CHECK(patterns[1] == Permutation::decreasing(4));
    CHECK(patterns[2] == Permutation({4, 2, 3, 1}));
    CHECK_THROWS_AS(io::parse_patterns("12,,21"), ParseError);
    CHECK_THROWS_AS(io::parse_patterns("122"), InvalidPermutation);
}

TEST_CASE("formatting") {
    CHECK(io::format_area(std::vector<int>{3, 4, 3, 2, 2, 1}) == "3,4,3,2,2,1");
    CHECK(io::format_permutation(Permutation({4, 2, 3, 5, 1})) == "4 2 3 5 1");
    CHECK(io::format_point({2, 1}) == "(2,1)");
    CHECK(io::to_string(ResolutionKind::Injective) == "injective");
}

TEST_CASE("resolution json and table") {
    const DyckPath p = io::parse_area("2,3,2,2,1");
    const Resolution res = resolution(p, {2, 1}, ResolutionKind::Projective);
    const io::Json j = io::to_json(res);
    CHECK(keys(j) == std::vector<std::string>{"kind", "terms", "syzygies", "length"});
    CHECK(j.dump() == R"({"kind":"projective","terms":[[2,2],[3,2]],"syzygies":[[3,1],[4,1]],"length":2})");

    CHECK(io::resolution_table(res) ==
          "projective resolution\n"
          "step  cover  syzygy\n"
          "0     (2,2)  (3,1)\n"
          "1     (3,2)  (4,1)\n"
          "length  2\n");
}

TEST_CASE("verdict json and text") {
    const DyckPath p = io::parse_area("2,3,2,2,1");
    const Verdict v = classify_homological(p);
    const io::Json j = io::verdict_json(p, v);
    CHECK(keys(j) == std::vector<std::string>{"class", "gldim", "witness", "peaks", "d_succ", "d_pred"});
    CHECK(j["class"] == "not_shod");
    CHECK(j["witness"] == io::Json::array({2, 1}));
    CHECK(j["peaks"] == io::Json::array({0, 1, 3}));

    const DyckPath tilted = io::parse_area("4,3,3,2,1");
    const io::Json t = io::verdict_json(tilted, classify_homological(tilted));
    CHECK(t["class"] == "tilted");
    CHECK(t["witness"].is_null());
    CHECK(t["d_succ"].is_null());

    const std::string text = io::verdict_text(p, v);
    CHECK(text.find("class    not_shod\n") != std::string::npos);
    CHECK(text.find("witness  (2,1)\n") != std::string::npos);
    CHECK(text.rfind("area     2,3,2,2,1\n", 0) == 0);
}

TEST_CASE("census and report output") {
    const CensusRow row = class_counts(4);
    const io::Json j = io::to_json(row);
    CHECK(keys(j) == std::vector<std::string>{"m", "n", "total", "shod", "tilted", "strict", "f_tilted",
                                              "f_strict", "f_total", "agree"});
    CHECK(j.dump() ==
          R"({"m":4,"n":5,"total":14,"shod":12,"tilted":7,"strict":5,"f_tilted":7,"f_strict":5,"f_total":12,"agree":true})");

    const std::vector<CensusRow> rows{class_counts(1), row};
    const std::string table = io::census_table(rows);
    CHECK(table.rfind("m  n  total  shod  tilted  strict  f_tilted  f_strict  f_total  agree\n", 0) == 0);
    CHECK(table.find("4  5  14     12    7       5       7         5         12       yes\n") != std::string::npos);

    const VerifyReport report = verify_theorems(3);
    const io::Json plain = io::to_json(report, false);
    CHECK(keys(plain) == std::vector<std::string>{"max_semilength", "verified", "checks", "rows"});
    CHECK(keys(plain["checks"][0]) ==
          std::vector<std::string>{"id", "name", "status", "checked", "counterexample"});
    CHECK(plain["checks"][0]["status"] == "verified");
    CHECK(keys(io::to_json(report, true)) == std::vector<std::string>{"max_semilength", "verified", "checks", "rows",
                                                                      "seconds_per_semilength", "seconds"});

    const std::string text = io::report_text(report, false);
    CHECK(text.find("all checks verified\n") != std::string::npos);
    CHECK(text.find(" s\n") == std::string::npos);
    CHECK(io::report_text(report, true).find("total  ") != std::string::npos);
}
