#include "divlat/corpus.hpp"
#include "divlat/divide_io.hpp"

#include <doctest.h>

#include <algorithm>

using namespace divlat;

namespace {

bool mentions(const std::vector<std::string>& diags, const std::string& needle) {
    return std::any_of(diags.begin(), diags.end(),
                       [&](const std::string& d) { return d.find(needle) != std::string::npos; });
}

const char* kA2 = R"({
  "name": "A2",
  "mode": "map",
  "double_points": ["p1"],
  "terminals": ["t1", "t2"],
  "edges": [
    {"id": "e1", "ends": [["t1", 0], ["p1", 0]]},
    {"id": "e2", "ends": [["p1", 2], ["p1", 1]]},
    {"id": "e3", "ends": [["p1", 3], ["t2", 0]]}
  ],
  "branches": [
    ["e1", "e2", "e3"]
  ],
  "sign_seed": {"edge": "e2", "side": "right", "sign": "-"}
}
)";

std::string replace(std::string s, const std::string& from, const std::string& to) {
    const auto at = s.find(from);
    REQUIRE(at != std::string::npos);
    return s.replace(at, from.size(), to);
}

} // namespace

TEST_CASE("hand-written A2 file parses to the generator output") {
    const auto out = parse_divide(kA2);
    REQUIRE(out.ok());
    CHECK(*out.divide == gen_a(2).divide);
    CHECK(write_divide(*out.divide) == kA2);
}

TEST_CASE("round trip over the corpus") {
    for (const auto& e : builtin_corpus(12)) {
        CAPTURE(e.name);
        const std::string text = write_divide(e.divide);
        const Divide back = read_divide(text);
        CHECK(back == e.divide);
        CHECK(write_divide(back) == text);
    }
}

TEST_CASE("slot used twice is diagnosed") {
    const auto out = parse_divide(replace(kA2, R"(["p1", 3], ["t2", 0])", R"(["p1", 0], ["t2", 0])"));
    CHECK_FALSE(out.ok());
    CHECK(mentions(out.diagnostics, "slot used twice"));
}

TEST_CASE("degree mismatch") {
    const auto out = parse_divide(replace(kA2, R"(["p1", 3], ["t2", 0])", R"(["p1", 3], ["t2", 1])"));
    CHECK_FALSE(out.ok());
    CHECK(mentions(out.diagnostics, "degree mismatch"));
}

TEST_CASE("unknown keys are rejected") {
    const auto out = parse_divide(replace(kA2, R"("mode": "map",)", R"("mode": "map", "colour": 3,)"));
    CHECK_FALSE(out.ok());
    CHECK(mentions(out.diagnostics, "unknown key 'colour'"));
}

TEST_CASE("malformed input never throws") {
    CHECK(mentions(parse_divide("{").diagnostics, "malformed JSON"));
    CHECK(mentions(parse_divide("[1, 2]").diagnostics, "single JSON object"));
    CHECK(mentions(parse_divide(R"({"name": "x", "mode": "sketch"})").diagnostics, "mode must be"));
    CHECK_FALSE(parse_divide(replace(kA2, R"("sign": "-")", R"("sign": "?")")).ok());
    CHECK_THROWS_AS(read_divide("{"), DivideError);
}

TEST_CASE("polyline mode runs the geometric ingestion") {
    const char* text = R"({
      "name": "E6",
      "mode": "polyline",
      "disc_radius": 10,
      "branches": [
        {"points": [[-23, -24], [3, 2], [1, 4], [-3, 0], [1, -4], [3, -2], [-13, 14]], "closed": false}
      ],
      "sign_seed": {"point": [-1, 0], "sign": "+"}
    })";
    const auto out = parse_divide(text);
    REQUIRE(out.ok());
    CHECK(*out.divide == gen_e6().divide);
}

TEST_CASE("polyline diagnostics surface through the parser") {
    const char* text = R"({
      "name": "bad",
      "mode": "polyline",
      "disc_radius": 10,
      "branches": [{"points": [[-20, 0], [20, 0]], "closed": false}],
      "sign_seed": {"point": [0, 0], "sign": "+"}
    })";
    const auto out = parse_divide(text);
    CHECK_FALSE(out.ok());
    CHECK(mentions(out.diagnostics, "witness point on a curve"));
}

TEST_CASE("writer output is stable across calls") {
    const Divide d = gen_depth1().divide;
    CHECK(write_divide(d) == write_divide(gen_depth1().divide));
}
