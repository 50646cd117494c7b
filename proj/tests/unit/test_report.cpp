#include "divlat/corpus.hpp"
#include "divlat/divide_io.hpp"
#include "divlat/report.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace divlat;
using nlohmann::json;

namespace {

std::string report_of(const Divide& d, const PipelineOptions& opt = {}) {
    return report_json(run_pipeline(d, opt), sha256_hex(write_divide(d)));
}

} // namespace

TEST_CASE("sha256 known vectors") {
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("reports are byte-identical across runs") {
    for (const auto& e : builtin_corpus(6)) {
        CAPTURE(e.name);
        CHECK(report_of(e.divide) == report_of(e.divide));
    }
}

TEST_CASE("report layout for A2") {
    const json j = json::parse(report_of(gen_a(2).divide));
    CHECK(j["schema_version"] == kReportSchemaVersion);
    CHECK(j["tool"]["version"] == kToolVersion);
    CHECK(j["input"]["name"] == "A2");
    CHECK(j["input"]["sha256"].get<std::string>().size() == 64);
    CHECK(j["invariants"]["mu"] == 2);
    CHECK(j["lattice"]["I"] == json::parse("[[0,-1],[1,0]]"));
    CHECK(j["lattice"]["S"] == json::parse("[[1,0],[-1,1]]"));
    CHECK(j["monodromy"]["M_desc"] == json::parse("[[0,-1],[1,1]]"));
    CHECK(j["monodromy"]["rho_S"] == json::parse("[[0,1],[-1,1]]"));
    CHECK(j["monodromy"]["char_poly_text"] == "t^2 - t + 1");
    CHECK(j["monodromy"]["order_desc"] == 6);
    CHECK(j["verdict"] == "pass");
    CHECK(j["failures"].empty());
    for (const auto& c : j["identity_suite"]) {
        CHECK(c["verdict"] == "pass");
        CHECK(c.contains("evidence"));
    }
    CHECK(j["euler"]["certificate"]["verdict"] == "pass");
    CHECK(j["depth1_cones"].empty());
    CHECK(j["calibration"].is_string());
}

TEST_CASE("E6 report: nine arrows, non-gating trace check fails") {
    const json j = json::parse(report_of(gen_e6().divide));
    CHECK(j["euler"]["arrows"].size() == 9);
    CHECK(j["verdict"] == "pass");
    bool found = false;
    for (const auto& c : j["identity_suite"]) {
        if (c["name"] == "lefschetz_trace_asc") {
            found = true;
            CHECK(c["verdict"] == "fail");
            CHECK(c["gating"] == false);
            CHECK(c["evidence"] == "trace M_asc = -7");
        }
    }
    CHECK(found);
    CHECK(j["monodromy"]["same_char_poly"] == false);
}

TEST_CASE("depth-one report carries a cone record") {
    const json j = json::parse(report_of(gen_depth1().divide));
    REQUIRE(j["depth1_cones"].size() == 1);
    CHECK(j["depth1_cones"][0]["components"] == 2);
    CHECK(j["monodromy"]["order_desc"] == "exceeds max");
}

TEST_CASE("vertex order option") {
    const auto r = run_pipeline(gen_e6().divide);
    std::vector<std::string> order;
    for (const auto& v : r.ag.vertices) {
        order.push_back(v.id);
    }
    std::swap(order[2], order[3]);
    PipelineOptions opt;
    opt.vertex_order = order;
    const auto s = run_pipeline(gen_e6().divide, opt);
    CHECK(s.all_pass());
    CHECK(s.ag.vertices[2].id == r.ag.vertices[3].id);
    opt.vertex_order = {"p1"};
    CHECK_THROWS_AS(run_pipeline(gen_e6().divide, opt), std::invalid_argument);
}

TEST_CASE("CSV output") {
    CHECK(matrix_csv(IntMatrix{{0, -1}, {1, 0}}) == "0,-1\n1,0\n");
    const auto dir = std::filesystem::temp_directory_path() / "divlat_csv_test";
    std::filesystem::remove_all(dir);
    write_csv_dir(run_pipeline(gen_a(2).divide), dir.string());
    for (const char* name : {"I", "S", "M_desc", "M_asc", "rho_S", "E"}) {
        CHECK(std::filesystem::exists(dir / (std::string(name) + ".csv")));
    }
    std::ifstream in(dir / "M_desc.csv");
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == "0,-1\n1,1\n");
    std::filesystem::remove_all(dir);
}

TEST_CASE("seed flip shows up as pipeline failures on E6") {
    Divide d = gen_e6().divide;
    d.sign_seed.sign = -d.sign_seed.sign;
    const auto r = run_pipeline(d);
    // the flipped divide is still internally consistent
    CHECK(r.all_pass());
    CHECK(r.ag.count(VertexType::Minus) == 1);
    CHECK(r.ag.count(VertexType::Plus) == 2);
}
