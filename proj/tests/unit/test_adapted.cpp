#include "divlat/adapted.hpp"
#include "divlat/corpus.hpp"

#include <doctest.h>

using namespace divlat;

namespace {

struct Setup {
    AGDiagram ag;
    DepthLabels depths;
    MilnorLattice lat;
};

Setup setup(const Divide& d) {
    const auto s = sign_divide(d);
    Setup out;
    out.ag = build_ag(s);
    out.depths = depth_labels(out.ag, exposure_set(s, out.ag));
    out.lat = milnor_lattice(out.ag, invariants(s).r);
    return out;
}

IntVector v(std::initializer_list<long long> xs) {
    IntVector out;
    for (auto x : xs) {
        out.push_back(x);
    }
    return out;
}

} // namespace

TEST_CASE("A1 adapted family") {
    const auto s = setup(gen_a(1).divide);
    CHECK(adapted_vectors(s.lat) == std::vector<IntVector>{v({1})});
    CHECK(pl_variation(v({1}), s.lat) == v({-1}));
    const auto q = euler_matrix(s.lat);
    CHECK(q.E == IntMatrix{{1}});
    CHECK(q.arrows.empty());
    CHECK(quiver_dot(q, s.ag) == "digraph Quiver {\n  node [shape=circle];\n  v1 [label=\"1: V0_1\"];\n}\n");
}

TEST_CASE("A2 variation by hand iteration") {
    const auto s = setup(gen_a(2).divide);
    const auto family = adapted_vectors(s.lat);
    CHECK(family == std::vector<IntVector>{v({1, 0}), v({1, 1})});
    CHECK(pl_variation(family[0], s.lat) == v({-1, 0}));
    CHECK(pl_variation(family[1], s.lat) == v({0, -1}));
    CHECK(pl_variation(v({0, 0}), s.lat) == v({0, 0}));
    for (const auto& r : verify_adapted(family, s.lat)) {
        CHECK(r.pass);
    }
}

TEST_CASE("perturbed A2 family fails at the second index") {
    const auto s = setup(gen_a(2).divide);
    auto family = adapted_vectors(s.lat);
    family[1][0] += 1;
    const auto verdicts = verify_adapted(family, s.lat);
    CHECK(verdicts[0].pass);
    CHECK_FALSE(verdicts[1].pass);
    CHECK(verdicts[1].index == 1);
    CHECK(verdicts[1].image == v({-1, -1}));
}

TEST_CASE("E6: the plus region meets every other cycle") {
    const auto s = setup(gen_e6().divide);
    const auto family = adapted_vectors(s.lat);
    CHECK(family[5] == v({1, 1, 1, 1, 1, 1}));
    for (const auto& r : verify_adapted(family, s.lat)) {
        CHECK(r.pass);
    }
}

TEST_CASE("adapted clauses on every corpus entry") {
    for (const auto& e : builtin_corpus(12)) {
        CAPTURE(e.name);
        const auto s = setup(e.divide);
        const auto family = adapted_vectors(s.lat);
        const auto n = family.size();
        for (std::size_t j = 0; j < n; ++j) {
            CHECK(family[j][j] == 1);
            for (std::size_t i = j + 1; i < n; ++i) {
                CHECK(family[j][i] == 0);
            }
            for (std::size_t i = 0; i < j; ++i) {
                CHECK(family[j][i] == s.lat.I(j, i));
            }
        }
        for (const auto& r : verify_adapted(family, s.lat)) {
            CHECK(r.pass);
        }
    }
}

TEST_CASE("Euler matrix is the transposed Seifert form") {
    for (const auto& e : builtin_corpus(12)) {
        CAPTURE(e.name);
        const auto s = setup(e.divide);
        const auto q = euler_matrix(s.lat);
        CHECK(q.sigma == 1);
        CHECK(q.E == s.lat.S.transpose());
        CHECK(exceptional_certificate(q.E, s.ag).pass);
        CHECK(q.arrows.size() == s.ag.edges.size());
    }
}

TEST_CASE("unit entry counts: E6 nine, A4 three, A1 none") {
    CHECK(euler_matrix(setup(gen_e6().divide).lat).arrows.size() == 9);
    const auto a4 = euler_matrix(setup(gen_a(4).divide).lat);
    REQUIRE(a4.arrows.size() == 3);
    CHECK(a4.arrows[0].from == 0);
    CHECK(a4.arrows[0].to == 2);
    CHECK(a4.arrows[1].from == 1);
    CHECK(a4.arrows[1].to == 2);
    CHECK(a4.arrows[2].from == 1);
    CHECK(a4.arrows[2].to == 3);
    CHECK(a4.upper_sign == -1);
    CHECK(euler_matrix(setup(gen_a(1).divide).lat).arrows.empty());
}

TEST_CASE("certificate lists violated cells") {
    const auto s = setup(gen_e6().divide);
    IntMatrix E = euler_matrix(s.lat).E;
    E(2, 0) = 1;
    const auto c = exceptional_certificate(E, s.ag);
    CHECK_FALSE(c.pass);
    REQUIRE(c.violations.size() == 1);
    CHECK(c.violations[0].find("(3,1)") != std::string::npos);

    IntMatrix F = euler_matrix(s.lat).E;
    F(1, 1) = 2;
    F(0, 1) = 1;  // V-_1 and V-_2 share nothing
    const auto d = exceptional_certificate(F, s.ag);
    CHECK(d.violations.size() == 2);
}

TEST_CASE("depth-one cone") {
    const auto s = setup(gen_depth1().divide);
    const int x = s.ag.index_of("V0_6");
    REQUIRE(x >= 0);
    const ConeRecord c = depth1_cone(s.ag, s.depths, s.lat, x);
    CHECK(s.ag.vertices[c.partner].type == VertexType::Minus);
    CHECK(s.ag.vertices[c.partner].label == "V-_1");
    CHECK(c.components == 2);
    CHECK(c.pass);
    CHECK(c.splits_adapted);
    const auto n = static_cast<std::size_t>(s.ag.size());
    IntVector want(n, 0);
    want[x] = -1;
    want[c.partner] = 1;
    CHECK(c.var_prime == want);
    IntVector total(n, 0);
    total[x] = -1;
    CHECK(c.var_total == total);
    CHECK(c.a_prime == v({0, 1, 0, 0, 0, 0, 0, 1, 0, 0}));
    CHECK(pl_variation(c.a_prime, s.lat) == want);
}

TEST_CASE("cone preconditions") {
    const auto s = setup(gen_depth1().divide);
    CHECK_THROWS_WITH_AS(depth1_cone(s.ag, s.depths, s.lat, 0), doctest::Contains("not depth 1"),
                         std::invalid_argument);
    CHECK_THROWS_AS(depth1_cone(s.ag, s.depths, s.lat, 99), std::invalid_argument);
    CHECK_THROWS_AS(pl_variation(v({1}), s.lat), std::invalid_argument);
}

TEST_CASE("quiver DOT for A4 and E6") {
    const auto a4 = setup(gen_a(4).divide);
    const std::string dot = quiver_dot(euler_matrix(a4.lat), a4.ag);
    CHECK(dot.find("v1 -> v3;") != std::string::npos);
    CHECK(dot.find("v2 -> v3;") != std::string::npos);
    CHECK(dot.find("v2 -> v4;") != std::string::npos);
    const auto e6 = setup(gen_e6().divide);
    const std::string d6 = quiver_dot(euler_matrix(e6.lat), e6.ag);
    std::size_t arrows = 0;
    for (std::size_t at = d6.find("->"); at != std::string::npos; at = d6.find("->", at + 1)) {
        ++arrows;
    }
    CHECK(arrows == 9);
    CHECK(d6 == quiver_dot(euler_matrix(e6.lat), e6.ag));
}

TEST_CASE("weights above one are labelled") {
    AGDiagram ag;
    ag.vertices = {AGVertex{"a", VertexType::Minus, 0, "V-_1"}, AGVertex{"b", VertexType::Zero, 0, "V0_1"}};
    ag.edges = {AGEdge{0, 1, 2}};
    MilnorLattice lat;
    lat.I = IntMatrix{{0, -2}, {2, 0}};
    lat.S = seifert_matrix(lat.I);
    const auto q = euler_matrix(lat);
    CHECK(exceptional_certificate(q.E, ag).pass);
    CHECK(quiver_dot(q, ag).find("v1 -> v2 [label=\"2\"];") != std::string::npos);
}
