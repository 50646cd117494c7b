#include "divlat/corpus.hpp"
#include "divlat/faces.hpp"

#include <doctest.h>

using namespace divlat;

TEST_CASE("A1: four outer faces, no region") {
    const auto s = sign_divide(gen_a(1).divide);
    CHECK(s.faces.faces.size() == 4);
    CHECK(s.faces.num_regions() == 0);
    for (const auto& f : s.faces.faces) {
        CHECK(f.outer);
    }
}

TEST_CASE("A2: one bounded region carrying the seed sign") {
    const Divide d = gen_a(2).divide;
    const auto s = sign_divide(d);
    CHECK(s.faces.num_regions() == 1);
    CHECK(s.faces.faces.size() == 3);
    for (std::size_t f = 0; f < s.faces.faces.size(); ++f) {
        if (s.faces.faces[f].region) {
            CHECK(s.sign[f] == Sign::Minus);
        }
    }
}

TEST_CASE("every half-edge lies on exactly one face position") {
    for (const auto& e : builtin_corpus(8)) {
        CAPTURE(e.name);
        const auto s = sign_divide(e.divide);
        const HalfEdges he(e.divide);
        std::vector<int> seen(he.count(), 0);
        for (std::size_t f = 0; f < s.faces.faces.size(); ++f) {
            for (int h : s.faces.faces[f].half_edges) {
                ++seen[h];
                CHECK(s.faces.face_of[h] == static_cast<int>(f));
            }
        }
        // the exterior orbit holds exactly the backward arcs
        for (int h = 0; h < he.count(); ++h) {
            const bool exterior = he.is_arc(h) && !he.is_forward_arc(h);
            CHECK(seen[h] == (exterior ? 0 : 1));
        }
        // V - E + F = 2 with the exterior counted back in
        const int v = e.divide.num_vertices();
        const int edges = he.count() / 2;
        CHECK(v - edges + static_cast<int>(s.faces.faces.size()) + 1 == 2);
    }
}

TEST_CASE("checkerboard across every divide edge") {
    for (const auto& e : builtin_corpus(6)) {
        const auto s = sign_divide(e.divide);
        for (int k = 0; k < e.divide.num_edges(); ++k) {
            CHECK(s.sign[s.faces.face_of[2 * k]] != s.sign[s.faces.face_of[2 * k + 1]]);
        }
    }
}

TEST_CASE("seed flip negates every face sign") {
    Divide d = gen_e6().divide;
    const auto a = sign_divide(d);
    d.sign_seed.sign = -d.sign_seed.sign;
    const auto b = sign_divide(d);
    REQUIRE(a.sign.size() == b.sign.size());
    for (std::size_t f = 0; f < a.sign.size(); ++f) {
        CHECK(a.sign[f] == -b.sign[f]);
    }
    CHECK(a.faces.face_of == b.faces.face_of);
}

TEST_CASE("invariants of the worked divides") {
    auto inv = [](const CorpusEntry& e) { return invariants(sign_divide(e.divide)); };
    const auto a4 = inv(gen_a(4));
    CHECK(a4 == DivideInvariants{2, 1, 4, 2, 2, 1, -3});
    const auto e6 = inv(gen_e6());
    CHECK(e6 == DivideInvariants{3, 1, 6, 3, 3, 1, -5});
    const auto d1 = inv(gen_depth1());
    CHECK(d1.mu == 10);
    CHECK(d1.genus == 4);
    CHECK(d1.boundary_components == 3);
    const auto a1 = inv(gen_a(1));
    CHECK(a1 == DivideInvariants{1, 2, 1, 0, 0, 2, 0});
}

TEST_CASE("divides without terminals are rejected") {
    Divide d;
    d.name = "loop";
    d.double_points = {"p1"};
    d.edges = {Edge{"e1", {EdgeEnd{0, 0}, EdgeEnd{0, 1}}}, Edge{"e2", {EdgeEnd{0, 2}, EdgeEnd{0, 3}}}};
    d.branches = {Branch{{0, 1}, BranchKind::Circle}};
    d.sign_seed = SignSeed{0, Side::Left, Sign::Plus};
    CHECK_THROWS_WITH_AS(trace_faces(d), doctest::Contains("no boundary terminals"), DivideError);
}
