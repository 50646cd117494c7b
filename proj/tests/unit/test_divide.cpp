#include "divlat/corpus.hpp"
#include "divlat/divide.hpp"

#include <doctest.h>

#include <algorithm>

using namespace divlat;

namespace {

bool mentions(const std::vector<std::string>& diags, const std::string& needle) {
    return std::any_of(diags.begin(), diags.end(),
                       [&](const std::string& d) { return d.find(needle) != std::string::npos; });
}

} // namespace

TEST_CASE("corpus divides are structurally valid") {
    for (const auto& e : builtin_corpus(12)) {
        CAPTURE(e.name);
        CHECK(validate(e.divide).empty());
    }
}

TEST_CASE("slot used twice") {
    Divide d = gen_a(2).divide;
    d.edges[2].ends[0] = d.edges[1].ends[0];
    const auto diags = validate(d);
    CHECK(mentions(diags, "slot used twice"));
    CHECK(mentions(diags, "degree mismatch"));
    CHECK_THROWS_AS(require_valid(d), DivideError);
}

TEST_CASE("unknown vertex and missing branch membership") {
    Divide d = gen_a(2).divide;
    d.edges[0].ends[1].vertex = 99;
    CHECK(mentions(validate(d), "unknown vertex"));

    Divide e = gen_a(2).divide;
    e.branches[0].edges.pop_back();
    CHECK(mentions(validate(e), "belongs to no branch"));
}

TEST_CASE("duplicate ids and bad seed") {
    Divide d = gen_a(2).divide;
    d.edges[1].id = d.edges[0].id;
    CHECK(mentions(validate(d), "duplicate id"));

    Divide e = gen_a(2).divide;
    e.sign_seed.edge = 17;
    CHECK(mentions(validate(e), "malformed sign seed"));
}

TEST_CASE("disconnected union of two crossings") {
    Divide a = gen_a(1).divide;
    Divide d = a;
    d.double_points.push_back("q1");
    // terminals shift by one because the new double point is inserted before them
    for (auto& e : d.edges) {
        for (auto& end : e.ends) {
            if (end.vertex >= 1) {
                ++end.vertex;
            }
        }
    }
    for (int i = 0; i < 4; ++i) {
        d.terminals.push_back("s" + std::to_string(i + 1));
    }
    for (int s = 0; s < 4; ++s) {
        d.edges.push_back(Edge{"f" + std::to_string(s + 1), {EdgeEnd{1, s}, EdgeEnd{6 + s, 0}}});
    }
    d.branches.push_back(Branch{{4, 6}, BranchKind::Interval});
    d.branches.push_back(Branch{{5, 7}, BranchKind::Interval});
    CHECK(mentions(validate(d), "disconnected graph"));
}

TEST_CASE("branch kind must match the strand") {
    Divide d = gen_a(2).divide;
    d.branches[0].kind = BranchKind::Circle;
    CHECK(mentions(validate(d), "wrong interval/circle kind"));
}

TEST_CASE("strands follow opposite slots") {
    const Divide d = gen_a(4).divide;
    const auto strands = trace_strands(d);
    REQUIRE(strands.size() == 1);
    CHECK(strands[0].kind == BranchKind::Interval);
    CHECK(strands[0].edges.size() == static_cast<std::size_t>(d.num_edges()));

    const auto s1 = trace_strands(gen_a(1).divide);
    CHECK(s1.size() == 2);
}

TEST_CASE("half-edge structure") {
    const Divide d = gen_a(2).divide;
    const HalfEdges he(d);
    // 3 divide edges, 2 boundary arcs
    CHECK(he.count() == 10);
    CHECK(he.num_divide_half_edges() == 6);
    for (int h = 0; h < he.count(); ++h) {
        CHECK(he.tail(HalfEdges::twin(h)) == he.head(h));
        CHECK(he.tail(he.next(h)) == he.head(h));
    }
    CHECK(he.rotation(0).size() == 4);
    CHECK(he.is_forward_arc(6));
    CHECK_FALSE(he.is_forward_arc(7));
}

TEST_CASE("seed at quadrant names the face between two slots") {
    const Divide d = gen_a(2).divide;
    const SignSeed s = seed_at_quadrant(d, 0, 1, Sign::Plus);
    CHECK(s.sign == Sign::Plus);
    CHECK(s.edge >= 0);
    CHECK(s.edge < d.num_edges());
}

TEST_CASE("sign negation") {
    CHECK(-Sign::Plus == Sign::Minus);
    CHECK(sign_char(Sign::Minus) == '-');
}
