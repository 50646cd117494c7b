#include "divlat/expected.hpp"

#include <algorithm>
#include <set>

namespace divlat {

namespace {

void expect(std::vector<std::string>& out, const std::string& what, long long got, long long want) {
    if (got != want) {
        out.push_back(what + ": got " + std::to_string(got) + ", expected " + std::to_string(want));
    }
}

} // namespace

std::vector<std::string> check_expected(const ExpectedFacts& x, const PipelineResult& r) {
    std::vector<std::string> out;
    const auto& inv = r.invariants;
    expect(out, "d", inv.d, x.d);
    expect(out, "r", inv.r, x.r);
    expect(out, "mu", inv.mu, x.mu);
    expect(out, "genus", inv.genus, x.genus);
    expect(out, "boundary components", inv.boundary_components, x.boundary);
    if (x.n_minus >= 0) {
        expect(out, "- vertices", r.ag.count(VertexType::Minus), x.n_minus);
    }
    expect(out, "0 vertices", r.ag.count(VertexType::Zero), x.n_zero);
    if (x.n_plus >= 0) {
        expect(out, "+ vertices", r.ag.count(VertexType::Plus), x.n_plus);
    }
    expect(out, "diagram depth", r.depths.diagram_depth, x.diagram_depth);

    std::set<std::string> depth_one;
    for (int i = 0; i < r.ag.size(); ++i) {
        if (r.depths.depth[i] == 1) {
            depth_one.insert(r.ag.vertices[i].label);
        }
    }
    if (depth_one != std::set<std::string>(x.depth_one.begin(), x.depth_one.end())) {
        out.push_back("depth-1 vertex set differs");
    }

    if (x.ag_edges) {
        std::set<std::pair<std::string, std::string>> got;
        for (const auto& e : r.ag.edges) {
            auto a = r.ag.vertices[e.u].label;
            auto b = r.ag.vertices[e.v].label;
            got.insert(std::minmax(a, b));
            if (e.multiplicity != 1) {
                out.push_back("edge " + a + "-" + b + " has multiplicity " + std::to_string(e.multiplicity));
            }
        }
        std::set<std::pair<std::string, std::string>> want;
        for (const auto& [a, b] : *x.ag_edges) {
            want.insert(std::minmax(a, b));
        }
        if (got != want) {
            out.push_back("diagram edge set differs from the published pattern");
        }
    }
    if (x.arrows) {
        std::set<std::pair<int, int>> got;
        for (const auto& a : r.euler.arrows) {
            got.emplace(a.from + 1, a.to + 1);
        }
        if (got != std::set<std::pair<int, int>>(x.arrows->begin(), x.arrows->end())) {
            out.push_back("certificate: quiver arrows differ from the published pattern");
        }
    }
    for (const auto& c : r.cones) {
        if (c.components != 2) {
            out.push_back("cone at " + r.ag.vertices[c.vertex].label + " has " + std::to_string(c.components) +
                          " components");
        }
        if (r.ag.vertices[c.partner].type != VertexType::Minus) {
            out.push_back("cone partner " + r.ag.vertices[c.partner].label + " is not of type -");
        }
    }
    return out;
}

} // namespace divlat
