#include "divlat/corpus.hpp"

#include <algorithm>
#include <stdexcept>

namespace divlat {

Divide orient_by_traversal(const Divide& d) {
    std::vector<std::vector<int>> edge_at(d.num_vertices());
    for (int v = 0; v < d.num_vertices(); ++v) {
        edge_at[v].assign(d.degree(v), -1);
    }
    for (int e = 0; e < d.num_edges(); ++e) {
        for (const auto& end : d.edges[e].ends) {
            edge_at[end.vertex][end.slot] = e;
        }
    }
    Divide out = d;
    out.edges.clear();
    out.branches.clear();
    std::vector<int> new_index(d.num_edges(), -1);
    std::vector<bool> flipped(d.num_edges(), false);

    auto walk = [&](int v, int slot, BranchKind kind) {
        Branch br;
        br.kind = kind;
        while (true) {
            const int e = edge_at[v][slot];
            if (e < 0 || new_index[e] >= 0) {
                break;
            }
            const bool forward = d.edges[e].ends[0] == EdgeEnd{v, slot};
            const EdgeEnd to = d.edges[e].ends[forward ? 1 : 0];
            new_index[e] = out.num_edges();
            flipped[e] = !forward;
            Edge edge;
            edge.id = "e" + std::to_string(out.num_edges() + 1);
            edge.ends = {EdgeEnd{v, slot}, to};
            br.edges.push_back(out.num_edges());
            out.edges.push_back(edge);
            if (d.is_terminal(to.vertex)) {
                break;
            }
            v = to.vertex;
            slot = (to.slot + 2) % 4;
        }
        out.branches.push_back(std::move(br));
    };
    for (int i = 0; i < d.num_terminals(); ++i) {
        const int v = d.terminal_vertex(i);
        const int e = edge_at[v][0];
        if (e >= 0 && new_index[e] < 0) {
            walk(v, 0, BranchKind::Interval);
        }
    }
    for (int v = 0; v < d.num_double_points(); ++v) {
        for (int s = 0; s < 4; ++s) {
            const int e = edge_at[v][s];
            if (e >= 0 && new_index[e] < 0) {
                walk(v, s, BranchKind::Circle);
            }
        }
    }
    const int seed = d.sign_seed.edge;
    out.sign_seed.edge = new_index[seed];
    if (flipped[seed]) {
        out.sign_seed.side = d.sign_seed.side == Side::Left ? Side::Right : Side::Left;
    }
    return out;
}

namespace {

const char* kPathSource = "A_n example: alternating path diagram, depth zero, quiver 1->2<-3->4 for n=4";
const char* kGenusSource = "A_n example: Milnor fiber of A_4 has genus two and one boundary component";
const char* kE6Source = "E6 example: divide figure, regions (-,-,+), nine unit arrows";
const char* kDepthSource = "depth-one example: ten vanishing cycles, unique depth-one saddle, genus 4 with 3 boundary components";

std::string label(char type, int k) {
    return std::string("V") + type + "_" + std::to_string(k);
}

std::vector<std::pair<int, int>> arrows_from(const std::vector<std::pair<std::string, std::string>>& edges,
                                             int n_minus, int n_zero) {
    auto index = [&](const std::string& l) {
        const int k = std::stoi(l.substr(3));
        switch (l[1]) {
        case '-':
            return k;
        case '0':
            return n_minus + k;
        default:
            return n_minus + n_zero + k;
        }
    };
    std::vector<std::pair<int, int>> out;
    for (const auto& [a, b] : edges) {
        int i = index(a);
        int j = index(b);
        out.emplace_back(std::min(i, j), std::max(i, j));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

CorpusEntry gen_a(int n) {
    if (n < 1) {
        throw std::invalid_argument("A_n needs n >= 1");
    }
    const int k = (n + 1) / 2;
    const bool even = n % 2 == 0;
    // slots: 0 NE, 1 NW, 2 SW, 3 SE
    Divide d;
    d.name = "A" + std::to_string(n);
    for (int i = 0; i < k; ++i) {
        d.double_points.push_back("p" + std::to_string(i + 1));
    }
    // counterclockwise from the east: TR, (TL, BL,) BR
    const int nt = even ? 2 : 4;
    for (int i = 0; i < nt; ++i) {
        d.terminals.push_back("t" + std::to_string(i + 1));
    }
    const int tr = d.terminal_vertex(0);
    const int br = d.terminal_vertex(nt - 1);
    auto add = [&](EdgeEnd a, EdgeEnd b) {
        d.edges.push_back(Edge{"x" + std::to_string(d.edges.size() + 1), {a, b}});
    };
    for (int i = 0; i + 1 < k; ++i) {
        add({i, 0}, {i + 1, 1});
        add({i, 3}, {i + 1, 2});
    }
    add({k - 1, 0}, {tr, 0});
    add({k - 1, 3}, {br, 0});
    if (even) {
        add({0, 1}, {0, 2});
    } else {
        add({0, 1}, {d.terminal_vertex(1), 0});
        add({0, 2}, {d.terminal_vertex(2), 0});
    }
    d.branches.push_back(Branch{{}, BranchKind::Interval});
    // seed: the leftmost bounded region (cap or first lens), or the north face of A_1
    const int seed_q = even ? 1 : (n == 1 ? 0 : 3);
    d.sign_seed = seed_at_quadrant(d, 0, seed_q, Sign::Minus);
    d = orient_by_traversal(d);

    CorpusEntry entry;
    entry.name = d.name;
    entry.divide = d;

    ExpectedFacts& x = entry.expected;
    x.d = k;
    x.r = even ? 1 : 2;
    x.mu = n;
    x.n_zero = k;
    x.n_minus = k - x.r + 1;
    x.n_plus = 0;
    x.genus = k - x.r + 1;
    x.boundary = x.r;
    x.diagram_depth = 0;
    // even: -1 01 -2 02 ... ; odd: 01 -1 02 -2 ... 0k
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 1; i <= x.n_minus; ++i) {
        if (even) {
            edges.emplace_back(label('-', i), label('0', i));
            if (i > 1) {
                edges.emplace_back(label('-', i), label('0', i - 1));
            }
        } else {
            edges.emplace_back(label('-', i), label('0', i));
            edges.emplace_back(label('-', i), label('0', i + 1));
        }
    }
    x.arrows = arrows_from(edges, x.n_minus, x.n_zero);
    x.ag_edges = std::move(edges);
    x.sources = {kPathSource, kGenusSource};
    return entry;
}

PolylineDivide e6_polyline() {
    PolylineDivide p;
    p.name = "E6";
    p.disc_radius = 10;
    p.branches.push_back(Polyline{{{-23, -24}, {3, 2}, {1, 4}, {-3, 0}, {1, -4}, {3, -2}, {-13, 14}}, false});
    p.seed_point = {-1, 0};
    p.seed_sign = Sign::Plus;
    return p;
}

PolylineDivide depth1_polyline() {
    PolylineDivide p;
    p.name = "depth1";
    p.disc_radius = 40;
    p.branches.push_back(Polyline{{{-50, -40}, {0, 10}, {20, 10}, {20, -10}, {0, -10}, {-50, 40}}, false});
    p.branches.push_back(Polyline{{{-40, -49}, {50, 41}}, false});
    p.branches.push_back(Polyline{{{-40, 49}, {50, -41}}, false});
    p.seed_point = {0, 0};
    p.seed_sign = Sign::Minus;
    return p;
}

PolylineDivide a4_polyline() {
    PolylineDivide p;
    p.name = "A4_polyline";
    p.disc_radius = 8;
    p.branches.push_back(Polyline{{{15, -12}, {1, 2}, {-3, -2}, {-5, 0}, {-3, 2}, {1, -2}, {15, 12}}, false});
    p.seed_point = {-3, 0};
    p.seed_sign = Sign::Minus;
    return p;
}

CorpusEntry gen_e6() {
    CorpusEntry entry;
    entry.name = "E6";
    entry.divide = ingest_polyline(e6_polyline());
    ExpectedFacts& x = entry.expected;
    x.d = 3;
    x.r = 1;
    x.mu = 6;
    x.n_minus = 2;
    x.n_zero = 3;
    x.n_plus = 1;
    x.genus = 3;
    x.boundary = 1;
    x.diagram_depth = 0;
    std::vector<std::pair<std::string, std::string>> edges = {
        {"V-_1", "V0_1"}, {"V-_1", "V0_2"}, {"V-_1", "V+_1"}, {"V-_2", "V0_2"}, {"V-_2", "V0_3"},
        {"V-_2", "V+_1"}, {"V0_1", "V+_1"}, {"V0_2", "V+_1"}, {"V0_3", "V+_1"}};
    x.arrows = arrows_from(edges, 2, 3);
    x.ag_edges = std::move(edges);
    x.sources = {kE6Source};
    return entry;
}

CorpusEntry gen_depth1() {
    CorpusEntry entry;
    entry.name = "depth1";
    entry.divide = ingest_polyline(depth1_polyline());
    ExpectedFacts& x = entry.expected;
    x.d = 6;
    x.r = 3;
    x.mu = 10;
    x.n_minus = -1;  // not published separately
    x.n_zero = 6;
    x.n_plus = -1;
    x.genus = 4;
    x.boundary = 3;
    x.diagram_depth = 1;
    x.depth_one = {"V0_6"};
    x.sources = {kDepthSource};
    return entry;
}

std::vector<CorpusEntry> builtin_corpus(int max_n) {
    std::vector<CorpusEntry> out;
    for (int n = 1; n <= max_n; ++n) {
        out.push_back(gen_a(n));
    }
    out.push_back(gen_e6());
    out.push_back(gen_depth1());
    return out;
}

} // namespace divlat
