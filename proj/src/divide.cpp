#include "divlat/divide.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace divlat {

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) {
            out += sep;
        }
        out += parts[i];
    }
    return out;
}

struct SlotRef {
    int edge = -1;
    int end = -1;
};

// slot table for a divide whose ends are already known to be in range
std::vector<std::vector<SlotRef>> slot_table(const Divide& d) {
    std::vector<std::vector<SlotRef>> table(d.num_vertices());
    for (int v = 0; v < d.num_vertices(); ++v) {
        table[v].resize(d.degree(v));
    }
    for (int e = 0; e < d.num_edges(); ++e) {
        for (int k = 0; k < 2; ++k) {
            const EdgeEnd& end = d.edges[e].ends[k];
            table[end.vertex][end.slot] = SlotRef{e, k};
        }
    }
    return table;
}

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

} // namespace

DivideError::DivideError(std::vector<std::string> diagnostics)
    : std::runtime_error(join(diagnostics, "; ")), diagnostics_(std::move(diagnostics)) {}

DivideError::DivideError(const std::string& single)
    : DivideError(std::vector<std::string>{single}) {}

const std::string& Divide::vertex_id(int v) const {
    return is_terminal(v) ? terminals[terminal_index(v)] : double_points[v];
}

std::vector<Branch> trace_strands(const Divide& d) {
    const auto table = slot_table(d);
    std::vector<char> seen(d.num_edges(), 0);
    std::vector<Branch> strands;

    auto walk = [&](int v, int slot, BranchKind kind) {
        Branch b;
        b.kind = kind;
        const int start_v = v;
        const int start_slot = slot;
        while (true) {
            const SlotRef ref = table[v][slot];
            if (ref.edge < 0 || seen[ref.edge]) {
                break;
            }
            seen[ref.edge] = 1;
            b.edges.push_back(ref.edge);
            const EdgeEnd& other = d.edges[ref.edge].ends[1 - ref.end];
            if (d.is_terminal(other.vertex)) {
                break;
            }
            v = other.vertex;
            slot = (other.slot + 2) % 4;
            if (v == start_v && slot == start_slot) {
                break;
            }
        }
        strands.push_back(std::move(b));
    };

    for (int i = 0; i < d.num_terminals(); ++i) {
        const int v = d.terminal_vertex(i);
        const SlotRef ref = table[v][0];
        if (ref.edge >= 0 && !seen[ref.edge]) {
            walk(v, 0, BranchKind::Interval);
        }
    }
    for (int v = 0; v < d.num_double_points(); ++v) {
        for (int s = 0; s < 4; ++s) {
            const SlotRef ref = table[v][s];
            if (ref.edge >= 0 && !seen[ref.edge]) {
                walk(v, s, BranchKind::Circle);
            }
        }
    }
    return strands;
}

std::vector<std::string> validate(const Divide& d) {
    std::vector<std::string> diag;

    if (d.num_vertices() == 0) {
        diag.push_back("empty divide: no double points and no terminals");
        return diag;
    }

    std::set<std::string> ids;
    for (int v = 0; v < d.num_vertices(); ++v) {
        if (!ids.insert(d.vertex_id(v)).second) {
            diag.push_back("duplicate id '" + d.vertex_id(v) + "'");
        }
    }
    std::set<std::string> edge_ids;
    for (const auto& e : d.edges) {
        if (!edge_ids.insert(e.id).second) {
            diag.push_back("duplicate id '" + e.id + "'");
        }
    }

    std::vector<std::vector<int>> used(d.num_vertices());
    for (int v = 0; v < d.num_vertices(); ++v) {
        used[v].assign(d.degree(v), 0);
    }
    bool ends_ok = true;
    for (const auto& e : d.edges) {
        for (const auto& end : e.ends) {
            if (end.vertex < 0 || end.vertex >= d.num_vertices()) {
                diag.push_back("edge '" + e.id + "' references an unknown vertex");
                ends_ok = false;
                continue;
            }
            const std::string& vid = d.vertex_id(end.vertex);
            if (end.slot < 0 || end.slot >= d.degree(end.vertex)) {
                diag.push_back("degree mismatch at vertex '" + vid + "': slot " +
                               std::to_string(end.slot) + " out of range for degree " +
                               std::to_string(d.degree(end.vertex)));
                ends_ok = false;
                continue;
            }
            if (++used[end.vertex][end.slot] == 2) {
                diag.push_back("slot used twice at vertex '" + vid + "' slot " +
                               std::to_string(end.slot));
                ends_ok = false;
            }
        }
    }
    for (int v = 0; v < d.num_vertices(); ++v) {
        const int filled = static_cast<int>(
            std::count_if(used[v].begin(), used[v].end(), [](int c) { return c > 0; }));
        if (filled != d.degree(v)) {
            diag.push_back("degree mismatch at vertex '" + d.vertex_id(v) + "': expected " +
                           std::to_string(d.degree(v)) + " incident edge ends, found " +
                           std::to_string(filled));
            ends_ok = false;
        }
    }
    if (!ends_ok) {
        return diag;
    }

    std::vector<int> parent(d.num_vertices());
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& e : d.edges) {
        const int a = find_root(parent, e.ends[0].vertex);
        const int b = find_root(parent, e.ends[1].vertex);
        parent[a] = b;
    }
    std::set<int> roots;
    for (int v = 0; v < d.num_vertices(); ++v) {
        roots.insert(find_root(parent, v));
    }
    if (roots.size() != 1) {
        diag.push_back("disconnected graph: " + std::to_string(roots.size()) + " components");
    }

    // declared branches must coincide with the straight-through strands
    std::vector<int> owner(d.num_edges(), -1);
    for (std::size_t b = 0; b < d.branches.size(); ++b) {
        for (int e : d.branches[b].edges) {
            if (e < 0 || e >= d.num_edges()) {
                diag.push_back("branch " + std::to_string(b + 1) + " references an unknown edge");
                continue;
            }
            if (owner[e] >= 0) {
                diag.push_back("edge '" + d.edges[e].id + "' listed in more than one branch");
            }
            owner[e] = static_cast<int>(b);
        }
    }
    for (int e = 0; e < d.num_edges(); ++e) {
        if (owner[e] < 0) {
            diag.push_back("edge '" + d.edges[e].id + "' belongs to no branch");
        }
    }
    const auto strands = trace_strands(d);
    std::set<std::set<int>> strand_sets;
    std::unordered_map<int, BranchKind> kind_of_edge;
    for (const auto& s : strands) {
        strand_sets.insert(std::set<int>(s.edges.begin(), s.edges.end()));
        for (int e : s.edges) {
            kind_of_edge[e] = s.kind;
        }
    }
    for (std::size_t b = 0; b < d.branches.size(); ++b) {
        const auto& br = d.branches[b];
        std::set<int> es(br.edges.begin(), br.edges.end());
        if (!strand_sets.count(es)) {
            diag.push_back("branch " + std::to_string(b + 1) +
                           " is not a straight-through strand of the rotation system");
        } else if (!br.edges.empty() && kind_of_edge[br.edges.front()] != br.kind) {
            diag.push_back("branch " + std::to_string(b + 1) + " has the wrong interval/circle kind");
        }
    }
    if (d.num_terminals() % 2 != 0) {
        diag.push_back("odd number of terminals");
    }

    if (d.sign_seed.edge < 0 || d.sign_seed.edge >= d.num_edges()) {
        diag.push_back("malformed sign seed: unknown edge");
    }
    return diag;
}

void require_valid(const Divide& d) {
    auto diag = validate(d);
    if (!diag.empty()) {
        throw DivideError(std::move(diag));
    }
}

SignSeed seed_at_quadrant(const Divide& d, int dp, int q, Sign sign) {
    for (int e = 0; e < d.num_edges(); ++e) {
        const auto& ends = d.edges[e].ends;
        if (ends[0] == EdgeEnd{dp, q}) {
            return SignSeed{e, Side::Left, sign};
        }
        if (ends[1] == EdgeEnd{dp, q}) {
            return SignSeed{e, Side::Right, sign};
        }
    }
    throw DivideError("seed_at_quadrant: no edge at the requested slot");
}

HalfEdges::HalfEdges(const Divide& d) : num_edges_(d.num_edges()) {
    const int arcs = d.num_terminals();
    const int total = 2 * num_edges_ + 2 * arcs;
    tail_.assign(total, -1);
    position_.assign(total, -1);
    rotation_.resize(d.num_vertices());
    for (int v = 0; v < d.num_double_points(); ++v) {
        rotation_[v].assign(4, -1);
    }
    std::vector<int> inward(arcs, -1);
    for (int e = 0; e < num_edges_; ++e) {
        for (int k = 0; k < 2; ++k) {
            const EdgeEnd& end = d.edges[e].ends[k];
            const int h = 2 * e + k;
            tail_[h] = end.vertex;
            if (d.is_terminal(end.vertex)) {
                inward[d.terminal_index(end.vertex)] = h;
            } else {
                rotation_[end.vertex][end.slot] = h;
                position_[h] = end.slot;
            }
        }
    }
    for (int i = 0; i < arcs; ++i) {
        const int next = (i + 1) % arcs;
        tail_[2 * num_edges_ + 2 * i] = d.terminal_vertex(i);
        tail_[2 * num_edges_ + 2 * i + 1] = d.terminal_vertex(next);
    }
    // counterclockwise at a boundary terminal: along the boundary towards the
    // next terminal, into the disc, back along the boundary
    for (int i = 0; i < arcs; ++i) {
        const int prev = (i + arcs - 1) % arcs;
        const int v = d.terminal_vertex(i);
        rotation_[v] = {2 * num_edges_ + 2 * i, inward[i], 2 * num_edges_ + 2 * prev + 1};
        for (int p = 0; p < 3; ++p) {
            position_[rotation_[v][p]] = p;
        }
    }
}

int HalfEdges::next(int h) const {
    const int t = twin(h);
    const auto& rot = rotation_[tail_[t]];
    const int deg = static_cast<int>(rot.size());
    return rot[(position_[t] + deg - 1) % deg];
}

} // namespace divlat
