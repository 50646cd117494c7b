#include "divlat/ag_diagram.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace divlat {

char type_char(VertexType t) {
    switch (t) {
    case VertexType::Minus:
        return '-';
    case VertexType::Plus:
        return '+';
    default:
        return '0';
    }
}

int AGDiagram::count(VertexType t) const {
    return static_cast<int>(std::count_if(vertices.begin(), vertices.end(),
                                          [t](const AGVertex& v) { return v.type == t; }));
}

int AGDiagram::index_of(const std::string& key) const {
    for (int i = 0; i < size(); ++i) {
        if (vertices[i].id == key || vertices[i].label == key) {
            return i;
        }
    }
    return -1;
}

int AGDiagram::multiplicity(int i, int j) const {
    if (i > j) {
        std::swap(i, j);
    }
    for (const auto& e : edges) {
        if (e.u == i && e.v == j) {
            return e.multiplicity;
        }
    }
    return 0;
}

std::vector<std::vector<int>> AGDiagram::adjacency() const {
    std::vector<std::vector<int>> adj(vertices.size());
    for (const auto& e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& list : adj) {
        std::sort(list.begin(), list.end());
    }
    return adj;
}

namespace {

void relabel(AGDiagram& ag) {
    int counter[3] = {0, 0, 0};
    for (auto& v : ag.vertices) {
        const int t = static_cast<int>(v.type);
        v.label = std::string("V") + type_char(v.type) + "_" + std::to_string(++counter[t]);
    }
}

} // namespace

AGDiagram build_ag(const SignedDivide& s) {
    const Divide& d = s.divide;
    const FaceSet& fs = s.faces;
    const HalfEdges he(d);

    std::vector<int> region_order;
    std::vector<char> seen(fs.faces.size(), 0);
    for (int p = 0; p < d.num_double_points(); ++p) {
        for (int q = 0; q < 4; ++q) {
            const int f = fs.quadrant_face(he, p, q);
            if (fs.faces[f].region && !seen[f]) {
                seen[f] = 1;
                region_order.push_back(f);
            }
        }
    }
    for (int f = 0; f < static_cast<int>(fs.faces.size()); ++f) {
        if (fs.faces[f].region && !seen[f]) {
            region_order.push_back(f);
        }
    }

    AGDiagram ag;
    auto add_regions = [&](Sign want, VertexType type) {
        for (int f : region_order) {
            if (s.sign[f] == want) {
                ag.vertices.push_back(AGVertex{"f" + std::to_string(f + 1), type, f, ""});
            }
        }
    };
    add_regions(Sign::Minus, VertexType::Minus);
    for (int p = 0; p < d.num_double_points(); ++p) {
        ag.vertices.push_back(AGVertex{d.double_points[p], VertexType::Zero, p, ""});
    }
    add_regions(Sign::Plus, VertexType::Plus);
    relabel(ag);

    std::map<int, int> index_of_face;
    std::vector<int> index_of_dp(d.num_double_points(), -1);
    for (int i = 0; i < ag.size(); ++i) {
        if (ag.vertices[i].type == VertexType::Zero) {
            index_of_dp[ag.vertices[i].source] = i;
        } else {
            index_of_face[ag.vertices[i].source] = i;
        }
    }

    std::map<std::pair<int, int>, int> mult;
    auto bump = [&](int a, int b) {
        if (a > b) {
            std::swap(a, b);
        }
        ++mult[{a, b}];
    };
    for (int p = 0; p < d.num_double_points(); ++p) {
        for (int q = 0; q < 4; ++q) {
            const int f = fs.quadrant_face(he, p, q);
            if (fs.faces[f].region) {
                bump(index_of_dp[p], index_of_face.at(f));
            }
        }
    }
    for (int e = 0; e < d.num_edges(); ++e) {
        const int a = fs.face_of[2 * e];
        const int b = fs.face_of[2 * e + 1];
        if (fs.faces[a].region && fs.faces[b].region) {
            bump(index_of_face.at(a), index_of_face.at(b));
        }
    }
    for (const auto& [key, m] : mult) {
        ag.edges.push_back(AGEdge{key.first, key.second, m});
    }
    return ag;
}

AGDiagram reorder(const AGDiagram& ag, const std::vector<std::string>& order) {
    if (static_cast<int>(order.size()) != ag.size()) {
        throw std::invalid_argument("vertex order must list all " + std::to_string(ag.size()) + " vertices");
    }
    std::vector<int> perm;
    std::vector<char> used(ag.vertices.size(), 0);
    for (const auto& key : order) {
        const int i = ag.index_of(key);
        if (i < 0) {
            throw std::invalid_argument("unknown vertex '" + key + "' in vertex order");
        }
        if (used[i]) {
            throw std::invalid_argument("vertex '" + key + "' listed twice in vertex order");
        }
        used[i] = 1;
        perm.push_back(i);
    }
    AGDiagram out;
    std::vector<int> new_index(ag.vertices.size());
    for (std::size_t k = 0; k < perm.size(); ++k) {
        out.vertices.push_back(ag.vertices[perm[k]]);
        new_index[perm[k]] = static_cast<int>(k);
        if (k > 0 && out.vertices[k].type < out.vertices[k - 1].type) {
            throw std::invalid_argument("vertex order must keep the - block before 0 before +");
        }
    }
    relabel(out);
    for (const auto& e : ag.edges) {
        int u = new_index[e.u];
        int v = new_index[e.v];
        if (u > v) {
            std::swap(u, v);
        }
        out.edges.push_back(AGEdge{u, v, e.multiplicity});
    }
    std::sort(out.edges.begin(), out.edges.end(),
              [](const AGEdge& a, const AGEdge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    return out;
}

std::vector<std::size_t> vertex_permutation(const AGDiagram& from, const AGDiagram& to) {
    std::vector<std::size_t> perm;
    for (const auto& v : to.vertices) {
        auto it = std::find_if(from.vertices.begin(), from.vertices.end(),
                               [&](const AGVertex& w) { return w.id == v.id; });
        if (it == from.vertices.end()) {
            throw std::invalid_argument("diagrams have different vertex ids");
        }
        perm.push_back(static_cast<std::size_t>(it - from.vertices.begin()));
    }
    return perm;
}

std::vector<bool> exposure_set(const SignedDivide& s, const AGDiagram& ag) {
    const Divide& d = s.divide;
    const FaceSet& fs = s.faces;
    const HalfEdges he(d);
    auto outer = [&](int f) { return fs.faces[f].outer; };

    std::vector<bool> exposed(ag.vertices.size(), false);
    for (int i = 0; i < ag.size(); ++i) {
        const AGVertex& v = ag.vertices[i];
        if (v.type == VertexType::Zero) {
            for (int q = 0; q < 4; ++q) {
                if (outer(fs.quadrant_face(he, v.source, q))) {
                    exposed[i] = true;
                }
            }
            continue;
        }
        const int f = v.source;
        for (int e = 0; e < d.num_edges() && !exposed[i]; ++e) {
            const int a = fs.face_of[2 * e];
            const int b = fs.face_of[2 * e + 1];
            if ((a == f && outer(b)) || (b == f && outer(a))) {
                exposed[i] = true;
            }
        }
        for (int p = 0; p < d.num_double_points() && !exposed[i]; ++p) {
            bool mine = false;
            bool out = false;
            for (int q = 0; q < 4; ++q) {
                const int g = fs.quadrant_face(he, p, q);
                mine = mine || g == f;
                out = out || outer(g);
            }
            exposed[i] = mine && out;
        }
    }
    return exposed;
}

DepthLabels depth_labels(const AGDiagram& ag, const std::vector<bool>& exposed) {
    DepthLabels out;
    out.depth.assign(ag.vertices.size(), -1);
    std::deque<int> queue;
    for (int i = 0; i < ag.size(); ++i) {
        if (exposed[i]) {
            out.depth[i] = 0;
            queue.push_back(i);
        }
    }
    if (queue.empty()) {
        throw std::invalid_argument("depth undefined: exposed set is empty");
    }
    const auto adj = ag.adjacency();
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int w : adj[v]) {
            if (out.depth[w] < 0) {
                out.depth[w] = out.depth[v] + 1;
                queue.push_back(w);
            }
        }
    }
    for (int i = 0; i < ag.size(); ++i) {
        if (out.depth[i] < 0) {
            throw std::invalid_argument("depth undefined for vertex " + ag.vertices[i].label);
        }
        out.diagram_depth = std::max(out.diagram_depth, out.depth[i]);
    }
    return out;
}

std::string to_dot(const AGDiagram& ag, const DepthLabels& depths) {
    std::ostringstream os;
    os << "graph AG {\n";
    os << "  node [shape=circle];\n";
    for (int i = 0; i < ag.size(); ++i) {
        const AGVertex& v = ag.vertices[i];
        os << "  v" << i + 1 << " [label=\"" << v.label << "\\n#" << i + 1 << " depth "
           << depths.depth[i] << "\", type=\"" << type_char(v.type) << "\"];\n";
    }
    for (const auto& e : ag.edges) {
        os << "  v" << e.u + 1 << " -- v" << e.v + 1 << " [label=\"" << e.multiplicity << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace divlat
