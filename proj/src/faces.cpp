#include "divlat/faces.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace divlat {

int FaceSet::num_regions() const {
    return static_cast<int>(
        std::count_if(faces.begin(), faces.end(), [](const Face& f) { return f.region; }));
}

FaceSet trace_faces(const Divide& d) {
    require_valid(d);
    if (d.num_terminals() == 0) {
        throw DivideError("divide has no boundary terminals; the outer face is undetermined");
    }
    const HalfEdges he(d);
    const int n = he.count();

    std::vector<int> orbit_of(n, -1);
    std::vector<std::vector<int>> orbits;
    for (int h = 0; h < n; ++h) {
        if (orbit_of[h] >= 0) {
            continue;
        }
        std::vector<int> cycle;
        int x = h;
        do {
            orbit_of[x] = static_cast<int>(orbits.size());
            cycle.push_back(x);
            x = he.next(x);
        } while (x != h);
        orbits.push_back(std::move(cycle));
    }

    // the exterior is the orbit of the clockwise boundary arcs and nothing else
    const int first_reverse_arc = 2 * d.num_edges() + 1;
    const int exterior = orbit_of[first_reverse_arc];
    for (int h : orbits[exterior]) {
        if (!he.is_arc(h) || he.is_forward_arc(h)) {
            throw DivideError("rotation system not planar-consistent: exterior orbit " +
                              std::to_string(exterior) + " contains half-edge " +
                              std::to_string(h));
        }
    }
    const int vertices = d.num_vertices();
    const int edges = d.num_edges() + d.num_terminals();
    const int faces_total = static_cast<int>(orbits.size());
    if (vertices - edges + faces_total != 2) {
        // the longest orbit is the usual culprit of a bad rotation
        std::size_t worst = 0;
        for (std::size_t i = 1; i < orbits.size(); ++i) {
            if (orbits[i].size() > orbits[worst].size()) {
                worst = i;
            }
        }
        throw DivideError("rotation system not planar-consistent: V - E + F = " +
                          std::to_string(vertices - edges + faces_total) +
                          " (expected 2); longest orbit " + std::to_string(worst) + " has " +
                          std::to_string(orbits[worst].size()) + " half-edges");
    }

    FaceSet fs;
    fs.face_of.assign(n, -1);
    for (int o = 0; o < faces_total; ++o) {
        if (o == exterior) {
            continue;
        }
        Face f;
        f.half_edges = orbits[o];
        f.outer = std::any_of(f.half_edges.begin(), f.half_edges.end(),
                              [&](int h) { return he.is_forward_arc(h); });
        f.region = !f.outer;
        const int id = static_cast<int>(fs.faces.size());
        for (int h : f.half_edges) {
            fs.face_of[h] = id;
        }
        if (f.region) {
            std::map<int, int> visits;
            for (int h : f.half_edges) {
                ++visits[he.tail(h)];
            }
            for (const auto& [v, count] : visits) {
                if (count > 1) {
                    fs.warnings.push_back("region f" + std::to_string(id + 1) +
                                          " touches itself at '" + d.vertex_id(v) + "'");
                }
            }
        }
        fs.faces.push_back(std::move(f));
    }
    return fs;
}

SignedDivide assign_signs(const Divide& d, const FaceSet& faces) {
    const int nf = static_cast<int>(faces.faces.size());
    std::vector<int> sign(nf, 0);
    const SignSeed& seed = d.sign_seed;
    const int seed_face = faces.face_of[2 * seed.edge + (seed.side == Side::Left ? 0 : 1)];
    sign[seed_face] = static_cast<int>(seed.sign);

    // faces adjacent across divide edges
    std::vector<std::vector<int>> adj(nf);
    for (int e = 0; e < d.num_edges(); ++e) {
        const int a = faces.face_of[2 * e];
        const int b = faces.face_of[2 * e + 1];
        if (a == b) {
            throw DivideError("divide not two-colorable: edge '" + d.edges[e].id +
                              "' has the same face on both sides");
        }
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::deque<int> queue{seed_face};
    while (!queue.empty()) {
        const int f = queue.front();
        queue.pop_front();
        for (int g : adj[f]) {
            if (sign[g] == 0) {
                sign[g] = -sign[f];
                queue.push_back(g);
            } else if (sign[g] == sign[f]) {
                throw DivideError("divide not two-colorable: faces f" + std::to_string(f + 1) +
                                  " and f" + std::to_string(g + 1) + " share an edge and a sign");
            }
        }
    }
    SignedDivide out{d, faces, {}};
    out.sign.reserve(nf);
    for (int f = 0; f < nf; ++f) {
        if (sign[f] == 0) {
            throw DivideError("face f" + std::to_string(f + 1) + " unreachable from the sign seed");
        }
        out.sign.push_back(sign[f] > 0 ? Sign::Plus : Sign::Minus);
    }
    return out;
}

SignedDivide sign_divide(const Divide& d) {
    return assign_signs(d, trace_faces(d));
}

DivideInvariants invariants(const SignedDivide& s) {
    const Divide& d = s.divide;
    for (const auto& b : d.branches) {
        if (b.kind == BranchKind::Circle) {
            throw DivideError("surface invariants undefined for circle components");
        }
    }
    DivideInvariants inv;
    inv.d = d.num_double_points();
    inv.r = static_cast<int>(d.branches.size());
    inv.mu = 2 * inv.d - inv.r + 1;
    inv.n_regions = s.faces.num_regions();
    if (inv.n_regions != inv.d - inv.r + 1) {
        throw DivideError("region count contradiction: traced " + std::to_string(inv.n_regions) +
                          " regions, expected d - r + 1 = " + std::to_string(inv.d - inv.r + 1));
    }
    inv.boundary_components = inv.r;
    inv.genus = inv.d - inv.r + 1;
    inv.euler_characteristic = 1 - inv.mu;
    return inv;
}

} // namespace divlat
