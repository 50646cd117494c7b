#include "divlat/adapted.hpp"

#include <sstream>
#include <stdexcept>

namespace divlat {

namespace {

IntVector unit(std::size_t n, std::size_t k, const Int& value) {
    IntVector e(n, Int(0));
    e[k] = value;
    return e;
}

} // namespace

std::vector<IntVector> adapted_vectors(const MilnorLattice& lat) {
    const auto n = lat.I.rows();
    std::vector<IntVector> out;
    for (std::size_t j = 0; j < n; ++j) {
        IntVector a(n, Int(0));
        a[j] = 1;
        for (std::size_t i = 0; i < j; ++i) {
            a[i] = -lat.pl_sign * lat.I(j, i);
        }
        out.push_back(std::move(a));
    }
    return out;
}

IntVector pl_variation(const IntVector& a, const MilnorLattice& lat) {
    const auto n = lat.I.rows();
    if (a.size() != n) {
        throw std::invalid_argument("vector length does not match the lattice rank");
    }
    IntVector c(n, Int(0));
    for (std::size_t k = n; k-- > 0;) {
        Int x = a[k];
        for (std::size_t m = 0; m < n; ++m) {
            x += c[m] * lat.I(m, k);
        }
        c[k] += lat.pl_sign * x;
    }
    return c;
}

std::vector<VariationVerdict> verify_adapted(const std::vector<IntVector>& family, const MilnorLattice& lat) {
    std::vector<VariationVerdict> out;
    const auto n = lat.I.rows();
    for (std::size_t j = 0; j < family.size(); ++j) {
        VariationVerdict v;
        v.index = static_cast<int>(j);
        v.image = pl_variation(family[j], lat);
        v.pass = v.image == unit(n, j, lat.pl_sign);
        out.push_back(std::move(v));
    }
    return out;
}

EulerQuiver euler_matrix(const MilnorLattice& lat) {
    const auto n = lat.S.rows();
    EulerQuiver q;
    q.sigma = (n > 0 && lat.S(0, 0) < 0) ? -1 : 1;
    q.E = IntMatrix(n, n);
    bool saw_plus = false;
    bool saw_minus = false;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            q.E(i, j) = q.sigma * lat.S(j, i);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (q.E(i, j) != 0) {
                q.arrows.push_back(Arrow{static_cast<int>(i), static_cast<int>(j), q.E(i, j)});
                (q.E(i, j) > 0 ? saw_plus : saw_minus) = true;
            }
        }
    }
    q.upper_sign = (saw_plus && !saw_minus) ? 1 : ((saw_minus && !saw_plus) ? -1 : 0);
    return q;
}

Certificate exceptional_certificate(const IntMatrix& E, const AGDiagram& ag) {
    Certificate c;
    const auto n = E.rows();
    auto cell = [](std::size_t i, std::size_t j) {
        return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    };
    if (n != static_cast<std::size_t>(ag.size())) {
        c.violations.push_back("matrix size differs from the diagram");
        return c;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Int& x = E(i, j);
            if (i == j && x != 1) {
                c.violations.push_back("diagonal " + cell(i, j) + " = " + x.str());
            } else if (i > j && x != 0) {
                c.violations.push_back("lower " + cell(i, j) + " = " + x.str());
            } else if (i < j) {
                const Int m = ag.multiplicity(static_cast<int>(i), static_cast<int>(j));
                if (abs(x) != m) {
                    c.violations.push_back("upper " + cell(i, j) + " = " + x.str() + ", multiplicity " + m.str());
                }
            }
        }
    }
    c.pass = c.violations.empty();
    return c;
}

ConeRecord depth1_cone(const AGDiagram& ag, const DepthLabels& depths, const MilnorLattice& lat, int v) {
    if (v < 0 || v >= ag.size()) {
        throw std::invalid_argument("vertex out of range");
    }
    if (depths.depth[v] != 1) {
        throw std::invalid_argument("not depth 1: " + ag.vertices[v].label + " has depth " +
                                    std::to_string(depths.depth[v]));
    }
    const auto adj = ag.adjacency();
    int w = -1;
    for (int u : adj[v]) {
        if (depths.depth[u] == 0) {
            w = u;
            break;
        }
    }
    if (w < 0) {
        throw std::invalid_argument("no depth-0 neighbour of " + ag.vertices[v].label);
    }

    const auto n = lat.I.rows();
    // columns: variation images of the unit vectors; upper triangular
    IntMatrix P(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const IntVector col = pl_variation(unit(n, k, 1), lat);
        for (std::size_t i = 0; i < n; ++i) {
            P(i, k) = col[i];
        }
    }
    IntVector target(n, Int(0));
    target[v] += lat.pl_sign;
    target[w] -= lat.pl_sign;

    IntVector a(n, Int(0));
    for (std::size_t i = n; i-- > 0;) {
        Int rhs = target[i];
        for (std::size_t k = i + 1; k < n; ++k) {
            rhs -= P(i, k) * a[k];
        }
        const Int& diag = P(i, i);
        if (diag == 0 || rhs % diag != 0) {
            throw std::logic_error("variation map is not unitriangular");
        }
        a[i] = rhs / diag;
    }

    ConeRecord r;
    r.vertex = v;
    r.partner = w;
    r.a_prime = a;
    r.a_partner = adapted_vectors(lat)[w];
    r.var_prime = pl_variation(r.a_prime, lat);
    const IntVector var_w = pl_variation(r.a_partner, lat);
    r.var_total.resize(n);
    IntVector sum(n);
    for (std::size_t i = 0; i < n; ++i) {
        r.var_total[i] = r.var_prime[i] + var_w[i];
        sum[i] = r.a_prime[i] + r.a_partner[i];
    }
    r.components = depths.depth[v] + 1;
    r.splits_adapted = sum == adapted_vectors(lat)[v];
    r.pass = r.var_prime == target && r.var_total == unit(n, v, lat.pl_sign);
    return r;
}

std::string quiver_dot(const EulerQuiver& q, const AGDiagram& ag) {
    std::ostringstream os;
    os << "digraph Quiver {\n";
    os << "  node [shape=circle];\n";
    for (int i = 0; i < ag.size(); ++i) {
        os << "  v" << i + 1 << " [label=\"" << i + 1 << ": " << ag.vertices[i].label << "\"];\n";
    }
    for (const auto& a : q.arrows) {
        os << "  v" << a.from + 1 << " -> v" << a.to + 1;
        const Int w = abs(a.value);
        if (w > 1) {
            os << " [label=\"" << w << "\"]";
        }
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace divlat
