#include "divlat/lattice.hpp"

#include <stdexcept>

namespace divlat {

int pl_sign_for(int dim_n) {
    return ((dim_n * (dim_n - 1) / 2) % 2 == 0) ? 1 : -1;
}

IntMatrix intersection_matrix(const AGDiagram& ag) {
    const auto n = static_cast<std::size_t>(ag.size());
    IntMatrix I(n, n);
    for (const auto& e : ag.edges) {
        if (ag.vertices[e.u].type == ag.vertices[e.v].type) {
            throw std::logic_error("same-type edge in diagram");
        }
        I(e.v, e.u) += e.multiplicity;
        I(e.u, e.v) -= e.multiplicity;
    }
    return I;
}

IntMatrix seifert_matrix(const IntMatrix& I) {
    const auto n = I.rows();
    IntMatrix S(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        S(i, i) = 1;
        for (std::size_t j = 0; j < i; ++j) {
            S(i, j) = -I(i, j);
        }
    }
    return S;
}

MilnorLattice milnor_lattice(const AGDiagram& ag, int branches, int dim_n) {
    MilnorLattice lat;
    for (const auto& v : ag.vertices) {
        lat.basis.push_back(v.label);
    }
    lat.I = intersection_matrix(ag);
    lat.S = seifert_matrix(lat.I);
    lat.dim_n = dim_n;
    lat.pl_sign = pl_sign_for(dim_n);
    lat.branches = branches;
    return lat;
}

IntMatrix transvection(const IntMatrix& I, std::size_t k, int pl_sign) {
    const auto n = I.rows();
    IntMatrix T = IntMatrix::identity(n);
    for (std::size_t j = 0; j < n; ++j) {
        T(k, j) += pl_sign * I(j, k);
    }
    return T;
}

MonodromyPair monodromy(const MilnorLattice& lat) {
    const auto n = lat.I.rows();
    MonodromyPair m{IntMatrix::identity(n), IntMatrix::identity(n), IntMatrix()};
    for (std::size_t k = 0; k < n; ++k) {
        const IntMatrix t = transvection(lat.I, k, lat.pl_sign);
        m.desc = m.desc * t;
        m.asc = t * m.asc;
    }
    const IntMatrix s_inv_t = inverse_unitriangular(lat.S).transpose();
    const Int sign = (lat.dim_n % 2 == 0) ? 1 : -1;
    m.rho_s = sign * (s_inv_t * lat.S);
    return m;
}

namespace {

Check make(std::string name, bool pass, std::string evidence) {
    return Check{std::move(name), pass, std::move(evidence)};
}

} // namespace

std::vector<Check> identity_suite(const MilnorLattice& lat, const MonodromyPair& m) {
    std::vector<Check> out;
    const auto n = lat.I.rows();
    const IntMatrix id = IntMatrix::identity(n);
    const Int sign = (lat.dim_n % 2 == 0) ? 1 : -1;

    {
        const IntMatrix rhs = -lat.S + sign * lat.S.transpose();
        out.push_back(make("intersection_from_seifert", rhs == lat.I,
                           rhs == lat.I ? "I = -S + (-1)^n S^T" : "-S + (-1)^n S^T = " + rhs.to_string()));
    }
    {
        const IntMatrix lhs = m.asc.transpose() * lat.S * m.asc;
        out.push_back(make("seifert_invariance", lhs == lat.S,
                           lhs == lat.S ? "M_asc^T S M_asc = S" : "M_asc^T S M_asc = " + lhs.to_string()));
    }
    {
        const IntMatrix prod = m.rho_s * m.asc;
        out.push_back(make("variation_inverse", prod == id,
                           prod == id ? "rho_S M_asc = Id" : "rho_S M_asc = " + prod.to_string()));
    }
    {
        const Int td = m.desc.trace();
        out.push_back(make("lefschetz_trace", td == 1, "trace M_desc = " + td.str()));
    }
    {
        const Int dm = determinant(m.desc - id);
        const Int di = determinant(lat.I);
        out.push_back(make("det_monodromy_minus_id", dm == di || dm == -di,
                           "det(M_desc - Id) = " + dm.str() + ", det I = " + di.str()));
    }
    {
        const auto rk = rank(lat.I);
        const long long want = static_cast<long long>(n) - lat.branches + 1;
        out.push_back(make("rank_intersection", static_cast<long long>(rk) == want,
                           "rank I = " + std::to_string(rk) + ", mu - r + 1 = " + std::to_string(want)));
    }
    {
        const Int ds = determinant(lat.S);
        out.push_back(make("det_seifert", ds == 1, "det S = " + ds.str()));
    }
    {
        const Int ta = m.asc.trace();
        out.push_back(make("lefschetz_trace_asc", ta == 1, "trace M_asc = " + ta.str()));
        out.back().gating = false;
    }
    return out;
}

CharPolyOrder char_poly_and_order(const IntMatrix& m, unsigned max_power) {
    return CharPolyOrder{characteristic_polynomial(m), multiplicative_order(m, max_power)};
}

} // namespace divlat
