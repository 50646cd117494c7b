#pragma once

// Intersection form, Seifert form and monodromy of an ordered vanishing
// cycle basis.

#include "divlat/ag_diagram.hpp"
#include "divlat/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace divlat {

struct MilnorLattice {
    std::vector<std::string> basis;  // diagram labels in order
    IntMatrix I;
    IntMatrix S;
    int dim_n = 2;
    int pl_sign = -1;  // (-1)^(n(n-1)/2)
    int branches = 0;  // r, used by the rank check

    int mu() const { return static_cast<int>(basis.size()); }
};

int pl_sign_for(int dim_n);

// I[j][i] = +m, I[i][j] = -m for every diagram edge {i < j}.
IntMatrix intersection_matrix(const AGDiagram& ag);

// Lower unitriangular S with S[i][j] = -I[i][j] below the diagonal.
IntMatrix seifert_matrix(const IntMatrix& I);

MilnorLattice milnor_lattice(const AGDiagram& ag, int branches, int dim_n = 2);

// x -> x + pl_sign (x . V_k) V_k, k zero-based.
IntMatrix transvection(const IntMatrix& I, std::size_t k, int pl_sign);

struct MonodromyPair {
    IntMatrix desc;   // T_1 T_2 ... T_mu: the last twist acts first
    IntMatrix asc;    // T_mu ... T_1: the first twist acts first
    IntMatrix rho_s;  // (-1)^n S^-T S
};

MonodromyPair monodromy(const MilnorLattice& lat);

struct Check {
    std::string name;
    bool pass = false;
    std::string evidence;
    bool gating = true;  // false: reported only
};

// Seven exact identities between I, S and the monodromy matrices, plus the
// trace of M_asc, which is reported but not gating: the two twist orders are
// not conjugate once the diagram has an odd cycle. Every check runs even
// when an earlier one fails.
std::vector<Check> identity_suite(const MilnorLattice& lat, const MonodromyPair& m);

struct CharPolyOrder {
    std::vector<Int> coefficients;  // highest degree first
    std::optional<unsigned> order;  // nullopt: exceeds max_power
};

CharPolyOrder char_poly_and_order(const IntMatrix& m, unsigned max_power);

} // namespace divlat
