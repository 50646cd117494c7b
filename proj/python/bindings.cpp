#include "divlat/adapted.hpp"
#include "divlat/corpus.hpp"
#include "divlat/divide_io.hpp"
#include "divlat/polyline.hpp"
#include "divlat/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace divlat;

namespace {

py::object to_py(const Int& v) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

Int from_py(const py::handle& h) {
    return Int(py::str(h).cast<std::string>());
}

py::list to_py(const IntVector& v) {
    py::list out;
    for (const auto& x : v) {
        out.append(to_py(x));
    }
    return out;
}

py::list to_py(const IntMatrix& m) {
    py::list out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.append(to_py(m(i, j)));
        }
        out.append(row);
    }
    return out;
}

IntMatrix matrix_from_py(const py::sequence& rows) {
    const auto n = rows.size();
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        py::sequence row = rows[i];
        if (row.size() != n) {
            throw py::value_error("matrix must be square");
        }
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = from_py(row[j]);
        }
    }
    return m;
}

Sign sign_from(const std::string& s) {
    if (s == "+") {
        return Sign::Plus;
    }
    if (s == "-") {
        return Sign::Minus;
    }
    throw py::value_error("sign must be '+' or '-'");
}

MilnorLattice lattice_from(const py::sequence& I) {
    MilnorLattice lat;
    lat.I = matrix_from_py(I);
    lat.S = seifert_matrix(lat.I);
    lat.basis.resize(lat.I.rows());
    return lat;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "divides, saddle/region diagrams and Milnor lattices";
    m.attr("__version__") = kToolVersion;

    py::register_exception<DivideError>(m, "DivideError", PyExc_ValueError);

    py::class_<Divide>(m, "Divide")
        .def_readonly("name", &Divide::name)
        .def_readonly("double_points", &Divide::double_points)
        .def_readonly("terminals", &Divide::terminals)
        .def_property_readonly("num_edges", &Divide::num_edges)
        .def_property_readonly("num_branches", [](const Divide& d) { return d.branches.size(); })
        .def("__eq__", [](const Divide& a, const Divide& b) { return a == b; })
        .def("__repr__", [](const Divide& d) {
            return "<Divide " + d.name + " d=" + std::to_string(d.num_double_points()) +
                   " r=" + std::to_string(d.branches.size()) + ">";
        });

    m.def("parse_divide", &read_divide, py::arg("text"), "Parse divide-file text; raises DivideError.");
    m.def("validate", [](const std::string& text) { return parse_divide(text).diagnostics; }, py::arg("text"),
          "Diagnostics for divide-file text, empty when valid.");
    m.def("write_divide", &write_divide, py::arg("divide"));

    m.def("gen_a", [](int n) { return gen_a(n).divide; }, py::arg("n"));
    m.def("gen_e6", []() { return gen_e6().divide; });
    m.def("gen_depth1", []() { return gen_depth1().divide; });

    m.def(
        "ingest_polyline",
        [](const std::vector<std::pair<std::vector<IntPoint>, bool>>& branches, long long radius,
           IntPoint seed_point, const std::string& seed_sign, const std::string& name) {
            PolylineDivide p;
            p.name = name;
            for (const auto& [pts, closed] : branches) {
                p.branches.push_back(Polyline{pts, closed});
            }
            p.disc_radius = radius;
            p.seed_point = seed_point;
            p.seed_sign = sign_from(seed_sign);
            return ingest_polyline(p);
        },
        py::arg("branches"), py::arg("disc_radius"), py::arg("seed_point"), py::arg("seed_sign"),
        py::arg("name") = "polyline");

    m.def(
        "invariants",
        [](const Divide& d) {
            auto inv = invariants(sign_divide(d));
            py::dict out;
            out["d"] = inv.d;
            out["r"] = inv.r;
            out["mu"] = inv.mu;
            out["n_regions"] = inv.n_regions;
            out["genus"] = inv.genus;
            out["boundary_components"] = inv.boundary_components;
            out["euler_characteristic"] = inv.euler_characteristic;
            return out;
        },
        py::arg("divide"));

    m.def(
        "report_json",
        [](const Divide& d, const std::vector<std::string>& order) {
            PipelineOptions opt;
            opt.vertex_order = order;
            const auto r = run_pipeline(d, opt);
            return report_json(r, sha256_hex(write_divide(d)));
        },
        py::arg("divide"), py::arg("vertex_order") = std::vector<std::string>{});

    m.def(
        "lattice",
        [](const Divide& d) {
            const auto r = run_pipeline(d);
            py::dict out;
            out["basis"] = r.lattice.basis;
            out["I"] = to_py(r.lattice.I);
            out["S"] = to_py(r.lattice.S);
            out["M_desc"] = to_py(r.monodromy.desc);
            out["M_asc"] = to_py(r.monodromy.asc);
            out["rho_S"] = to_py(r.monodromy.rho_s);
            out["E"] = to_py(r.euler.E);
            return out;
        },
        py::arg("divide"));

    m.def(
        "seifert_matrix", [](const py::sequence& I) { return to_py(seifert_matrix(matrix_from_py(I))); },
        py::arg("I"));

    m.def(
        "pl_variation",
        [](const py::sequence& a, const py::sequence& I) {
            const auto lat = lattice_from(I);
            IntVector v;
            for (const auto& x : a) {
                v.push_back(from_py(x));
            }
            return to_py(pl_variation(v, lat));
        },
        py::arg("a"), py::arg("I"));

    m.def(
        "adapted_vectors",
        [](const py::sequence& I) {
            py::list out;
            for (const auto& a : adapted_vectors(lattice_from(I))) {
                out.append(to_py(a));
            }
            return out;
        },
        py::arg("I"));

    m.def(
        "char_poly_and_order",
        [](const py::sequence& M, unsigned max_power) {
            const auto r = char_poly_and_order(matrix_from_py(M), max_power);
            py::object order = py::none();
            if (r.order) {
                order = py::int_(*r.order);
            }
            return py::make_tuple(to_py(IntVector(r.coefficients)), order);
        },
        py::arg("M"), py::arg("max_power") = 60);
}
