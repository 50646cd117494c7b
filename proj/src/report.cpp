#include "divlat/report.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace divlat {

using nlohmann::ordered_json;

namespace {

const char* kCalibration =
    "rho_S = M_asc^-1 is the calibrated convention: Seifert invariance and the variation identity "
    "are checked for M_asc; variation images are computed with M_desc (last twist first).";

ordered_json int_json(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi) {
        return v.convert_to<long long>();
    }
    return v.str();
}

ordered_json vector_json(const IntVector& v) {
    ordered_json out = ordered_json::array();
    for (const auto& x : v) {
        out.push_back(int_json(x));
    }
    return out;
}

ordered_json matrix_json(const IntMatrix& m) {
    ordered_json out = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back(int_json(m(i, j)));
        }
        out.push_back(std::move(row));
    }
    return out;
}

ordered_json order_json(const std::optional<unsigned>& order) {
    if (order) {
        return *order;
    }
    return "exceeds max";
}

std::string verdict(bool pass) { return pass ? "pass" : "fail"; }

} // namespace

PipelineResult run_pipeline(const Divide& d, const PipelineOptions& options) {
    PipelineResult r;
    r.divide = d;
    r.signed_divide = sign_divide(d);
    r.warnings = r.signed_divide.faces.warnings;
    r.invariants = invariants(r.signed_divide);

    r.ag = build_ag(r.signed_divide);
    if (!options.vertex_order.empty()) {
        r.ag = reorder(r.ag, options.vertex_order);
    }
    r.exposed = exposure_set(r.signed_divide, r.ag);
    r.depths = depth_labels(r.ag, r.exposed);

    r.lattice = milnor_lattice(r.ag, r.invariants.r);
    r.monodromy = monodromy(r.lattice);
    r.suite = identity_suite(r.lattice, r.monodromy);
    for (const auto& c : r.suite) {
        if (!c.pass && c.gating) {
            r.failures.push_back("identity " + c.name + ": " + c.evidence);
        }
    }
    r.desc_poly = char_poly_and_order(r.monodromy.desc, options.max_power);
    r.asc_poly = char_poly_and_order(r.monodromy.asc, options.max_power);

    r.family = adapted_vectors(r.lattice);
    r.variation = verify_adapted(r.family, r.lattice);
    for (const auto& v : r.variation) {
        if (!v.pass) {
            r.failures.push_back("variation fails at index " + std::to_string(v.index + 1));
        }
    }

    r.euler = euler_matrix(r.lattice);
    r.certificate = exceptional_certificate(r.euler.E, r.ag);
    for (const auto& v : r.certificate.violations) {
        r.failures.push_back("certificate: " + v);
    }

    for (int v = 0; v < r.ag.size(); ++v) {
        if (r.depths.depth[v] == 1) {
            ConeRecord c = depth1_cone(r.ag, r.depths, r.lattice, v);
            if (!c.pass) {
                r.failures.push_back("depth-1 cone fails at " + r.ag.vertices[v].label);
            }
            r.cones.push_back(std::move(c));
        }
    }
    return r;
}

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("sha256 failed");
    }
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 15];
    }
    return out;
}

std::string report_json(const PipelineResult& r, const std::string& input_digest) {
    ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["tool"] = {{"name", "divlat"}, {"version", kToolVersion}};
    j["input"] = {{"name", r.divide.name}, {"sha256", input_digest}};

    const auto& inv = r.invariants;
    j["invariants"] = {{"d", inv.d},
                       {"r", inv.r},
                       {"mu", inv.mu},
                       {"n_regions", inv.n_regions},
                       {"genus", inv.genus},
                       {"boundary_components", inv.boundary_components},
                       {"euler_characteristic", inv.euler_characteristic}};
    j["warnings"] = r.warnings;

    ordered_json vertices = ordered_json::array();
    for (int i = 0; i < r.ag.size(); ++i) {
        const auto& v = r.ag.vertices[i];
        vertices.push_back({{"index", i + 1},
                            {"label", v.label},
                            {"id", v.id},
                            {"type", std::string(1, type_char(v.type))},
                            {"depth", r.depths.depth[i]},
                            {"exposed", static_cast<bool>(r.exposed[i])}});
    }
    ordered_json edges = ordered_json::array();
    for (const auto& e : r.ag.edges) {
        edges.push_back({{"u", e.u + 1}, {"v", e.v + 1}, {"multiplicity", e.multiplicity}});
    }
    j["ag"] = {{"vertices", vertices}, {"edges", edges}, {"diagram_depth", r.depths.diagram_depth}};

    j["lattice"] = {{"dim_n", r.lattice.dim_n},
                    {"pl_sign", r.lattice.pl_sign},
                    {"basis", r.lattice.basis},
                    {"I", matrix_json(r.lattice.I)},
                    {"S", matrix_json(r.lattice.S)}};

    j["monodromy"] = {{"M_desc", matrix_json(r.monodromy.desc)},
                      {"M_asc", matrix_json(r.monodromy.asc)},
                      {"rho_S", matrix_json(r.monodromy.rho_s)},
                      {"char_poly", vector_json(r.desc_poly.coefficients)},
                      {"char_poly_text", polynomial_to_string(r.desc_poly.coefficients)},
                      {"char_poly_asc", vector_json(r.asc_poly.coefficients)},
                      {"same_char_poly", r.desc_poly.coefficients == r.asc_poly.coefficients},
                      {"order_desc", order_json(r.desc_poly.order)},
                      {"order_asc", order_json(r.asc_poly.order)}};

    ordered_json suite = ordered_json::array();
    for (const auto& c : r.suite) {
        suite.push_back(
            {{"name", c.name}, {"verdict", verdict(c.pass)}, {"gating", c.gating}, {"evidence", c.evidence}});
    }
    j["identity_suite"] = suite;

    ordered_json vectors = ordered_json::array();
    for (const auto& a : r.family) {
        vectors.push_back(vector_json(a));
    }
    ordered_json variation = ordered_json::array();
    for (const auto& v : r.variation) {
        variation.push_back({{"index", v.index + 1}, {"image", vector_json(v.image)}, {"verdict", verdict(v.pass)}});
    }
    j["adapted"] = {{"vectors", vectors}, {"variation", variation}};

    ordered_json arrows = ordered_json::array();
    for (const auto& a : r.euler.arrows) {
        arrows.push_back({{"from", a.from + 1}, {"to", a.to + 1}, {"value", int_json(a.value)}});
    }
    j["euler"] = {{"E", matrix_json(r.euler.E)},
                  {"sigma", r.euler.sigma},
                  {"upper_sign_observed", r.euler.upper_sign},
                  {"arrows", arrows},
                  {"certificate", {{"verdict", verdict(r.certificate.pass)}, {"violations", r.certificate.violations}}}};

    ordered_json cones = ordered_json::array();
    for (const auto& c : r.cones) {
        cones.push_back({{"vertex", r.ag.vertices[c.vertex].label},
                         {"partner", r.ag.vertices[c.partner].label},
                         {"a_prime", vector_json(c.a_prime)},
                         {"a_partner", vector_json(c.a_partner)},
                         {"var_prime", vector_json(c.var_prime)},
                         {"var_total", vector_json(c.var_total)},
                         {"components", c.components},
                         {"splits_adapted", c.splits_adapted},
                         {"verdict", verdict(c.pass)}});
    }
    j["depth1_cones"] = cones;
    j["calibration"] = kCalibration;
    j["failures"] = r.failures;
    j["verdict"] = verdict(r.all_pass());
    return j.dump(2) + "\n";
}

std::string matrix_csv(const IntMatrix& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            os << (j ? "," : "") << m(i, j);
        }
        os << '\n';
    }
    return os.str();
}

void write_csv_dir(const PipelineResult& r, const std::string& dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create directory " + dir + ": " + ec.message());
    }
    const std::pair<const char*, const IntMatrix*> items[] = {
        {"I", &r.lattice.I},        {"S", &r.lattice.S},          {"M_desc", &r.monodromy.desc},
        {"M_asc", &r.monodromy.asc}, {"rho_S", &r.monodromy.rho_s}, {"E", &r.euler.E}};
    for (const auto& [name, m] : items) {
        const fs::path path = fs::path(dir) / (std::string(name) + ".csv");
        std::ofstream out(path, std::ios::binary);
        out << matrix_csv(*m);
        if (!out) {
            throw std::runtime_error("cannot write " + path.string());
        }
    }
}

} // namespace divlat
