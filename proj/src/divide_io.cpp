#include "divlat/divide_io.hpp"

#include "divlat/polyline.hpp"

#include <json.hpp>

#include <map>
#include <set>
#include <sstream>

namespace divlat {

using nlohmann::json;

namespace {

struct Diag {
    std::vector<std::string> items;
    void add(std::string s) { items.push_back(std::move(s)); }
    bool empty() const { return items.empty(); }
};

bool check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where, Diag& diag) {
    bool ok = true;
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!allowed.count(it.key())) {
            diag.add("unknown key '" + it.key() + "' in " + where);
            ok = false;
        }
    }
    return ok;
}

const json* member(const json& obj, const std::string& key, const std::string& where, Diag& diag) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        diag.add("missing key '" + key + "' in " + where);
        return nullptr;
    }
    return &*it;
}

std::optional<std::string> as_string(const json* v, const std::string& what, Diag& diag) {
    if (!v) {
        return std::nullopt;
    }
    if (!v->is_string()) {
        diag.add(what + " must be a string");
        return std::nullopt;
    }
    return v->get<std::string>();
}

std::optional<long long> as_int(const json& v, const std::string& what, Diag& diag) {
    if (!v.is_number_integer()) {
        diag.add(what + " must be an integer");
        return std::nullopt;
    }
    return v.get<long long>();
}

std::optional<Sign> parse_sign(const json* v, Diag& diag) {
    auto s = as_string(v, "sign", diag);
    if (!s) {
        return std::nullopt;
    }
    if (*s == "+") {
        return Sign::Plus;
    }
    if (*s == "-") {
        return Sign::Minus;
    }
    diag.add("malformed sign seed: sign must be \"+\" or \"-\"");
    return std::nullopt;
}

std::vector<std::string> string_list(const json* v, const std::string& what, Diag& diag) {
    std::vector<std::string> out;
    if (!v) {
        return out;
    }
    if (!v->is_array()) {
        diag.add(what + " must be a list");
        return out;
    }
    for (const auto& x : *v) {
        if (!x.is_string()) {
            diag.add(what + " entries must be strings");
            continue;
        }
        out.push_back(x.get<std::string>());
    }
    return out;
}

std::optional<Divide> parse_map(const json& root, const std::string& name, Diag& diag) {
    check_keys(root, {"name", "mode", "double_points", "terminals", "edges", "branches", "sign_seed"},
               "divide", diag);
    Divide d;
    d.name = name;
    d.double_points = string_list(member(root, "double_points", "divide", diag), "double_points", diag);
    d.terminals = string_list(member(root, "terminals", "divide", diag), "terminals", diag);

    std::map<std::string, int> vertex_index;
    for (int v = 0; v < d.num_vertices(); ++v) {
        vertex_index.emplace(d.vertex_id(v), v);
    }

    std::map<std::string, int> edge_index;
    if (const json* edges = member(root, "edges", "divide", diag)) {
        if (!edges->is_array()) {
            diag.add("edges must be a list");
        } else {
            for (const auto& e : *edges) {
                if (!e.is_object()) {
                    diag.add("edge entries must be objects");
                    continue;
                }
                check_keys(e, {"id", "ends"}, "edge", diag);
                Edge edge;
                auto id = as_string(member(e, "id", "edge", diag), "edge id", diag);
                if (!id) {
                    continue;
                }
                edge.id = *id;
                const json* ends = member(e, "ends", "edge '" + edge.id + "'", diag);
                if (!ends || !ends->is_array() || ends->size() != 2) {
                    diag.add("edge '" + edge.id + "': ends must be a list of two [vertex, slot] pairs");
                    continue;
                }
                bool good = true;
                for (int k = 0; k < 2; ++k) {
                    const json& end = (*ends)[k];
                    if (!end.is_array() || end.size() != 2 || !end[0].is_string()) {
                        diag.add("edge '" + edge.id + "': malformed end");
                        good = false;
                        continue;
                    }
                    const auto vid = end[0].get<std::string>();
                    auto it = vertex_index.find(vid);
                    if (it == vertex_index.end()) {
                        diag.add("edge '" + edge.id + "' references unknown vertex '" + vid + "'");
                        good = false;
                        continue;
                    }
                    auto slot = as_int(end[1], "slot of edge '" + edge.id + "'", diag);
                    if (!slot) {
                        good = false;
                        continue;
                    }
                    edge.ends[k] = EdgeEnd{it->second, static_cast<int>(*slot)};
                }
                if (good) {
                    edge_index.emplace(edge.id, d.num_edges());
                    d.edges.push_back(edge);
                }
            }
        }
    }

    if (const json* branches = member(root, "branches", "divide", diag)) {
        if (!branches->is_array()) {
            diag.add("branches must be a list");
        } else {
            for (const auto& b : *branches) {
                Branch br;
                bool touches_terminal = false;
                for (const auto& eid : string_list(&b, "branch", diag)) {
                    auto it = edge_index.find(eid);
                    if (it == edge_index.end()) {
                        diag.add("branch references unknown edge '" + eid + "'");
                        continue;
                    }
                    br.edges.push_back(it->second);
                    for (const auto& end : d.edges[it->second].ends) {
                        touches_terminal = touches_terminal || d.is_terminal(end.vertex);
                    }
                }
                br.kind = touches_terminal ? BranchKind::Interval : BranchKind::Circle;
                d.branches.push_back(std::move(br));
            }
        }
    }

    if (const json* seed = member(root, "sign_seed", "divide", diag)) {
        if (!seed->is_object()) {
            diag.add("malformed sign seed: must be an object");
        } else {
            check_keys(*seed, {"edge", "side", "sign"}, "sign_seed", diag);
            auto eid = as_string(member(*seed, "edge", "sign_seed", diag), "sign seed edge", diag);
            auto side = as_string(member(*seed, "side", "sign_seed", diag), "sign seed side", diag);
            auto sign = parse_sign(member(*seed, "sign", "sign_seed", diag), diag);
            if (eid) {
                auto it = edge_index.find(*eid);
                if (it == edge_index.end()) {
                    diag.add("malformed sign seed: unknown edge '" + *eid + "'");
                } else {
                    d.sign_seed.edge = it->second;
                }
            }
            if (side) {
                if (*side == "left") {
                    d.sign_seed.side = Side::Left;
                } else if (*side == "right") {
                    d.sign_seed.side = Side::Right;
                } else {
                    diag.add("malformed sign seed: side must be \"left\" or \"right\"");
                }
            }
            if (sign) {
                d.sign_seed.sign = *sign;
            }
        }
    }
    if (!diag.empty()) {
        return std::nullopt;
    }
    return d;
}

std::optional<Divide> parse_polyline(const json& root, const std::string& name, Diag& diag) {
    check_keys(root, {"name", "mode", "branches", "disc_radius", "sign_seed"}, "divide", diag);
    PolylineDivide pd;
    pd.name = name;
    if (const json* r = member(root, "disc_radius", "divide", diag)) {
        if (auto v = as_int(*r, "disc_radius", diag)) {
            pd.disc_radius = *v;
        }
    }
    auto point = [&](const json& p, IntPoint& out) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
            diag.add("points must be [int, int] pairs");
            return false;
        }
        out = {p[0].get<long long>(), p[1].get<long long>()};
        return true;
    };
    if (const json* branches = member(root, "branches", "divide", diag)) {
        if (!branches->is_array()) {
            diag.add("branches must be a list");
        } else {
            for (const auto& b : *branches) {
                if (!b.is_object()) {
                    diag.add("polyline branches must be objects");
                    continue;
                }
                check_keys(b, {"points", "closed"}, "polyline branch", diag);
                Polyline pl;
                if (const json* closed = member(b, "closed", "polyline branch", diag)) {
                    if (!closed->is_boolean()) {
                        diag.add("closed must be a boolean");
                    } else {
                        pl.closed = closed->get<bool>();
                    }
                }
                if (const json* pts = member(b, "points", "polyline branch", diag)) {
                    if (!pts->is_array()) {
                        diag.add("points must be a list");
                    } else {
                        for (const auto& p : *pts) {
                            IntPoint q;
                            if (point(p, q)) {
                                pl.points.push_back(q);
                            }
                        }
                    }
                }
                pd.branches.push_back(std::move(pl));
            }
        }
    }
    if (const json* seed = member(root, "sign_seed", "divide", diag)) {
        if (!seed->is_object()) {
            diag.add("malformed sign seed: must be an object");
        } else {
            check_keys(*seed, {"point", "sign"}, "sign_seed", diag);
            if (const json* p = member(*seed, "point", "sign_seed", diag)) {
                point(*p, pd.seed_point);
            }
            if (auto s = parse_sign(member(*seed, "sign", "sign_seed", diag), diag)) {
                pd.seed_sign = *s;
            }
        }
    }
    if (!diag.empty()) {
        return std::nullopt;
    }
    return ingest_polyline(pd);
}

} // namespace

ParseOutcome parse_divide(const std::string& text) {
    ParseOutcome out;
    Diag diag;
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        out.diagnostics.push_back(std::string("malformed JSON: ") + e.what());
        return out;
    }
    if (!root.is_object()) {
        out.diagnostics.push_back("divide file must hold a single JSON object");
        return out;
    }
    try {
        auto name = as_string(member(root, "name", "divide", diag), "name", diag);
        auto mode = as_string(member(root, "mode", "divide", diag), "mode", diag);
        std::optional<Divide> d;
        if (mode && *mode == "map") {
            d = parse_map(root, name.value_or(""), diag);
        } else if (mode && *mode == "polyline") {
            d = parse_polyline(root, name.value_or(""), diag);
        } else if (mode) {
            diag.add("mode must be \"map\" or \"polyline\"");
        }
        if (d && diag.empty()) {
            auto problems = validate(*d);
            if (problems.empty()) {
                out.divide = std::move(d);
            } else {
                diag.items.insert(diag.items.end(), problems.begin(), problems.end());
            }
        }
    } catch (const DivideError& e) {
        diag.items.insert(diag.items.end(), e.diagnostics().begin(), e.diagnostics().end());
    } catch (const json::exception& e) {
        diag.add(std::string("malformed value: ") + e.what());
    }
    out.diagnostics = std::move(diag.items);
    return out;
}

Divide read_divide(const std::string& text) {
    auto outcome = parse_divide(text);
    if (!outcome.ok()) {
        throw DivideError(outcome.diagnostics);
    }
    return std::move(*outcome.divide);
}

std::string write_divide(const Divide& d) {
    auto q = [](const std::string& s) { return json(s).dump(); };
    auto ids = [&](const std::vector<std::string>& list) {
        std::string out = "[";
        for (std::size_t i = 0; i < list.size(); ++i) {
            out += (i ? ", " : "") + q(list[i]);
        }
        return out + "]";
    };
    std::ostringstream os;
    os << "{\n";
    os << "  \"name\": " << q(d.name) << ",\n";
    os << "  \"mode\": \"map\",\n";
    os << "  \"double_points\": " << ids(d.double_points) << ",\n";
    os << "  \"terminals\": " << ids(d.terminals) << ",\n";
    os << "  \"edges\": [";
    for (int e = 0; e < d.num_edges(); ++e) {
        const Edge& edge = d.edges[e];
        os << (e ? ",\n" : "\n") << "    {\"id\": " << q(edge.id) << ", \"ends\": [";
        for (int k = 0; k < 2; ++k) {
            os << (k ? ", " : "") << '[' << q(d.vertex_id(edge.ends[k].vertex)) << ", "
               << edge.ends[k].slot << ']';
        }
        os << "]}";
    }
    os << (d.edges.empty() ? "],\n" : "\n  ],\n");
    os << "  \"branches\": [";
    for (std::size_t b = 0; b < d.branches.size(); ++b) {
        std::vector<std::string> names;
        for (int e : d.branches[b].edges) {
            names.push_back(d.edges[e].id);
        }
        os << (b ? ",\n" : "\n") << "    " << ids(names);
    }
    os << (d.branches.empty() ? "],\n" : "\n  ],\n");
    os << "  \"sign_seed\": {\"edge\": "
       << q(d.sign_seed.edge >= 0 && d.sign_seed.edge < d.num_edges() ? d.edges[d.sign_seed.edge].id : "")
       << ", \"side\": " << (d.sign_seed.side == Side::Left ? "\"left\"" : "\"right\"")
       << ", \"sign\": \"" << sign_char(d.sign_seed.sign) << "\"}\n";
    os << "}\n";
    return os.str();
}

} // namespace divlat
