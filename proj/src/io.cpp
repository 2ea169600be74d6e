#include "arcgon/io.hpp"

#include <sstream>
#include <stdexcept>

namespace arcgon {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw std::invalid_argument("parse error at " + path + ": " + what);
}

std::int64_t require_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<std::int64_t>();
}

json arc_to_json(const Arc& a) { return json::array({a.source, a.target}); }

json arcs_to_json(const std::vector<Arc>& arcs) {
    json out = json::array();
    for (const Arc& a : arcs) out.push_back(arc_to_json(a));
    return out;
}

}  // namespace

Diagram parse_diagram(const std::string& bytes, std::optional<std::int64_t> fallback_w) {
    json j;
    try {
        j = json::parse(bytes);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("parse error: ") + e.what());
    }
    if (!j.is_object()) fail("/", "expected an object");
    if (j.contains("format") && require_int(j["format"], "/format") != 1)
        fail("/format", "unsupported format version");

    std::int64_t wv;
    if (j.contains("w"))
        wv = require_int(j["w"], "/w");
    else if (fallback_w)
        wv = *fallback_w;
    else
        fail("/w", "missing (supply in the file or via --w)");
    if (wv > -1) fail("/w", "w must satisfy w <= -1");
    const Weight w{wv};

    if (!j.contains("mode") || !j["mode"].is_string()) fail("/mode", "expected \"window\" or \"periodic\"");
    const std::string mode = j["mode"].get<std::string>();

    std::vector<Arc> arcs;
    if (!j.contains("arcs") || !j["arcs"].is_array()) fail("/arcs", "expected an array");
    std::size_t idx = 0;
    for (const auto& e : j["arcs"]) {
        const std::string path = "/arcs/" + std::to_string(idx++);
        if (!e.is_array() || e.size() != 2) fail(path, "expected [source, target]");
        Arc a{require_int(e[0], path + "/0"), require_int(e[1], path + "/1")};
        if (!a.well_formed()) fail(path, "source must exceed target");
        if (!is_admissible(w, a)) fail(path, "arc is not admissible for w = " + std::to_string(wv));
        arcs.push_back(a);
    }

    try {
        if (mode == "window") {
            if (!j.contains("window") || !j["window"].is_object())
                fail("/window", "expected an object");
            const json& win = j["window"];
            const std::int64_t lo = require_int(win.value("lo", json()), "/window/lo");
            const std::int64_t hi = require_int(win.value("hi", json()), "/window/hi");
            BoundaryMode boundary = BoundaryMode::Free;
            if (win.contains("boundary")) {
                const std::string b = win["boundary"].is_string()
                                          ? win["boundary"].get<std::string>()
                                          : std::string();
                if (b == "sealed")
                    boundary = BoundaryMode::Sealed;
                else if (b != "free")
                    fail("/window/boundary", "expected \"free\" or \"sealed\"");
            }
            return make_window(w, lo, hi, boundary, std::move(arcs));
        }
        if (mode == "periodic") {
            if (!j.contains("period")) fail("/period", "missing");
            return make_periodic(w, require_int(j["period"], "/period"), std::move(arcs));
        }
    } catch (const std::invalid_argument& e) {
        const std::string what = e.what();
        if (what.rfind("parse error", 0) == 0) throw;
        fail("/arcs", what);
    }
    fail("/mode", "expected \"window\" or \"periodic\"");
}

json diagram_to_json(const Diagram& d) {
    json j;
    j["format"] = 1;
    j["w"] = d.w.w;
    if (d.mode == DiagramMode::Window) {
        j["mode"] = "window";
        j["window"] = {{"lo", d.lo},
                       {"hi", d.hi},
                       {"boundary", d.boundary == BoundaryMode::Sealed ? "sealed" : "free"}};
    } else {
        j["mode"] = "periodic";
        j["period"] = d.period;
    }
    j["arcs"] = arcs_to_json(d.arcs);
    return j;
}

json class_report_to_json(const Diagram& d, const ClassReport& rep) {
    json j;
    j["format"] = 1;
    j["class"] = to_string(rep.value);
    j["violations"] = rep.violations;
    json verts = json::array();
    for (const VertexStatus& st : rep.vertices) {
        json v;
        v["vertex"] = st.vertex;
        switch (st.kind) {
            case VertexKind::Endpoint: v["status"] = "endpoint"; break;
            case VertexKind::InnerIsolated: v["status"] = "inner_isolated"; break;
            case VertexKind::OuterIsolated: v["status"] = "outer_isolated"; break;
        }
        if (st.of) v["of"] = arc_to_json(*st.of);
        verts.push_back(v);
    }
    j["vertices"] = verts;
    j["outer_isolated"] = rep.outer_isolated;
    j["diagram"] = diagram_to_json(d);
    return j;
}

json closure_to_json(const ClosureResult& res, bool with_levels) {
    json j;
    j["format"] = 1;
    j["policy"] = res.policy == Policy::Both ? "both" : "class2";
    j["arcs"] = arcs_to_json(res.arcs);
    if (with_levels) {
        json levels = json::array();
        for (const Arc& a : res.arcs) levels.push_back(res.level_of(a));
        j["levels"] = levels;
    }
    return j;
}

json fan_to_json(const MutationFan& fan) {
    json j;
    j["format"] = 1;
    j["at"] = arc_to_json(fan.at);
    j["completions"] = arcs_to_json(fan.completions);
    j["proper_replacements"] = arcs_to_json(fan.proper_replacements);
    j["method"] = fan.method == FanMethod::Constructive ? "constructive" : "oracle";
    return j;
}

json approx_steps_to_json(const std::vector<ApproxStep>& steps) {
    json arr = json::array();
    for (const ApproxStep& st : steps) {
        json s;
        s["case"] = st.case_id;
        s["e1"] = st.e1 ? arc_to_json(*st.e1) : json();
        s["e2"] = st.e2 ? arc_to_json(*st.e2) : json();
        s["s_prime"] = arc_to_json(st.s_prime);
        s["s_star"] = arc_to_json(st.s_star);
        arr.push_back(s);
    }
    json j;
    j["format"] = 1;
    j["steps"] = arr;
    return j;
}

json fountain_to_json(const FountainReport& rep) {
    json j;
    j["format"] = 1;
    j["vertex"] = rep.vertex;
    j["depths"] = rep.depths;
    j["left_counts"] = rep.left_counts;
    j["right_counts"] = rep.right_counts;
    j["verdict"] = to_string(rep.verdict);
    return j;
}

json nc_bridge_to_json(const NcBridge& bridge) {
    auto part = [](const NcPartition& p) {
        json j;
        j["blocks"] = p.blocks;  // doubled half-integer coordinates
        j["escaping"] = p.escaping;
        return j;
    };
    json j;
    j["format"] = 1;
    j["points"] = "doubled";
    j["nc"] = part(bridge.nc);
    j["kreweras"] = part(bridge.kreweras);
    return j;
}

json graph_to_json(const MutationGraph& g) {
    json nodes = json::array();
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        json n;
        n["arcs"] = arcs_to_json(g.nodes[i].arcs);
        n["outer_isolated"] = g.outer_counts[i];
        nodes.push_back(n);
    }
    json edges = json::array();
    for (const auto& e : g.edges) {
        json ej;
        ej["from"] = e.from;
        ej["at"] = arc_to_json(e.at);
        ej["to"] = e.to;
        edges.push_back(ej);
    }
    json j;
    j["format"] = 1;
    j["complete"] = g.complete;
    j["nodes"] = nodes;
    j["edges"] = edges;
    return j;
}

std::string graph_to_dot(const MutationGraph& g) {
    std::ostringstream out;
    out << "digraph mutations {\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        out << "  n" << i << " [label=\"";
        for (std::size_t k = 0; k < g.nodes[i].arcs.size(); ++k) {
            if (k) out << " ";
            out << "(" << g.nodes[i].arcs[k].source << "," << g.nodes[i].arcs[k].target << ")";
        }
        out << "\\nouter=" << g.outer_counts[i] << "\"];\n";
    }
    for (const auto& e : g.edges)
        out << "  n" << e.from << " -> n" << e.to << " [label=\"(" << e.at.source << ","
            << e.at.target << ")\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace arcgon
