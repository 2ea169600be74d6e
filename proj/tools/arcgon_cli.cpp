// Command-line front end: check / ext / closure / fountain / mutate /
// mutate-approx / graph / enumerate / nc / render.
//
// Exit codes: 0 success, 1 input error, 2 --expect mismatch.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "arcgon/enumerate.hpp"
#include "arcgon/io.hpp"
#include "arcgon/render.hpp"

namespace {

using namespace arcgon;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Arc parse_arc_opt(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("arc must be written as \"source,target\"");
    Arc a{std::stoll(text.substr(0, comma)), std::stoll(text.substr(comma + 1))};
    if (!a.well_formed()) throw std::invalid_argument("arc: source must exceed target");
    return a;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
    return out;
}

std::pair<std::int64_t, std::int64_t> parse_window_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos)
        throw std::invalid_argument("window must be written as \"lo..hi\"");
    return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
}

/// Arcs from either a full diagram file or a bare [[s,t],...] array.
std::vector<Arc> parse_arc_file(const std::string& bytes, std::int64_t w,
                                std::optional<Diagram>* diagram_out) {
    auto j = nlohmann::json::parse(bytes, nullptr, false);
    if (!j.is_discarded() && j.is_array()) {
        std::vector<Arc> arcs;
        std::size_t idx = 0;
        for (const auto& e : j) {
            if (!e.is_array() || e.size() != 2)
                throw std::invalid_argument("parse error at /" + std::to_string(idx) +
                                            ": expected [source, target]");
            arcs.push_back(Arc{e[0].get<std::int64_t>(), e[1].get<std::int64_t>()});
            ++idx;
        }
        return arcs;
    }
    Diagram d = parse_diagram(bytes, w);
    if (diagram_out) *diagram_out = d;
    return d.arcs;
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"arc-diagram combinatorics of negative Calabi-Yau triangulated categories"};
    app.require_subcommand(1);

    bool json_out = false;
    std::int64_t seed = 0;
    std::optional<std::int64_t> global_w;
    app.add_flag("--json", json_out, "machine-readable reports on stdout");
    app.add_option("--w", global_w, "weight, usable before or after the subcommand");
    app.add_option("--seed", seed, "accepted for interface stability; all algorithms are deterministic");

    // check
    std::string check_file, expect_class;
    std::optional<std::int64_t> opt_w;
    auto* check = app.add_subcommand("check", "classify a diagram file");
    check->add_option("file", check_file)->required();
    check->add_option("--expect", expect_class, "exit 2 unless the class matches");
    check->add_option("--w", opt_w, "weight when the file omits it");

    // ext
    std::optional<std::int64_t> ext_w;
    std::int64_t ext_k = 0;
    std::string ext_x, ext_y;
    auto* ext = app.add_subcommand("ext", "dim Ext^k(x, y), with middle terms for k = 1");
    ext->add_option("--w", ext_w);
    ext->add_option("--k", ext_k)->required();
    ext->add_option("--x", ext_x)->required();
    ext->add_option("--y", ext_y)->required();

    // closure
    std::string closure_arcs_file, closure_policy = "both";
    std::optional<std::int64_t> closure_w;
    bool closure_levels = false;
    auto* clos = app.add_subcommand("closure", "extension closure of an arc set");
    clos->add_option("--w", closure_w);
    clos->add_option("--policy", closure_policy)->check(CLI::IsMember({"both", "class2"}));
    clos->add_option("--arcs", closure_arcs_file, "diagram file or bare [[s,t],...] array")->required();
    clos->add_flag("--levels", closure_levels);

    // fountain
    std::string fountain_file, fountain_depths = "1,2,4,8";
    std::optional<std::int64_t> fountain_w;
    std::int64_t fountain_vertex = 0;
    auto* fount = app.add_subcommand("fountain", "heuristic fountain detection at a vertex");
    fount->add_option("--w", fountain_w);
    fount->add_option("--config", fountain_file)->required();
    fount->add_option("--vertex", fountain_vertex)->required();
    fount->add_option("--depths", fountain_depths);

    // mutate
    std::string mutate_at, mutate_file;
    bool mutate_oracle = false;
    std::optional<std::int64_t> mutate_w;
    auto* mut = app.add_subcommand("mutate", "completion fan at an arc");
    mut->add_option("--at", mutate_at)->required();
    mut->add_option("file", mutate_file)->required();
    mut->add_flag("--oracle", mutate_oracle, "also run the brute-force oracle and compare");
    mut->add_option("--w", mutate_w);

    // mutate-approx
    std::string ma_at, ma_dir = "left", ma_file;
    std::int64_t ma_steps = 1;
    std::optional<std::int64_t> ma_w;
    auto* mapx = app.add_subcommand("mutate-approx", "approximation mutation steps");
    mapx->add_option("--at", ma_at)->required();
    mapx->add_option("--dir", ma_dir)->check(CLI::IsMember({"left", "right"}));
    mapx->add_option("--steps", ma_steps);
    mapx->add_option("file", ma_file)->required();
    mapx->add_option("--w", ma_w);

    // graph
    std::optional<std::int64_t> graph_w;
    std::string graph_window, graph_boundary = "sealed", graph_class = "hom_config";
    std::string graph_out, graph_dot;
    std::size_t graph_max_nodes = 4096;
    auto* gr = app.add_subcommand("graph", "mutation graph over a window");
    gr->add_option("--w", graph_w);
    gr->add_option("--window", graph_window, "lo..hi")->required();
    gr->add_option("--boundary", graph_boundary)->check(CLI::IsMember({"free", "sealed"}));
    gr->add_option("--class", graph_class);
    gr->add_option("--max-nodes", graph_max_nodes);
    gr->add_option("--out", graph_out, "write JSON graph here");
    gr->add_option("--dot", graph_dot, "write DOT text here");

    // enumerate
    std::optional<std::int64_t> enum_w;
    std::string enum_window, enum_boundary = "free", enum_class = "sms", enum_emit = "count";
    std::size_t enum_cap = 1u << 20;
    auto* en = app.add_subcommand("enumerate", "exhaustively enumerate configurations");
    en->add_option("--w", enum_w);
    en->add_option("--window", enum_window, "lo..hi")->required();
    en->add_option("--boundary", enum_boundary)->check(CLI::IsMember({"free", "sealed"}));
    en->add_option("--class", enum_class);
    en->add_option("--emit", enum_emit)->check(CLI::IsMember({"count", "list"}));
    en->add_option("--cap", enum_cap);

    // nc
    std::string nc_file;
    std::optional<std::int64_t> nc_w;
    auto* nc = app.add_subcommand("nc", "noncrossing partition and Kreweras complement (w = -1)");
    nc->add_option("file", nc_file)->required();
    nc->add_option("--w", nc_w);

    // render
    std::string render_file, render_format = "svg";
    std::int64_t render_unit = 24;
    bool render_labels = true;
    std::optional<std::int64_t> render_w;
    auto* rend = app.add_subcommand("render", "draw a diagram as SVG or ASCII");
    rend->add_option("file", render_file)->required();
    rend->add_option("--format", render_format)->check(CLI::IsMember({"svg", "ascii"}));
    rend->add_option("--unit", render_unit);
    rend->add_flag("--labels,!--no-labels", render_labels);
    rend->add_option("--w", render_w);

    CLI11_PARSE(app, argc, argv);

    auto need_w = [&](const std::optional<std::int64_t>& local) {
        if (local) return *local;
        if (global_w) return *global_w;
        throw std::invalid_argument("--w is required (before or after the subcommand)");
    };
    auto merge_w = [&](const std::optional<std::int64_t>& local) {
        return local ? local : global_w;
    };

    try {
        if (check->parsed()) {
            const Diagram d = parse_diagram(slurp(check_file), merge_w(opt_w));
            const ClassReport rep = classify_configuration(d);
            if (json_out) {
                print_json(class_report_to_json(d, rep));
            } else {
                std::cout << "class: " << to_string(rep.value) << "\n";
                for (const std::string& v : rep.violations) std::cout << "  - " << v << "\n";
            }
            if (!expect_class.empty()) {
                const auto want = config_class_from_string(expect_class);
                if (!want) throw std::invalid_argument("unknown class: " + expect_class);
                if (*want != rep.value) return 2;
            }
            return 0;
        }
        if (ext->parsed()) {
            const Weight w{need_w(ext_w)};
            const Arc x = parse_arc_opt(ext_x), y = parse_arc_opt(ext_y);
            const int dim = ext_dim(w, ext_k, x, y);
            nlohmann::json j{{"format", 1}, {"k", ext_k}, {"dim", dim}};
            if (ext_k == 1) {
                const Ext1Answer ans = ext1(w, x, y);
                nlohmann::json mid = nlohmann::json::array();
                for (const Arc& m : ans.middle) mid.push_back({m.source, m.target});
                j["middle"] = mid;
            }
            if (json_out) {
                print_json(j);
            } else {
                std::cout << "dim Ext^" << ext_k << " = " << dim << "\n";
                if (j.contains("middle")) std::cout << "middle: " << j["middle"].dump() << "\n";
            }
            return 0;
        }
        if (clos->parsed()) {
            const Weight w{need_w(closure_w)};
            const auto arcs = parse_arc_file(slurp(closure_arcs_file), w.w, nullptr);
            const Policy pol = closure_policy == "both" ? Policy::Both : Policy::ClassIIOnly;
            const ClosureResult res = closure(w, arcs, pol);
            const auto j = closure_to_json(res, closure_levels);
            if (json_out) {
                print_json(j);
            } else {
                for (std::size_t i = 0; i < res.arcs.size(); ++i) {
                    std::cout << "(" << res.arcs[i].source << "," << res.arcs[i].target << ")";
                    if (closure_levels) std::cout << " level " << res.level_of(res.arcs[i]);
                    std::cout << "\n";
                }
            }
            return 0;
        }
        if (fount->parsed()) {
            const Diagram d = parse_diagram(slurp(fountain_file), merge_w(fountain_w));
            const FountainReport rep =
                fountain_report(d.w, d, fountain_vertex, parse_int_list(fountain_depths));
            if (json_out) {
                print_json(fountain_to_json(rep));
            } else {
                std::cout << "verdict: " << to_string(rep.verdict) << "\n";
                std::cout << "left:  ";
                for (auto c : rep.left_counts) std::cout << c << " ";
                std::cout << "\nright: ";
                for (auto c : rep.right_counts) std::cout << c << " ";
                std::cout << "\n";
            }
            return 0;
        }
        if (mut->parsed()) {
            const Diagram d = parse_diagram(slurp(mutate_file), merge_w(mutate_w));
            const Arc at = parse_arc_opt(mutate_at);
            const MutationFan fan = completions_at(d, at);
            nlohmann::json j = fan_to_json(fan);
            if (mutate_oracle) {
                const MutationFan oracle = brute_force_completions(d, at);
                j["oracle"] = fan_to_json(oracle);
                j["oracle_agrees"] = oracle.completions == fan.completions;
            }
            if (json_out) {
                print_json(j);
            } else {
                std::cout << "completions:";
                for (const Arc& c : fan.completions)
                    std::cout << " (" << c.source << "," << c.target << ")";
                std::cout << "\n";
                if (mutate_oracle)
                    std::cout << "oracle agrees: " << (j["oracle_agrees"].get<bool>() ? "yes" : "no")
                              << "\n";
            }
            return 0;
        }
        if (mapx->parsed()) {
            const Diagram d = parse_diagram(slurp(ma_file), merge_w(ma_w));
            const Arc at = parse_arc_opt(ma_at);
            const MutationDir dir = ma_dir == "left" ? MutationDir::Left : MutationDir::Right;
            const auto steps = iterate_mutations(d, at, ma_steps, dir);
            if (json_out) {
                print_json(approx_steps_to_json(steps));
            } else {
                Arc cur = at;
                std::cout << "(" << cur.source << "," << cur.target << ")";
                for (const ApproxStep& st : steps) {
                    std::cout << " -> (" << st.s_star.source << "," << st.s_star.target << ")";
                    cur = st.s_star;
                }
                std::cout << "\n";
            }
            return 0;
        }
        if (gr->parsed()) {
            const auto [lo, hi] = parse_window_range(graph_window);
            const auto cls = config_class_from_string(graph_class);
            if (!cls) throw std::invalid_argument("unknown class: " + graph_class);
            const BoundaryMode b =
                graph_boundary == "sealed" ? BoundaryMode::Sealed : BoundaryMode::Free;
            const MutationGraph g =
                mutation_graph(Weight{need_w(graph_w)}, lo, hi, b, *cls, graph_max_nodes);
            const auto j = graph_to_json(g);
            if (!graph_out.empty()) std::ofstream(graph_out) << j.dump(2) << "\n";
            if (!graph_dot.empty()) std::ofstream(graph_dot) << graph_to_dot(g);
            if (json_out || (graph_out.empty() && graph_dot.empty())) print_json(j);
            if (!g.complete) {
                std::cerr << "node budget exceeded; graph is partial\n";
                return 1;
            }
            return 0;
        }
        if (en->parsed()) {
            const auto [lo, hi] = parse_window_range(enum_window);
            const auto cls = config_class_from_string(enum_class);
            if (!cls) throw std::invalid_argument("unknown class: " + enum_class);
            const BoundaryMode b =
                enum_boundary == "sealed" ? BoundaryMode::Sealed : BoundaryMode::Free;
            const EnumResult res =
                enumerate_configs({Weight{need_w(enum_w)}, lo, hi, b, *cls, enum_cap});
            if (enum_emit == "count") {
                nlohmann::json j{{"format", 1}, {"count", res.diagrams.size()},
                                 {"complete", res.complete}};
                if (json_out)
                    print_json(j);
                else
                    std::cout << res.diagrams.size() << "\n";
            } else {
                nlohmann::json arr = nlohmann::json::array();
                for (const Diagram& d : res.diagrams) arr.push_back(diagram_to_json(d));
                nlohmann::json j{{"format", 1}, {"diagrams", arr}, {"complete", res.complete}};
                print_json(j);
            }
            if (!res.complete) {
                std::cerr << "enumeration cap exceeded\n";
                return 1;
            }
            return 0;
        }
        if (nc->parsed()) {
            const Diagram d = parse_diagram(slurp(nc_file), merge_w(nc_w));
            const NcBridge bridge = nc_partition(d);
            print_json(nc_bridge_to_json(bridge));
            return 0;
        }
        if (rend->parsed()) {
            const Diagram d = parse_diagram(slurp(render_file), merge_w(render_w));
            RenderSpec spec;
            spec.format = render_format == "svg" ? RenderFormat::Svg : RenderFormat::Ascii;
            spec.unit = render_unit;
            spec.labels = render_labels;
            std::cout << render(d, spec);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
