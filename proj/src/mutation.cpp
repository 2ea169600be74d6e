#include "arcgon/mutation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "arcgon/enumerate.hpp"

namespace arcgon {

namespace {

std::string arc_str(const Arc& a) {
    return "(" + std::to_string(a.source) + "," + std::to_string(a.target) + ")";
}

void require_mutable(const Diagram& d, const Arc& s, const char* who) {
    if (d.mode != DiagramMode::Window)
        throw std::invalid_argument(std::string(who) + ": window diagram required");
    if (std::find(d.arcs.begin(), d.arcs.end(), s) == d.arcs.end())
        throw std::invalid_argument(std::string(who) + ": arc " + arc_str(s) +
                                    " is not in the diagram");
    if (classify_configuration(d).value < ConfigClass::HomConfig)
        throw std::invalid_argument(std::string(who) +
                                    ": diagram must classify as hom_config or better");
}

/// Smallest overarc of s among the given arcs, if any.
std::optional<Arc> smallest_overarc(const std::vector<Arc>& arcs, const Arc& s) {
    std::optional<Arc> best;
    for (const Arc& a : arcs) {
        if (a == s) continue;
        if (a.target < s.target && s.source < a.source && (!best || a.length() < best->length()))
            best = a;
    }
    return best;
}

bool vertex_isolated(const std::vector<Arc>& arcs, std::int64_t v) {
    for (const Arc& a : arcs)
        if (a.incident(v)) return false;
    return true;
}

std::optional<Arc> smallest_cover(const std::vector<Arc>& arcs, std::int64_t v) {
    std::optional<Arc> best;
    for (const Arc& a : arcs)
        if (a.spans(v) && (!best || a.length() < best->length())) best = a;
    return best;
}

/// Isolated vertices of [lo, hi] whose smallest cover equals `of`
/// (std::nullopt = no cover at all, i.e. outer-isolated).
std::vector<std::int64_t> isolated_under(const std::vector<Arc>& arcs, std::int64_t lo,
                                         std::int64_t hi, const std::optional<Arc>& of) {
    std::vector<std::int64_t> out;
    for (std::int64_t v = lo; v <= hi; ++v) {
        if (!vertex_isolated(arcs, v)) continue;
        if (smallest_cover(arcs, v) == of) out.push_back(v);
    }
    return out;
}

MutationFan finish_fan(Arc at, std::vector<Arc> completions, FanMethod method) {
    MutationFan fan;
    fan.at = at;
    std::sort(completions.begin(), completions.end(), arc_output_less);
    completions.erase(std::unique(completions.begin(), completions.end()), completions.end());
    fan.completions = std::move(completions);
    for (const Arc& c : fan.completions)
        if (c != at) fan.proper_replacements.push_back(c);
    fan.method = method;
    return fan;
}

Arc reflect(const Arc& a) { return Arc{-a.target, -a.source}; }

Diagram reflect(const Diagram& d) {
    std::vector<Arc> arcs;
    arcs.reserve(d.arcs.size());
    for (const Arc& a : d.arcs) arcs.push_back(reflect(a));
    return make_window(d.w, -d.hi, -d.lo, d.boundary, std::move(arcs));
}

ApproxStep approx_mutate_left(const Diagram& d, const Arc& s) {
    const std::optional<Arc> a = smallest_overarc(d.arcs, s);
    if (!a)
        throw std::invalid_argument(
            "approx_mutate: arc " + arc_str(s) +
            " has no real overarc (unfold a sealed diagram once first)");

    // Direct innerarcs of a (smallest overarc = a) and of s.
    std::vector<Arc> children_a, children_s;
    for (const Arc& c : d.arcs) {
        if (c == s || c == *a) continue;
        if (smallest_overarc(d.arcs, c) == a) children_a.push_back(c);
        if (smallest_overarc(d.arcs, c) == std::optional<Arc>(s)) children_s.push_back(c);
    }

    const auto inner_a = isolated_under(d.arcs, a->target + 1, a->source - 1, *a);
    const auto inner_s = isolated_under(d.arcs, s.target + 1, s.source - 1, s);

    ApproxStep step;
    const Arc sigma_inv_s = suspend(s, -1);

    auto source_child_at = [&](const std::vector<Arc>& children, std::int64_t v) -> Arc {
        for (const Arc& c : children)
            if (c.source == v) return c;
        throw std::logic_error("approx_mutate: expected an innerarc with source " +
                               std::to_string(v));
    };

    if (inner_a.empty()) {
        step.case_id = 1;
        if (d.w.w != -1)
            throw std::logic_error("approx_mutate: overarc without inner-isolated vertices forces w = -1");
        step.e1 = Arc{sigma_inv_s.source, s.target - 1};
        if (s.length() > 1) step.e2 = Arc{s.source - 1, s.target + 1};
        step.s_prime = step.e2 ? Arc{step.e2->source, step.e1->target}
                               : Arc{s.target, step.e1->target};
    } else {
        // v': the smallest inner-isolated vertex of s (w <= -2 here).
        std::int64_t v2 = 0;
        {
            auto it = std::min_element(inner_s.begin(), inner_s.end());
            if (it == inner_s.end())
                throw std::logic_error("approx_mutate: hom_config arc without inner-isolated "
                                       "vertices for w <= -2");
            v2 = *it;
        }
        std::optional<Arc> e2;
        if (v2 != s.target + 1) e2 = Arc{source_child_at(children_s, v2 - 1).source, s.target + 1};

        const bool right_side =
            std::any_of(inner_a.begin(), inner_a.end(),
                        [&](std::int64_t v) { return v > s.source; });
        if (right_side) {
            step.case_id = 2;
            std::int64_t v = 0;
            bool found = false;
            for (std::int64_t cand : inner_a)
                if (cand > s.source && (!found || cand < v)) {
                    v = cand;
                    found = true;
                }
            std::optional<Arc> e1;
            if (v != s.source + 1)
                e1 = Arc{source_child_at(children_a, v - 1).source, sigma_inv_s.source};
            step.e1 = e1;
            step.e2 = e2;
            if (e1 && e2)
                step.s_prime = Arc{e1->source, e2->source};
            else if (!e1 && e2)
                step.s_prime = Arc{s.source, e2->source};
            else if (e1 && !e2)
                step.s_prime = Arc{e1->source, s.target};
            else
                step.s_prime = s;
        } else {
            step.case_id = 3;
            const std::int64_t v = *std::min_element(inner_a.begin(), inner_a.end());
            if (v >= s.target)
                throw std::logic_error("approx_mutate: case 3 vertex must lie left of the arc");
            Arc e1 = v == a->target + 1
                         ? Arc{sigma_inv_s.source, a->target}
                         : Arc{sigma_inv_s.source, source_child_at(children_a, v - 1).source};
            step.e1 = e1;
            step.e2 = e2;
            step.s_prime = e2 ? Arc{e2->source, e1.target} : Arc{s.target, e1.target};
        }
    }
    step.s_star = suspend(step.s_prime, -1);
    return step;
}

}  // namespace

MutationFan completions_at(const Diagram& d, const Arc& s) {
    require_mutable(d, s, "completions_at");
    const std::int64_t aw = d.w.abs_w();

    std::vector<Arc> removed;
    for (const Arc& a : d.arcs)
        if (a != s) removed.push_back(a);

    const std::optional<Arc> over = smallest_overarc(d.arcs, s);
    const bool virtual_over =
        !over && d.boundary == BoundaryMode::Sealed && sealed_valid(d);

    if (over || virtual_over) {
        // The 2|w| isolated vertices under the (real or virtual) smallest
        // overarc, after removing s, paired at offset |w|.
        std::int64_t scan_lo = d.lo, scan_hi = d.hi;
        if (over) {
            scan_lo = over->target + 1;
            scan_hi = over->source - 1;
        }
        const auto xs = isolated_under(removed, scan_lo, scan_hi,
                                       over ? std::optional<Arc>(*over) : std::nullopt);
        if (static_cast<std::int64_t>(xs.size()) != 2 * aw)
            throw std::logic_error("completions_at: expected " + std::to_string(2 * aw) +
                                   " isolated vertices under the overarc, found " +
                                   std::to_string(xs.size()));
        std::vector<Arc> completions;
        for (std::int64_t i = 0; i < aw; ++i) {
            const Arc c{xs[aw + i], xs[i]};
            if (!is_admissible(d.w, c))
                throw std::logic_error("completions_at: inadmissible completion candidate");
            completions.push_back(c);
        }
        return finish_fan(s, std::move(completions), FanMethod::Constructive);
    }

    // Outer-arc in a free (or sealed-invalid) window: k+1 completions from
    // the positions of the outer-isolated vertices relative to s.
    std::vector<std::int64_t> vs;  // outer-isolated of D (with s present)
    for (std::int64_t v = d.lo; v <= d.hi; ++v)
        if (vertex_isolated(d.arcs, v) && !smallest_cover(d.arcs, v)) vs.push_back(v);
    const auto inner_s = isolated_under(d.arcs, s.target + 1, s.source - 1, s);
    const std::int64_t k = static_cast<std::int64_t>(vs.size());
    std::int64_t j = 0;  // number of outer-isolated vertices left of s
    while (j < k && vs[j] < s.target) ++j;

    // x_1..x_{|w|-1} are s's inner-isolated vertices; x_0 := t(s) and
    // x_{|w|} := s(s) serve the one-sided k = |w| cases.
    auto x_at = [&](std::int64_t idx) -> std::int64_t {
        if (idx == 0) return s.target;
        if (idx == aw) return s.source;
        return inner_s[idx - 1];
    };

    std::vector<Arc> completions{s};
    for (std::int64_t i = 1; i <= j; ++i)
        completions.push_back(Arc{x_at(aw - i), vs[j - i]});
    for (std::int64_t i = 1; i <= k - j; ++i)
        completions.push_back(Arc{vs[j + i - 1], x_at(i)});
    for (const Arc& c : completions)
        if (!is_admissible(d.w, c))
            throw std::logic_error("completions_at: inadmissible completion candidate");
    return finish_fan(s, std::move(completions), FanMethod::Constructive);
}

MutationFan brute_force_completions(const Diagram& d, const Arc& s) {
    require_mutable(d, s, "brute_force_completions");

    std::vector<Arc> removed;
    for (const Arc& a : d.arcs)
        if (a != s) removed.push_back(a);

    std::vector<std::int64_t> isolated;
    for (std::int64_t v = d.lo; v <= d.hi; ++v)
        if (vertex_isolated(removed, v)) isolated.push_back(v);

    std::vector<Arc> completions;
    for (std::size_t i = 0; i < isolated.size(); ++i)
        for (std::size_t jj = i + 1; jj < isolated.size(); ++jj) {
            const Arc c{isolated[jj], isolated[i]};
            if (!is_admissible(d.w, c)) continue;
            bool crossing = false;
            for (const Arc& a : removed)
                if (relate(a, c).crossing()) {
                    crossing = true;
                    break;
                }
            if (crossing) continue;
            std::vector<Arc> arcs = removed;
            arcs.push_back(c);
            Diagram cand = make_window(d.w, d.lo, d.hi, d.boundary, std::move(arcs));
            if (classify_configuration(cand).value >= ConfigClass::HomConfig)
                completions.push_back(c);
        }
    return finish_fan(s, std::move(completions), FanMethod::Oracle);
}

ApproxStep approx_mutate(const Diagram& d, const Arc& s, MutationDir dir) {
    require_mutable(d, s, "approx_mutate");
    if (dir == MutationDir::Left) return approx_mutate_left(d, s);

    // Right mutation: reflect coordinates, mutate left, reflect back.
    ApproxStep step = approx_mutate_left(reflect(d), reflect(s));
    ApproxStep out;
    out.case_id = step.case_id;
    if (step.e1) out.e1 = reflect(*step.e1);
    if (step.e2) out.e2 = reflect(*step.e2);
    out.s_prime = reflect(step.s_prime);
    out.s_star = reflect(step.s_star);
    return out;
}

std::vector<ApproxStep> iterate_mutations(const Diagram& d, const Arc& s, std::int64_t steps,
                                          MutationDir dir) {
    std::vector<ApproxStep> out;
    Diagram cur = d;
    Arc at = s;
    for (std::int64_t i = 0; i < steps; ++i) {
        ApproxStep step = approx_mutate(cur, at, dir);
        std::vector<Arc> arcs;
        for (const Arc& a : cur.arcs)
            if (a != at) arcs.push_back(a);
        arcs.push_back(step.s_star);
        cur = make_window(cur.w, cur.lo, cur.hi, cur.boundary, std::move(arcs));
        at = step.s_star;
        out.push_back(std::move(step));
    }
    return out;
}

MutationGraph mutation_graph(Weight w, std::int64_t lo, std::int64_t hi, BoundaryMode boundary,
                             ConfigClass cls, std::size_t max_nodes) {
    EnumRequest req{w, lo, hi, boundary, cls, max_nodes};
    EnumResult en = enumerate_configs(req);

    MutationGraph g;
    g.complete = en.complete;
    g.nodes = std::move(en.diagrams);

    std::map<std::vector<Arc>, std::size_t> index;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        index[g.nodes[i].arcs] = i;
        std::int64_t outer = 0;
        for (const VertexStatus& st : classify_vertices(g.nodes[i]))
            if (st.kind == VertexKind::OuterIsolated) ++outer;
        g.outer_counts.push_back(outer);
    }

    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        for (const Arc& s : g.nodes[i].arcs) {
            const MutationFan fan = completions_at(g.nodes[i], s);
            for (const Arc& c : fan.proper_replacements) {
                std::vector<Arc> arcs;
                for (const Arc& a : g.nodes[i].arcs)
                    if (a != s) arcs.push_back(a);
                arcs.push_back(c);
                std::sort(arcs.begin(), arcs.end(), arc_output_less);
                auto it = index.find(arcs);
                if (it == index.end()) {
                    if (!g.complete) continue;  // partial graphs may miss targets
                    throw std::logic_error("mutation_graph: mutation left the node class");
                }
                g.edges.push_back(MutationGraph::Edge{i, s, it->second});
            }
        }
    }
    return g;
}

}  // namespace arcgon
