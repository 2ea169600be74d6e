#include "arcgon/ptolemy.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace arcgon {

namespace {

void require_admissible(Weight w, const Arc& a, const char* who) {
    if (!is_admissible(w, a))
        throw std::invalid_argument(std::string(who) + ": arc (" + std::to_string(a.source) +
                                    "," + std::to_string(a.target) + ") is not admissible");
}

bool middles_count_for(Policy policy, Ext1Case tag) {
    switch (tag) {
        case Ext1Case::NbrE1Plus:
        case Ext1Case::NbrE1Minus:
        case Ext1Case::NbrE2Minus:
            return true;
        case Ext1Case::CrossPlus:
        case Ext1Case::CrossMinus:
            return policy == Policy::Both;
        default:
            return false;
    }
}

bool strictly_growing_past_first(const std::vector<std::int64_t>& xs) {
    if (xs.size() < 3) return false;
    for (std::size_t i = 2; i < xs.size(); ++i)
        if (xs[i] <= xs[i - 1]) return false;
    return true;
}

bool stabilized(const std::vector<std::int64_t>& xs) {
    return xs.size() >= 2 && xs[xs.size() - 1] == xs[xs.size() - 2];
}

}  // namespace

std::vector<PtolemyArc> ptolemy_arcs(Weight w, const Arc& a, const Arc& b) {
    require_admissible(w, a, "ptolemy_arcs");
    require_admissible(w, b, "ptolemy_arcs");
    if (a == b) throw std::invalid_argument("ptolemy_arcs: arcs must be distinct");

    std::vector<PtolemyArc> out;
    const Relation rel = relate(a, b);
    if (rel.kind == RelationKind::StrictCross) {
        std::array<std::int64_t, 4> p = {a.source, a.target, b.source, b.target};
        std::sort(p.begin(), p.end());
        const std::array<Arc, 4> candidates = {Arc{p[1], p[0]}, Arc{p[3], p[2]}, Arc{p[2], p[1]},
                                               Arc{p[3], p[0]}};
        // Opposite pairs: {0,1} and {2,3}; each pair is admissible together.
        if (is_admissible(w, candidates[0]) != is_admissible(w, candidates[1]) ||
            is_admissible(w, candidates[2]) != is_admissible(w, candidates[3]))
            throw std::logic_error("ptolemy_arcs: opposite pair admissibility mismatch");
        for (const Arc& c : candidates)
            if (is_admissible(w, c)) out.push_back(PtolemyArc{c, PtolemyClass::I, {a, b}});
        return out;
    }
    if (rel.neighbouring) {
        const std::array<std::pair<std::int64_t, std::int64_t>, 4> pairs = {{
            {a.source, b.source},
            {a.target, b.target},
            {a.source, b.target},
            {a.target, b.source},
        }};
        for (const auto& [va, vb] : pairs) {
            if (std::abs(va - vb) != 1) continue;
            const std::int64_t other_a = va == a.source ? a.target : a.source;
            const std::int64_t other_b = vb == b.source ? b.target : b.source;
            const Arc c{std::max(other_a, other_b), std::min(other_a, other_b)};
            if (!is_admissible(w, c))
                throw std::logic_error("ptolemy_arcs: inadmissible class-II arc");
            out.push_back(PtolemyArc{c, PtolemyClass::II, {a, b}});
        }
    }
    return out;
}

std::vector<Arc> extension_middle(Weight w, const Arc& b, const Arc& a) {
    return ext1(w, b, a).middle;
}

int ClosureResult::level_of(const Arc& a) const {
    auto it = level.find(a);
    if (it == level.end()) throw std::out_of_range("arc not in closure");
    return it->second;
}

ClosureResult closure(Weight w, const std::vector<Arc>& input, Policy policy,
                      LevelRecursion recursion) {
    ClosureResult res;
    res.policy = policy;

    std::vector<Arc> base = input;
    std::sort(base.begin(), base.end(), arc_output_less);
    base.erase(std::unique(base.begin(), base.end()), base.end());
    for (const Arc& a : base) {
        require_admissible(w, a, "closure");
        res.level.emplace(a, 1);
    }

    std::vector<Arc> frontier = base;
    int depth = 1;
    while (!frontier.empty()) {
        ++depth;
        std::vector<Arc> next;
        auto absorb = [&](const Ext1Answer& ans) {
            if (!middles_count_for(policy, ans.case_tag)) return;
            for (const Arc& m : ans.middle)
                if (res.level.emplace(m, depth).second) next.push_back(m);
        };
        for (const Arc& x : base)
            for (const Arc& v : frontier) {
                if (x == v) continue;
                // Triangle a -> e -> b corresponds to ext1(b, a).
                if (recursion != LevelRecursion::QuotInX) absorb(ext1(w, v, x));
                if (recursion != LevelRecursion::SubInX) absorb(ext1(w, x, v));
            }
        std::sort(next.begin(), next.end(), arc_output_less);
        frontier = std::move(next);
    }

    res.arcs.reserve(res.level.size());
    for (const auto& [a, lvl] : res.level) res.arcs.push_back(a);
    std::sort(res.arcs.begin(), res.arcs.end(), arc_output_less);
    return res;
}

bool split_check(Weight w, const std::vector<Arc>& input, std::int64_t v) {
    for (const Arc& a : input)
        if (a.incident(v) || a.spans(v))
            throw std::invalid_argument("split_check: vertex " + std::to_string(v) +
                                        " is not outer-isolated for the input");
    std::vector<Arc> left, right;
    for (const Arc& a : input) (a.source < v ? left : right).push_back(a);

    const ClosureResult whole = closure(w, input, Policy::Both);
    for (const Arc& a : whole.arcs)
        if (a.incident(v) || a.spans(v)) return false;

    std::set<Arc> expect;
    for (const Arc& a : closure(w, left, Policy::Both).arcs) expect.insert(a);
    for (const Arc& a : closure(w, right, Policy::Both).arcs) expect.insert(a);
    return expect == std::set<Arc>(whole.arcs.begin(), whole.arcs.end());
}

const char* to_string(FountainVerdict v) {
    switch (v) {
        case FountainVerdict::LeftFountain: return "left_fountain";
        case FountainVerdict::RightFountain: return "right_fountain";
        case FountainVerdict::Fountain: return "fountain";
        case FountainVerdict::Bounded: return "bounded";
        case FountainVerdict::Unknown: return "unknown";
    }
    return "unknown";
}

FountainReport fountain_report(Weight w, const Diagram& family, std::int64_t v,
                               const std::vector<std::int64_t>& depths) {
    for (std::size_t i = 1; i < depths.size(); ++i)
        if (depths[i] <= depths[i - 1])
            throw std::invalid_argument("fountain_report: depths must be increasing");

    FountainReport rep;
    rep.vertex = v;
    rep.depths = depths;
    for (std::int64_t k : depths) {
        std::vector<Arc> arcs;
        if (family.mode == DiagramMode::Periodic) {
            for (std::int64_t n = -k; n <= k; ++n)
                for (const Arc& a : family.arcs)
                    arcs.push_back(Arc{a.source + n * family.period, a.target + n * family.period});
        } else if (family.boundary == BoundaryMode::Sealed) {
            arcs = unfold(family, k).arcs;
        } else {
            arcs = family.arcs;  // free windows are already fully materialized
        }
        const ClosureResult cl = closure(w, arcs, Policy::Both);
        std::int64_t left = 0, right = 0;
        for (const Arc& a : cl.arcs) {
            if (a.source == v) ++left;
            if (a.target == v) ++right;
        }
        rep.left_counts.push_back(left);
        rep.right_counts.push_back(right);
    }

    const bool lg = strictly_growing_past_first(rep.left_counts);
    const bool rg = strictly_growing_past_first(rep.right_counts);
    const bool ls = stabilized(rep.left_counts);
    const bool rs = stabilized(rep.right_counts);
    if (lg && rg)
        rep.verdict = FountainVerdict::Fountain;
    else if (lg)
        rep.verdict = FountainVerdict::LeftFountain;
    else if (rg)
        rep.verdict = FountainVerdict::RightFountain;
    else if (ls && rs)
        rep.verdict = FountainVerdict::Bounded;
    else
        rep.verdict = FountainVerdict::Unknown;
    return rep;
}

}  // namespace arcgon
