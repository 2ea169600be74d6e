#include "arcgon/arc.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace arcgon {

namespace {

std::string arc_str(const Arc& a) {
    return "(" + std::to_string(a.source) + "," + std::to_string(a.target) + ")";
}

void require_well_formed(const Arc& a) {
    if (!a.well_formed())
        throw std::invalid_argument("arc " + arc_str(a) + ": source must exceed target");
}

}  // namespace

Weight::Weight(std::int64_t value) : w(value) {
    if (value > -1) throw std::invalid_argument("weight must satisfy w <= -1");
}

bool arc_output_less(const Arc& a, const Arc& b) {
    if (a.target != b.target) return a.target < b.target;
    return a.source < b.source;
}

std::int64_t floor_mod(std::int64_t x, std::int64_t m) {
    std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

bool is_admissible(Weight w, const Arc& a) {
    if (!a.well_formed()) return false;
    const std::int64_t len = a.length();
    return len >= w.abs_w() && floor_mod(len, w.modulus()) == w.abs_w() % w.modulus();
}

Arc suspend(const Arc& a, std::int64_t k) {
    require_well_formed(a);
    return Arc{a.source - k, a.target - k};
}

Arc tau_shift(Weight w, const Arc& a, std::int64_t k) {
    require_well_formed(a);
    return Arc{a.source - k * w.d(), a.target - k * w.d()};
}

Arc serre_shift(Weight w, const Arc& a) {
    require_well_formed(a);
    return Arc{a.source - w.w, a.target - w.w};
}

Relation relate(const Arc& a, const Arc& b) {
    require_well_formed(a);
    require_well_formed(b);
    if (a == b) throw std::invalid_argument("relate: arcs must be distinct");

    Relation rel;

    const bool shared = a.source == b.source || a.source == b.target ||
                        a.target == b.source || a.target == b.target;
    const bool cross_ab = a.target < b.target && b.target < a.source && a.source < b.source;
    const bool cross_ba = b.target < a.target && a.target < b.source && b.source < a.source;

    if (shared) {
        rel.kind = RelationKind::SharedVertex;
    } else if (cross_ab || cross_ba) {
        rel.kind = RelationKind::StrictCross;
    } else if (b.target < a.target && a.source < b.source) {
        rel.kind = RelationKind::Nested;
        rel.overarc = b;
    } else if (a.target < b.target && b.source < a.source) {
        rel.kind = RelationKind::Nested;
        rel.overarc = a;
    } else {
        rel.kind = RelationKind::Disjoint;
    }

    // d(a,b) = min over the four inter-arc endpoint differences.
    const std::array<std::pair<std::int64_t, std::int64_t>, 4> pairs = {{
        {a.source, b.source},
        {a.target, b.target},
        {a.source, b.target},
        {a.target, b.source},
    }};
    rel.distance = std::abs(pairs[0].first - pairs[0].second);
    for (const auto& [x, y] : pairs) rel.distance = std::min(rel.distance, std::abs(x - y));

    rel.neighbouring = !rel.crossing() && rel.distance == 1;
    if (rel.neighbouring) {
        // Witness: the distance-1 pair with the smallest vertices (a nested
        // pair adjacent on both sides has two; ptolemy_arcs re-enumerates).
        for (const auto& [x, y] : pairs) {
            if (std::abs(x - y) != 1) continue;
            auto ordered = std::minmax(x, y);
            if (!rel.witness || ordered.first < rel.witness->first)
                rel.witness = std::pair{ordered.first, ordered.second};
        }
    }
    return rel;
}

std::int64_t component_index(Weight w, const Arc& a) {
    require_well_formed(a);
    return floor_mod(a.source, w.modulus());
}

}  // namespace arcgon
