#include "arcgon/ncpart.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace arcgon {

namespace {

// Doubled coordinates throughout: point q = v - 0.5 is stored as 2v - 1.

struct ChainData {
    // target vertex -> arc, source vertex -> arc (windows); for periodic
    // mode lookups go through the residue maps instead.
    std::map<std::int64_t, Arc> by_target;
    std::map<std::int64_t, Arc> by_source;
    const Diagram* diagram = nullptr;

    bool periodic() const { return diagram->mode == DiagramMode::Periodic; }

    // Arc of the infinite family with the given target vertex, if any.
    std::optional<Arc> arc_with_target(std::int64_t v) const {
        if (!periodic()) {
            auto it = by_target.find(v);
            if (it == by_target.end()) return std::nullopt;
            return it->second;
        }
        const std::int64_t p = diagram->period;
        for (const Arc& a : diagram->arcs) {
            if (floor_mod(v - a.target, p) == 0) {
                const std::int64_t shift = v - a.target;
                return Arc{a.source + shift, a.target + shift};
            }
        }
        return std::nullopt;
    }

    std::optional<Arc> arc_with_source(std::int64_t v) const {
        if (!periodic()) {
            auto it = by_source.find(v);
            if (it == by_source.end()) return std::nullopt;
            return it->second;
        }
        const std::int64_t p = diagram->period;
        for (const Arc& a : diagram->arcs) {
            if (floor_mod(v - a.source, p) == 0) {
                const std::int64_t shift = v - a.source;
                return Arc{a.source + shift, a.target + shift};
            }
        }
        return std::nullopt;
    }
};

// Successor of doubled point d: follows the arc whose target is the next
// vertex. Returns doubled point of source + 0.5.
std::optional<std::int64_t> chain_next(const ChainData& cd, std::int64_t d) {
    const std::int64_t v = (d + 1) / 2;  // vertex q + 0.5
    if (auto a = cd.arc_with_target(v)) return 2 * a->source + 1;
    return std::nullopt;
}

std::optional<std::int64_t> chain_prev(const ChainData& cd, std::int64_t d) {
    const std::int64_t v = (d - 1) / 2;  // vertex q - 0.5
    if (auto a = cd.arc_with_source(v)) return 2 * a->target - 1;
    return std::nullopt;
}

/// Build the partition of one parity class of half-integer points.
/// `residue` selects the class by doubled value mod 4 (1 for 2n+0.5,
/// 3 for 2n-0.5).
NcPartition build_partition(const Diagram& d, const ChainData& cd, std::int64_t residue) {
    NcPartition part;
    std::set<std::int64_t> seen;

    std::vector<std::int64_t> points;
    if (d.mode == DiagramMode::Window) {
        for (std::int64_t dd = 2 * d.lo - 1; dd <= 2 * d.hi + 1; dd += 2)
            if (floor_mod(dd, 4) == residue) points.push_back(dd);
    } else {
        for (std::int64_t dd = -1; dd <= 2 * (d.period - 1) + 1; dd += 2)
            if (floor_mod(dd, 4) == residue) points.push_back(dd);
    }

    const std::int64_t lo_pt = 2 * d.lo - 1;
    const std::int64_t hi_pt = 2 * d.hi + 1;

    for (std::int64_t start : points) {
        if (seen.count(start)) continue;

        bool infinite = false;
        std::int64_t first = start;
        if (d.mode == DiagramMode::Periodic) {
            // Walk backwards; a phase repeat means the chain is infinite.
            std::set<std::int64_t> phases{floor_mod(first, 2 * d.period)};
            while (auto prev = chain_prev(cd, first)) {
                first = *prev;
                if (!phases.insert(floor_mod(first, 2 * d.period)).second) {
                    infinite = true;
                    break;
                }
            }
        }

        std::vector<std::int64_t> block{first};
        {
            std::set<std::int64_t> phases;
            if (d.mode == DiagramMode::Periodic)
                phases.insert(floor_mod(first, 2 * d.period));
            std::int64_t cur = first;
            while (auto next = chain_next(cd, cur)) {
                cur = *next;
                if (d.mode == DiagramMode::Periodic &&
                    !phases.insert(floor_mod(cur, 2 * d.period)).second) {
                    infinite = true;
                    break;
                }
                block.push_back(cur);
            }
        }

        for (std::int64_t p : block) seen.insert(p);
        bool escape = false;
        if (d.mode == DiagramMode::Periodic) {
            escape = infinite;
        } else if (d.boundary == BoundaryMode::Free) {
            // A chain that ran into the window boundary could continue in
            // an extension of the presented family; untouched boundary
            // points carry no such evidence.
            escape = block.size() > 1 && (block.front() == lo_pt || block.back() == hi_pt);
        } else {
            // Sealed: flagged when the through-chain fails to close.
            if (block.front() == lo_pt) escape = block.back() != hi_pt;
            if (block.back() == hi_pt) escape = escape || block.front() != lo_pt;
        }
        part.blocks.push_back(std::move(block));
        if (escape) part.escaping.push_back(part.blocks.size() - 1);
    }
    return part;
}

}  // namespace

NcBridge nc_partition(const Diagram& d) {
    if (d.w.w != -1) throw std::invalid_argument("nc_partition: defined for w = -1 only");
    if (auto cross = find_crossing(d))
        throw std::invalid_argument("nc_partition: diagram has crossings");

    ChainData cd;
    cd.diagram = &d;
    if (d.mode == DiagramMode::Window) {
        for (const Arc& a : d.arcs) {
            cd.by_target[a.target] = a;
            cd.by_source[a.source] = a;
        }
    }

    NcBridge bridge;
    bridge.nc = build_partition(d, cd, 1);        // 2n+0.5 doubled = 4n+1
    bridge.kreweras = build_partition(d, cd, 3);  // 2n-0.5 doubled = 4n-1
    return bridge;
}

BridgeReport sms_iff_finite_blocks(const Diagram& d) {
    BridgeReport rep;
    rep.sms = classify_configuration(d).value == ConfigClass::Sms;
    const NcBridge bridge = nc_partition(d);
    rep.finite_ok = !bridge.nc.has_escaping() && !bridge.kreweras.has_escaping();
    rep.agree = rep.sms == rep.finite_ok;
    return rep;
}

}  // namespace arcgon
