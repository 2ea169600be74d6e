#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>

namespace arcgon {

/// Calabi-Yau weight w <= -1 of the ambient category.
///
/// Derived quantities: d = w - 1 (the translation step of the AR functor)
/// and modulus m = |w| + 1 = |d| (the congruence modulus for admissible
/// arc lengths; also the number of AR components).
struct Weight {
    std::int64_t w;

    explicit Weight(std::int64_t value);

    std::int64_t abs_w() const { return -w; }
    std::int64_t d() const { return w - 1; }
    std::int64_t modulus() const { return -w + 1; }

    friend bool operator==(const Weight&, const Weight&) = default;
};

/// An arc (source, target) over the number line, target < source.
/// The pair order matches the (t, u) convention with u - t <= w < 0:
/// the first coordinate is the larger one.
struct Arc {
    std::int64_t source = 0;
    std::int64_t target = 0;

    std::int64_t length() const { return source - target; }
    bool well_formed() const { return target < source; }
    bool spans(std::int64_t v) const { return target < v && v < source; }
    bool incident(std::int64_t v) const { return v == source || v == target; }

    friend bool operator==(const Arc&, const Arc&) = default;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

struct ArcHash {
    std::size_t operator()(const Arc& a) const {
        std::size_t h = std::hash<std::int64_t>{}(a.source);
        h ^= std::hash<std::int64_t>{}(a.target) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }
};

/// Ordering used for all serialized / rendered arc lists: by (target, source).
bool arc_output_less(const Arc& a, const Arc& b);

enum class RelationKind { StrictCross, SharedVertex, Nested, Disjoint };

/// Pairwise geometry of two distinct arcs.
///
/// "Crossing" in the inclusive sense covers StrictCross and
/// SharedVertex; Nested and Disjoint pairs do not cross. A Nested
/// relation records the outer arc of the pair.
struct Relation {
    RelationKind kind = RelationKind::Disjoint;
    std::int64_t distance = 0;
    bool neighbouring = false;
    /// Ascending vertex pair attaining distance 1, one vertex per arc.
    std::optional<std::pair<std::int64_t, std::int64_t>> witness;
    /// Nested only: the arc whose span strictly contains the other.
    std::optional<Arc> overarc;

    bool crossing() const {
        return kind == RelationKind::StrictCross || kind == RelationKind::SharedVertex;
    }
};

std::int64_t floor_mod(std::int64_t x, std::int64_t m);

/// True iff length(a) >= |w| and length(a) == |w| (mod |w|+1), i.e.
/// u - t <= w and u - t == 1 (mod d).
bool is_admissible(Weight w, const Arc& a);

/// Sigma^k: (t, u) -> (t - k, u - k).
Arc suspend(const Arc& a, std::int64_t k = 1);

/// tau^k: (t, u) -> (t - kd, u - kd).
Arc tau_shift(Weight w, const Arc& a, std::int64_t k = 1);

/// Serre functor: (t, u) -> (t - w, u - w).
Arc serre_shift(Weight w, const Arc& a);

/// Full pairwise relation; rejects equal arcs.
Relation relate(const Arc& a, const Arc& b);

/// AR component: source mod (|w|+1). Invariant under tau; suspension
/// decrements it mod |w|+1. A pure coordinate map, like the functor
/// actions above.
std::int64_t component_index(Weight w, const Arc& a);

}  // namespace arcgon
