#pragma once

#include <unordered_map>
#include <vector>

#include "arcgon/arc.hpp"
#include "arcgon/diagram.hpp"
#include "arcgon/hom.hpp"

namespace arcgon {

enum class PtolemyClass { I, II };

struct PtolemyArc {
    Arc arc;
    PtolemyClass cls = PtolemyClass::I;
    std::pair<Arc, Arc> parents;
};

/// Ptolemy arcs of a pair: for a strict crossing, the admissible members
/// of the four reconnections (class I); for a neighbouring pair, one
/// class-II arc per distance-1 witness (a doubly adjacent nested pair
/// yields two). Anything else yields none.
std::vector<PtolemyArc> ptolemy_arcs(Weight w, const Arc& a, const Arc& b);

/// Middle-term summands of the non-split triangle a -> e -> b; empty when
/// b = Sigma a or when Ext^1(b, a) vanishes.
std::vector<Arc> extension_middle(Weight w, const Arc& b, const Arc& a);

enum class Policy { ClassIIOnly, Both };

/// Orientation of the level recursion: Either accepts a level-1 parent in
/// either triangle role, SubInX forces it to be the subobject (X * (X)_n),
/// QuotInX the quotient ((X)_n * X). The arc sets agree for orthogonal
/// input; Either is the production setting.
enum class LevelRecursion { Either, SubInX, QuotInX };

struct ClosureResult {
    Policy policy = Policy::Both;
    std::vector<Arc> arcs;  // sorted by (target, source)
    std::unordered_map<Arc, int, ArcHash> level;

    int level_of(const Arc& a) const;
    bool contains(const Arc& a) const { return level.count(a) != 0; }
};

/// Least fixpoint of the input under the chosen Ptolemy policy, saturated
/// breadth-first over pairs with one parent of level 1. level(x) is the
/// minimal depth at which x appears.
ClosureResult closure(Weight w, const std::vector<Arc>& input, Policy policy,
                      LevelRecursion recursion = LevelRecursion::Either);

/// Split law at an outer-isolated vertex: v stays isolated in the
/// closure and the closure splits as closure(left of v) union
/// closure(right of v). Requires v outer-isolated for the input.
bool split_check(Weight w, const std::vector<Arc>& input, std::int64_t v);

enum class FountainVerdict { LeftFountain, RightFountain, Fountain, Bounded, Unknown };

const char* to_string(FountainVerdict v);

struct FountainReport {
    std::int64_t vertex = 0;
    std::vector<std::int64_t> depths;
    std::vector<std::int64_t> left_counts;   // closure arcs with source = v
    std::vector<std::int64_t> right_counts;  // closure arcs with target = v
    FountainVerdict verdict = FountainVerdict::Unknown;
};

/// Heuristic fountain detection: materialize the family at each depth
/// (periodic: 2k+1 translates, sealed: unfold^k), count closure arcs
/// incident to v. A side that keeps strictly growing past the second
/// depth is reported as a fountain side; both stable means bounded.
FountainReport fountain_report(Weight w, const Diagram& family, std::int64_t v,
                               const std::vector<std::int64_t>& depths);

}  // namespace arcgon
