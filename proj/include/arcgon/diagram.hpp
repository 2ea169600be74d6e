#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arcgon/arc.hpp"

namespace arcgon {

enum class DiagramMode { Window, Periodic };
enum class BoundaryMode { Free, Sealed };

/// Finite presentation of a (possibly infinite) arc configuration.
///
/// Window mode holds the literal arc set on [lo, hi]; a sealed boundary
/// additionally promises crossing-freeness and stands for the infinite
/// completion produced by unfold(). Periodic mode holds one fundamental
/// domain (sources in [0, period)) of a translation-invariant family.
struct Diagram {
    Weight w;
    DiagramMode mode = DiagramMode::Window;
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    BoundaryMode boundary = BoundaryMode::Free;
    std::int64_t period = 0;
    std::vector<Arc> arcs;  // kept sorted by (target, source)

    std::int64_t span() const { return hi - lo + 1; }  // vertex count of the window
};

Diagram make_window(Weight w, std::int64_t lo, std::int64_t hi, BoundaryMode boundary,
                    std::vector<Arc> arcs);
Diagram make_periodic(Weight w, std::int64_t period, std::vector<Arc> arcs);

/// Enforces all mode invariants; throws std::invalid_argument with the
/// offending detail (used by the factories and the JSON parser).
void validate_diagram(const Diagram& d);

enum class ConfigClass { Invalid, Orthogonal, HomConfig, Riedtmann, Sms };

const char* to_string(ConfigClass c);
std::optional<ConfigClass> config_class_from_string(const std::string& s);

enum class VertexKind { Endpoint, InnerIsolated, OuterIsolated };

struct VertexStatus {
    std::int64_t vertex = 0;
    VertexKind kind = VertexKind::OuterIsolated;
    std::optional<Arc> of;  // endpoint: the arc; inner-isolated: the smallest overarc
};

/// Classify every vertex of the materialized range (window vertices, or
/// one fundamental period). Requires a crossing-free diagram.
std::vector<VertexStatus> classify_vertices(const Diagram& d);

struct ClassReport {
    ConfigClass value = ConfigClass::Invalid;
    std::vector<std::string> violations;
    std::vector<VertexStatus> vertices;
    std::vector<std::int64_t> outer_isolated;
};

/// Strongest class the diagram satisfies, with structured reasons for
/// every stronger class it misses. `bound` caps the homological pair
/// distance (default: window span + 2(|w|+1)).
ClassReport classify_configuration(const Diagram& d,
                                   std::optional<std::int64_t> bound = std::nullopt);

struct OrthoReport {
    bool pass = true;
    std::vector<std::string> failures;
};

/// Homological route: Hom(s_i, s_j) = delta_ij and Ext^k(s_i, s_j) = 0
/// for k in [w+1, -1], over all materialized pairs within `bound`.
OrthoReport check_orthogonal_homological(const Diagram& d,
                                         std::optional<std::int64_t> bound = std::nullopt);

/// Sealed-window validity: crossing-free, span == |w|-1 (mod |w|+1) and
/// exactly |w|-1 outer-isolated vertices (the virtual overarc's inner-
/// isolated set has the size a Hom configuration demands).
bool sealed_valid(const Diagram& d);

/// One unfold step adds the wrap arc (hi+1, lo-1) and extends the window
/// to [lo-1, hi+|w|]; repeated `depth` times. Requires a sealed-valid
/// diagram and preserves sealed validity.
Diagram unfold(const Diagram& d, std::int64_t depth);

/// Window only: closure (both Ptolemy classes) of X = union of Sigma^i
/// arcs for i in [w+1, 0] contains every minimal-length arc whose span
/// lies in the window shrunk by |w| on each side.
bool minimal_arc_coverage(const Diagram& d);

/// Arcs of the configuration meeting [from, to]; window diagrams return
/// their arc set, periodic diagrams materialize the needed translates.
std::vector<Arc> materialize_arcs(const Diagram& d, std::int64_t from, std::int64_t to);

/// First crossing pair among the materialized arcs, if any.
std::optional<std::pair<Arc, Arc>> find_crossing(const Diagram& d);

}  // namespace arcgon
