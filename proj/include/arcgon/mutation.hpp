#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "arcgon/diagram.hpp"

namespace arcgon {

enum class FanMethod { Constructive, Oracle };

/// All single-arc completions of D minus {at}; the set always contains
/// `at` itself, proper_replacements excludes it.
struct MutationFan {
    Arc at;
    std::vector<Arc> completions;          // sorted by (target, source)
    std::vector<Arc> proper_replacements;  // completions minus {at}
    FanMethod method = FanMethod::Constructive;
};

/// Constructive completion fan: an arc with a (real, or sealed-virtual)
/// smallest overarc has |w| completions read off the 2|w| isolated
/// vertices under it; a free-window outer-arc with k outer-isolated
/// vertices has k+1, built from the positional case analysis.
/// Window diagrams of class hom_config or better only.
MutationFan completions_at(const Diagram& d, const Arc& s);

/// Independent oracle: try every admissible arc on isolated vertices of
/// D minus {s} and keep those whose insertion still classifies as
/// hom_config or better under the same boundary mode.
MutationFan brute_force_completions(const Diagram& d, const Arc& s);

enum class MutationDir { Left, Right };

/// One approximation-mutation step: the arcs e1, e2 span the minimal
/// left approximation of Sigma^{-1} s, s_prime is its cone and
/// s_star = Sigma^{-1} s_prime the mutation (for the right direction the
/// dual relation s_star = Sigma s_prime holds). case_id is 1, 2 or 3
/// following the positional analysis of the smallest overarc's
/// inner-isolated vertices.
struct ApproxStep {
    std::optional<Arc> e1;
    std::optional<Arc> e2;
    Arc s_prime;
    Arc s_star;
    int case_id = 0;
};

/// Left mutation via the minimal approximation construction; `s` must
/// have a real smallest overarc (unfold a sealed diagram once first).
/// Right mutation is the coordinate-reflection dual.
ApproxStep approx_mutate(const Diagram& d, const Arc& s, MutationDir dir);

/// Iterate approximation mutation, updating the diagram after each step:
/// in step i the arc s_i of S \ {s_0} ∪ {s_i} is replaced by s_{i+1}.
std::vector<ApproxStep> iterate_mutations(const Diagram& d, const Arc& s, std::int64_t steps,
                                          MutationDir dir);

struct MutationGraph {
    std::vector<Diagram> nodes;
    std::vector<std::int64_t> outer_counts;
    struct Edge {
        std::size_t from;
        Arc at;
        std::size_t to;
    };
    std::vector<Edge> edges;
    bool complete = true;
};

/// Nodes: every diagram of class >= cls on the window; edges: single-arc
/// mutations (one directed edge per proper replacement).
MutationGraph mutation_graph(Weight w, std::int64_t lo, std::int64_t hi, BoundaryMode boundary,
                             ConfigClass cls, std::size_t max_nodes);

}  // namespace arcgon
