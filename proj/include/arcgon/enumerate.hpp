#pragma once

#include <cstddef>
#include <vector>

#include "arcgon/diagram.hpp"

namespace arcgon {

struct EnumRequest {
    Weight w;
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    BoundaryMode boundary = BoundaryMode::Free;
    ConfigClass cls = ConfigClass::HomConfig;  // keep diagrams classifying at least this
    std::size_t cap = 1u << 20;
};

struct EnumResult {
    std::vector<Diagram> diagrams;  // deterministic order, canonical sorted arc lists
    bool complete = true;           // false when the cap stopped the search
};

/// Exhaustive depth-first search over noncrossing admissible arc subsets
/// of the window, filtered by classify_configuration at the requested
/// class or better.
EnumResult enumerate_configs(const EnumRequest& req);

}  // namespace arcgon
