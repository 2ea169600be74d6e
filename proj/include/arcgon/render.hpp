#pragma once

#include <string>

#include "arcgon/diagram.hpp"

namespace arcgon {

enum class RenderFormat { Svg, Ascii };

struct RenderSpec {
    RenderFormat format = RenderFormat::Svg;
    std::int64_t unit = 24;  // pixels per vertex (svg)
    bool labels = true;
};

/// Deterministic picture of a diagram: a number line with semicircular
/// arcs above it, isolated vertices marked, and the sealed virtual wrap
/// drawn dashed. Periodic diagrams are drawn over three periods.
/// Rejects materialized ranges above 10^4 vertices.
std::string render(const Diagram& d, const RenderSpec& spec);

}  // namespace arcgon
