#include "arcgon/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace arcgon {

namespace {

struct Scene {
    std::int64_t lo = 0, hi = 0;
    std::vector<Arc> solid;
    std::vector<Arc> dashed;  // sealed virtual wrap
    std::vector<std::int64_t> isolated;
};

Scene build_scene(const Diagram& d) {
    Scene sc;
    if (d.mode == DiagramMode::Window) {
        sc.lo = d.lo;
        sc.hi = d.hi;
        sc.solid = d.arcs;
        if (d.boundary == BoundaryMode::Sealed) {
            sc.dashed.push_back(Arc{d.hi + 1, d.lo - 1});
            sc.lo -= 1;
            sc.hi += 1;
        }
    } else {
        sc.lo = -d.period;
        sc.hi = 2 * d.period - 1;
        for (std::int64_t k = -1; k <= 1; ++k)
            for (const Arc& a : d.arcs)
                sc.solid.push_back(Arc{a.source + k * d.period, a.target + k * d.period});
    }
    std::sort(sc.solid.begin(), sc.solid.end(), arc_output_less);
    for (std::int64_t v = sc.lo; v <= sc.hi; ++v) {
        bool incident = false;
        for (const Arc& a : sc.solid) incident = incident || a.incident(v);
        for (const Arc& a : sc.dashed) incident = incident || a.incident(v);
        if (!incident) sc.isolated.push_back(v);
    }
    if (sc.hi - sc.lo + 1 > 10000) throw std::invalid_argument("render: range exceeds 10^4 vertices");
    return sc;
}

std::string render_svg(const Scene& sc, const RenderSpec& spec) {
    const std::int64_t u = spec.unit;
    auto x_of = [&](std::int64_t v) { return (v - sc.lo + 1) * u; };
    const std::int64_t width = (sc.hi - sc.lo + 2) * u;
    const std::int64_t base = 2 * u + u / 2;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << base + u << "\" viewBox=\"0 0 " << width << " " << base + u << "\">\n";
    out << "  <line x1=\"" << u / 2 << "\" y1=\"" << base << "\" x2=\"" << width - u / 2
        << "\" y2=\"" << base << "\" stroke=\"black\"/>\n";
    for (std::int64_t v = sc.lo; v <= sc.hi; ++v) {
        out << "  <line x1=\"" << x_of(v) << "\" y1=\"" << base - 3 << "\" x2=\"" << x_of(v)
            << "\" y2=\"" << base + 3 << "\" stroke=\"black\"/>\n";
        if (spec.labels)
            out << "  <text x=\"" << x_of(v) << "\" y=\"" << base + u / 2
                << "\" font-size=\"" << u / 2 << "\" text-anchor=\"middle\">" << v << "</text>\n";
    }
    auto emit_arc = [&](const Arc& a, bool dashed) {
        const std::int64_t x1 = x_of(a.target);
        const std::int64_t x2 = x_of(a.source);
        const std::int64_t r = (x2 - x1) / 2;
        out << "  <path d=\"M " << x1 << " " << base << " A " << r << " " << r << " 0 0 1 " << x2
            << " " << base << "\" fill=\"none\" stroke=\"black\"";
        if (dashed) out << " stroke-dasharray=\"4 3\"";
        out << "/>\n";
    };
    for (const Arc& a : sc.solid) emit_arc(a, false);
    for (const Arc& a : sc.dashed) emit_arc(a, true);
    for (std::int64_t v : sc.isolated)
        out << "  <circle cx=\"" << x_of(v) << "\" cy=\"" << base << "\" r=\"3\" fill=\"black\"/>\n";
    out << "</svg>\n";
    return out.str();
}

std::string render_ascii(const Scene& sc, const RenderSpec& spec) {
    const std::int64_t cell = 4;
    const std::int64_t cols = (sc.hi - sc.lo + 1) * cell;
    auto col_of = [&](std::int64_t v) { return (v - sc.lo) * cell; };

    std::vector<std::string> rows;
    // One bracket row per arc, widest last so nesting reads top-down.
    std::vector<std::pair<bool, Arc>> ordered;  // dashed?, arc
    for (const Arc& a : sc.solid) ordered.push_back({false, a});
    for (const Arc& a : sc.dashed) ordered.push_back({true, a});
    std::sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
        if (x.second.length() != y.second.length()) return x.second.length() > y.second.length();
        return arc_output_less(x.second, y.second);
    });
    for (const auto& [dashed, a] : ordered) {
        std::string row(cols, ' ');
        const std::int64_t c1 = col_of(a.target);
        const std::int64_t c2 = col_of(a.source);
        for (std::int64_t c = c1 + 1; c < c2; ++c) row[c] = dashed ? '~' : '-';
        row[c1] = '+';
        row[c2] = '+';
        rows.push_back(row);
    }

    std::string ruler(cols, '-');
    for (std::int64_t v = sc.lo; v <= sc.hi; ++v) ruler[col_of(v)] = '|';
    std::string marks(cols, ' ');
    for (std::int64_t v : sc.isolated) marks[col_of(v)] = 'o';

    std::ostringstream out;
    for (const std::string& r : rows) out << r << "\n";
    out << ruler << "\n";
    if (!sc.isolated.empty()) out << marks << "\n";
    if (spec.labels) {
        std::string labels(cols + 8, ' ');
        for (std::int64_t v = sc.lo; v <= sc.hi; ++v) {
            const std::string t = std::to_string(v);
            for (std::size_t i = 0; i < t.size(); ++i) labels[col_of(v) + i] = t[i];
        }
        while (!labels.empty() && labels.back() == ' ') labels.pop_back();
        out << labels << "\n";
    }
    return out.str();
}

}  // namespace

std::string render(const Diagram& d, const RenderSpec& spec) {
    const Scene sc = build_scene(d);
    return spec.format == RenderFormat::Svg ? render_svg(sc, spec) : render_ascii(sc, spec);
}

}  // namespace arcgon
