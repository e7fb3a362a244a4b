#pragma once

#include <map>
#include <string>

#include "cycdec/decomposition.hpp"

// SVG rendering with the torus drawing conventions: (0,0) upper left, the
// vertical C_m downward, the horizontal C_n rightward; every wraparound
// edge drawn as two half-edge stubs at the opposing borders.

namespace cycdec {

struct StrokeStyle {
    std::string color;
    std::string dasharray; // SVG stroke-dasharray; empty = solid
};

struct RenderStyle {
    double cell_size = 40;    // pixels per grid step
    double vertex_radius = 4;
    double margin = 20;
    // Per-label overrides; classes without an entry take the default
    // 12-style sequence by class index (dashed red, solid yellow, dotted
    // blue, then nine more).
    std::map<std::string, StrokeStyle> palette;
};

struct RenderError : std::runtime_error {
    ValidationReport report;

    RenderError(std::string msg, ValidationReport rep)
        : std::runtime_error(std::move(msg)), report(std::move(rep)) {}
};

// Deterministic, byte-stable SVG document: mn vertex circles, one <g> per
// class carrying that class's stroke style, one line segment per
// non-wrapping edge and two border stubs (0.4 * cell_size) per wrapping
// edge.  Throws RenderError carrying the validation report if the
// decomposition does not validate.
std::string render_svg(const Decomposition& d, const RenderStyle& style = {});

} // namespace cycdec
