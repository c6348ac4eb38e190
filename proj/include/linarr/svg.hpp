#pragma once

#include "linarr/arrangement.hpp"
#include "linarr/hexagon.hpp"

#include <optional>
#include <string>

namespace linarr {

/// Figure styling follows the paper's plots: arrangement lines dotted
/// black, the conic dashed red, the Pascal line and the quartic solid
/// green. Drawn in the affine chart z = 1; the line z = 0 is skipped with
/// an annotation. Rendering is the single place approximate arithmetic is
/// allowed; every verdict upstream stays exact.
struct SvgScene {
    double x_min = -6, x_max = 6, y_min = -6, y_max = 6;
    int width_px = 800, height_px = 800;
    int grid = 512; // contour sampling resolution for curved objects

    std::optional<Arrangement> arrangement;
    std::optional<HomPoly> conic;      // degree 2
    std::optional<LinearForm> pascal;  // solid green line
    std::optional<HomPoly> quartic;    // degree 4, solid green contour
    std::optional<Hexagon> hexagon;    // vertices drawn as dots
};

std::string render_svg(const SvgScene& scene);
void write_svg(const SvgScene& scene, const std::string& path);

} // namespace linarr
