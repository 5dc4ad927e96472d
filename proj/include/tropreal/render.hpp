#pragma once

#include "tropreal/realstruct.hpp"

#include <set>
#include <string>

namespace tropreal {

struct RenderOptions {
    bool curve = true;      // plane picture with twist markers and locus shading
    bool dual = true;       // dual subdivision
    bool quadrants = true;  // four symmetric copies in the moment-map diamond
    std::set<LatticePoint> locus;  // complement components to shade
};

// Deterministic SVG 1.1. The phase may be null, in which case no twist or quadrant layer is drawn.
std::string render_svg(const TropicalCurve& curve, const RealPhaseStructure* phase, const RenderOptions& options = {});

}  // namespace tropreal
