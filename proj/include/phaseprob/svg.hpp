#pragma once

#include "phaseprob/field.hpp"

#include <string>

namespace phaseprob {

// SVG 1.1 picture of the normalized direction field on a grid over
// [-1, 1]^2, with the invariant lines through the origin overlaid as
// <line class="invariant"> elements. A visual aid, not a portrait.
std::string direction_field_svg(const VectorField& f, int grid = 21, int pixels = 600);

} // namespace phaseprob
