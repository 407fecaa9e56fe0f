#pragma once

#include <string>

#include "lensbound/farey.hpp"

namespace lensbound {

// SVG rendering of a Farey path on the unit-disk model: slope s sits on
// the boundary circle at angle 2*arctan(s) (infinity opposite 0), and
// edges are drawn as circular arcs orthogonal to the boundary.
std::string farey_path_svg(const FareyPath& path);

}  // namespace lensbound
