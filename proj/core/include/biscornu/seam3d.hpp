#pragma once

#include <vector>

#include "biscornu/vec.hpp"

namespace biscornu {

/// The analytic biscornu seam: a closed polyline of eight vertices placed at
/// angles k*pi/4 on a circle of radius side/2, alternating between z = +c and
/// z = -c. The default zScale = 1 sets c so that all eight zigzag edges equal
/// the inscribed squares' side side/sqrt(2), matching the crown shape of a
/// square antiprism; zScale rescales c for experimentation.
std::vector<Vec3> biscornu_seam3d(double side, double zScale = 1.0);

}  // namespace biscornu
