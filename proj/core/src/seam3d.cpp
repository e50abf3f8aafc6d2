#include "biscornu/seam3d.hpp"

#include <cmath>
#include <numbers>

#include "biscornu/errors.hpp"

namespace biscornu {

std::vector<Vec3> biscornu_seam3d(double side, double zScale) {
    if (!(side > 0)) throw InvalidInput("side length must be > 0");
    const double radius = side / 2.0;  // circumradius of a square of side a/sqrt(2)
    // Equal-edge condition: R^2(2 - sqrt(2)) + 4c^2 = a^2/2  =>  c = a * 2^(1/4) / 4.
    const double c = zScale * side * std::pow(2.0, 0.25) / 4.0;
    std::vector<Vec3> seam;
    seam.reserve(8);
    for (int k = 0; k < 8; ++k) {
        double angle = k * std::numbers::pi / 4.0;
        double z = (k % 2 == 0) ? c : -c;
        seam.push_back({radius * std::cos(angle), radius * std::sin(angle), z});
    }
    return seam;
}

}  // namespace biscornu
