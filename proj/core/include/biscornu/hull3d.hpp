#pragma once

#include <span>
#include <vector>

#include "biscornu/vec.hpp"

namespace biscornu {

/// Convex hull of a 3D point set. Coplanar inputs degrade to a slab: the
/// supporting plane plus the 2D hull of the projected points.
class ConvexHull3 {
public:
    explicit ConvexHull3(std::span<const Vec3> points);

    bool degenerate() const { return degenerate_; }

    /// True when p lies inside the hull dilated by epsilon. For a degenerate
    /// hull this is a thickened-slab test: within epsilon of the plane and of
    /// the planar hull.
    bool contains(Vec3 p, double epsilon) const;

private:
    struct Facet {
        Vec3 point;
        Vec3 normal;  // unit, outward
    };
    bool degenerate_ = false;
    std::vector<Facet> facets_;
    // Degenerate branch: plane + 2D polygon in that plane.
    Vec3 planePoint_{}, planeNormal_{}, axisU_{}, axisV_{};
    std::vector<Vec2> polygon_;  // CCW
};

}  // namespace biscornu
