#pragma once

#include <array>
#include <vector>

#include "biscornu/boundary.hpp"
#include "biscornu/vec.hpp"

namespace biscornu {

/// Triangulated sheet. Vertices are 3D (z = 0 right after triangulation);
/// restLengths store the flat edge lengths that relaxation must preserve.
/// boundaryVertices walks the boundary loop in order, boundaryArclengths
/// gives each one's arclength parameter on the source boundary.
struct TriMesh {
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 3>> triangles;
    std::vector<std::array<int, 2>> edges;
    std::vector<double> restLengths;
    std::vector<int> boundaryVertices;
    std::vector<double> boundaryArclengths;
};

/// Planar disk mesh of the region bounded by `b`. Boundary vertices sit on
/// the curve with arclength spacing <= targetEdge, starting at arclength
/// `phase`; the count is rounded up to even when evenBoundaryCount is set
/// (pita seams need an antipodal vertex). boundaryCount > 0 forces the exact
/// sample count so two sheets can share a seam vertex-for-vertex.
TriMesh triangulate(const BoundarySpec& b, double targetEdge, double phase = 0.0,
                    bool evenBoundaryCount = false, int boundaryCount = 0);

double mesh_area(const TriMesh& mesh);

/// Interior edge with its two opposite (wing) vertices.
struct Hinge {
    int v0, v1;   // shared edge
    int wingA, wingB;
};

std::vector<Hinge> interior_hinges(const TriMesh& mesh);

}  // namespace biscornu
