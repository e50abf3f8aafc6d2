#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "biscornu/boundary.hpp"
#include "biscornu/trimesh.hpp"
#include "biscornu/vec.hpp"

namespace biscornu {

struct RelaxParams {
    int iterations = 2000;
    double stepSize = 0.1;           // bending descent step, in units of mean edge^2
    double lengthTolerance = 0.01;   // max relative edge strain for convergence
    std::uint64_t perturbationSeed = 1;
};

struct EmbeddingResult {
    std::vector<TriMesh> meshes;     // final vertex positions
    double maxEdgeStrain = 0.0;      // max |len - rest| / rest after the run
    double bendingEnergy = 0.0;      // sum of squared hinge deviations
    double initialBendingEnergy = 0.0;
    std::vector<Vec3> seamCurve;     // sheet-1 boundary loop, closed by wrap
    bool converged = false;
    std::vector<double> energyTrace;  // post-projection, one entry per iteration
    std::vector<double> strainTrace;
};

struct SeamSetup {
    std::vector<TriMesh> sheets;
    SeamPairing pairing;
};

/// Triangulates both sheets so seam-paired boundary points are vertices with
/// matching indices.
SeamSetup build_dform_sheets(const BoundarySpec& b1, const BoundarySpec& b2,
                             double startOffset, double targetEdge);
/// Single sheet sampled symmetrically about the fold point.
SeamSetup build_pita_sheet(const BoundarySpec& b, double foldPoint, double targetEdge);

/// Minimizes hinge bending energy under per-iteration edge-length projection.
/// The seam is pulled together by a stiffening penalty, then welded hard.
/// Deterministic for a fixed perturbationSeed. Non-convergence is reported in
/// the result, not thrown.
EmbeddingResult relax(const std::vector<TriMesh>& sheets, const SeamPairing& pairing,
                      const RelaxParams& params);

/// Fraction of mesh vertices inside the convex hull of the seam curve
/// dilated by epsilon.
double convex_hull_check(const EmbeddingResult& e, double epsilon);

/// Signed hinge bend angle (0 when flat) and its position gradient; exposed
/// for finite-difference verification.
double hinge_angle(Vec3 x0, Vec3 x1, Vec3 x2, Vec3 x3);
std::array<Vec3, 4> hinge_angle_gradient(Vec3 x0, Vec3 x1, Vec3 x2, Vec3 x3);

}  // namespace biscornu
