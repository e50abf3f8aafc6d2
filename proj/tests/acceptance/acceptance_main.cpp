// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Heavier numerical checks print their measured values.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "biscornu/decoration.hpp"
#include "biscornu/designer.hpp"
#include "biscornu/obj_io.hpp"
#include "biscornu/relax.hpp"
#include "biscornu/seam3d.hpp"
#include "biscornu/subgroups.hpp"
#include "biscornu/svg.hpp"

using namespace biscornu;
namespace fs = std::filesystem;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int criterion, const std::string& name, bool pass, const std::string& detail) {
    std::printf("%s criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", criterion, name.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

// 1. Group construction: 16 elements, defining relations, type census.
void criterion1() {
    Timer timer;
    bool ok = true;
    std::set<std::pair<int, int>> distinct;
    for (GroupElement g : all_elements()) distinct.insert({g.k, g.j});
    ok &= distinct.size() == 16;
    GroupElement acc = kIdentity;
    for (int i = 0; i < 8; ++i) acc = element_mul(kRotoreflection, acc);
    ok &= acc == kIdentity;
    ok &= element_mul(kNonAxialRotation, kNonAxialRotation) == kIdentity;
    ok &= element_mul(element_mul(kNonAxialRotation, kRotoreflection), kNonAxialRotation) ==
          element_inv(kRotoreflection);
    std::map<ElementType, int> census;
    for (GroupElement g : all_elements()) ++census[element_type(g)];
    ok &= census[ElementType::Identity] == 1 && census[ElementType::S8Rotoreflection] == 4 &&
          census[ElementType::C4Rotation] == 2 && census[ElementType::C2Axial] == 1 &&
          census[ElementType::C2Prime] == 4 && census[ElementType::SigmaD] == 4;
    double t = timer.seconds();
    report(1, "group construction and census", ok && t < 1e-3, fmt(t * 1e3) + " ms");
}

// 2. Seam-permutation fidelity and homomorphism over all 256 products.
void criterion2() {
    bool ok = true;
    ok &= seam_perm(kRotoreflection).image == std::array<int, 8>{4, 5, 6, 7, 1, 2, 3, 0};
    ok &= seam_perm(kNonAxialRotation).image == std::array<int, 8>{4, 7, 6, 5, 0, 3, 2, 1};
    std::set<std::array<int, 8>> images;
    for (GroupElement a : all_elements()) {
        images.insert(seam_perm(a).image);
        for (GroupElement b : all_elements())
            ok &= seam_perm(element_mul(a, b)) == perm_compose(seam_perm(a), seam_perm(b));
    }
    ok &= images.size() == 16;
    report(2, "seam permutations from the two generators", ok, "256 products checked");
}

// 3. Brute-force subgroup census and distinct classification signatures.
void criterion3() {
    Timer timer;
    auto classes = subgroup_conjugacy_classes();
    std::map<int, int> byOrder;
    std::set<SubgroupClass> labels;
    bool ok = true;
    for (const auto& cls : classes) {
        int order = static_cast<int>(mask_elements(cls.front()).size());
        ++byOrder[order];
        for (SubgroupMask m : cls)
            ok &= classify_subgroup(mask_elements(m)) ==
                  classify_subgroup(mask_elements(cls.front()));
        labels.insert(classify_subgroup(mask_elements(cls.front())));
    }
    ok &= byOrder[2] == 3 && byOrder[4] == 3 && byOrder[8] == 3;
    ok &= classes.size() == 11 && labels.size() == 11;
    double t = timer.seconds();
    report(3, "nine proper non-trivial conjugacy classes, distinct signatures",
           ok && t < 1.0, fmt(t) + " s");
}

// 4. The bundled exemplars classify to their manifest labels.
void criterion4() {
    Timer timer;
    bool ok = true;
    std::string detail;
    fs::path dir = fs::path(BISCORNU_DATA_DIR) / "exemplars";
    fs::path manifest = dir / "manifest.txt";
    std::ifstream in(manifest);
    if (!in) {
        report(4, "bundled sampler corpus", false, "missing " + manifest.string());
        return;
    }
    int entries = 0;
    std::set<SubgroupClass> seen;
    std::string file, label;
    while (in >> file >> label) {
        ++entries;
        std::ifstream bis(dir / file);
        std::ostringstream buf;
        buf << bis.rdbuf();
        BiscornuDecoration d = parse_decoration(buf.str());
        auto stab = stabilizer(d);  // brute force over all 16 images
        SubgroupClass got = classify_subgroup(stab);
        // Direct subgroup identification: locate the stabilizer among the
        // enumerated subgroups and reuse its conjugacy-class label.
        SubgroupMask mask = elements_mask(stab);
        SubgroupClass direct = SubgroupClass::C1;
        bool found = false;
        for (const auto& cls : subgroup_conjugacy_classes())
            for (SubgroupMask m : cls)
                if (m == mask) {
                    direct = classify_subgroup(mask_elements(cls.front()));
                    found = true;
                }
        ok &= found && got == direct;
        if (std::string(to_string(got)) != label) {
            ok = false;
            detail += file + " got " + to_string(got) + "; ";
        }
        seen.insert(got);
    }
    ok &= entries == 11 && seen.size() == 11;
    double t = timer.seconds();
    report(4, "11 bundled exemplars match their manifest labels", ok && t < 5.0,
           detail + std::to_string(entries) + " entries, " + fmt(t) + " s");
}

// 5. Action property over 100 random decorations and all 256 element pairs.
void criterion5() {
    Timer timer;
    bool ok = true;
    std::mt19937_64 rng(501);
    for (int trial = 0; trial < 100 && ok; ++trial) {
        BiscornuDecoration d{random_chart(8, 0.45, rng()), random_chart(8, 0.45, rng())};
        std::array<BiscornuDecoration, 16> images = {
            d, d, d, d, d, d, d, d, d, d, d, d, d, d, d, d};
        for (GroupElement h : all_elements()) images[element_index(h)] = act(h, d);
        for (GroupElement g : all_elements())
            for (GroupElement h : all_elements())
                ok &= act(element_mul(g, h), d) == act(g, images[element_index(h)]);
        auto stab = stabilizer(d);
        for (GroupElement a : stab)
            for (GroupElement b : stab) {
                bool member = false;
                for (GroupElement c : stab) member |= c == element_mul(a, b);
                ok &= member;
            }
    }
    double t = timer.seconds();
    report(5, "act is a group action; stabilizers closed", ok && t < 30.0, fmt(t) + " s");
}

// 6. classify_square vs an independent subgroup-table oracle over all
//    2^14 hitomezashi seed pairs at n=6.
void criterion6() {
    Timer timer;
    const int n = 6;
    // The ten subgroups of D4, written out, with their class labels.
    const D4Element e = kD4Identity, r1{1, false}, r2{2, false}, r3{3, false};
    const D4Element mv{0, true}, ma{1, true}, mh{2, true}, md{3, true};
    struct Entry {
        std::vector<D4Element> elements;
        SquareSymmetryClass label;
    };
    const std::vector<Entry> table = {
        {{e}, SquareSymmetryClass::C1},
        {{e, r2}, SquareSymmetryClass::C2},
        {{e, r1, r2, r3}, SquareSymmetryClass::C4},
        {{e, mh}, SquareSymmetryClass::D1_axis},
        {{e, mv}, SquareSymmetryClass::D1_axis},
        {{e, md}, SquareSymmetryClass::D1_diag},
        {{e, ma}, SquareSymmetryClass::D1_diag},
        {{e, r2, mh, mv}, SquareSymmetryClass::D2_axis},
        {{e, r2, md, ma}, SquareSymmetryClass::D2_diag},
        {{e, r1, r2, r3, mv, ma, mh, md}, SquareSymmetryClass::D4},
    };
    bool ok = true;
    long mismatches = 0;
    for (unsigned rows = 0; rows < (1u << (n + 1)); ++rows) {
        for (unsigned cols = 0; cols < (1u << (n + 1)); ++cols) {
            SeedPair seeds;
            for (int i = 0; i <= n; ++i) {
                seeds.rowSeeds.push_back((rows >> i) & 1);
                seeds.colSeeds.push_back((cols >> i) & 1);
            }
            StitchChart c = hitomezashi(seeds, n);
            // Oracle: brute-force stabilizer, then identify the subgroup.
            std::set<std::pair<int, int>> stab;
            for (D4Element g : all_d4())
                if (apply_d4(g, c) == c) stab.insert({g.rot, g.flip ? 1 : 0});
            SquareSymmetryClass oracle = SquareSymmetryClass::C1;
            bool found = false;
            for (const Entry& entry : table) {
                std::set<std::pair<int, int>> s;
                for (D4Element g : entry.elements) s.insert({g.rot, g.flip ? 1 : 0});
                if (s == stab) {
                    oracle = entry.label;
                    found = true;
                    break;
                }
            }
            if (!found || classify_square(c) != oracle) {
                ok = false;
                ++mismatches;
            }
        }
    }
    double t = timer.seconds();
    report(6, "square classifier equals subgroup-table oracle over 2^14 seed pairs",
           ok && t < 60.0, std::to_string(mismatches) + " mismatches, " + fmt(t) + " s");
}

// 7. Closed-form perimeters.
void criterion7() {
    Timer timer;
    double stadium = boundary_stadium(2.0, 1.0).perimeter();
    double tris = boundary_trisphericon_flat(1.0).perimeter();
    bool ok = std::fabs(stadium - (4.0 + 2.0 * std::numbers::pi)) <= 1e-9 &&
              std::fabs(tris - (6.0 + 4.0 * std::numbers::pi)) <= 1e-9;
    double t = timer.seconds();
    report(7, "stadium and trisphericon-flat perimeters", ok && t < 1e-3,
           "stadium " + fmt(stadium) + ", trisphericon " + fmt(tris) + ", " + fmt(t * 1e3) +
               " ms");
}

// Rigid alignment of the eight relaxed seam corners to the analytic
// antiprism polyline: axis from the polygon area vector, then the best of
// all 32 cyclic/reflected/flipped correspondences with an optimal in-plane
// rotation each.
double octagon_alignment_error(std::vector<Vec3> pts, const std::vector<Vec3>& target) {
    Vec3 centroid{};
    for (const Vec3& p : pts) centroid += p * (1.0 / 8.0);
    for (Vec3& p : pts) p -= centroid;
    Vec3 axis{};
    for (int i = 0; i < 8; ++i) axis += pts[i].cross(pts[(i + 1) % 8]);
    axis = axis.normalized();
    // Rotate axis onto +z.
    Vec3 z{0, 0, 1};
    Vec3 v = axis.cross(z);
    double c = axis.dot(z);
    for (Vec3& p : pts) {
        if (v.norm() < 1e-12) {
            if (c < 0) p = {p.x, -p.y, -p.z};
        } else {
            // Rodrigues rotation taking axis to z.
            Vec3 k = v.normalized();
            double s = v.norm();
            p = p * c + k.cross(p) * s + k * (k.dot(p) * (1.0 - c));
        }
    }
    double best = 1e300;
    for (int flip = 0; flip < 2; ++flip) {
        std::vector<Vec3> q = pts;
        if (flip)
            for (Vec3& p : q) p = {p.x, -p.y, -p.z};
        for (int shift = 0; shift < 8; ++shift) {
            for (int dir : {1, -1}) {
                double dot = 0.0, cross = 0.0;
                for (int i = 0; i < 8; ++i) {
                    const Vec3& t = target[((shift + dir * i) % 8 + 8) % 8];
                    dot += q[i].x * t.x + q[i].y * t.y;
                    cross += q[i].x * t.y - q[i].y * t.x;
                }
                double angle = std::atan2(cross, dot);
                double ca = std::cos(angle), sa = std::sin(angle);
                double worst = 0.0;
                for (int i = 0; i < 8; ++i) {
                    Vec3 rotated{ca * q[i].x - sa * q[i].y, sa * q[i].x + ca * q[i].y, q[i].z};
                    const Vec3& t = target[((shift + dir * i) % 8 + 8) % 8];
                    worst = std::max(worst, (rotated - t).norm());
                }
                best = std::min(best, worst);
            }
        }
    }
    return best;
}

// 8. Solver sanity runs.
void criterion8() {
    const double pi = std::numbers::pi;

    {  // (a) two congruent disks relax to near-flat
        Timer timer;
        BoundarySpec disk = boundary_disk(1.0);
        SeamSetup setup = build_dform_sheets(disk, disk, 0.8, 0.065);
        RelaxParams params;
        params.iterations = 26000;
        EmbeddingResult r = relax(setup.sheets, setup.pairing, params);
        double zbar = 0.0;
        std::size_t count = 0;
        for (const TriMesh& m : r.meshes)
            for (const Vec3& v : m.vertices) {
                zbar += v.z;
                ++count;
            }
        zbar /= double(count);
        double worstZ = 0.0;
        for (const TriMesh& m : r.meshes)
            for (const Vec3& v : m.vertices) worstZ = std::max(worstZ, std::fabs(v.z - zbar));
        bool ok = worstZ <= 1e-3 && r.bendingEnergy <= 1e-6 * r.initialBendingEnergy;
        double t = timer.seconds();
        report(8, "(a) congruent disks relax flat", ok && t < 60.0,
               std::to_string(count) + " verts, max|z| " + fmt(worstZ) + ", E/E0 " +
                   fmt(r.bendingEnergy / r.initialBendingEnergy) + ", " + fmt(t) + " s");
    }

    {  // (b) biscornu seam vs the analytic antiprism polyline
        Timer timer;
        const double side = 2.0;
        BoundarySpec sq = boundary_square(side);
        const int m = 96;  // divisible by 8: corners and midpoints are vertices
        TriMesh sheet1 = triangulate(sq, 0.09, 0.0, false, m);
        SeamPairing pairing = make_dform_pairing(sq, sq, side / 2.0);
        TriMesh sheet2 = triangulate(sq, 0.09, pairing.param, false, m);
        RelaxParams params;
        params.iterations = 2400;
        EmbeddingResult r = relax({sheet1, sheet2}, pairing, params);
        std::vector<Vec3> corners;
        for (int j = 0; j < 8; ++j) corners.push_back(r.seamCurve[j * m / 8]);
        // Alternating z (relative to the seam's own mid-plane).
        double zmid = 0.0;
        for (const Vec3& p : corners) zmid += p.z / 8.0;
        bool alternating = true;
        for (int j = 0; j < 8; ++j) {
            bool up = corners[j].z > zmid;
            bool upNext = corners[(j + 1) % 8].z > zmid;
            alternating &= up != upNext;
        }
        double err = octagon_alignment_error(corners, biscornu_seam3d(side));
        bool ok = alternating && err <= 0.05 * side;
        // The inextensible seam bounds adjacent corner chords by side/2,
        // while the equal-edge polyline uses side/sqrt(2); report the
        // chord-matched crown as a diagnostic.
        double taut = octagon_alignment_error(corners, biscornu_seam3d(side, 0.5412));
        double t = timer.seconds();
        report(8, "(b) biscornu seam matches the analytic antiprism within 5% of side",
               ok && t < 60.0,
               std::string("alternating ") + (alternating ? "yes" : "no") + ", deviation " +
                   fmt(err) + " vs tol " + fmt(0.05 * side) + " (taut-chord crown: " + fmt(taut) +
                   "), " + fmt(t) + " s");
    }

    {  // (c) stadium pita-form strain
        Timer timer;
        BoundarySpec st = boundary_stadium(2.0, 1.0);
        double fold = 1.0;  // mid-straight: the fold endpoints sit on straight edges
        SeamSetup setup = build_pita_sheet(st, fold, 0.065);
        RelaxParams params;
        params.iterations = 4000;
        EmbeddingResult r = relax(setup.sheets, setup.pairing, params);
        bool ok = r.maxEdgeStrain <= 0.01;
        // Independent recomputation of the reported strain.
        double recomputed = 0.0;
        const TriMesh& mesh = r.meshes[0];
        for (std::size_t e = 0; e < mesh.edges.size(); ++e) {
            double len = (mesh.vertices[mesh.edges[e][0]] - mesh.vertices[mesh.edges[e][1]]).norm();
            recomputed = std::max(recomputed,
                                  std::fabs(len - mesh.restLengths[e]) / mesh.restLengths[e]);
        }
        ok &= std::fabs(recomputed - r.maxEdgeStrain) < 1e-12;
        double t = timer.seconds();
        report(8, "(c) stadium pita-form strain at most 1%", ok && t < 60.0,
               std::to_string(mesh.vertices.size()) + " verts, strain " + fmt(r.maxEdgeStrain) +
                   ", " + fmt(t) + " s");
    }

    {  // (d) two smooth convex isoperimetric boundaries: hull check
        Timer timer;
        BoundarySpec st = boundary_stadium(2.0, 1.0);
        double radius = st.perimeter() / (2.0 * pi);
        BoundarySpec disk = boundary_disk(radius);
        const double targetEdge = 0.09;
        SeamSetup setup = build_dform_sheets(st, disk, 0.0, targetEdge);
        RelaxParams params;
        params.iterations = 2400;
        EmbeddingResult r = relax(setup.sheets, setup.pairing, params);
        double fraction = convex_hull_check(r, 2.0 * targetEdge);
        bool ok = fraction >= 0.99;
        double t = timer.seconds();
        std::size_t verts = r.meshes[0].vertices.size() + r.meshes[1].vertices.size();
        report(8, "(d) smooth convex D-form lies in the hull of its seam", ok && t < 60.0,
               std::to_string(verts) + " verts, hull fraction " + fmt(fraction) + ", " + fmt(t) +
                   " s");
    }
}

// 9. Round-trips for the three text formats plus byte-stable rendering.
void criterion9() {
    bool ok = true;
    std::mt19937_64 rng(909);
    for (int i = 0; i < 40; ++i) {
        StitchChart c = random_chart(1 + int(rng() % 10), 0.4, rng());
        ok &= parse_chart(emit_chart(c)) == c;
        ok &= emit_chart(parse_chart(emit_chart(c))) == emit_chart(c);
    }
    for (int i = 0; i < 40; ++i) {
        int n = 1 + int(rng() % 8);
        BiscornuDecoration d{random_chart(n, 0.4, rng()), random_chart(n, 0.4, rng())};
        ok &= parse_decoration(emit_decoration(d)) == d;
    }
    auto unit = [&rng] { return 0.25 + double(rng() % 1000) / 500.0; };
    for (int i = 0; i < 20; ++i) {
        BoundarySpec b = (i % 4 == 0)   ? boundary_square(unit())
                         : (i % 4 == 1) ? boundary_stadium(unit(), unit())
                         : (i % 4 == 2) ? boundary_disk(unit())
                                        : boundary_trisphericon_flat(unit());
        BoundarySpec back = parse_boundary(emit_boundary(b));
        ok &= std::fabs(back.perimeter() - b.perimeter()) <= 1e-9 * b.perimeter();
        ok &= emit_boundary(back) == emit_boundary(b);
    }
    // Rendering is byte-stable across repeated calls.
    StitchChart c = random_chart(6, 0.5, 9099);
    ok &= chart_svg(c) == chart_svg(c);
    BiscornuDecoration d{c, random_chart(6, 0.5, 9100)};
    ok &= decoration_svg(d) == decoration_svg(d);
    report(9, "format round-trips and stable rendering", ok, "100 instances");
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (failures) std::printf("%d criterion check(s) FAILED\n", failures);
    else std::printf("all criteria passed\n");
    return failures == 0 ? 0 : 1;
}
