#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include "biscornu/errors.hpp"
#include "biscornu/trimesh.hpp"

using namespace biscornu;

namespace {

constexpr double kPi = std::numbers::pi;

// Manifold-disk checks: every edge in at most two triangles, single-triangle
// edges form one closed loop through exactly the boundary vertices.
void check_disk_topology(const TriMesh& mesh) {
    std::map<std::pair<int, int>, int> edge_use;
    for (const auto& t : mesh.triangles) {
        auto add = [&edge_use](int a, int b) { ++edge_use[{std::min(a, b), std::max(a, b)}]; };
        add(t[0], t[1]);
        add(t[1], t[2]);
        add(t[2], t[0]);
    }
    std::map<int, std::set<int>> rim;
    for (auto [edge, uses] : edge_use) {
        REQUIRE(uses <= 2);
        if (uses == 1) {
            rim[edge.first].insert(edge.second);
            rim[edge.second].insert(edge.first);
        }
    }
    for (const auto& [v, nbrs] : rim) REQUIRE(nbrs.size() == 2);
    // Walk the rim: must be one cycle covering all rim vertices.
    REQUIRE(!rim.empty());
    int start = rim.begin()->first;
    int prev = -1, cur = start;
    std::size_t steps = 0;
    do {
        auto& nbrs = rim[cur];
        int next = (*nbrs.begin() == prev) ? *nbrs.rbegin() : *nbrs.begin();
        prev = cur;
        cur = next;
        ++steps;
        REQUIRE(steps <= rim.size() + 1);
    } while (cur != start);
    CHECK(steps == rim.size());
    // The declared boundary loop is exactly the rim.
    std::set<int> declared(mesh.boundaryVertices.begin(), mesh.boundaryVertices.end());
    std::set<int> rimset;
    for (const auto& [v, nbrs] : rim) rimset.insert(v);
    CHECK(declared == rimset);
}

}  // namespace

TEST_CASE("unit square at targetEdge 0.25 puts enough vertices on the boundary") {
    TriMesh mesh = triangulate(boundary_square(1.0), 0.25);
    CHECK(mesh.boundaryVertices.size() >= 16);
    // All on the square: each boundary vertex has a coordinate at 0 or 1.
    for (int v : mesh.boundaryVertices) {
        Vec3 p = mesh.vertices[v];
        bool onEdge = std::fabs(p.x) < 1e-9 || std::fabs(p.x - 1.0) < 1e-9 ||
                      std::fabs(p.y) < 1e-9 || std::fabs(p.y - 1.0) < 1e-9;
        CHECK(onEdge);
        CHECK(p.z == 0.0);
    }
}

TEST_CASE("boundary spacing never exceeds targetEdge") {
    BoundarySpec st = boundary_stadium(2.0, 1.0);
    TriMesh mesh = triangulate(st, 0.3);
    const double spacing = st.perimeter() / static_cast<double>(mesh.boundaryVertices.size());
    CHECK(spacing <= 0.3);
    for (std::size_t i = 0; i < mesh.boundaryVertices.size(); ++i) {
        double s = mesh.boundaryArclengths[i];
        Vec2 q = st.point_at(s);
        Vec3 p = mesh.vertices[mesh.boundaryVertices[i]];
        CHECK((Vec2{p.x, p.y} - q).norm() < 1e-9);
    }
}

TEST_CASE("rest lengths equal flat edge lengths") {
    TriMesh mesh = triangulate(boundary_disk(1.0), 0.2);
    REQUIRE(mesh.edges.size() == mesh.restLengths.size());
    for (std::size_t e = 0; e < mesh.edges.size(); ++e) {
        Vec3 d = mesh.vertices[mesh.edges[e][0]] - mesh.vertices[mesh.edges[e][1]];
        CHECK(mesh.restLengths[e] == doctest::Approx(d.norm()).epsilon(1e-12));
    }
}

TEST_CASE("meshes are manifold disks") {
    check_disk_topology(triangulate(boundary_square(1.0), 0.2));
    check_disk_topology(triangulate(boundary_disk(1.0), 0.2));
    check_disk_topology(triangulate(boundary_stadium(2.0, 1.0), 0.25));
}

TEST_CASE("stadium mesh area is within 2 percent at targetEdge r/8") {
    const double L = 2.0, r = 1.0;
    TriMesh mesh = triangulate(boundary_stadium(L, r), r / 8.0);
    const double exact = L * 2.0 * r + kPi * r * r;  // rectangle plus the two caps
    CHECK(std::fabs(mesh_area(mesh) - exact) <= 0.02 * exact);
}

TEST_CASE("disk mesh area converges too") {
    TriMesh mesh = triangulate(boundary_disk(1.0), 1.0 / 8.0);
    CHECK(std::fabs(mesh_area(mesh) - kPi) <= 0.02 * kPi);
}

TEST_CASE("phase shifts the boundary samples") {
    BoundarySpec disk = boundary_disk(1.0);
    TriMesh a = triangulate(disk, 0.3, 0.0);
    TriMesh b = triangulate(disk, 0.3, 0.5);
    REQUIRE(a.boundaryVertices.size() == b.boundaryVertices.size());
    CHECK(a.boundaryArclengths[0] == doctest::Approx(0.0));
    CHECK(b.boundaryArclengths[0] == doctest::Approx(0.5));
}

TEST_CASE("forced and even boundary counts are honored") {
    BoundarySpec disk = boundary_disk(1.0);
    TriMesh forced = triangulate(disk, 0.3, 0.0, false, 23);
    CHECK(forced.boundaryVertices.size() == 23);
    TriMesh even = triangulate(disk, 0.31, 0.0, true);
    CHECK(even.boundaryVertices.size() % 2 == 0);
}

TEST_CASE("interior hinges cover interior edges only") {
    TriMesh mesh = triangulate(boundary_square(1.0), 0.25);
    auto hinges = interior_hinges(mesh);
    std::size_t boundary_edges = mesh.boundaryVertices.size();
    CHECK(hinges.size() == mesh.edges.size() - boundary_edges);
    for (const Hinge& h : hinges) {
        CHECK(h.v0 != h.v1);
        CHECK(h.wingA != h.wingB);
    }
}

TEST_CASE("bad targetEdge is rejected") {
    CHECK_THROWS_AS(triangulate(boundary_square(1.0), 0.0), InvalidInput);
    CHECK_THROWS_AS(triangulate(boundary_square(1.0), -1.0), InvalidInput);
}
