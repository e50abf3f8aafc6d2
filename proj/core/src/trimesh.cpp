#include "biscornu/trimesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "biscornu/errors.hpp"

namespace biscornu {

namespace {

// Incremental Delaunay triangulation (Bowyer-Watson with a walk-located,
// BFS-grown cavity). All triangles are kept CCW; cavities are grown only
// through strictly-violating neighbors, which keeps the triangulation valid
// even for exactly co-circular inputs such as disk boundary samples.
struct Delaunay {
    struct Tri {
        int v[3];
        int nbr[3];  // nbr[i] faces edge (v[i], v[(i+1)%3]); -1 = outside
        bool alive = true;
    };

    static std::vector<std::array<int, 3>> run(const std::vector<Vec2>& pts) {
        Delaunay d(pts);
        for (int p = 0; p < static_cast<int>(pts.size()); ++p) d.insert(p);
        std::vector<std::array<int, 3>> out;
        const int s0 = static_cast<int>(pts.size());
        for (const Tri& t : d.tris_)
            if (t.alive && t.v[0] < s0 && t.v[1] < s0 && t.v[2] < s0)
                out.push_back({t.v[0], t.v[1], t.v[2]});
        return out;
    }

private:
    explicit Delaunay(const std::vector<Vec2>& pts) : v_(pts) {
        double lo_x = 1e300, lo_y = 1e300, hi_x = -1e300, hi_y = -1e300;
        for (const Vec2& p : v_) {
            lo_x = std::min(lo_x, p.x);
            lo_y = std::min(lo_y, p.y);
            hi_x = std::max(hi_x, p.x);
            hi_y = std::max(hi_y, p.y);
        }
        double span = std::max(hi_x - lo_x, hi_y - lo_y) + 1.0;
        Vec2 mid{(lo_x + hi_x) / 2.0, (lo_y + hi_y) / 2.0};
        v_.push_back({mid.x - 24.0 * span, mid.y - 12.0 * span});
        v_.push_back({mid.x + 24.0 * span, mid.y - 12.0 * span});
        v_.push_back({mid.x, mid.y + 24.0 * span});
        const int s0 = static_cast<int>(v_.size()) - 3;
        tris_.push_back({{s0, s0 + 1, s0 + 2}, {-1, -1, -1}, true});
        last_ = 0;
    }

    static long double orient(Vec2 a, Vec2 b, Vec2 p) {
        return (static_cast<long double>(b.x) - a.x) * (static_cast<long double>(p.y) - a.y) -
               (static_cast<long double>(b.y) - a.y) * (static_cast<long double>(p.x) - a.x);
    }

    bool in_circumcircle(const Tri& t, Vec2 p) const {
        Vec2 a = v_[t.v[0]], b = v_[t.v[1]], c = v_[t.v[2]];
        long double ax = a.x - p.x, ay = a.y - p.y;
        long double bx = b.x - p.x, by = b.y - p.y;
        long double cx = c.x - p.x, cy = c.y - p.y;
        long double det = (ax * ax + ay * ay) * (bx * cy - by * cx) -
                          (bx * bx + by * by) * (ax * cy - ay * cx) +
                          (cx * cx + cy * cy) * (ax * by - ay * bx);
        return det > 0;  // triangles stay CCW by construction
    }

    int locate(Vec2 p) const {
        int cur = last_;
        for (int guard = 0; guard < 4 * static_cast<int>(tris_.size()) + 16; ++guard) {
            const Tri& t = tris_[cur];
            int next = -1;
            for (int e = 0; e < 3; ++e) {
                if (orient(v_[t.v[e]], v_[t.v[(e + 1) % 3]], p) < 0) {
                    next = t.nbr[e];
                    break;
                }
            }
            if (next < 0) return cur;
            cur = next;
        }
        return cur;  // should not happen; cavity growth tolerates it
    }

    void insert(int pi) {
        Vec2 p = v_[pi];
        int seed = locate(p);
        // Cavity: BFS over strictly violating triangles, seeded by the
        // containing triangle (always removed).
        std::vector<int> cavity{seed};
        tris_[seed].alive = false;
        for (std::size_t i = 0; i < cavity.size(); ++i) {
            const Tri t = tris_[cavity[i]];
            for (int e = 0; e < 3; ++e) {
                int nb = t.nbr[e];
                if (nb < 0 || !tris_[nb].alive) continue;
                if (in_circumcircle(tris_[nb], p)) {
                    tris_[nb].alive = false;
                    cavity.push_back(nb);
                }
            }
        }
        // Horizon: cavity edges whose neighbor is outside the cavity.
        struct HEdge {
            int a, b, outside;
        };
        std::vector<HEdge> horizon;
        for (int ti : cavity) {
            const Tri& t = tris_[ti];
            for (int e = 0; e < 3; ++e) {
                int nb = t.nbr[e];
                if (nb < 0 || tris_[nb].alive)
                    horizon.push_back({t.v[e], t.v[(e + 1) % 3], nb});
            }
        }
        // New fan around p; link via the shared (vertex, p) edges.
        std::map<int, int> openEdge;  // first vertex of (x, p) edge -> new tri index
        std::map<int, int> openEdgeRev;
        std::vector<int> created;
        for (const HEdge& h : horizon) {
            int idx = static_cast<int>(tris_.size());
            tris_.push_back({{h.a, h.b, pi}, {h.outside, -1, -1}, true});
            created.push_back(idx);
            if (h.outside >= 0) {
                Tri& out = tris_[h.outside];
                for (int e = 0; e < 3; ++e)
                    if ((out.v[e] == h.b && out.v[(e + 1) % 3] == h.a)) out.nbr[e] = idx;
            }
            openEdge[h.b] = idx;     // edge (b, p) of this triangle
            openEdgeRev[h.a] = idx;  // edge (p, a) of this triangle
        }
        for (const HEdge& h : horizon) {
            int idx = openEdge[h.b];
            // Neighbor across (b, p) is the triangle whose (p, a) edge starts
            // at the same vertex b.
            auto it = openEdgeRev.find(h.b);
            if (it != openEdgeRev.end()) tris_[idx].nbr[1] = it->second;
            auto it2 = openEdge.find(h.a);
            if (it2 != openEdge.end()) tris_[openEdgeRev[h.a]].nbr[2] = it2->second;
        }
        if (!created.empty()) last_ = created.back();
    }

    std::vector<Vec2> v_;
    std::vector<Tri> tris_;
    int last_ = 0;
};

bool point_in_polygon(const std::vector<Vec2>& poly, Vec2 p) {
    bool inside = false;
    for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
        if ((poly[i].y > p.y) != (poly[j].y > p.y)) {
            double x = poly[j].x + (poly[i].x - poly[j].x) * (p.y - poly[j].y) /
                                       (poly[i].y - poly[j].y);
            if (p.x < x) inside = !inside;
        }
    }
    return inside;
}

double dist_to_polyline(const std::vector<Vec2>& poly, Vec2 p) {
    double best = 1e300;
    for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
        Vec2 a = poly[j], b = poly[i];
        Vec2 ab = b - a;
        double t = ab.dot(p - a) / std::max(ab.dot(ab), 1e-300);
        t = std::clamp(t, 0.0, 1.0);
        best = std::min(best, (p - (a + ab * t)).norm());
    }
    return best;
}

// Small deterministic jitter to break cocircular grid degeneracies.
double hash_jitter(std::uint64_t key) {
    key ^= key >> 33;
    key *= 0xff51afd7ed558ccdULL;
    key ^= key >> 33;
    return (static_cast<double>(key >> 11) * 0x1.0p-53 - 0.5);
}

}  // namespace

TriMesh triangulate(const BoundarySpec& b, double targetEdge, double phase,
                    bool evenBoundaryCount, int boundaryCount) {
    if (!(targetEdge > 0)) throw InvalidInput("targetEdge must be > 0");
    const double perimeter = b.perimeter();
    int m = boundaryCount > 0 ? boundaryCount
                              : static_cast<int>(std::ceil(perimeter / targetEdge));
    m = std::max(m, 8);
    if (evenBoundaryCount && m % 2 == 1) ++m;
    const double spacing = perimeter / m;

    std::vector<Vec2> pts;
    std::vector<double> arclengths;
    for (int i = 0; i < m; ++i) {
        double s = std::fmod(phase + i * spacing, perimeter);
        if (s < 0) s += perimeter;
        arclengths.push_back(s);
        pts.push_back(b.point_at(s));
    }
    std::vector<Vec2> poly = pts;  // boundary polygon for containment tests

    // Hex-offset interior grid, kept clear of the boundary.
    double lo_x = 1e300, lo_y = 1e300, hi_x = -1e300, hi_y = -1e300;
    for (const Vec2& p : poly) {
        lo_x = std::min(lo_x, p.x);
        lo_y = std::min(lo_y, p.y);
        hi_x = std::max(hi_x, p.x);
        hi_y = std::max(hi_y, p.y);
    }
    const double h = targetEdge;
    const double row_h = h * std::sqrt(3.0) / 2.0;
    int row = 0;
    for (double y = lo_y + 0.5 * row_h; y < hi_y; y += row_h, ++row) {
        double x0 = lo_x + ((row % 2) ? 0.75 * h : 0.25 * h);
        int col = 0;
        for (double x = x0; x < hi_x; x += h, ++col) {
            std::uint64_t key = (static_cast<std::uint64_t>(row) << 32) ^
                                static_cast<std::uint64_t>(col);
            Vec2 p{x + 0.02 * h * hash_jitter(key), y + 0.02 * h * hash_jitter(~key)};
            if (!point_in_polygon(poly, p)) continue;
            if (dist_to_polyline(poly, p) < 0.55 * h) continue;
            pts.push_back(p);
        }
    }

    std::vector<std::array<int, 3>> tris = Delaunay::run(pts);

    TriMesh mesh;
    mesh.vertices.reserve(pts.size());
    for (const Vec2& p : pts) mesh.vertices.push_back({p.x, p.y, 0.0});
    for (const auto& t : tris) {
        Vec2 centroid = (pts[t[0]] + pts[t[1]] + pts[t[2]]) * (1.0 / 3.0);
        if (!point_in_polygon(poly, centroid)) continue;
        // Orient CCW so flat normals point +z.
        double orient = (pts[t[1]] - pts[t[0]]).cross(pts[t[2]] - pts[t[0]]);
        if (orient >= 0)
            mesh.triangles.push_back({t[0], t[1], t[2]});
        else
            mesh.triangles.push_back({t[0], t[2], t[1]});
    }
    if (mesh.triangles.empty()) throw InvalidInput("degenerate boundary: no interior triangles");

    std::set<std::pair<int, int>> edge_set;
    for (const auto& t : mesh.triangles) {
        auto add = [&edge_set](int a, int b) {
            edge_set.insert({std::min(a, b), std::max(a, b)});
        };
        add(t[0], t[1]);
        add(t[1], t[2]);
        add(t[2], t[0]);
    }
    for (auto [a, b] : edge_set) {
        mesh.edges.push_back({a, b});
        mesh.restLengths.push_back((mesh.vertices[a] - mesh.vertices[b]).norm());
    }

    mesh.boundaryVertices.resize(m);
    for (int i = 0; i < m; ++i) mesh.boundaryVertices[i] = i;
    mesh.boundaryArclengths = arclengths;
    return mesh;
}

double mesh_area(const TriMesh& mesh) {
    double area = 0.0;
    for (const auto& t : mesh.triangles) {
        Vec3 u = mesh.vertices[t[1]] - mesh.vertices[t[0]];
        Vec3 v = mesh.vertices[t[2]] - mesh.vertices[t[0]];
        area += 0.5 * u.cross(v).norm();
    }
    return area;
}

std::vector<Hinge> interior_hinges(const TriMesh& mesh) {
    std::map<std::pair<int, int>, std::vector<int>> wings;
    for (const auto& t : mesh.triangles) {
        for (int e = 0; e < 3; ++e) {
            int a = t[e], b = t[(e + 1) % 3], opp = t[(e + 2) % 3];
            wings[{std::min(a, b), std::max(a, b)}].push_back(opp);
        }
    }
    std::vector<Hinge> hinges;
    for (const auto& [edge, opp] : wings)
        if (opp.size() == 2) hinges.push_back({edge.first, edge.second, opp[0], opp[1]});
    return hinges;
}

}  // namespace biscornu
