#include "biscornu/hull3d.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

#include "biscornu/errors.hpp"

namespace biscornu {

namespace {

struct Face {
    int a, b, c;
    Vec3 normal;  // outward, unit
    double offset;  // normal . point for points on the face
    bool alive = true;
};

double scale_of(std::span<const Vec3> pts) {
    double s = 0.0;
    for (const Vec3& p : pts) s = std::max({s, std::fabs(p.x), std::fabs(p.y), std::fabs(p.z)});
    return std::max(s, 1e-12);
}

std::vector<Vec2> hull2d(std::vector<Vec2> pts) {
    // Andrew monotone chain; returns CCW hull without repeated endpoint.
    std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }),
              pts.end());
    if (pts.size() <= 2) return pts;
    auto cross = [](Vec2 o, Vec2 a, Vec2 b) { return (a - o).cross(b - o); };
    std::vector<Vec2> hull(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

double dist_to_polygon_2d(const std::vector<Vec2>& poly, Vec2 p) {
    // 0 inside, distance to boundary outside.
    if (poly.size() >= 3) {
        bool inside = true;
        for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++)
            if ((poly[i] - poly[j]).cross(p - poly[j]) < 0) inside = false;
        if (inside) return 0.0;
    }
    double best = 1e300;
    for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
        Vec2 a = poly[j], b = poly[i];
        Vec2 ab = b - a;
        double denom = std::max(ab.dot(ab), 1e-300);
        double t = std::clamp(ab.dot(p - a) / denom, 0.0, 1.0);
        best = std::min(best, (p - (a + ab * t)).norm());
    }
    if (poly.size() == 1) best = (p - poly[0]).norm();
    return best;
}

}  // namespace

ConvexHull3::ConvexHull3(std::span<const Vec3> points) {
    if (points.empty()) throw InvalidInput("hull of empty point set");
    const double tol = 1e-9 * scale_of(points);

    // Find four affinely independent points, or detect degeneracy.
    std::size_t i1 = 0;
    std::size_t i2 = i1;
    for (std::size_t i = 0; i < points.size(); ++i)
        if ((points[i] - points[i1]).norm() > (points[i2] - points[i1]).norm()) i2 = i;
    std::size_t i3 = i2;
    double best_area = -1.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        double area = (points[i2] - points[i1]).cross(points[i] - points[i1]).norm();
        if (area > best_area) {
            best_area = area;
            i3 = i;
        }
    }
    Vec3 n = (points[i2] - points[i1]).cross(points[i3] - points[i1]);
    std::size_t i4 = i3;
    double best_vol = -1.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        double vol = std::fabs(n.normalized().dot(points[i] - points[i1]));
        if (vol > best_vol) {
            best_vol = vol;
            i4 = i;
        }
    }

    if ((points[i2] - points[i1]).norm() <= tol || best_area <= tol * tol ||
        n.norm() == 0.0 || best_vol <= tol) {
        // Coplanar (or lower-dimensional): slab test over the planar hull.
        degenerate_ = true;
        planePoint_ = points[i1];
        planeNormal_ = n.norm() > 0 ? n.normalized() : Vec3{0, 0, 1};
        Vec3 u = points[i2] - points[i1];
        if (u.norm() <= tol) u = std::fabs(planeNormal_.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
        axisU_ = (u - planeNormal_ * planeNormal_.dot(u)).normalized();
        axisV_ = planeNormal_.cross(axisU_);
        std::vector<Vec2> flat;
        flat.reserve(points.size());
        for (const Vec3& p : points) {
            Vec3 d = p - planePoint_;
            flat.push_back({d.dot(axisU_), d.dot(axisV_)});
        }
        polygon_ = hull2d(std::move(flat));
        return;
    }

    // Incremental hull from the starting tetrahedron.
    std::vector<Face> faces;
    auto make_face = [&points](int a, int b, int c, Vec3 inside) {
        Face f{a, b, c, {}, 0.0, true};
        Vec3 normal = (points[b] - points[a]).cross(points[c] - points[a]);
        if (normal.dot(inside - points[a]) > 0) {
            std::swap(f.b, f.c);
            normal = normal * -1.0;
        }
        f.normal = normal.normalized();
        f.offset = f.normal.dot(points[a]);
        return f;
    };
    Vec3 centroid = (points[i1] + points[i2] + points[i3] + points[i4]) * 0.25;
    int t0 = static_cast<int>(i1), t1 = static_cast<int>(i2), t2 = static_cast<int>(i3),
        t3 = static_cast<int>(i4);
    faces.push_back(make_face(t0, t1, t2, centroid));
    faces.push_back(make_face(t0, t1, t3, centroid));
    faces.push_back(make_face(t0, t2, t3, centroid));
    faces.push_back(make_face(t1, t2, t3, centroid));

    for (int p = 0; p < static_cast<int>(points.size()); ++p) {
        if (p == t0 || p == t1 || p == t2 || p == t3) continue;
        // Collect faces visible from p.
        std::vector<int> visible;
        for (int f = 0; f < static_cast<int>(faces.size()); ++f)
            if (faces[f].alive && faces[f].normal.dot(points[p]) - faces[f].offset > tol)
                visible.push_back(f);
        if (visible.empty()) continue;
        // Horizon = edges of visible faces shared with exactly one visible face.
        std::map<std::pair<int, int>, int> count;
        for (int f : visible) {
            auto add = [&count](int a, int b) { ++count[{std::min(a, b), std::max(a, b)}]; };
            add(faces[f].a, faces[f].b);
            add(faces[f].b, faces[f].c);
            add(faces[f].c, faces[f].a);
        }
        std::vector<std::pair<int, int>> horizon;
        for (int f : visible) {
            auto consider = [&](int a, int b) {
                if (count[{std::min(a, b), std::max(a, b)}] == 1) horizon.push_back({a, b});
            };
            consider(faces[f].a, faces[f].b);
            consider(faces[f].b, faces[f].c);
            consider(faces[f].c, faces[f].a);
        }
        for (int f : visible) faces[f].alive = false;
        for (auto [a, b] : horizon) faces.push_back(make_face(a, b, p, centroid));
    }

    for (const Face& f : faces)
        if (f.alive) facets_.push_back({points[f.a], f.normal});
}

bool ConvexHull3::contains(Vec3 p, double epsilon) const {
    if (epsilon < 0) throw InvalidInput("epsilon must be >= 0");
    if (degenerate_) {
        Vec3 d = p - planePoint_;
        if (std::fabs(d.dot(planeNormal_)) > epsilon) return false;
        Vec2 flat{d.dot(axisU_), d.dot(axisV_)};
        return dist_to_polygon_2d(polygon_, flat) <= epsilon;
    }
    for (const Facet& f : facets_)
        if (f.normal.dot(p - f.point) > epsilon) return false;
    return true;
}

}  // namespace biscornu
