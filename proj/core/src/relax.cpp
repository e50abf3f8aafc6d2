#include "biscornu/relax.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <numbers>
#include <random>

#include "biscornu/errors.hpp"
#include "biscornu/hull3d.hpp"

namespace biscornu {

double hinge_angle(Vec3 x0, Vec3 x1, Vec3 x2, Vec3 x3) {
    Vec3 e = x1 - x0;
    Vec3 nA = e.cross(x2 - x0);
    Vec3 nB = (x3 - x0).cross(e);
    Vec3 ehat = e.normalized();
    Vec3 a = nA.normalized(), b = nB.normalized();
    return std::atan2(a.cross(b).dot(ehat), a.dot(b));
}

std::array<Vec3, 4> hinge_angle_gradient(Vec3 x0, Vec3 x1, Vec3 x2, Vec3 x3) {
    Vec3 e = x1 - x0;
    double l = e.norm();
    Vec3 ehat = e * (1.0 / l);
    Vec3 nA = e.cross(x2 - x0);
    Vec3 nB = (x3 - x0).cross(e);
    double nA2 = nA.norm2(), nB2 = nB.norm2();
    Vec3 gA = nA * (1.0 / nA2);
    Vec3 gB = nB * (1.0 / nB2);
    std::array<Vec3, 4> grad;
    grad[2] = gA * (-l);
    grad[3] = gB * (-l);
    grad[0] = gA * ((x1 - x2).dot(ehat)) + gB * ((x1 - x3).dot(ehat));
    grad[1] = gA * ((x2 - x0).dot(ehat)) + gB * ((x3 - x0).dot(ehat));
    return grad;
}

SeamSetup build_dform_sheets(const BoundarySpec& b1, const BoundarySpec& b2,
                             double startOffset, double targetEdge) {
    SeamPairing pairing = make_dform_pairing(b1, b2, startOffset);
    TriMesh sheet1 = triangulate(b1, targetEdge, 0.0);
    int count = static_cast<int>(sheet1.boundaryVertices.size());
    TriMesh sheet2 = triangulate(b2, targetEdge, pairing.param, false, count);
    return {{std::move(sheet1), std::move(sheet2)}, pairing};
}

SeamSetup build_pita_sheet(const BoundarySpec& b, double foldPoint, double targetEdge) {
    SeamPairing pairing = make_pita_pairing(b, foldPoint);
    TriMesh sheet = triangulate(b, targetEdge, pairing.param, /*evenBoundaryCount=*/true);
    return {{std::move(sheet)}, pairing};
}

namespace {

struct SeamPair {
    int a, b;  // global vertex indices
};

double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// 2D rigid alignment (rotation + translation) of src onto dst point pairs.
struct Rigid2 {
    double c = 1.0, s = 0.0;
    Vec2 t{0.0, 0.0};
    Vec2 apply(Vec2 p) const { return {c * p.x - s * p.y + t.x, s * p.x + c * p.y + t.y}; }
};

Rigid2 kabsch2(const std::vector<Vec2>& src, const std::vector<Vec2>& dst) {
    Vec2 cs{0, 0}, cd{0, 0};
    for (std::size_t i = 0; i < src.size(); ++i) {
        cs = cs + src[i];
        cd = cd + dst[i];
    }
    double inv = 1.0 / static_cast<double>(src.size());
    cs = cs * inv;
    cd = cd * inv;
    double dot = 0.0, cross = 0.0;
    for (std::size_t i = 0; i < src.size(); ++i) {
        Vec2 a = src[i] - cs, b = dst[i] - cd;
        dot += a.dot(b);
        cross += a.cross(b);
    }
    double angle = std::atan2(cross, dot);
    Rigid2 r;
    r.c = std::cos(angle);
    r.s = std::sin(angle);
    Vec2 rc{r.c * cs.x - r.s * cs.y, r.s * cs.x + r.c * cs.y};
    r.t = cd - rc;
    return r;
}

}  // namespace

EmbeddingResult relax(const std::vector<TriMesh>& sheets, const SeamPairing& pairing,
                      const RelaxParams& params) {
    if (params.iterations < 1 || !(params.stepSize > 0) || !(params.lengthTolerance > 0))
        throw InvalidInput("relax parameters must be positive");
    const bool pita = pairing.mode == SeamPairing::Mode::Pita;
    if (pita ? sheets.size() != 1 : sheets.size() != 2)
        throw InvalidInput(pita ? "pita relaxation expects one sheet"
                                : "D-form relaxation expects two sheets");

    // Global vertex layout: sheet offsets.
    std::vector<int> offset(sheets.size() + 1, 0);
    for (std::size_t s = 0; s < sheets.size(); ++s)
        offset[s + 1] = offset[s] + static_cast<int>(sheets[s].vertices.size());
    const int nv = offset.back();

    // Seam pairs, checked against the pairing map.
    std::vector<SeamPair> seam;
    const double P = pairing.perimeter;
    auto arc_close = [P](double a, double b) {
        double d = std::fabs(std::fmod(a - b, P));
        d = std::min(d, P - d);
        return d <= 1e-6 * P + 1e-9;
    };
    if (!pita) {
        const TriMesh& s1 = sheets[0];
        const TriMesh& s2 = sheets[1];
        if (s1.boundaryVertices.size() != s2.boundaryVertices.size())
            throw InvalidInput("sheets have mismatched seam vertex counts");
        for (std::size_t i = 0; i < s1.boundaryVertices.size(); ++i) {
            if (!arc_close(pairing.partner(s1.boundaryArclengths[i]), s2.boundaryArclengths[i]))
                throw InvalidInput("sheet boundaries are inconsistent with the seam pairing");
            seam.push_back({s1.boundaryVertices[i], offset[1] + s2.boundaryVertices[i]});
        }
    } else {
        const TriMesh& s1 = sheets[0];
        int m = static_cast<int>(s1.boundaryVertices.size());
        if (m % 2 != 0) throw InvalidInput("pita sheet needs an even seam vertex count");
        for (int i = 1; i < m - i; ++i) {
            int jpos = m - i;
            if (!arc_close(pairing.partner(s1.boundaryArclengths[i]),
                           s1.boundaryArclengths[jpos % m]))
                throw InvalidInput("sheet boundary is inconsistent with the fold pairing");
            seam.push_back({s1.boundaryVertices[i], s1.boundaryVertices[jpos % m]});
        }
    }

    // Flat initial placement.
    std::vector<Vec3> pos(nv);
    for (std::size_t s = 0; s < sheets.size(); ++s)
        for (std::size_t i = 0; i < sheets[s].vertices.size(); ++i)
            pos[offset[s] + i] = sheets[s].vertices[i];

    double mean_rest = 0.0;
    std::size_t edge_total = 0;
    for (const TriMesh& sheet : sheets) {
        mean_rest = std::accumulate(sheet.restLengths.begin(), sheet.restLengths.end(), mean_rest);
        edge_total += sheet.restLengths.size();
    }
    mean_rest /= static_cast<double>(edge_total);

    if (pita) {
        // Start folded flat about the fold axis, one flap a mean edge above
        // the other, mirroring the stacked-flat start of the two-sheet case.
        // The fold strip blends up over a couple of edge lengths; the first
        // projection sweeps absorb the local stretch this introduces.
        Vec3 a3 = pos[sheets[0].boundaryVertices[0]];
        Vec3 b3 = pos[sheets[0].boundaryVertices[sheets[0].boundaryVertices.size() / 2]];
        Vec2 A{a3.x, a3.y}, B{b3.x, b3.y};
        Vec2 u = (B - A) * (1.0 / std::max((B - A).norm(), 1e-300));
        Vec2 nrm{-u.y, u.x};
        const double rho = 4.0 * mean_rest;  // fold cylinder radius
        const double halfTurn = std::numbers::pi * rho;
        for (Vec3& p : pos) {
            Vec2 q{p.x, p.y};
            double s = nrm.dot(q - A);
            if (s <= 0) continue;
            Vec2 foot = q - nrm * s;  // projection onto the fold axis
            if (s <= halfTurn) {
                double ang = s / rho;
                Vec2 xy = foot + nrm * (rho * std::sin(ang));
                p = {xy.x, xy.y, rho * (1.0 - std::cos(ang))};
            } else {
                Vec2 xy = foot - nrm * (s - halfTurn);
                p = {xy.x, xy.y, 2.0 * rho};
            }
        }
    } else {
        // Rigidly place sheet 2 so its seam samples start near sheet 1's,
        // a mean edge above. Depending on the shapes and offset the best
        // flat placement may or may not flip the sheet, so try both.
        const TriMesh& s2 = sheets[1];
        std::vector<Vec2> dst, srcPlain, srcMirror;
        for (const SeamPair& sp : seam) {
            Vec3 q = pos[sp.b];
            dst.push_back({pos[sp.a].x, pos[sp.a].y});
            srcPlain.push_back({q.x, q.y});
            srcMirror.push_back({q.x, -q.y});
        }
        Rigid2 plain = kabsch2(srcPlain, dst);
        Rigid2 mirror = kabsch2(srcMirror, dst);
        double plainErr = 0.0, mirrorErr = 0.0;
        for (std::size_t i = 0; i < dst.size(); ++i) {
            plainErr += (plain.apply(srcPlain[i]) - dst[i]).dot(plain.apply(srcPlain[i]) - dst[i]);
            mirrorErr +=
                (mirror.apply(srcMirror[i]) - dst[i]).dot(mirror.apply(srcMirror[i]) - dst[i]);
        }
        const bool useMirror = mirrorErr < plainErr;
        const Rigid2& align = useMirror ? mirror : plain;
        for (std::size_t i = 0; i < s2.vertices.size(); ++i) {
            Vec3& v = pos[offset[1] + i];
            Vec2 flat = align.apply({v.x, useMirror ? -v.y : v.y});
            v = {flat.x, flat.y, mean_rest};
        }
    }

    // Seeded symmetry-breaking perturbation.
    std::mt19937_64 rng(params.perturbationSeed);
    for (Vec3& v : pos) {
        v.x += 0.02 * mean_rest * (next_unit(rng) - 0.5);
        v.y += 0.02 * mean_rest * (next_unit(rng) - 0.5);
        v.z += 0.10 * mean_rest * (next_unit(rng) - 0.5);
    }

    // Edge and hinge tables in global indices.
    struct Edge {
        int a, b;
        double rest;
    };
    std::vector<Edge> edges;
    struct GHinge {
        int v0, v1, wa, wb;
    };
    std::vector<GHinge> hinges;
    for (std::size_t s = 0; s < sheets.size(); ++s) {
        for (std::size_t e = 0; e < sheets[s].edges.size(); ++e)
            edges.push_back({offset[s] + sheets[s].edges[e][0],
                             offset[s] + sheets[s].edges[e][1], sheets[s].restLengths[e]});
        for (const Hinge& h : interior_hinges(sheets[s]))
            hinges.push_back({offset[s] + h.v0, offset[s] + h.v1, offset[s] + h.wingA,
                              offset[s] + h.wingB});
    }


    auto bending_energy = [&](const std::vector<Vec3>& x) {
        double e = 0.0;
        for (const GHinge& h : hinges) {
            double th = hinge_angle(x[h.v0], x[h.v1], x[h.wa], x[h.wb]);
            e += th * th;
        }
        return e;
    };
    auto max_strain = [&](const std::vector<Vec3>& x) {
        double worst = 0.0;
        for (const Edge& e : edges) {
            double len = (x[e.b] - x[e.a]).norm();
            worst = std::max(worst, std::fabs(len - e.rest) / e.rest);
        }
        return worst;
    };

    EmbeddingResult result;
    result.initialBendingEnergy = bending_energy(pos);

    const int iters = params.iterations;
    const int weld_at = static_cast<int>(0.85 * iters);
    const double base_step = params.stepSize * mean_rest * mean_rest;
    const double cap = 0.05 * mean_rest;
    const int sweeps = 10;
    const double inertia = 0.9;  // heavy-ball factor; damped on energy rises
    double step_scale = 0.1;     // adapted from the post-projection energy trace
    int calm_streak = 0;         // iterations since the last energy jump
    std::vector<int> rep(nv);
    std::iota(rep.begin(), rep.end(), 0);

    std::vector<Vec3> grad(nv);
    // Jacobi-averaged length projection: corrections are accumulated from
    // the same snapshot and applied weighted by constraint count. Order
    // independent, so high-valence welded seam vertices see one consistent
    // correction instead of a sequential tug-of-war.
    std::vector<Vec3> accum(nv);
    std::vector<int> count(nv);
    auto project_edges = [&](int rounds) {
        for (int r = 0; r < rounds; ++r) {
            std::fill(accum.begin(), accum.end(), Vec3{});
            std::fill(count.begin(), count.end(), 0);
            for (const Edge& e : edges) {
                int a = rep[e.a], b = rep[e.b];
                if (a == b) continue;
                Vec3 d = pos[b] - pos[a];
                double len = d.norm();
                if (len < 1e-12) continue;
                Vec3 corr = d * ((len - e.rest) / len);
                accum[a] += corr;
                accum[b] -= corr;
                ++count[a];
                ++count[b];
            }
            for (int v = 0; v < nv; ++v)
                if (count[v]) pos[v] += accum[v] * (1.0 / (count[v] + 1));
        }
    };
    // Sequential sweeps enforce lengths harder; used only in the bending-free
    // settle at the end, where their directional bias cannot pump energy.
    auto project_edges_gs = [&](int rounds) {
        for (int r = 0; r < rounds; ++r) {
            for (const Edge& e : edges) {
                int a = rep[e.a], b = rep[e.b];
                if (a == b) continue;
                Vec3 d = pos[b] - pos[a];
                double len = d.norm();
                if (len < 1e-12) continue;
                Vec3 corr = d * (0.5 * (len - e.rest) / len);
                pos[a] += corr;
                pos[b] -= corr;
            }
        }
    };

    // Seam schedule. Three regimes, picked from the starting geometry:
    //  - Prestacked: two sheets whose seam starts essentially closed (the
    //    flat alignment matched the pairing). Weld at once and spend the run
    //    draining the soft flat modes; averaged projection keeps the long
    //    tail from pumping wrinkles.
    //  - Mismatched: two stacked sheets whose boundaries disagree locally.
    //    Pull proportionally (uncapped) so the seam snaps shut before the
    //    sheets wrinkle, with firm sequential enforcement.
    //  - Folding: a single sheet closing onto itself. Gentle capped tugs over
    //    a long ramp let the global fold swing shut without crumpling.
    struct Schedule {
        double weldDist;
        double zipRamp;
        double pullCap;   // max pull displacement per iteration (or huge)
        int gsSweeps;     // sequential rounds per iteration (0 = averaged)
        bool gentleDamping;
    };
    Schedule sched;
    {
        std::vector<double> dists;
        for (const SeamPair& sp : seam) dists.push_back((pos[sp.a] - pos[sp.b]).norm());
        std::nth_element(dists.begin(), dists.begin() + dists.size() / 2, dists.end());
        double median = dists.empty() ? 0.0 : dists[dists.size() / 2];
        if (pita)
            sched = {0.6 * mean_rest, std::max(400.0, 0.25 * iters), 0.15 * mean_rest, 24, false};
        else if (median <= 2.0 * mean_rest)
            sched = {1.2 * mean_rest, 400.0, 1e300, 0, true};
        else
            sched = {0.6 * mean_rest, std::max(400.0, 0.5 * iters), 1e300, 8, false};
    }
    const double zip_ramp = sched.zipRamp;
    const double weld_dist = sched.weldDist;

    std::vector<Vec3> prev = pos;   // positions at the start of last iteration
    std::vector<Vec3> start(nv);

    for (int it = 0; it < iters; ++it) {
        start = pos;
        // Bending descent step.
        std::fill(grad.begin(), grad.end(), Vec3{});
        for (const GHinge& h : hinges) {
            int v0 = rep[h.v0], v1 = rep[h.v1], wa = rep[h.wa], wb = rep[h.wb];
            Vec3 e = pos[v1] - pos[v0];
            Vec3 nA = e.cross(pos[wa] - pos[v0]);
            Vec3 nB = (pos[wb] - pos[v0]).cross(e);
            if (nA.norm2() < 1e-24 || nB.norm2() < 1e-24 || e.norm2() < 1e-24) continue;
            double th = hinge_angle(pos[v0], pos[v1], pos[wa], pos[wb]);
            auto g = hinge_angle_gradient(pos[v0], pos[v1], pos[wa], pos[wb]);
            grad[v0] += g[0] * (2.0 * th);
            grad[v1] += g[1] * (2.0 * th);
            grad[wa] += g[2] * (2.0 * th);
            grad[wb] += g[3] * (2.0 * th);
        }
        // After the weld deadline the step decays so the run settles into a
        // quiet constraint equilibrium instead of wandering.
        double quiesce = it <= weld_at ? 1.0 : std::pow(0.97, it - weld_at);
        for (int v = 0; v < nv; ++v) {
            if (rep[v] != v) continue;
            Vec3 d = grad[v] * (-base_step * step_scale * quiesce);
            double n = d.norm();
            if (n > cap) d = d * (cap / n);
            pos[v] += d + (pos[v] - prev[v]) * (inertia * quiesce);
        }

        // Seam handling: a stiffening midpoint pull, with pairs welded into
        // one representative as soon as they come close (all of them by the
        // late-stage deadline so the seam always closes).
        const bool deadline = it >= weld_at;
        for (const SeamPair& sp : seam) {
            int a = rep[sp.a], b = rep[sp.b];
            if (a == b) continue;
            Vec3 mid = (pos[a] + pos[b]) * 0.5;
            double dist = (pos[a] - pos[b]).norm();
            if (deadline || dist <= weld_dist) {
                pos[a] = mid;
                for (int v = 0; v < nv; ++v)
                    if (rep[v] == b) rep[v] = a;
                continue;
            }
            double w = 0.3 * std::min(1.0, it / zip_ramp);
            w *= w / 0.3;  // quadratic ramp
            // Distant pairs get a capped tug so the sheet folds globally
            // instead of wrinkling at the seam.
            double pull = std::min(w * dist * 0.5, 0.15 * mean_rest);
            Vec3 dir = (mid - pos[a]) * (1.0 / std::max(dist * 0.5, 1e-300));
            pos[a] += dir * pull;
            pos[b] -= dir * pull;
        }

        if (foldingStart)
            project_edges_gs(24);  // folding needs hard enforcement
        else {
            project_edges(sweeps);  // averaged sweeps cannot pump wrinkles
            project_edges_gs(1);
        }
        for (int v = 0; v < nv; ++v) pos[v] = pos[rep[v]];

        // All forces are internal, so the net rigid motion per iteration is
        // numerical drift; remove it to keep the embedding frame pinned.
        {
            Vec3 c{}, dbar{};
            for (int v = 0; v < nv; ++v) {
                c += start[v] * (1.0 / nv);
                dbar += (pos[v] - start[v]) * (1.0 / nv);
            }
            Vec3 L{};
            double M[3][3] = {};
            for (int v = 0; v < nv; ++v) {
                Vec3 r = start[v] - c;
                Vec3 d = pos[v] - start[v] - dbar;
                L += r.cross(d);
                double rr = r.dot(r);
                M[0][0] += rr - r.x * r.x;
                M[0][1] += -r.x * r.y;
                M[0][2] += -r.x * r.z;
                M[1][1] += rr - r.y * r.y;
                M[1][2] += -r.y * r.z;
                M[2][2] += rr - r.z * r.z;
            }
            M[1][0] = M[0][1];
            M[2][0] = M[0][2];
            M[2][1] = M[1][2];
            double det = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
                         M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
                         M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
            Vec3 omega{};
            if (std::fabs(det) > 1e-12 * mean_rest * mean_rest * nv * nv) {
                auto solve_row = [&](int i) {
                    double Mi[3][3];
                    for (int a = 0; a < 3; ++a)
                        for (int b = 0; b < 3; ++b) Mi[a][b] = M[a][b];
                    Mi[0][i] = L.x;
                    Mi[1][i] = L.y;
                    Mi[2][i] = L.z;
                    return (Mi[0][0] * (Mi[1][1] * Mi[2][2] - Mi[1][2] * Mi[2][1]) -
                            Mi[0][1] * (Mi[1][0] * Mi[2][2] - Mi[1][2] * Mi[2][0]) +
                            Mi[0][2] * (Mi[1][0] * Mi[2][1] - Mi[1][1] * Mi[2][0])) /
                           det;
                };
                omega = {solve_row(0), solve_row(1), solve_row(2)};
            }
            for (int v = 0; v < nv; ++v) {
                Vec3 r = start[v] - c;
                pos[v] -= dbar + omega.cross(r);
            }
        }

        double energy = bending_energy(pos);
        // Kinetic damping. While the seam is still arranging itself the
        // response to an energy rise is harsh (full stop); in the long
        // welded tail a softer response lets the slow flat modes keep
        // their momentum.
        const bool settled = !foldingStart;
        bool jump = !result.energyTrace.empty() &&
                    energy > result.energyTrace.back() * (settled ? 1.02 : 1.005);
        if (jump) {
            if (settled)
                for (int v = 0; v < nv; ++v) prev[v] = pos[v] - (pos[v] - prev[v]) * 0.5;
            else
                prev = pos;
            step_scale = std::max(0.05, step_scale * (settled ? 0.7 : 0.6));
            calm_streak = 0;
        } else {
            prev = start;
            ++calm_streak;
            // A long calm stretch earns a larger cap so the slow global
            // modes drain in reasonable time.
            double cap_scale = calm_streak > 40 ? 10.0 : 2.0;
            step_scale = std::min(cap_scale, step_scale * 1.05);
        }
        result.energyTrace.push_back(energy);
        result.strainTrace.push_back(max_strain(pos));
    }

    // Final settle: constraints only, until the strain target is met or the
    // projection stops making progress.
    {
        double best = max_strain(pos);
        for (int block = 0; block < 400 && best > 0.5 * params.lengthTolerance; ++block) {
            project_edges_gs(50);
            double now = max_strain(pos);
            if (now > best * 0.999) break;  // stalled
            best = now;
        }
    }
    for (int v = 0; v < nv; ++v) pos[v] = pos[rep[v]];

    // Canonical output frame: seam centroid at the origin, the seam's
    // best-fit plane facing +z (skipped when the seam folds back on itself
    // and has no usable area vector).
    {
        const auto& loop = sheets[0].boundaryVertices;
        Vec3 c{};
        for (int bv : loop) c += pos[rep[bv]] * (1.0 / loop.size());
        Vec3 area{};
        for (std::size_t i = 0; i < loop.size(); ++i) {
            Vec3 a = pos[rep[loop[i]]] - c;
            Vec3 b = pos[rep[loop[(i + 1) % loop.size()]]] - c;
            area += a.cross(b);
        }
        double scale2 = pairing.perimeter * pairing.perimeter;
        if (area.norm() > 1e-6 * scale2) {
            Vec3 n = area.normalized();
            Vec3 z{0, 0, 1};
            Vec3 axis = n.cross(z);
            double cosang = n.dot(z);
            for (Vec3& p : pos) {
                Vec3 q = p - c;
                if (axis.norm() < 1e-12) {
                    if (cosang < 0) q = {q.x, -q.y, -q.z};
                } else {
                    Vec3 k = axis.normalized();
                    double s = axis.norm();
                    q = q * cosang + k.cross(q) * s + k * (k.dot(q) * (1.0 - cosang));
                }
                p = q;
            }
        } else {
            for (Vec3& p : pos) p -= c;
        }
    }

    result.maxEdgeStrain = max_strain(pos);
    result.bendingEnergy = bending_energy(pos);
    result.converged = result.maxEdgeStrain <= params.lengthTolerance;
    result.meshes = sheets;
    for (std::size_t s = 0; s < sheets.size(); ++s)
        for (std::size_t i = 0; i < sheets[s].vertices.size(); ++i)
            result.meshes[s].vertices[i] = pos[offset[s] + i];
    for (int bv : sheets[0].boundaryVertices) result.seamCurve.push_back(pos[rep[bv]]);
    return result;
}

double convex_hull_check(const EmbeddingResult& e, double epsilon) {
    if (epsilon < 0) throw InvalidInput("epsilon must be >= 0");
    if (e.seamCurve.size() < 3) throw InvalidInput("seam curve too short");
    ConvexHull3 hull(e.seamCurve);
    std::size_t inside = 0, total = 0;
    for (const TriMesh& mesh : e.meshes) {
        for (const Vec3& v : mesh.vertices) {
            ++total;
            if (hull.contains(v, epsilon)) ++inside;
        }
    }
    return static_cast<double>(inside) / static_cast<double>(total);
}

}  // namespace biscornu
