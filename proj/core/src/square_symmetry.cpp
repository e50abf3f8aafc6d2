#include "biscornu/square_symmetry.hpp"

#include <algorithm>
#include <cstdlib>

namespace biscornu {

D4Element d4_mul(D4Element a, D4Element b) {
    // flip . rot = rot^-1 . flip, so R^a F^fa R^b F^fb collapses as below.
    int rot = a.flip ? (a.rot - b.rot) : (a.rot + b.rot);
    return {((rot % 4) + 4) % 4, a.flip != b.flip};
}

D4Element d4_inv(D4Element a) {
    if (a.flip) return a;  // reflections are involutions
    return {(4 - a.rot) % 4, false};
}

const std::array<D4Element, 8>& all_d4() {
    static const std::array<D4Element, 8> elements = {{
        {0, false}, {1, false}, {2, false}, {3, false},
        {0, true}, {1, true}, {2, true}, {3, true},
    }};
    return elements;
}

std::pair<int, int> d4_point(D4Element g, int n, int x, int y) {
    if (g.flip) x = n - x;  // mirror across the vertical mid-axis
    for (int i = 0; i < g.rot; ++i) {
        int nx = n - y;  // quarter-turn CCW about the grid center
        y = x;
        x = nx;
    }
    return {x, y};
}

StitchChart apply_d4(D4Element g, const StitchChart& chart) {
    const int n = chart.size();
    std::set<Seg> h, v;
    auto map_segment = [&](int x0, int y0, int x1, int y1) {
        auto [ax, ay] = d4_point(g, n, x0, y0);
        auto [bx, by] = d4_point(g, n, x1, y1);
        if (ay == by)
            h.insert({std::min(ax, bx), ay});
        else
            v.insert({ax, std::min(ay, by)});
    };
    for (const Seg& s : chart.hseg()) map_segment(s.x, s.y, s.x + 1, s.y);
    for (const Seg& s : chart.vseg()) map_segment(s.x, s.y, s.x, s.y + 1);
    return StitchChart(n, std::move(h), std::move(v));
}

std::vector<D4Element> stabilizer_square(const StitchChart& chart) {
    std::vector<D4Element> stab;
    for (D4Element g : all_d4())
        if (apply_d4(g, chart) == chart) stab.push_back(g);
    return stab;
}

SquareSymmetryClass classify_square(const StitchChart& chart) {
    bool has[4] = {false, false, false, false};  // rot 0..3, flip=false
    bool mirror_axis = false;                    // flip with even rot
    bool mirror_diag = false;                    // flip with odd rot
    for (D4Element g : stabilizer_square(chart)) {
        if (!g.flip)
            has[g.rot] = true;
        else if (g.rot % 2 == 0)
            mirror_axis = true;
        else
            mirror_diag = true;
    }
    const bool quarter = has[1];
    const bool half = has[2];
    if (quarter) {
        if (mirror_axis || mirror_diag) return SquareSymmetryClass::D4;
        return SquareSymmetryClass::C4;
    }
    if (half) {
        if (mirror_axis) return SquareSymmetryClass::D2_axis;
        if (mirror_diag) return SquareSymmetryClass::D2_diag;
        return SquareSymmetryClass::C2;
    }
    if (mirror_axis) return SquareSymmetryClass::D1_axis;
    if (mirror_diag) return SquareSymmetryClass::D1_diag;
    return SquareSymmetryClass::C1;
}

const char* to_string(SquareSymmetryClass c) {
    switch (c) {
        case SquareSymmetryClass::C1: return "C1";
        case SquareSymmetryClass::C2: return "C2";
        case SquareSymmetryClass::C4: return "C4";
        case SquareSymmetryClass::D1_axis: return "D1_axis";
        case SquareSymmetryClass::D1_diag: return "D1_diag";
        case SquareSymmetryClass::D2_axis: return "D2_axis";
        case SquareSymmetryClass::D2_diag: return "D2_diag";
        case SquareSymmetryClass::D4: return "D4";
    }
    return "?";
}

StitchChart symmetrize(const StitchChart& chart, std::span<const D4Element> elements) {
    std::set<Seg> h = chart.hseg(), v = chart.vseg();
    for (D4Element g : elements) {
        StitchChart image = apply_d4(g, chart);
        h.insert(image.hseg().begin(), image.hseg().end());
        v.insert(image.vseg().begin(), image.vseg().end());
    }
    return StitchChart(chart.size(), std::move(h), std::move(v));
}

}  // namespace biscornu
