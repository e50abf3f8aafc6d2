#pragma once

#include <array>
#include <span>
#include <vector>

#include "biscornu/chart.hpp"

namespace biscornu {

/// An isometry of the square: optional reflection across the vertical
/// mid-axis (applied first), then `rot` counterclockwise quarter-turns.
struct D4Element {
    int rot = 0;   // mod 4
    bool flip = false;
    bool operator==(const D4Element&) const = default;
};

constexpr D4Element kD4Identity{0, false};

D4Element d4_mul(D4Element a, D4Element b);  // a*b applies b first
D4Element d4_inv(D4Element a);
const std::array<D4Element, 8>& all_d4();

/// Image of the lattice point (x, y) on an n-grid. Pure integer arithmetic;
/// the rotation center is the grid center for every n.
std::pair<int, int> d4_point(D4Element g, int n, int x, int y);

StitchChart apply_d4(D4Element g, const StitchChart& chart);

/// All g with apply_d4(g, chart) == chart; always contains the identity.
std::vector<D4Element> stabilizer_square(const StitchChart& chart);

/// Conjugacy class of the chart's stabilizer in D4. Edge-axis and diagonal
/// mirrors are kept distinct because the offset seam treats them differently.
enum class SquareSymmetryClass { C1, C2, C4, D1_axis, D1_diag, D2_axis, D2_diag, D4 };

SquareSymmetryClass classify_square(const StitchChart& chart);
const char* to_string(SquareSymmetryClass c);

/// Orbit closure: union of g(chart) over the given elements. With a subgroup
/// argument the result is invariant under that subgroup.
StitchChart symmetrize(const StitchChart& chart, std::span<const D4Element> elements);

}  // namespace biscornu
