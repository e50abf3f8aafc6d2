#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "biscornu/decoration.hpp"

namespace biscornu {

/// Relation between the stored bottom chart and the stored top chart.
///
/// Because both charts live in the common top-view frame, EqualCharts means
/// the two faces are mirror images as stitched (opposite chirality seen from
/// outside), while AntidiagonalMirror (B = adiag(T)) means the two faces are
/// stitched identically.
enum class FaceRelation { Independent, EqualCharts, AntidiagonalMirror };

struct Recipe {
    SubgroupClass target;
    SquareSymmetryClass topClass;
    FaceRelation relation = FaceRelation::Independent;
    SquareSymmetryClass bottomClass = SquareSymmetryClass::C1;  // used when Independent
};

/// The construction used for each of the eleven classes.
Recipe recipe_for(SubgroupClass target);

/// Random chart whose D4 stabilizer classifies exactly to `target`
/// (built by orbit-closing a random chart, retried until exact).
StitchChart make_chart_with_class(int n, SquareSymmetryClass target, std::mt19937_64& rng);

/// Builds a decoration whose stabilizer classifies exactly to rec.target,
/// never to a proper supergroup. Throws ConstructionError after exhausting
/// its attempt budget. Requires n >= 6.
BiscornuDecoration build_from_recipe(const Recipe& rec, int n, std::uint64_t rngSeed);

/// One verified exemplar per subgroup class, in all_subgroup_classes() order.
std::vector<std::pair<BiscornuDecoration, SubgroupClass>> exemplar_library(int n = 8);

enum class SearchSpace { HitomezashiSeeds, RandomCharts };

/// Draws candidate decorations from the given space until one classifies
/// exactly to `target` or the budget is exhausted (NotFound -> nullopt).
/// Deterministic for fixed (rngSeed, budget).
std::optional<BiscornuDecoration> search(SubgroupClass target, int n, SearchSpace space,
                                         long budget, std::uint64_t rngSeed);

}  // namespace biscornu
