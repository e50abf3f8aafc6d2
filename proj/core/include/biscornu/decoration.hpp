#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "biscornu/chart.hpp"
#include "biscornu/group.hpp"
#include "biscornu/square_symmetry.hpp"

namespace biscornu {

/// An ordered pair of equal-size charts, one per face of the cushion.
///
/// Both charts live in a common top-view frame: the top chart as seen from
/// outside, the bottom chart as seen through from the same side. With that
/// convention the generator actions are
///     s: (T, B) -> (rot90(B), T)
///     r: (T, B) -> (adiag(B), adiag(T))
/// where rot90 is the CCW quarter-turn and adiag the antidiagonal mirror;
/// the handedness flip of viewing the hidden face from outside is absorbed
/// into r. These two maps reproduce the seam-vertex permutations of
/// seam_perm exactly, which is what pins them down.
struct BiscornuDecoration {
    BiscornuDecoration(StitchChart top, StitchChart bottom);
    StitchChart top;
    StitchChart bottom;
    int size() const { return top.size(); }
    bool operator==(const BiscornuDecoration&) const = default;
};

BiscornuDecoration act(GroupElement g, const BiscornuDecoration& d);

/// { g : act(g, d) = d }, in all_elements() order.
std::vector<GroupElement> stabilizer(const BiscornuDecoration& d);

/// The eleven conjugacy classes of subgroups: trivial, three of order 2,
/// three of order 4, three of order 8, and the full group.
enum class SubgroupClass { C1, Cs, C2_axial, C2_prime, C4, D2, C2v, S8cyc, D4, C4v, D4d };

constexpr int kSubgroupClassCount = 11;
const std::array<SubgroupClass, kSubgroupClassCount>& all_subgroup_classes();
const char* to_string(SubgroupClass c);

/// Classifies a subgroup by its element-type census; the eleven censuses are
/// pairwise distinct so this is total. Throws InvalidInput if the set is not
/// a subgroup.
SubgroupClass classify_subgroup(std::span<const GroupElement> subgroup);

/// Decoration file format (.bis): `n <int>`, a `top` line, chart body lines,
/// a `bottom` line, chart body lines. Comments and blank lines as in .chart.
BiscornuDecoration parse_decoration(std::string_view text);
std::string emit_decoration(const BiscornuDecoration& d);

}  // namespace biscornu
