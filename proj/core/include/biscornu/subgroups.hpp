#pragma once

#include <cstdint>
#include <vector>

#include "biscornu/decoration.hpp"
#include "biscornu/group.hpp"

namespace biscornu {

/// A subgroup encoded as a 16-bit membership mask over all_elements() order.
using SubgroupMask = std::uint16_t;

std::vector<GroupElement> mask_elements(SubgroupMask mask);
SubgroupMask elements_mask(std::span<const GroupElement> elements);

/// True when the masked set contains the identity and is closed under
/// multiplication (finiteness then gives inverses).
bool is_subgroup(SubgroupMask mask);

/// Every subgroup of the order-16 group, found by exhaustive subset scan.
std::vector<SubgroupMask> enumerate_subgroups();

/// g H g^-1 as a mask.
SubgroupMask conjugate_subgroup(SubgroupMask mask, GroupElement g);

/// Subgroups grouped into conjugacy classes; classes sorted by order then by
/// smallest mask, members sorted by mask.
std::vector<std::vector<SubgroupMask>> subgroup_conjugacy_classes();

/// Smallest subgroup containing the given elements.
SubgroupMask generated_subgroup(std::span<const GroupElement> generators);

}  // namespace biscornu
