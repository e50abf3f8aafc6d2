#pragma once

#include <array>
#include <string>

namespace biscornu {

/// Element of the order-16 biscornu symmetry group in normal form s^k r^j,
/// where s is the order-8 rotoreflection and r the order-2 non-axial
/// half-turn. Relations: s^8 = e, r^2 = e, r s r = s^-1.
struct GroupElement {
    int k = 0;  // mod 8
    int j = 0;  // mod 2
    bool operator==(const GroupElement&) const = default;
};

constexpr GroupElement kIdentity{0, 0};
constexpr GroupElement kRotoreflection{1, 0};  // s
constexpr GroupElement kNonAxialRotation{0, 1};  // r

GroupElement element_mul(GroupElement a, GroupElement b);  // a*b applies b first
GroupElement element_inv(GroupElement a);
const std::array<GroupElement, 16>& all_elements();

/// Stable index of an element in all_elements(): k + 8*j.
int element_index(GroupElement g);

/// Normal-form name: e, s, s2..s7, r, sr, s2r..s7r.
std::string element_name(GroupElement g);

enum class ElementType {
    Identity,
    S8Rotoreflection,  // s^k, k odd
    C4Rotation,        // s^2, s^6
    C2Axial,           // s^4
    C2Prime,           // s^k r, k even (non-axial half-turns)
    SigmaD,            // s^k r, k odd (mirror planes through the axis)
};

ElementType element_type(GroupElement g);
const char* to_string(ElementType t);

/// Whether the element exchanges the two faces of the cushion.
bool swaps_faces(GroupElement g);

/// Permutation of the eight seam vertices. Label order is 1,2,3,4 (corners
/// of the numbered square) then alpha,beta,gamma,delta (corners of the
/// offset square), stored at indices 0..7. image[i] is where label i moves.
struct SeamPermutation {
    std::array<int, 8> image{};
    bool operator==(const SeamPermutation&) const = default;
};

SeamPermutation perm_compose(const SeamPermutation& a, const SeamPermutation& b);  // b first
SeamPermutation perm_identity();

/// The seam-vertex permutation induced by g; a faithful homomorphism with
/// s acting as the 8-cycle (1 a 2 b 3 g 4 d) and r as (1a)(2d)(3g)(4b).
SeamPermutation seam_perm(GroupElement g);

/// Seam-vertex label for index 0..7: "1","2","3","4","a","b","g","d".
const char* seam_label(int index);

}  // namespace biscornu
