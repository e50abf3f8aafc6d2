#include <doctest.h>

#include <map>
#include <set>

#include "biscornu/group.hpp"

using namespace biscornu;

namespace {

SeamPermutation perm_pow(const SeamPermutation& p, int k) {
    SeamPermutation out = perm_identity();
    for (int i = 0; i < k; ++i) out = perm_compose(p, out);
    return out;
}

}  // namespace

TEST_CASE("the group has exactly 16 distinct elements") {
    std::set<std::pair<int, int>> seen;
    for (GroupElement g : all_elements()) seen.insert({g.k, g.j});
    CHECK(seen.size() == 16);
}

TEST_CASE("defining relations hold") {
    GroupElement s = kRotoreflection, r = kNonAxialRotation;
    GroupElement acc = kIdentity;
    for (int i = 0; i < 8; ++i) acc = element_mul(s, acc);
    CHECK(acc == kIdentity);                                   // s^8 = e
    CHECK(element_mul(r, r) == kIdentity);                     // r^2 = e
    GroupElement rsr = element_mul(element_mul(r, s), r);
    CHECK(rsr == element_inv(s));                              // r s r = s^-1
    CHECK(rsr == GroupElement{7, 0});
}

TEST_CASE("group axioms over all elements") {
    for (GroupElement a : all_elements()) {
        CHECK(element_mul(a, kIdentity) == a);
        CHECK(element_mul(kIdentity, a) == a);
        CHECK(element_mul(a, element_inv(a)) == kIdentity);
        CHECK(element_mul(element_inv(a), a) == kIdentity);
        for (GroupElement b : all_elements())
            for (GroupElement c : all_elements())
                CHECK(element_mul(element_mul(a, b), c) == element_mul(a, element_mul(b, c)));
    }
}

TEST_CASE("s*s = s^2 and reflections are involutions") {
    CHECK(element_mul(kRotoreflection, kRotoreflection) == GroupElement{2, 0});
    GroupElement s3r{3, 1};
    CHECK(element_inv(s3r) == s3r);
    CHECK(element_mul(s3r, s3r) == kIdentity);
    // Oracle: the seam permutation of s3r composed with itself is the identity.
    CHECK(perm_compose(seam_perm(s3r), seam_perm(s3r)) == perm_identity());
}

TEST_CASE("element types census is 1/4/2/1/4/4") {
    std::map<ElementType, int> census;
    for (GroupElement g : all_elements()) ++census[element_type(g)];
    CHECK(census[ElementType::Identity] == 1);
    CHECK(census[ElementType::S8Rotoreflection] == 4);
    CHECK(census[ElementType::C4Rotation] == 2);
    CHECK(census[ElementType::C2Axial] == 1);
    CHECK(census[ElementType::C2Prime] == 4);
    CHECK(census[ElementType::SigmaD] == 4);
}

TEST_CASE("generator types match their geometric roles") {
    CHECK(element_type(kRotoreflection) == ElementType::S8Rotoreflection);
    CHECK(element_type(kNonAxialRotation) == ElementType::C2Prime);
    CHECK(element_type(GroupElement{4, 0}) == ElementType::C2Axial);
    CHECK(element_type(GroupElement{1, 1}) == ElementType::SigmaD);
}

TEST_CASE("element names follow the normal form") {
    CHECK(element_name(kIdentity) == "e");
    CHECK(element_name(kRotoreflection) == "s");
    CHECK(element_name(GroupElement{7, 0}) == "s7");
    CHECK(element_name(kNonAxialRotation) == "r");
    CHECK(element_name(GroupElement{1, 1}) == "sr");
    CHECK(element_name(GroupElement{4, 1}) == "s4r");
}

TEST_CASE("seam_perm(s) is the 8-cycle (1 a 2 b 3 g 4 d)") {
    SeamPermutation p = seam_perm(kRotoreflection);
    // Order on labels: 1,2,3,4 -> 0..3, a,b,g,d -> 4..7.
    CHECK(p.image == std::array<int, 8>{4, 5, 6, 7, 1, 2, 3, 0});
}

TEST_CASE("seam_perm(r) is (1a)(2d)(3g)(4b)") {
    SeamPermutation p = seam_perm(kNonAxialRotation);
    CHECK(p.image == std::array<int, 8>{4, 7, 6, 5, 0, 3, 2, 1});
}

TEST_CASE("seam_perm(s^4) equals the 8-cycle composed four times") {
    SeamPermutation expected = perm_pow(seam_perm(kRotoreflection), 4);
    CHECK(seam_perm(GroupElement{4, 0}) == expected);
    // The half-turn pairs opposite corners: (1 3)(2 4)(a g)(b d).
    CHECK(expected.image == std::array<int, 8>{2, 3, 0, 1, 6, 7, 4, 5});
}

TEST_CASE("seam_perm is a faithful homomorphism over all 256 products") {
    std::set<std::array<int, 8>> images;
    for (GroupElement g : all_elements()) images.insert(seam_perm(g).image);
    CHECK(images.size() == 16);
    for (GroupElement a : all_elements())
        for (GroupElement b : all_elements())
            CHECK(seam_perm(element_mul(a, b)) ==
                  perm_compose(seam_perm(a), seam_perm(b)));
}

TEST_CASE("face-swapping elements are exactly the rotoreflections and C2 primes") {
    for (GroupElement g : all_elements()) {
        ElementType t = element_type(g);
        bool swap = t == ElementType::S8Rotoreflection || t == ElementType::C2Prime;
        CHECK(swaps_faces(g) == swap);
    }
}
