#include "biscornu/group.hpp"

namespace biscornu {

GroupElement element_mul(GroupElement a, GroupElement b) {
    // s^a r s^b = s^(a-b) r
    int k = a.j ? (a.k - b.k) : (a.k + b.k);
    return {((k % 8) + 8) % 8, (a.j + b.j) % 2};
}

GroupElement element_inv(GroupElement a) {
    if (a.j) return a;  // (s^k r)^2 = e
    return {(8 - a.k) % 8, 0};
}

const std::array<GroupElement, 16>& all_elements() {
    static const std::array<GroupElement, 16> elements = [] {
        std::array<GroupElement, 16> out{};
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 8; ++k) out[k + 8 * j] = {k, j};
        return out;
    }();
    return elements;
}

int element_index(GroupElement g) { return g.k + 8 * g.j; }

std::string element_name(GroupElement g) {
    std::string name;
    if (g.k == 1)
        name = "s";
    else if (g.k > 1)
        name = "s" + std::to_string(g.k);
    if (g.j) name += "r";
    if (name.empty()) name = "e";
    return name;
}

ElementType element_type(GroupElement g) {
    if (g.j == 0) {
        if (g.k == 0) return ElementType::Identity;
        if (g.k % 2 == 1) return ElementType::S8Rotoreflection;
        if (g.k == 4) return ElementType::C2Axial;
        return ElementType::C4Rotation;
    }
    return (g.k % 2 == 0) ? ElementType::C2Prime : ElementType::SigmaD;
}

const char* to_string(ElementType t) {
    switch (t) {
        case ElementType::Identity: return "Identity";
        case ElementType::S8Rotoreflection: return "S8Rotoreflection";
        case ElementType::C4Rotation: return "C4Rotation";
        case ElementType::C2Axial: return "C2Axial";
        case ElementType::C2Prime: return "C2Prime";
        case ElementType::SigmaD: return "SigmaD";
    }
    return "?";
}

bool swaps_faces(GroupElement g) { return (g.k + g.j) % 2 == 1; }

SeamPermutation perm_identity() {
    SeamPermutation p;
    for (int i = 0; i < 8; ++i) p.image[i] = i;
    return p;
}

SeamPermutation perm_compose(const SeamPermutation& a, const SeamPermutation& b) {
    SeamPermutation out;
    for (int i = 0; i < 8; ++i) out.image[i] = a.image[b.image[i]];
    return out;
}

namespace {

// Label indices: 1,2,3,4 -> 0..3 and alpha,beta,gamma,delta -> 4..7.
// Generator images transcribed from the label movements under the
// rotoreflection and the non-axial half-turn.
const SeamPermutation kPermS = [] {
    SeamPermutation p;
    // 8-cycle (1 a 2 b 3 g 4 d)
    p.image = {4, 5, 6, 7, 1, 2, 3, 0};
    return p;
}();

const SeamPermutation kPermR = [] {
    SeamPermutation p;
    // (1 a)(2 d)(3 g)(4 b)
    p.image = {4, 7, 6, 5, 0, 3, 2, 1};
    return p;
}();

}  // namespace

SeamPermutation seam_perm(GroupElement g) {
    SeamPermutation p = perm_identity();
    if (g.j) p = kPermR;
    for (int i = 0; i < g.k; ++i) p = perm_compose(kPermS, p);
    return p;
}

const char* seam_label(int index) {
    static const char* names[8] = {"1", "2", "3", "4", "a", "b", "g", "d"};
    return names[index];
}

}  // namespace biscornu
