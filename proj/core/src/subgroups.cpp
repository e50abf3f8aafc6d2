#include "biscornu/subgroups.hpp"

#include <algorithm>
#include <bit>

namespace biscornu {

namespace {

// mul_table[a][b] = index of all_elements()[a] * all_elements()[b]
const auto& mul_table() {
    static const auto table = [] {
        std::array<std::array<int, 16>, 16> t{};
        const auto& els = all_elements();
        for (int a = 0; a < 16; ++a)
            for (int b = 0; b < 16; ++b)
                t[a][b] = element_index(element_mul(els[a], els[b]));
        return t;
    }();
    return table;
}

}  // namespace

std::vector<GroupElement> mask_elements(SubgroupMask mask) {
    std::vector<GroupElement> out;
    for (int i = 0; i < 16; ++i)
        if (mask & (1u << i)) out.push_back(all_elements()[i]);
    return out;
}

SubgroupMask elements_mask(std::span<const GroupElement> elements) {
    SubgroupMask mask = 0;
    for (GroupElement g : elements) mask |= static_cast<SubgroupMask>(1u << element_index(g));
    return mask;
}

bool is_subgroup(SubgroupMask mask) {
    if (!(mask & 1u)) return false;  // identity is index 0
    const auto& mul = mul_table();
    for (int a = 0; a < 16; ++a) {
        if (!(mask & (1u << a))) continue;
        for (int b = 0; b < 16; ++b) {
            if (!(mask & (1u << b))) continue;
            if (!(mask & (1u << mul[a][b]))) return false;
        }
    }
    return true;
}

std::vector<SubgroupMask> enumerate_subgroups() {
    std::vector<SubgroupMask> out;
    // Lagrange: only orders dividing 16 can work, but the plain scan is the
    // honest brute force and still fast.
    for (std::uint32_t mask = 1; mask < (1u << 16); mask += 2)
        if (is_subgroup(static_cast<SubgroupMask>(mask)))
            out.push_back(static_cast<SubgroupMask>(mask));
    return out;
}

SubgroupMask conjugate_subgroup(SubgroupMask mask, GroupElement g) {
    SubgroupMask out = 0;
    GroupElement ginv = element_inv(g);
    for (int i = 0; i < 16; ++i) {
        if (!(mask & (1u << i))) continue;
        GroupElement image = element_mul(element_mul(g, all_elements()[i]), ginv);
        out |= static_cast<SubgroupMask>(1u << element_index(image));
    }
    return out;
}

std::vector<std::vector<SubgroupMask>> subgroup_conjugacy_classes() {
    std::vector<SubgroupMask> subgroups = enumerate_subgroups();
    std::vector<bool> used(subgroups.size(), false);
    std::vector<std::vector<SubgroupMask>> classes;
    for (std::size_t i = 0; i < subgroups.size(); ++i) {
        if (used[i]) continue;
        std::vector<SubgroupMask> cls;
        for (GroupElement g : all_elements()) {
            SubgroupMask conj = conjugate_subgroup(subgroups[i], g);
            if (std::find(cls.begin(), cls.end(), conj) == cls.end()) cls.push_back(conj);
        }
        for (SubgroupMask m : cls) {
            auto it = std::find(subgroups.begin(), subgroups.end(), m);
            used[it - subgroups.begin()] = true;
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
        int oa = std::popcount(a.front()), ob = std::popcount(b.front());
        if (oa != ob) return oa < ob;
        return a.front() < b.front();
    });
    return classes;
}

SubgroupMask generated_subgroup(std::span<const GroupElement> generators) {
    SubgroupMask mask = 1u;  // identity
    const auto& mul = mul_table();
    for (GroupElement g : generators) mask |= static_cast<SubgroupMask>(1u << element_index(g));
    bool grew = true;
    while (grew) {
        grew = false;
        for (int a = 0; a < 16; ++a) {
            if (!(mask & (1u << a))) continue;
            for (int b = 0; b < 16; ++b) {
                if (!(mask & (1u << b))) continue;
                int c = mul[a][b];
                if (!(mask & (1u << c))) {
                    mask |= static_cast<SubgroupMask>(1u << c);
                    grew = true;
                }
            }
        }
    }
    return mask;
}

}  // namespace biscornu
