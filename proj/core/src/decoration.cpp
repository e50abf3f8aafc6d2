#include "biscornu/decoration.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "biscornu/errors.hpp"

namespace biscornu {

BiscornuDecoration::BiscornuDecoration(StitchChart t, StitchChart b)
    : top(std::move(t)), bottom(std::move(b)) {
    if (top.size() != bottom.size())
        throw InvalidInput("decoration faces must have equal size, got " +
                           std::to_string(top.size()) + " and " + std::to_string(bottom.size()));
}

namespace {

const D4Element kRot90{1, false};
const D4Element kAntidiag{1, true};  // (x,y) -> (n-y, n-x)

BiscornuDecoration act_s(const BiscornuDecoration& d) {
    return {apply_d4(kRot90, d.bottom), d.top};
}

BiscornuDecoration act_r(const BiscornuDecoration& d) {
    return {apply_d4(kAntidiag, d.bottom), apply_d4(kAntidiag, d.top)};
}

}  // namespace

BiscornuDecoration act(GroupElement g, const BiscornuDecoration& d) {
    BiscornuDecoration out = d;
    if (g.j) out = act_r(out);
    for (int i = 0; i < g.k; ++i) out = act_s(out);
    return out;
}

std::vector<GroupElement> stabilizer(const BiscornuDecoration& d) {
    std::vector<GroupElement> stab;
    for (GroupElement g : all_elements())
        if (act(g, d) == d) stab.push_back(g);
    return stab;
}

const std::array<SubgroupClass, kSubgroupClassCount>& all_subgroup_classes() {
    static const std::array<SubgroupClass, kSubgroupClassCount> classes = {
        SubgroupClass::C1,  SubgroupClass::Cs,    SubgroupClass::C2_axial,
        SubgroupClass::C2_prime, SubgroupClass::C4, SubgroupClass::D2,
        SubgroupClass::C2v, SubgroupClass::S8cyc, SubgroupClass::D4,
        SubgroupClass::C4v, SubgroupClass::D4d,
    };
    return classes;
}

const char* to_string(SubgroupClass c) {
    switch (c) {
        case SubgroupClass::C1: return "C1";
        case SubgroupClass::Cs: return "Cs";
        case SubgroupClass::C2_axial: return "C2_axial";
        case SubgroupClass::C2_prime: return "C2_prime";
        case SubgroupClass::C4: return "C4";
        case SubgroupClass::D2: return "D2";
        case SubgroupClass::C2v: return "C2v";
        case SubgroupClass::S8cyc: return "S8cyc";
        case SubgroupClass::D4: return "D4";
        case SubgroupClass::C4v: return "C4v";
        case SubgroupClass::D4d: return "D4d";
    }
    return "?";
}

SubgroupClass classify_subgroup(std::span<const GroupElement> subgroup) {
    bool member[16] = {};
    for (GroupElement g : subgroup) {
        if (member[element_index(g)]) throw InvalidInput("duplicate element in subgroup");
        member[element_index(g)] = true;
    }
    if (!member[element_index(kIdentity)]) throw InvalidInput("subgroup must contain identity");
    for (GroupElement a : subgroup)
        for (GroupElement b : subgroup)
            if (!member[element_index(element_mul(a, b))])
                throw InvalidInput("set is not closed under multiplication");

    // Census in type order: Identity, S8, C4, C2axial, C2', sigma_d.
    std::array<int, 6> census{};
    for (GroupElement g : subgroup) ++census[static_cast<int>(element_type(g))];

    struct Signature {
        std::array<int, 6> census;
        SubgroupClass label;
    };
    static const Signature kTable[] = {
        {{1, 0, 0, 0, 0, 0}, SubgroupClass::C1},
        {{1, 0, 0, 0, 0, 1}, SubgroupClass::Cs},
        {{1, 0, 0, 1, 0, 0}, SubgroupClass::C2_axial},
        {{1, 0, 0, 0, 1, 0}, SubgroupClass::C2_prime},
        {{1, 0, 2, 1, 0, 0}, SubgroupClass::C4},
        {{1, 0, 0, 1, 2, 0}, SubgroupClass::D2},
        {{1, 0, 0, 1, 0, 2}, SubgroupClass::C2v},
        {{1, 4, 2, 1, 0, 0}, SubgroupClass::S8cyc},
        {{1, 0, 2, 1, 4, 0}, SubgroupClass::D4},
        {{1, 0, 2, 1, 0, 4}, SubgroupClass::C4v},
        {{1, 4, 2, 1, 4, 4}, SubgroupClass::D4d},
    };
    for (const Signature& row : kTable)
        if (row.census == census) return row.label;
    throw InvalidInput("element-type census matches no subgroup class");
}

BiscornuDecoration parse_decoration(std::string_view text) {
    // Split into header, top body and bottom body, then reuse the chart parser.
    int n = -1;
    std::ostringstream top_body, bottom_body;
    int section = 0;  // 0 = header, 1 = top, 2 = bottom
    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string raw(text.substr(pos, nl == std::string_view::npos ? text.size() - pos
                                                                      : nl - pos));
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++lineno;
        std::string stripped = raw;
        if (std::size_t c = stripped.find('#'); c != std::string::npos) stripped.resize(c);
        std::size_t b = stripped.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        std::size_t e = stripped.find_last_not_of(" \t\r");
        std::string line = stripped.substr(b, e - b + 1);

        if (section == 0) {
            std::istringstream hdr(line);
            std::string tag;
            hdr >> tag;
            if (tag != "n") throw ParseError(lineno, "expected header 'n <int>'");
            if (!(hdr >> n) || n < 1) throw ParseError(lineno, "bad chart size");
            std::string rest;
            if (hdr >> rest) throw ParseError(lineno, "trailing content after size");
            section = -1;  // header read; expect 'top' next
            continue;
        }
        if (line == "top") {
            if (section != -1) throw ParseError(lineno, "unexpected 'top' section");
            section = 1;
            continue;
        }
        if (line == "bottom") {
            if (section != 1) throw ParseError(lineno, "unexpected 'bottom' section");
            section = 2;
            continue;
        }
        if (section == 1)
            top_body << line << "\n";
        else if (section == 2)
            bottom_body << line << "\n";
        else
            throw ParseError(lineno, "content outside top/bottom sections");
    }
    if (n < 1) throw ParseError(lineno, "missing 'n <int>' header");
    if (section != 2) throw ParseError(lineno, "missing top/bottom sections");
    std::string header = "n " + std::to_string(n) + "\n";
    return BiscornuDecoration(parse_chart(header + top_body.str()),
                              parse_chart(header + bottom_body.str()));
}

std::string emit_decoration(const BiscornuDecoration& d) {
    std::ostringstream out;
    out << "n " << d.size() << "\n";
    auto body = [&](const StitchChart& chart) {
        std::string text = emit_chart(chart);
        out << text.substr(text.find('\n') + 1);  // drop the n-header line
    };
    out << "top\n";
    body(d.top);
    out << "bottom\n";
    body(d.bottom);
    return out.str();
}

}  // namespace biscornu
