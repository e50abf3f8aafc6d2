#include "biscornu/chart.hpp"

#include <charconv>
#include <random>
#include <sstream>

#include "biscornu/errors.hpp"

namespace biscornu {

StitchChart::StitchChart(int n, std::set<Seg> hseg, std::set<Seg> vseg)
    : n_(n), hseg_(std::move(hseg)), vseg_(std::move(vseg)) {
    if (n < 1) throw InvalidInput("chart size must be >= 1, got " + std::to_string(n));
    for (const Seg& s : hseg_) {
        if (s.x < 0 || s.x >= n || s.y < 0 || s.y > n)
            throw InvalidInput("h-segment (" + std::to_string(s.x) + "," + std::to_string(s.y) +
                               ") out of range for n=" + std::to_string(n));
    }
    for (const Seg& s : vseg_) {
        if (s.x < 0 || s.x > n || s.y < 0 || s.y >= n)
            throw InvalidInput("v-segment (" + std::to_string(s.x) + "," + std::to_string(s.y) +
                               ") out of range for n=" + std::to_string(n));
    }
}

StitchChart StitchChart::full(int n) {
    std::set<Seg> h, v;
    for (int y = 0; y <= n; ++y)
        for (int x = 0; x < n; ++x) h.insert({x, y});
    for (int x = 0; x <= n; ++x)
        for (int y = 0; y < n; ++y) v.insert({x, y});
    return StitchChart(n, std::move(h), std::move(v));
}

StitchChart hitomezashi(const SeedPair& seeds, int n) {
    if (n < 1) throw InvalidInput("hitomezashi needs n >= 1");
    if (seeds.rowSeeds.size() != static_cast<std::size_t>(n + 1) ||
        seeds.colSeeds.size() != static_cast<std::size_t>(n + 1))
        throw InvalidInput("seed length must be n+1 = " + std::to_string(n + 1));
    std::set<Seg> h, v;
    for (int y = 0; y <= n; ++y) {
        const int offset = seeds.rowSeeds[y] & 1;
        for (int x = offset; x < n; x += 2) h.insert({x, y});
    }
    for (int x = 0; x <= n; ++x) {
        const int offset = seeds.colSeeds[x] & 1;
        for (int y = offset; y < n; y += 2) v.insert({x, y});
    }
    return StitchChart(n, std::move(h), std::move(v));
}

namespace {

// Uniform double in [0,1) from the top 53 bits; keeps output identical across
// standard library implementations, unlike std::uniform_real_distribution.
double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

StitchChart random_chart(int n, double density, std::uint64_t rngSeed) {
    if (n < 1) throw InvalidInput("random_chart needs n >= 1");
    if (!(density >= 0.0 && density <= 1.0))
        throw InvalidInput("density must lie in [0,1], got " + std::to_string(density));
    std::mt19937_64 rng(rngSeed);
    std::set<Seg> h, v;
    for (int y = 0; y <= n; ++y)
        for (int x = 0; x < n; ++x)
            if (next_unit(rng) < density) h.insert({x, y});
    for (int x = 0; x <= n; ++x)
        for (int y = 0; y < n; ++y)
            if (next_unit(rng) < density) v.insert({x, y});
    return StitchChart(n, std::move(h), std::move(v));
}

namespace {

std::string_view strip(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

int parse_int(std::string_view tok, int lineno, const char* what) {
    int value = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw ParseError(lineno, std::string("expected integer ") + what + ", got '" +
                                     std::string(tok) + "'");
    return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t b = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
        if (i > b) out.push_back(s.substr(b, i - b));
    }
    return out;
}

}  // namespace

StitchChart parse_chart(std::string_view text) {
    int n = -1;
    std::set<Seg> h, v;
    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos
                                                                             : nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++lineno;
        if (std::size_t c = raw.find('#'); c != std::string_view::npos) raw = raw.substr(0, c);
        std::string_view line = strip(raw);
        if (line.empty()) continue;

        auto toks = split_ws(line);
        if (n < 0) {
            if (toks.size() != 2 || toks[0] != "n")
                throw ParseError(lineno, "expected header 'n <int>'");
            n = parse_int(toks[1], lineno, "n");
            if (n < 1) throw ParseError(lineno, "n must be >= 1");
            continue;
        }
        if (toks.size() != 3 || (toks[0] != "h" && toks[0] != "v"))
            throw ParseError(lineno, "expected 'h <x> <y>' or 'v <x> <y>'");
        Seg s{parse_int(toks[1], lineno, "x"), parse_int(toks[2], lineno, "y")};
        if (toks[0] == "h") {
            if (s.x < 0 || s.x >= n || s.y < 0 || s.y > n)
                throw ParseError(lineno, "h-segment out of range (need 0<=x<n, 0<=y<=n)");
            if (!h.insert(s).second) throw ParseError(lineno, "duplicate h-segment");
        } else {
            if (s.x < 0 || s.x > n || s.y < 0 || s.y >= n)
                throw ParseError(lineno, "v-segment out of range (need 0<=x<=n, 0<=y<n)");
            if (!v.insert(s).second) throw ParseError(lineno, "duplicate v-segment");
        }
    }
    if (n < 0) throw ParseError(lineno, "missing 'n <int>' header");
    return StitchChart(n, std::move(h), std::move(v));
}

std::string emit_chart(const StitchChart& chart) {
    std::ostringstream out;
    out << "n " << chart.size() << "\n";
    for (const Seg& s : chart.hseg()) out << "h " << s.x << " " << s.y << "\n";
    for (const Seg& s : chart.vseg()) out << "v " << s.x << " " << s.y << "\n";
    return out.str();
}

}  // namespace biscornu
