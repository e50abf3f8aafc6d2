#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace biscornu {

/// One unit stitch segment, addressed by its lower-left lattice endpoint.
struct Seg {
    int x = 0;
    int y = 0;
    auto operator<=>(const Seg&) const = default;
};

/// A square stitch chart on an n x n cell grid.
///
/// Horizontal segments run from (x, y) to (x+1, y) with 0 <= x < n, 0 <= y <= n.
/// Vertical segments run from (x, y) to (x, y+1) with 0 <= x <= n, 0 <= y < n.
/// The origin is the bottom-left lattice point, y grows upward. Charts are
/// immutable values.
class StitchChart {
public:
    StitchChart(int n, std::set<Seg> hseg, std::set<Seg> vseg);

    static StitchChart empty(int n) { return StitchChart(n, {}, {}); }
    static StitchChart full(int n);

    int size() const { return n_; }
    const std::set<Seg>& hseg() const { return hseg_; }
    const std::set<Seg>& vseg() const { return vseg_; }
    std::size_t segment_count() const { return hseg_.size() + vseg_.size(); }

    bool operator==(const StitchChart&) const = default;

private:
    int n_;
    std::set<Seg> hseg_;
    std::set<Seg> vseg_;
};

/// Row/column offset bits driving hitomezashi generation; both have length n+1.
struct SeedPair {
    std::vector<std::uint8_t> rowSeeds;
    std::vector<std::uint8_t> colSeeds;
};

/// Generates the hitomezashi chart for the given seeds.
///
/// Convention: row y holds the horizontal segment at x iff x == rowSeeds[y]
/// (mod 2); column x holds the vertical segment at y iff y == colSeeds[x]
/// (mod 2). A seed bit b means the running stitch in that row/column starts
/// at offset b.
StitchChart hitomezashi(const SeedPair& seeds, int n);

/// Each candidate segment is kept independently with probability `density`.
/// Deterministic for a fixed rngSeed; candidates are visited h-segments first,
/// both in (y then x outer-to-inner) lexicographic order.
StitchChart random_chart(int n, double density, std::uint64_t rngSeed);

/// Chart text format: first line `n <int>`, then one `h <x> <y>` or
/// `v <x> <y>` per segment. `#` starts a comment, blank lines are skipped,
/// segment order is irrelevant, duplicates are rejected.
StitchChart parse_chart(std::string_view text);
std::string emit_chart(const StitchChart& chart);

}  // namespace biscornu
