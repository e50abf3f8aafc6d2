#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "biscornu/vec.hpp"

namespace biscornu {

struct Line {
    double length;
};
/// Circular arc; sweep is in radians, positive turns left.
struct Arc {
    double radius;
    double sweep;
};
/// Zero-length heading change at a joint; lets piecewise-line boundaries
/// such as squares close without pretending tangent continuity.
struct Turn {
    double angle;
};

using BoundaryPiece = std::variant<Line, Arc, Turn>;

/// A planar boundary traced turtle-style from the origin heading +x.
/// Closed boundaries must return to the start within 1e-9.
class BoundarySpec {
public:
    explicit BoundarySpec(std::vector<BoundaryPiece> pieces, bool closed = true);

    bool closed() const { return closed_; }
    const std::vector<BoundaryPiece>& pieces() const { return pieces_; }
    std::size_t segment_count() const;  // Line/Arc pieces only

    double perimeter() const { return perimeter_; }

    /// Position at arclength s in [0, perimeter]. Requires a closed curve.
    Vec2 point_at(double s) const;

private:
    struct Station {  // start state of each piece
        Vec2 point;
        double heading;
        double arclength;
    };
    std::vector<BoundaryPiece> pieces_;
    std::vector<Station> stations_;
    bool closed_;
    double perimeter_;
};

BoundarySpec boundary_square(double side);
BoundarySpec boundary_stadium(double straight, double capRadius);
BoundarySpec boundary_disk(double radius);
/// The line-and-arc flat whose pita-form is the trisphericon: three sides of
/// length 2r and an edge of two quarter-circles (radius 2r) alternating with
/// two semicircles (radius r).
BoundarySpec boundary_trisphericon_flat(double r);

/// Seam correspondence between boundary arclengths.
struct SeamPairing {
    enum class Mode { DForm, Pita };
    Mode mode;
    double perimeter;
    double param;  // startOffset for DForm, foldPoint for Pita

    /// Partner arclength for s: DForm maps s to (startOffset + s) mod P on
    /// the other boundary; Pita maps t to (2*foldPoint - t) mod P.
    double partner(double s) const;
};

SeamPairing make_dform_pairing(const BoundarySpec& b1, const BoundarySpec& b2,
                               double startOffset);
SeamPairing make_pita_pairing(const BoundarySpec& b, double foldPoint);

/// Boundary file format (.bnd): one directive per line,
/// `line <len>` / `arc <radius> <sweep_deg>` / `turn <deg>`; `#` comments.
BoundarySpec parse_boundary(std::string_view text);
std::string emit_boundary(const BoundarySpec& b);

}  // namespace biscornu
