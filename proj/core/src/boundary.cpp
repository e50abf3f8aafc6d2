#include "biscornu/boundary.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "biscornu/errors.hpp"

namespace biscornu {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kClosureTol = 1e-9;

struct Cursor {
    Vec2 p{0.0, 0.0};
    double heading = 0.0;
};

void advance(Cursor& c, const BoundaryPiece& piece) {
    if (const Line* line = std::get_if<Line>(&piece)) {
        c.p = c.p + Vec2{std::cos(c.heading), std::sin(c.heading)} * line->length;
    } else if (const Arc* arc = std::get_if<Arc>(&piece)) {
        double side = arc->sweep > 0 ? 1.0 : -1.0;
        Vec2 center = c.p + Vec2{-std::sin(c.heading), std::cos(c.heading)} * (arc->radius * side);
        double a0 = c.heading - side * kPi / 2.0;
        double a1 = a0 + arc->sweep;
        c.p = center + Vec2{std::cos(a1), std::sin(a1)} * arc->radius;
        c.heading += arc->sweep;
    } else {
        c.heading += std::get<Turn>(piece).angle;
    }
}

double piece_length(const BoundaryPiece& piece) {
    if (const Line* line = std::get_if<Line>(&piece)) return line->length;
    if (const Arc* arc = std::get_if<Arc>(&piece)) return arc->radius * std::fabs(arc->sweep);
    return 0.0;
}

}  // namespace

BoundarySpec::BoundarySpec(std::vector<BoundaryPiece> pieces, bool closed)
    : pieces_(std::move(pieces)), closed_(closed) {
    if (pieces_.empty()) throw InvalidInput("boundary needs at least one piece");
    Cursor c;
    double arclength = 0.0;
    for (const BoundaryPiece& piece : pieces_) {
        if (const Line* line = std::get_if<Line>(&piece)) {
            if (!(line->length > 0.0)) throw InvalidInput("line length must be > 0");
        } else if (const Arc* arc = std::get_if<Arc>(&piece)) {
            if (!(arc->radius > 0.0)) throw InvalidInput("arc radius must be > 0");
            if (arc->sweep == 0.0) throw InvalidInput("arc sweep must be nonzero");
        }
        stations_.push_back({c.p, c.heading, arclength});
        advance(c, piece);
        arclength += piece_length(piece);
    }
    perimeter_ = arclength;
    if (closed_) {
        if (!(perimeter_ > 0.0)) throw InvalidInput("closed boundary has zero length");
        if ((c.p - Vec2{0.0, 0.0}).norm() > kClosureTol)
            throw InvalidInput("boundary does not close (gap " +
                               std::to_string((c.p - Vec2{0.0, 0.0}).norm()) + ")");
    }
}

std::size_t BoundarySpec::segment_count() const {
    std::size_t count = 0;
    for (const BoundaryPiece& piece : pieces_)
        if (!std::holds_alternative<Turn>(piece)) ++count;
    return count;
}

Vec2 BoundarySpec::point_at(double s) const {
    if (!closed_) throw InvalidInput("point_at requires a closed boundary");
    if (s < 0.0 || s > perimeter_)
        throw InvalidInput("arclength " + std::to_string(s) + " outside [0, perimeter]");
    // Last piece whose start arclength is <= s; a Turn station already sits
    // at the joint position, so returning its start point is exact.
    std::size_t idx = 0;
    for (std::size_t i = 0; i < pieces_.size(); ++i)
        if (s >= stations_[i].arclength) idx = i;
    double local = s - stations_[idx].arclength;
    Cursor c{stations_[idx].point, stations_[idx].heading};
    const BoundaryPiece& piece = pieces_[idx];
    if (const Line* line = std::get_if<Line>(&piece)) {
        double t = std::min(local, line->length);
        return c.p + Vec2{std::cos(c.heading), std::sin(c.heading)} * t;
    }
    if (const Arc* arc = std::get_if<Arc>(&piece)) {
        double side = arc->sweep > 0 ? 1.0 : -1.0;
        Vec2 center = c.p + Vec2{-std::sin(c.heading), std::cos(c.heading)} * (arc->radius * side);
        double a0 = c.heading - side * kPi / 2.0;
        double swept = side * std::min(local / arc->radius, std::fabs(arc->sweep));
        double a = a0 + swept;
        return center + Vec2{std::cos(a), std::sin(a)} * arc->radius;
    }
    return c.p;  // Turn: zero length
}

BoundarySpec boundary_square(double side) {
    if (!(side > 0)) throw InvalidInput("square side must be > 0");
    std::vector<BoundaryPiece> pieces;
    for (int i = 0; i < 4; ++i) {
        pieces.push_back(Line{side});
        pieces.push_back(Turn{kPi / 2.0});
    }
    return BoundarySpec(std::move(pieces));
}

BoundarySpec boundary_stadium(double straight, double capRadius) {
    if (!(straight > 0) || !(capRadius > 0)) throw InvalidInput("stadium dimensions must be > 0");
    return BoundarySpec({Line{straight}, Arc{capRadius, kPi}, Line{straight}, Arc{capRadius, kPi}});
}

BoundarySpec boundary_disk(double radius) {
    if (!(radius > 0)) throw InvalidInput("disk radius must be > 0");
    return BoundarySpec({Arc{radius, 2.0 * kPi}});
}

BoundarySpec boundary_trisphericon_flat(double r) {
    if (!(r > 0)) throw InvalidInput("trisphericon radius must be > 0");
    // Three 2r sides stepping up, then a curved edge of two semicircles
    // (radius r) and two quarter-circles (radius 2r) back to the start.
    // The 30-degree joints make the return leg close exactly:
    // 2*sqrt(2)*cos(75deg) = sqrt(3)-1 cancels both coordinates.
    return BoundarySpec({
        Turn{kPi / 2.0},
        Line{2.0 * r},
        Turn{-kPi / 2.0},
        Line{2.0 * r},
        Turn{kPi / 2.0},
        Line{2.0 * r},
        Turn{kPi / 6.0},
        Arc{r, kPi},
        Turn{-kPi / 6.0},
        Arc{2.0 * r, -kPi / 2.0},
        Turn{kPi / 3.0},
        Arc{2.0 * r, kPi / 2.0},
        Arc{r, kPi},
    });
}

double SeamPairing::partner(double s) const {
    double t = (mode == Mode::DForm) ? (param + s) : (2.0 * param - s);
    t = std::fmod(t, perimeter);
    if (t < 0) t += perimeter;
    return t;
}

SeamPairing make_dform_pairing(const BoundarySpec& b1, const BoundarySpec& b2,
                               double startOffset) {
    if (!b1.closed() || !b2.closed()) throw InvalidInput("D-form pairing needs closed boundaries");
    double p1 = b1.perimeter(), p2 = b2.perimeter();
    if (std::fabs(p1 - p2) > 1e-6 * p1)
        throw InvalidInput("isoperimetric violation: perimeters " + std::to_string(p1) + " vs " +
                           std::to_string(p2));
    double offset = std::fmod(startOffset, p2);
    if (offset < 0) offset += p2;
    return {SeamPairing::Mode::DForm, p2, offset};
}

SeamPairing make_pita_pairing(const BoundarySpec& b, double foldPoint) {
    if (!b.closed()) throw InvalidInput("pita pairing needs a closed boundary");
    double fold = std::fmod(foldPoint, b.perimeter());
    if (fold < 0) fold += b.perimeter();
    return {SeamPairing::Mode::Pita, b.perimeter(), fold};
}

BoundarySpec parse_boundary(std::string_view text) {
    std::vector<BoundaryPiece> pieces;
    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string raw(text.substr(pos, nl == std::string_view::npos ? text.size() - pos
                                                                      : nl - pos));
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++lineno;
        if (std::size_t c = raw.find('#'); c != std::string::npos) raw.resize(c);
        std::istringstream in(raw);
        std::string tag;
        if (!(in >> tag)) continue;
        if (tag == "line") {
            double len;
            if (!(in >> len)) throw ParseError(lineno, "expected 'line <len>'");
            pieces.push_back(Line{len});
        } else if (tag == "arc") {
            double radius, sweepDeg;
            if (!(in >> radius >> sweepDeg))
                throw ParseError(lineno, "expected 'arc <radius> <sweep_deg>'");
            pieces.push_back(Arc{radius, sweepDeg * kPi / 180.0});
        } else if (tag == "turn") {
            double deg;
            if (!(in >> deg)) throw ParseError(lineno, "expected 'turn <deg>'");
            pieces.push_back(Turn{deg * kPi / 180.0});
        } else {
            throw ParseError(lineno, "unknown directive '" + tag + "'");
        }
        std::string rest;
        if (in >> rest) throw ParseError(lineno, "trailing content '" + rest + "'");
    }
    try {
        return BoundarySpec(std::move(pieces));
    } catch (const InvalidInput& e) {
        throw ParseError(lineno, e.what());
    }
}

std::string emit_boundary(const BoundarySpec& b) {
    std::ostringstream out;
    char buf[64];
    auto fmt = [&buf](double v) {
        std::snprintf(buf, sizeof buf, "%.9g", v);
        return std::string(buf);
    };
    for (const BoundaryPiece& piece : b.pieces()) {
        if (const Line* line = std::get_if<Line>(&piece))
            out << "line " << fmt(line->length) << "\n";
        else if (const Arc* arc = std::get_if<Arc>(&piece))
            out << "arc " << fmt(arc->radius) << " " << fmt(arc->sweep * 180.0 / kPi) << "\n";
        else
            out << "turn " << fmt(std::get<Turn>(piece).angle * 180.0 / kPi) << "\n";
    }
    return out.str();
}

}  // namespace biscornu
