#include "biscornu/svg.hpp"

#include <sstream>

namespace biscornu {

namespace {

constexpr int kCell = 10;    // user units per chart cell
constexpr int kMargin = 10;
constexpr int kGap = 20;     // between the two faces of a decoration

// Chart y grows upward, SVG y grows downward.
void render_chart(std::ostringstream& out, const StitchChart& chart, int ox, int oy) {
    const int n = chart.size();
    out << "<g stroke=\"#cccccc\" stroke-width=\"1\">\n";
    for (int i = 0; i <= n; ++i) {
        out << "<line x1=\"" << ox << "\" y1=\"" << oy + i * kCell << "\" x2=\"" << ox + n * kCell
            << "\" y2=\"" << oy + i * kCell << "\"/>\n";
        out << "<line x1=\"" << ox + i * kCell << "\" y1=\"" << oy << "\" x2=\"" << ox + i * kCell
            << "\" y2=\"" << oy + n * kCell << "\"/>\n";
    }
    out << "</g>\n<g stroke=\"#000000\" stroke-width=\"2\" stroke-linecap=\"round\">\n";
    for (const Seg& s : chart.hseg()) {
        int y = oy + (n - s.y) * kCell;
        out << "<line x1=\"" << ox + s.x * kCell << "\" y1=\"" << y << "\" x2=\""
            << ox + (s.x + 1) * kCell << "\" y2=\"" << y << "\"/>\n";
    }
    for (const Seg& s : chart.vseg()) {
        int x = ox + s.x * kCell;
        out << "<line x1=\"" << x << "\" y1=\"" << oy + (n - s.y) * kCell << "\" x2=\"" << x
            << "\" y2=\"" << oy + (n - s.y - 1) * kCell << "\"/>\n";
    }
    out << "</g>\n";
}

std::string document(int width, int height, const std::string& body) {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
        << body << "</svg>\n";
    return out.str();
}

}  // namespace

std::string chart_svg(const StitchChart& chart) {
    const int n = chart.size();
    std::ostringstream body;
    render_chart(body, chart, kMargin, kMargin);
    int side = n * kCell + 2 * kMargin;
    return document(side, side, body.str());
}

std::string decoration_svg(const BiscornuDecoration& d) {
    const int n = d.size();
    std::ostringstream body;
    render_chart(body, d.top, kMargin, kMargin);
    render_chart(body, d.bottom, kMargin + n * kCell + kGap, kMargin);
    int width = 2 * n * kCell + 2 * kMargin + kGap;
    int height = n * kCell + 2 * kMargin;
    return document(width, height, body.str());
}

}  // namespace biscornu
