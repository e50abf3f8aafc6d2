#include <doctest.h>

#include "biscornu/obj_io.hpp"
#include "biscornu/svg.hpp"

using namespace biscornu;

TEST_CASE("chart svg is deterministic and well-formed") {
    StitchChart c = random_chart(5, 0.4, 77);
    std::string a = chart_svg(c);
    std::string b = chart_svg(c);
    CHECK(a == b);
    CHECK(a.find("<?xml") == 0);
    CHECK(a.find("<svg") != std::string::npos);
    CHECK(a.find("</svg>") != std::string::npos);
    CHECK(a.find("stroke-linecap=\"round\"") != std::string::npos);
}

TEST_CASE("svg segment count matches the chart") {
    StitchChart c(2, {{0, 0}, {1, 2}}, {{0, 1}});
    std::string svg = chart_svg(c);
    // Grid: (n+1)*2 = 6 lines; stitches: 3 more.
    std::size_t lines = 0, pos = 0;
    while ((pos = svg.find("<line", pos)) != std::string::npos) {
        ++lines;
        ++pos;
    }
    CHECK(lines == 6 + 3);
}

TEST_CASE("decoration svg renders both faces side by side") {
    BiscornuDecoration d{random_chart(4, 0.5, 5), random_chart(4, 0.5, 6)};
    std::string svg = decoration_svg(d);
    CHECK(svg == decoration_svg(d));
    // Two grid groups are present.
    std::size_t groups = 0, pos = 0;
    while ((pos = svg.find("stroke=\"#cccccc\"", pos)) != std::string::npos) {
        ++groups;
        ++pos;
    }
    CHECK(groups == 2);
}

TEST_CASE("obj export lists every vertex and face once with 9 digits") {
    EmbeddingResult e;
    TriMesh m;
    m.vertices = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0.123456789123}};
    m.triangles = {{0, 1, 2}};
    e.meshes.push_back(m);
    e.seamCurve = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0.123456789123}};
    std::string obj = embedding_obj(e);
    CHECK(obj == embedding_obj(e));
    CHECK(obj.find("v 0 0 0\n") != std::string::npos);
    CHECK(obj.find("f 1 2 3\n") != std::string::npos);
    CHECK(obj.find("0.123456789") != std::string::npos);       // 9 significant digits
    CHECK(obj.find("0.1234567891") == std::string::npos);      // and no more
    CHECK(obj.find("# seam 1 0 0\n") != std::string::npos);
}

TEST_CASE("obj face indices continue across sheets") {
    EmbeddingResult e;
    TriMesh m;
    m.vertices = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
    m.triangles = {{0, 1, 2}};
    e.meshes = {m, m};
    e.seamCurve = m.vertices;
    std::string obj = embedding_obj(e);
    CHECK(obj.find("f 4 5 6\n") != std::string::npos);
}
