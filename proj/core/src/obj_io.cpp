#include "biscornu/obj_io.hpp"

#include <cstdio>
#include <sstream>

namespace biscornu {

std::string embedding_obj(const EmbeddingResult& e) {
    std::ostringstream out;
    char buf[96];
    auto vec = [&buf](Vec3 v) {
        std::snprintf(buf, sizeof buf, "%.9g %.9g %.9g", v.x, v.y, v.z);
        return std::string(buf);
    };
    out << "# seam polyline (closed)\n";
    for (const Vec3& p : e.seamCurve) out << "# seam " << vec(p) << "\n";
    int base = 1;
    for (std::size_t s = 0; s < e.meshes.size(); ++s) {
        out << "o sheet" << s + 1 << "\n";
        for (const Vec3& v : e.meshes[s].vertices) out << "v " << vec(v) << "\n";
        for (const auto& t : e.meshes[s].triangles)
            out << "f " << base + t[0] << " " << base + t[1] << " " << base + t[2] << "\n";
        base += static_cast<int>(e.meshes[s].vertices.size());
    }
    return out.str();
}

}  // namespace biscornu
