#pragma once

#include <string>

#include "biscornu/relax.hpp"

namespace biscornu {

/// Wavefront OBJ text for a relaxation result: vertices and triangles of all
/// sheets, plus the seam polyline as a comment block. Floats carry nine
/// significant digits; output is byte-deterministic.
std::string embedding_obj(const EmbeddingResult& e);

}  // namespace biscornu
