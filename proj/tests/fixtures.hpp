// Small hand-drawn graphs shared by the unit tests.
#pragma once

#include <string>
#include <vector>

#include "dimerforge/instance.hpp"
#include "dimerforge/planar_graph.hpp"

namespace fixture {

// a(0) b(1) c(2) d(3) counterclockwise around the unit square.
inline const char* const square = R"(v 0 0 0
v 1 1 0
v 2 1 1
v 3 0 1
e 0 0 1
e 1 1 2
e 2 2 3
e 3 3 0
)";

inline const char* const path3 = R"(v 0 0 0
v 1 1 0
v 2 2 0
e 0 0 1
e 1 1 2
)";

// Left (0) and right (2) on the axis y = 0, top (1) and bottom (3) mirrored.
inline const char* const diamond = R"(v 0 0 0
v 1 1 1
v 2 2 0
v 3 1 -1
e 0 0 1
e 1 1 2
e 2 2 3
e 3 3 0
)";

inline dimerforge::PlanarGraph graph(const char* text) { return dimerforge::load_graph(text); }

inline std::vector<std::size_t> indices(const dimerforge::PlanarGraph& g, const std::vector<dimerforge::Id>& ids) {
    return dimerforge::parse_id_list(g, ids);
}

}  // namespace fixture
