#pragma once

#include "tc/graph.hpp"

#include <cstdint>

namespace tc {

embedded_graph k4();
embedded_graph octahedron();
embedded_graph icosahedron();
embedded_graph dodecahedron();

/* Seeded planar triangulation: grows K4 by random vertex insertions and
   diagonal flips, keeping every degree at most 8. Needs nverts >= 4. */
embedded_graph random_triangulation(std::uint64_t seed, int nverts);

} // namespace tc
