#pragma once

// Star graph of a presentation: vertices are the generator letters and their
// inverses; for each cyclic two-letter subword u v occurring in the
// symmetrized relator set (relators, inverses, all rotations) there is an
// edge joining u^-1 and v, occurrence multiplicity collapsed.

#include "cgt/graph.hpp"
#include "cgt/presentation.hpp"

namespace cgt {

Graph star_graph(const Presentation& p);

} // namespace cgt
