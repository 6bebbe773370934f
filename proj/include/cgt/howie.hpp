#pragma once

// The presentation machine for projective planes: given a prime power q and
// a perfect difference set l mod m = q^2+q+1, build
//   < x_0..x_{m-1} | x_i x_{i+L} x_{i+L+qL}  (i in Z_m, L in l) >.

#include "cgt/diffset.hpp"
#include "cgt/presentation.hpp"

namespace cgt {

/// Full relator family; one relator per (i, lambda). Generator names x0..x{m-1}.
Presentation howie_presentation(int q, const DifferenceSet& d);

/// Same with one representative per cyclic-equivalence class of relators.
Presentation howie_presentation_deduped(int q, const DifferenceSet& d);

} // namespace cgt
