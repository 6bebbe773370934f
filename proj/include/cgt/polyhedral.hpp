#pragma once

// Polyhedral presentations: a point set P carrying a basic bijection
// lambda: P -> L onto a line system, plus a set K of k-tuples subject to
//  (1) (x1,x2,...) in K for some continuation  iff  x2 is incident with
//      lambda(x1),
//  (2) K is closed under cyclic rotation,
//  (3) for given x1,x2 there is at most one continuation x3.
// The line system itself must form projective plane(s) on the declared
// point sets; violations of any of this are reported, never repaired.

#include <map>
#include <string>
#include <vector>

#include "cgt/plane.hpp"
#include "cgt/presentation.hpp"

namespace cgt {

struct PolyhedralPresentation {
    int q = 0;                                  // plane order
    std::vector<std::vector<int>> plane_points; // n disjoint point sets
    std::map<int, std::vector<int>> lambda;     // point -> line (point set)
    std::vector<std::vector<int>> tuples;       // K, all rotations included
    std::vector<std::string> point_labels;      // display labels by point id

    std::vector<int> all_points() const;
};

struct PolyhedralViolation {
    std::string kind; // "line-system", "condition-1", "condition-2", "condition-3", ...
    std::string detail;
};

struct PolyhedralReport {
    bool valid = false;
    std::vector<PolyhedralViolation> violations;
};

PolyhedralReport polyhedral_validate(const PolyhedralPresentation& pp);

/// One generator per point, one relator per cyclic class of K (dedup optional,
/// full tuple list otherwise). Throws domain_error if pp is invalid.
Presentation polyhedral_to_presentation(const PolyhedralPresentation& pp, bool dedup_cyclic = true);

/// The plane whose lines are the lambda images (valid for n = 1 data).
PlaneIncidence polyhedral_plane(const PolyhedralPresentation& pp);

} // namespace cgt
