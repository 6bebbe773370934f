#pragma once

// Finite projective plane incidence structures: from a perfect difference
// set (lines are the translates) or from an explicit line list.

#include <string>
#include <vector>

#include "cgt/diffset.hpp"
#include "cgt/graph.hpp"

namespace cgt {

struct PlaneIncidence {
    int q = 0;                           // order; lines have q+1 points
    int num_points = 0;                  // points are 0..num_points-1
    std::vector<std::vector<int>> lines; // each sorted
    std::vector<std::string> point_labels; // optional display labels

    bool on_line(int line, int point) const;
    /// Index of the unique common line of two distinct points, or -1.
    int line_through(int a, int b) const;
};

/// Plane from a perfect difference set: points Z_m, lines D + s for s in Z_m.
/// Throws domain_error if D is not perfect.
PlaneIncidence plane_from_difference_set(const DifferenceSet& d);

/// Plane from an explicit line list over points 0..num_points-1.
PlaneIncidence plane_from_lines(int q, int num_points, std::vector<std::vector<int>> lines);

struct PlaneAxiomReport {
    bool valid = false;
    std::vector<std::string> violations;
};

/// Exhaustive check of both projective plane axioms plus line sizes.
PlaneAxiomReport check_plane_axioms(const PlaneIncidence& plane);

/// Bipartite point/line incidence graph; vertices "p<i>" then "L<j>".
Graph incidence_graph(const PlaneIncidence& plane);

/// True iff each of the three 7-point parts of a plane of order 4, with its
/// induced 3-point lines, is a Fano plane. Parts must partition the points.
bool fano_partition_check(const PlaneIncidence& plane,
                          const std::vector<std::vector<int>>& parts);

} // namespace cgt
