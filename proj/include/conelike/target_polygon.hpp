#pragma once

#include <vector>

#include "conelike/gauss_domain.hpp"

namespace conelike {

// Straight-edged developing-map target: edge k runs vertices[k] -> vertices[k+1]
// counterclockwise, labeled like the Gauss-domain edge it receives.
struct TargetPolygon {
  RegionLabel region{};
  std::vector<complex> vertices;
  std::vector<EdgeLabel> labels;
};

complex target_point(const TargetPolygon& p, int edge, double frac);
double target_edge_length(const TargetPolygon& p, int edge);
std::vector<double> target_interior_angles(const TargetPolygon& p);
int edge_index(const TargetPolygon& p, EdgeLabel l);
int edge_index(const CurvilinearPolygon& p, EdgeLabel l);

// Right isosceles triangle with unit legs: Y1 and Y3 on the axes, Est the
// hypotenuse, mirrored between the two Theta orientations.
TargetPolygon triangle_target(RegionLabel region);

// Closed pentagon determined by |Y1| = 1, |Ex| = l, |Est| = m, with
// |Y3| = m*sqrt(2) - 1 and |Ey| = l - m + sqrt(2); admissible wedge
// l > 0, 1/sqrt(2) < m < l + sqrt(2).
TargetPolygon pentagon_target(double l, double m);

// Quadrilateral degenerations of the pentagon: C2Plus collapses Ex (unknown m),
// C2Minus collapses Ey (unknown l).
TargetPolygon quad_target(RegionLabel region, double len);

}  // namespace conelike
