#pragma once

#include <vector>

#include "conelike/tetra.hpp"

namespace conelike {

enum class EdgeLabel { Y1, Y3, Est, Ex, Ey };
const char* edge_name(EdgeLabel l);

enum class CurveClass { Principal, Asymptotic };

// One boundary piece of the Gauss-image domain: an arc z(w) = c + r e^{iw} on a
// supporting circle, or an axis segment z(w) = w (real) / z(w) = iw (imaginary).
// w runs from w_begin to w_end along the counterclockwise boundary orientation
// (w_end < w_begin is a clockwise-parameterized arc).
struct BoundaryEdge {
  EdgeLabel label;
  CurveClass curve_class;
  bool is_arc = true;
  Circle circle;          // valid when is_arc
  bool axis_imag = false; // valid when !is_arc
  double w_begin = 0, w_end = 0;
  complex begin, end;
};

struct CurvilinearPolygon {
  RegionLabel region{};
  TetraParams params{};
  std::vector<BoundaryEdge> edges;   // ccw, interior on the left, starting at p2
  std::vector<complex> vertices;     // vertices[k] == edges[k].begin
  std::vector<double> interior_angles;
};

inline constexpr double kMinEdgeLength = 1e-8;

CurvilinearPolygon build_gauss_domain(const TetraParams& p, double tol_f = kTolF,
                                      double min_edge = kMinEdgeLength);

complex boundary_param(const BoundaryEdge& e, double w);

// Convenience interpolation along the edge: frac in [0,1] from begin to end.
complex boundary_point(const BoundaryEdge& e, double frac);
// Unit tangent along the boundary orientation at that point.
complex boundary_tangent(const BoundaryEdge& e, double frac);

double edge_length(const BoundaryEdge& e);

// Interior angle at each vertex, measured from the supporting-curve tangents.
std::vector<double> vertex_angles(const CurvilinearPolygon& poly);

// Winding-number membership test against a sampled boundary polyline.
bool contains(const CurvilinearPolygon& poly, complex z);

}  // namespace conelike
