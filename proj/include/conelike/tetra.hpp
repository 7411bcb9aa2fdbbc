#pragma once

#include <optional>
#include <vector>

#include "conelike/numerics.hpp"

namespace conelike {

// Tolerance band on |3s^2+3t^2+2st-2| for detecting the flat-cone locus F.
inline constexpr double kTolF = 1e-10;

struct TetraParams {
  double s = 0, t = 0;
  double A = 0;  // sqrt(1 - s^2 - t^2)
};

enum class RegionLabel { ThetaPlus, F, ThetaMinus, C2Plus, C2Minus, C4 };
const char* region_name(RegionLabel r);

struct Tetrahedron {
  // v[0]=(s,0,-A/2), v[1]=(-s,0,-A/2): bottom edge along x.
  // v[2]=(0,t,A/2),  v[3]=(0,-t,A/2):  top edge along y.
  std::array<Vec3, 4> v;
};

struct Circle {
  complex c;
  double r = 0;
};

struct GammaCircles {
  Circle g1;   // boundary of D(2, sqrt(3))
  Circle g2;   // boundary of D(2i, sqrt(3))
  Circle gst;  // boundary of D((s+it)/A, 1/A)
};

struct KeyPoints {
  complex p1, p2;  // intersections of the two fixed circles, p1 inner, p2 outer
  complex x0, y0;  // outer axis crossings: 2+sqrt(3) and i(2+sqrt(3))
};

enum class CirclePosition { Inside, On, Outside };

struct CornerAngles {
  double psi0 = 0;                   // circle-pair angle at p2, arccos(1/3)
  std::optional<double> psi1, psi2;  // at the Gamma_1/Gamma_st and Gamma_2/Gamma_st
                                     // crossings; absent when the pair is disjoint
};

TetraParams make_params(double s, double t);
Tetrahedron tetra_vertices(const TetraParams& p);

// 3s^2+3t^2+2st - 2: negative on ThetaPlus, zero on F.
double flat_cone_form(double s, double t);

RegionLabel classify(const TetraParams& p, double tol_f = kTolF);

GammaCircles gamma_circles(const TetraParams& p);
KeyPoints key_points();

// tol < 0 selects the default band 1e-12 * radius.
CirclePosition circle_position(complex z, const Circle& c, double tol = -1.0);

// Classification from positions of p2, x0, y0 relative to Gamma_st alone;
// independent oracle for classify. The On band is tol_f wide.
RegionLabel classify_by_circles(const TetraParams& p, double tol_f = kTolF);

CornerAngles corner_angles(const TetraParams& p, double tol_f = kTolF);

// Scalar product of the two radius vectors at a Gamma_st crossing with a fixed
// circle; equals 2s/A on Gamma_1 and 2t/A on Gamma_2, hence never zero.
double orthogonality_invariant(const TetraParams& p, complex intersection,
                               double tol = 1e-9);

// Radical-line closed form; two points (symmetric pair), one (tangency), or none.
std::vector<complex> circle_intersections(const Circle& a, const Circle& b);

}  // namespace conelike
