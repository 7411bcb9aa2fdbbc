#pragma once

#include "conelike/gauss_domain.hpp"

namespace conelike {

// Conformal map of the closed upper half-plane onto a three-edged Gauss-image
// domain (Theta regions), with prevertices 0 -> p2, 1 -> v1, infinity -> v2.
// sigma(z) = z^alpha F(a+alpha,b+alpha;1+alpha;z)/F(a,b;c;z) maps the half-plane
// onto a circular-arc triangle with a straight corner of opening alpha*pi at 0;
// the Moebius frame M(u) = phase*(u-p2)/(u-p1) straightens the two domain edges
// through p2 into rays, so the full map is M^{-1}(kappa*sigma).
struct TriangleMap {
  TetraParams params;
  RegionLabel region{};
  CurvilinearPolygon domain;
  double alpha = 0, beta = 0, gamma = 0;  // corner angles / pi: psi0, psi1, psi2
  double a = 0, b = 0, c = 0;             // hypergeometric parameters
  complex p1, p2;
  complex phase;      // e^{i phi} aligning the image of Y1 with the positive reals
  double kappa = 0;   // scale matching sigma(1) to M(v1)
  double sigma1 = 0;  // sigma(1), gamma-function closed form (real positive)
  complex sigma_inf;  // sigma(infinity), gamma-function closed form
};

TriangleMap build_triangle_map(const TetraParams& p);

complex tri_sigma(const TriangleMap& m, complex z);
complex tri_sigma_prime(const TriangleMap& m, complex z);  // Wronskian closed form

// Half-plane -> domain evaluation, derivative, and damped-Newton inverse.
// tri_map accepts finite z only; the third vertex is the limit at infinity.
complex tri_map(const TriangleMap& m, complex z);
complex tri_map_deriv(const TriangleMap& m, complex z);
complex tri_map_inverse(const TriangleMap& m, complex u, double tol = 1e-13);

complex mobius_frame(const TriangleMap& m, complex u);          // M
complex mobius_frame_inverse(const TriangleMap& m, complex w);  // M^{-1}

}  // namespace conelike
