#pragma once

#include <vector>

#include "conelike/tetra.hpp"

namespace conelike {

enum class ScPlane { HalfPlane, Disk };

// Schwarz-Christoffel data. `prevertices` lists the finite prevertices in boundary
// order with `exponents[k]` the integrand power there (interior angle / pi - 1);
// a half-plane map may put one vertex at infinity, which is never listed.
// Values are base + prefactor * integral of the factor product from base_point.
// Half-plane factors (w - x_k)^{e_k} take the branch continuous from above; disk
// factors (1 - w/w_k)^{e_k} stay principal, their real part being nonnegative.
struct SCMap {
  ScPlane plane = ScPlane::Disk;
  std::vector<complex> prevertices;
  std::vector<double> exponents;
  complex prefactor{1.0, 0.0};
  complex base_point;
  complex base;            // image of base_point
  complex base_to_center;  // disk only: cached raw integral base_point -> 0
};

// Half-plane map onto the Gauss-map image triangle of a Theta-region surface:
// prevertices (0, 1, infinity), openings (1/2, 1/4, 1/4) * pi, normalized to
// corners (0, i, -1) in the concave case and (0, 1, i) in the convex one.
SCMap make_triangle_sc(RegionLabel region);

// Disk map with the given boundary data, scaled and shifted so the first two
// prevertices land on image0 and image1. Residual misfit at the remaining
// prevertex images is the caller's accuracy certificate.
SCMap make_disk_sc(std::vector<complex> prevertices, std::vector<double> exponents,
                   complex image0, complex image1);

complex sc_derivative(const SCMap& m, complex w);
complex sc_evaluate(const SCMap& m, complex w, double tol = 1e-12);
complex sc_inverse(const SCMap& m, complex target, complex seed, double tol = 1e-12);

}  // namespace conelike
