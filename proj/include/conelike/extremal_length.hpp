#pragma once

#include <functional>

#include "conelike/target_polygon.hpp"

namespace conelike {

// One smooth boundary piece of a quadrilateral side/gap chain, parameterized
// at constant speed on [0,1].
struct ChainPiece {
  std::function<complex(double)> at;
  double len = 0;
};

struct BoundaryChain {
  std::vector<ChainPiece> pieces;
  double total_length() const;
  complex eval(double t) const;          // t in [0,1], arc-length fractions
  std::vector<double> joints() const;    // interior cumulative fractions
  BoundaryChain reversed() const;
};

// Conformal modulus of the curve family joining sideA to sideB across the
// quadrilateral (sideA, gap1, sideB, gap2) walked counterclockwise: computed
// as 1 / (Dirichlet energy of the 0/1 mixed boundary-value potential) on a
// transfinite quadratic finite-element mesh, Richardson-extrapolated across
// mesh levels until the estimated relative error is below tol.
double modulus_quadrilateral(const BoundaryChain& side_a, const BoundaryChain& gap1,
                             const BoundaryChain& side_b, const BoundaryChain& gap2,
                             double tol);

double ext_length(const CurvilinearPolygon& dom, EdgeLabel side_a, EdgeLabel side_b,
                  double tol = 1e-5);
double ext_length(const TargetPolygon& dom, EdgeLabel side_a, EdgeLabel side_b,
                  double tol = 1e-5);

}  // namespace conelike
