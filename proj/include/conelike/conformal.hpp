#pragma once

#include <memory>

#include "conelike/disk_map.hpp"
#include "conelike/sc_map.hpp"
#include "conelike/target_polygon.hpp"
#include "conelike/triangle_map.hpp"

namespace conelike {

// Cayley transform between the unit disk and the upper half-plane, fixing the
// boundary correspondence -1 <-> 0 shared by every map in this module.
inline complex cayley(complex w) { return kI * (1.0 + w) / (1.0 - w); }
inline complex cayley_inv(complex u) { return (u - kI) / (u + kI); }

// Conformal bijection of the upper half-plane onto a Gauss-image domain, with
// the first domain vertex (p2) mapped from 0. Three-sided domains ride the
// hypergeometric triangle map, prevertices (0, 1, infinity); the four- and
// five-sided ones solve the boundary integral equation on the disk and are
// conjugated through the Cayley transform after rotating the disk by `rot`,
// which parks the transform's pole mid-arc between the last and the first
// prevertex so the finite prevertices come out ascending.
struct HalfPlaneMap {
  CurvilinearPolygon domain;
  std::shared_ptr<const TriangleMap> tri;
  std::shared_ptr<const DiskMap> disk;
  complex rot = complex(1.0, 0.0);  // disk coordinate = rot * rotated one
  std::vector<double> prevertices;  // finite ones, in boundary order from p2's
  bool vertex_at_infinity = false;  // true on the triangle route (v2 at infinity)
  double accuracy = 0;
};

HalfPlaneMap solve_halfplane_map(const CurvilinearPolygon& domain, double tol = 1e-6);

complex hp_map(const HalfPlaneMap& m, complex z);
complex hp_map_deriv(const HalfPlaneMap& m, complex z);
complex hp_map_inverse(const HalfPlaneMap& m, complex u, double tol = 1e-10);

// Side lengths of the straight target whose conformal moduli match the
// domain's. l = |Ex| (0 when Ex is absent), m = |Est|; the residuals are the
// relative errors of the two modulus matches (vacuously 0 when not matched).
struct PentagonSolve {
  double l = 0;
  double m = 0;
  double res_est = 0;  // (Y1, Est) match
  double res_ey = 0;   // (Y1, Ey) match
};

// Match against moduli measured on the domain (solve_...) or supplied
// directly (match_...): C4 solves both equations, C2Plus matches (Y1, Ey)
// for m alone, C2Minus matches (Y1, Est) for l alone (then m = l + sqrt(2)).
PentagonSolve solve_pentagon_lengths(const CurvilinearPolygon& domain, double tol = 1e-6);
PentagonSolve match_pentagon_lengths(RegionLabel region, double ext_est, double ext_ey,
                                     double tol = 1e-6);

// Edge-preserving conformal map zeta of the Gauss-image domain onto its
// straight-edged target, realized on the unit disk: zeta = Psi o G^{-1} with
// G the disk-to-domain map and Psi the disk Schwarz-Christoffel map onto the
// target, sharing prevertices. `accuracy` is the largest misfit of the
// un-anchored prevertex images against their target vertices.
struct DevelopingMap {
  TetraParams params;
  RegionLabel region{};
  CurvilinearPolygon domain;
  TargetPolygon target;
  PentagonSolve lengths;
  HalfPlaneMap hp;
  SCMap sc;  // disk -> target
  double accuracy = 0;
};

DevelopingMap build_zeta(const TetraParams& p, double tol = 1e-6);

complex zeta(const DevelopingMap& m, complex u);
complex zeta_deriv(const DevelopingMap& m, complex u);

// Disk-side presentation shared with the surface integrator.
complex dev_G(const DevelopingMap& m, complex w);  // disk -> domain
complex dev_G_prime(const DevelopingMap& m, complex w);
complex dev_disk_of_omega(const DevelopingMap& m, complex u);  // G^{-1}

}  // namespace conelike
