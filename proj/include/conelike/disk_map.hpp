#pragma once

#include <vector>

#include "conelike/gauss_domain.hpp"

namespace conelike {

// Numerical conformal map G of the unit disk onto a curvilinear polygon, built
// from the first-kind boundary integral equation for ln|f| with the density
// giving the boundary correspondence angle: theta'(tau) = -2 pi mu(tau). The
// boundary is parameterized by tau in [0,2pi), one equal interval per edge with
// a sigmoidal grading clustering nodes at the corners, so the composite density
// stays smooth there. Gauge: G(0) = z0 (conformal center) and the first corner
// (p2 for Gauss-image domains) maps from -1.
struct DiskMap {
  CurvilinearPolygon domain;
  complex z0;
  int n_nodes = 0;      // N, even
  double grading = 5.0; // sigmoid exponent p
  // Node data (tau_j = 2 pi (j+1/2)/N): boundary point, Cauchy weight, angle.
  std::vector<double> tau;
  std::vector<complex> z;
  std::vector<complex> eta;     // e^{i theta(tau_j)}
  std::vector<complex> weight;  // theta'_j eta_j h / (2 pi)
  std::vector<double> theta_nodes;
  // Fourier data of q = theta' - 1 (cos/sin coefficients, index 1..N/2).
  std::vector<double> fa, fb;
  double q_primitive_0 = 0;  // primitive of q at tau = 0, fixing theta(0) = pi
  // Corner data.
  std::vector<double> corner_tau;
  std::vector<complex> prevertices;
  double accuracy = 0;  // |G(0) - z0| self-test
};

// Exact boundary data at parameter tau: the boundary point with its first three
// tau-derivatives, and the correspondence angle with its first three derivatives.
struct BoundaryJet {
  complex z, zp, zpp, zppp;
  double th = 0, thp = 0, thpp = 0, thppp = 0;
};

DiskMap solve_disk_map(const CurvilinearPolygon& domain, int n = 1024, double grading = 5.0);

// Quadrature weights for the 2pi-periodic kernel ln(4 sin^2((t-s)/2)) on the
// shifted uniform grid of n nodes (n even): entry k applies to the node offset
// k steps from the evaluation parameter. Exact on trigonometric polynomials of
// degree < n/2.
std::vector<double> log_kernel_weights(int n);

double dm_theta(const DiskMap& m, double tau);
double dm_theta_deriv(const DiskMap& m, double tau, int order);  // order 1..3
BoundaryJet dm_boundary_jet(const DiskMap& m, double tau);

// tau of the point at `frac` along edge `e` (inverts the grading in closed form).
double dm_edge_tau(const DiskMap& m, int e, double frac);
// tau at which the correspondence angle equals theta (lifted to [pi, 3 pi)).
double dm_tau_of_theta(const DiskMap& m, double theta);

complex dm_G(const DiskMap& m, complex w);
complex dm_G_prime(const DiskMap& m, complex w);
complex dm_G_inverse(const DiskMap& m, complex u, double tol = 1e-10);

}  // namespace conelike
