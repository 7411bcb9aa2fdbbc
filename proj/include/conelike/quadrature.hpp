#pragma once

#include <functional>
#include <vector>

#include "conelike/numerics.hpp"

namespace conelike {

// Nodes/weights on [-1,1].
struct QuadRule {
  std::vector<double> x;
  std::vector<double> w;
};

// Plain Gauss-Legendre (weight 1). Cached, thread-safe.
const QuadRule& gauss_legendre(int n);

// Gauss-Jacobi for weight (1-x)^alpha (1+x)^beta, alpha,beta > -1. Cached, thread-safe.
const QuadRule& gauss_jacobi(int n, double alpha, double beta);

// Integral of f over the segment [a,b] in the complex plane, where the integrand
// behaves like |z-a|^expo_a near a and |z-b|^expo_b near b (0 = regular). The
// endpoint powers are absorbed by Jacobi weights, so f is sampled with the powers
// *included* (f is the full integrand); only node placement/weighting changes.
// Adaptive: compares n and 2n point rules, bisects the regular interior on failure.
complex integrate_segment(const std::function<complex(complex)>& f, complex a, complex b,
                          double expo_a, double expo_b, double tol, int base_n = 24);

}  // namespace conelike
