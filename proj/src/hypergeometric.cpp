#include "conelike/hypergeometric.hpp"

#include <cmath>

#include "conelike/quadrature.hpp"

namespace conelike {

double arg_from_below(complex w) {
  if (w.imag() == 0.0 && w.real() < 0.0) return -kPi;
  return std::arg(w);
}

complex pow_from_below(complex w, double p) {
  if (w == complex(0.0)) return p > 0.0 ? complex(0.0) : complex(HUGE_VAL, 0.0);
  const double lr = std::log(std::abs(w)), th = arg_from_below(w);
  return std::exp(complex(p * lr, p * th));
}

double arg_from_above(complex w) {
  if (w.imag() == 0.0 && w.real() < 0.0) return kPi;
  return std::arg(w);
}

complex pow_from_above(complex w, double p) {
  if (w == complex(0.0)) return p > 0.0 ? complex(0.0) : complex(HUGE_VAL, 0.0);
  const double lr = std::log(std::abs(w)), th = arg_from_above(w);
  return std::exp(complex(p * lr, p * th));
}

namespace {

constexpr int kMaxTerms = 700;

double gam(double x) { return std::tgamma(x); }

bool near_integer(double x, double tol = 1e-9) {
  return std::abs(x - std::round(x)) < tol;
}

// Maclaurin series; used with |z| <= ~0.65 where the term ratio stays geometric.
complex series(double a, double b, double c, complex z) {
  complex term = 1.0, sum = 1.0;
  for (int n = 0; n < kMaxTerms; ++n) {
    term *= (a + n) * (b + n) / ((c + n) * (1.0 + n)) * z;
    sum += term;
    if (std::abs(term) <= 1e-17 * (1.0 + std::abs(sum))) return sum;
  }
  fail(Errc::SolverDiverged, "hypergeometric series did not converge");
}

// Linear-transformation formula around z = 1; needs c-a-b nonintegral.
complex connect_at_one(double a, double b, double c, complex z) {
  const double e = c - a - b;
  const complex u = 1.0 - z;
  const complex t1 = (gam(c) * gam(e)) / (gam(c - a) * gam(c - b)) * series(a, b, 1.0 - e, u);
  const complex t2 = (gam(c) * gam(-e)) / (gam(a) * gam(b)) * pow_from_below(u, e) *
                     series(c - a, c - b, 1.0 + e, u);
  return t1 + t2;
}

// Linear-transformation formula around z = infinity; needs b-a nonintegral.
complex connect_at_inf(double a, double b, double c, complex z) {
  const complex u = 1.0 / z;
  const complex t1 = (gam(c) * gam(b - a)) / (gam(b) * gam(c - a)) *
                     pow_from_below(-z, -a) * series(a, 1.0 - c + a, 1.0 - b + a, u);
  const complex t2 = (gam(c) * gam(a - b)) / (gam(a) * gam(c - b)) *
                     pow_from_below(-z, -b) * series(b, 1.0 - c + b, 1.0 - a + b, u);
  return t1 + t2;
}

// Euler integral, valid for c > b > 0 and z off [1,inf): the Jacobi weight
// (1-x)^{c-b-1} (1+x)^{b-1} absorbs both endpoint powers after tau = (1+x)/2.
complex euler_integral(double a, double b, double c, complex z) {
  if (!(b > 0.0 && c - b > 0.0)) fail(Errc::SolverDiverged, "Euler integral needs c > b > 0");
  const double front = gam(c) / (gam(b) * gam(c - b)) * std::pow(2.0, 1.0 - c);
  complex prev = 0.0;
  for (int n = 48; n <= 192; n *= 2) {
    const QuadRule& rule = gauss_jacobi(n, c - b - 1.0, b - 1.0);
    complex sum = 0.0;
    for (int i = 0; i < n; ++i) {
      const double tau = 0.5 * (1.0 + rule.x[i]);
      sum += rule.w[i] * pow_from_below(1.0 - z * tau, -a);
    }
    sum *= front;
    if (n > 48 && std::abs(sum - prev) <= 1e-15 * (1.0 + std::abs(sum))) return sum;
    prev = sum;
  }
  return prev;
}

}  // namespace

namespace detail {

complex hyp2f1_forced(double a, double b, double c, complex z, int zone) {
  switch (zone) {
    case 0: return series(a, b, c, z);
    case 1: return connect_at_one(a, b, c, z);
    case 2: return connect_at_inf(a, b, c, z);
    default: return euler_integral(a, b, c, z);
  }
}

}  // namespace detail

complex hyp2f1(double a, double b, double c, complex z) {
  if (c <= 0.0 && near_integer(c)) fail(Errc::OutOfRange, "2F1 pole: c is a nonpositive integer");
  if (std::abs(z) <= 0.65) return series(a, b, c, z);
  if (std::abs(1.0 - z) <= 0.62) {
    if (!near_integer(c - a - b)) return connect_at_one(a, b, c, z);
    return euler_integral(a, b, c, z);  // z near 1 keeps 1 - z*tau away from 0
  }
  if (std::abs(z) >= 1.55) {
    if (!near_integer(b - a)) return connect_at_inf(a, b, c, z);
    if (z.imag() == 0.0 && z.real() >= 1.0)
      fail(Errc::SolverDiverged, "2F1 degenerate connection on the cut");
    return euler_integral(a, b, c, z);
  }
  return euler_integral(a, b, c, z);
}

}  // namespace conelike
