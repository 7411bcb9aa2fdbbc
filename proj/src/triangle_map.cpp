#include "conelike/triangle_map.hpp"

#include <cmath>

#include "conelike/hypergeometric.hpp"

namespace conelike {

namespace {

double gam(double x) { return std::tgamma(x); }

}  // namespace

TriangleMap build_triangle_map(const TetraParams& p) {
  TriangleMap m;
  m.params = p;
  m.domain = build_gauss_domain(p);
  m.region = m.domain.region;
  if (m.region != RegionLabel::ThetaPlus && m.region != RegionLabel::ThetaMinus)
    fail(Errc::WrongRegion, "triangle map requires a three-edged domain");

  const CornerAngles ang = corner_angles(p);
  if (!ang.psi1 || !ang.psi2) fail(Errc::Inconsistent, "missing corner crossings");
  m.alpha = ang.psi0 / kPi;
  m.beta = *ang.psi1 / kPi;
  m.gamma = *ang.psi2 / kPi;
  m.a = 0.5 * (1.0 - m.alpha - m.beta - m.gamma);
  m.b = 0.5 * (1.0 - m.alpha - m.beta + m.gamma);
  m.c = 1.0 - m.alpha;

  const KeyPoints kp = key_points();
  m.p1 = kp.p1;
  m.p2 = kp.p2;

  m.sigma1 = gam(1.0 + m.alpha) * gam(m.c - m.a) * gam(m.c - m.b) /
             (gam(1.0 - m.alpha) * gam(1.0 - m.a) * gam(1.0 - m.b));
  m.sigma_inf = std::exp(complex(0.0, kPi * m.alpha)) * gam(1.0 + m.alpha) * gam(m.b) *
                gam(m.c - m.a) / (gam(m.b + m.alpha) * gam(1.0 - m.a) * gam(1.0 - m.alpha));

  // Align M(Y1) with the positive real axis: M'(p2) along Y1's outgoing tangent.
  const complex t_out = boundary_tangent(m.domain.edges[0], 0.0);
  const complex u = t_out / (m.p2 - m.p1);
  m.phase = std::conj(u) / std::abs(u);

  const complex mv1 = mobius_frame(m, m.domain.edges[0].end);
  if (std::abs(mv1.imag()) > 1e-9 * std::abs(mv1) || mv1.real() <= 0.0)
    fail(Errc::Inconsistent, "frame did not straighten the first edge");
  m.kappa = mv1.real() / m.sigma1;
  return m;
}

complex mobius_frame(const TriangleMap& m, complex u) {
  return m.phase * (u - m.p2) / (u - m.p1);
}

complex mobius_frame_inverse(const TriangleMap& m, complex w) {
  const complex v = w / m.phase;
  return (v * m.p1 - m.p2) / (v - 1.0);
}

complex tri_sigma(const TriangleMap& m, complex z) {
  if (z == complex(0.0)) return 0.0;
  const complex num = hyp2f1(m.a + m.alpha, m.b + m.alpha, 1.0 + m.alpha, z);
  const complex den = hyp2f1(m.a, m.b, m.c, z);
  return pow_from_above(z, m.alpha) * num / den;
}

complex tri_sigma_prime(const TriangleMap& m, complex z) {
  const complex den = hyp2f1(m.a, m.b, m.c, z);
  return m.alpha * pow_from_above(z, m.alpha - 1.0) * pow_from_below(1.0 - z, m.beta - 1.0) /
         (den * den);
}

complex tri_map(const TriangleMap& m, complex z) {
  return mobius_frame_inverse(m, m.kappa * tri_sigma(m, z));
}

complex tri_map_deriv(const TriangleMap& m, complex z) {
  const complex u = tri_map(m, z);
  const complex dM = m.phase * (m.p2 - m.p1) / ((u - m.p1) * (u - m.p1));
  return m.kappa * tri_sigma_prime(m, z) / dM;
}

complex tri_map_inverse(const TriangleMap& m, complex u, double tol) {
  const double scale = std::abs(m.p2 - m.p1);
  static const complex seeds[] = {complex(0.0, 1.0), complex(0.5, 0.5), complex(0.0, 0.25),
                                  complex(0.5, 2.0), complex(0.05, 0.05), complex(0.0, 4.0)};
  for (const complex seed : seeds) {
    complex z = seed;
    double res = std::abs(tri_map(m, z) - u);
    bool ok = true;
    for (int it = 0; it < 80 && res > tol * scale; ++it) {
      const complex d = tri_map_deriv(m, z);
      if (!(std::abs(d) > 0.0)) { ok = false; break; }
      complex step = -(tri_map(m, z) - u) / d;
      // Stay in the closed upper half-plane and damp until the residual drops.
      double lam = 1.0;
      bool moved = false;
      for (int h = 0; h < 30; ++h, lam *= 0.5) {
        complex zn = z + lam * step;
        if (zn.imag() < 0.0) zn = complex(zn.real(), 0.0);
        const double rn = std::abs(tri_map(m, zn) - u);
        if (rn < res) { z = zn; res = rn; moved = true; break; }
      }
      if (!moved) { ok = false; break; }
    }
    if (ok && res <= tol * scale) return z;
  }
  fail(Errc::SolverDiverged, "half-plane inverse did not converge");
}

}  // namespace conelike
