#include "conelike/sc_map.hpp"

#include <cmath>

#include "conelike/hypergeometric.hpp"
#include "conelike/quadrature.hpp"

namespace conelike {

namespace {

complex integrand(const SCMap& m, complex w) {
  complex prod = 1.0;
  const size_t n = m.prevertices.size();
  for (size_t k = 0; k < n; ++k) {
    if (m.plane == ScPlane::HalfPlane)
      prod *= pow_from_above(w - m.prevertices[k], m.exponents[k]);
    else
      prod *= std::pow(1.0 - w / m.prevertices[k], m.exponents[k]);
  }
  return prod;
}

double map_scale(const SCMap& m) {
  if (m.plane == ScPlane::Disk) return 1.0;
  double s = 1.0;
  for (const complex x : m.prevertices) s = std::max(s, std::abs(x));
  return s;
}

// Endpoint exponent for the Jacobi weight: nonzero only when z *is* a prevertex.
double exponent_at(const SCMap& m, complex z) {
  const double tol = 1e-12 * map_scale(m);
  for (size_t k = 0; k < m.prevertices.size(); ++k)
    if (std::abs(z - m.prevertices[k]) <= tol) return m.exponents[k];
  return 0.0;
}

complex leg(const SCMap& m, complex a, complex b, double tol) {
  if (a == b) return 0.0;
  return integrate_segment([&m](complex z) { return integrand(m, z); }, a, b, exponent_at(m, a),
                           exponent_at(m, b), tol);
}

complex clamp_into(const SCMap& m, complex w) {
  if (m.plane == ScPlane::Disk) {
    const double r = std::abs(w);
    if (r > 1.0) {
      if (r > 1.0 + 1e-9) fail(Errc::OutOfRange, "SC evaluation point outside the closed disk");
      w /= r;
    }
    return w;
  }
  if (w.imag() < 0.0) {
    if (w.imag() < -1e-9 * map_scale(m))
      fail(Errc::OutOfRange, "SC evaluation point below the real axis");
    w = complex(w.real(), 0.0);
  }
  return w;
}

// Raw integral from base_point to w (no prefactor, no base shift). Disk paths run
// through the center; half-plane paths detour through a high apex so interior legs
// meet the real axis, and hence the prevertex singularities, only at endpoints.
complex raw_integral(const SCMap& m, complex w, double tol) {
  if (w == m.base_point) return 0.0;
  if (m.plane == ScPlane::Disk) {
    if (w == complex(0.0)) return m.base_to_center;
    return m.base_to_center + leg(m, 0.0, w, tol);
  }
  const double h = 2.0 * (map_scale(m) + std::max(std::abs(w), std::abs(m.base_point)));
  const complex apex(0.0, h);
  return leg(m, m.base_point, apex, tol) + leg(m, apex, w, tol);
}

}  // namespace

SCMap make_triangle_sc(RegionLabel region) {
  if (region != RegionLabel::ThetaPlus && region != RegionLabel::ThetaMinus)
    fail(Errc::WrongRegion, "triangle normalization exists only for three-edged images");
  SCMap m;
  m.plane = ScPlane::HalfPlane;
  m.prevertices = {complex(0.0), complex(1.0)};
  m.exponents = {-0.5, -0.75};
  const double beta_hq = std::tgamma(0.5) * std::tgamma(0.25) / std::tgamma(0.75);
  const double sgn = region == RegionLabel::ThetaPlus ? -1.0 : 1.0;
  m.prefactor = std::exp(complex(0.0, sgn * 0.75 * kPi)) / beta_hq;
  m.base_point = 0.0;
  m.base = 0.0;
  return m;
}

SCMap make_disk_sc(std::vector<complex> prevertices, std::vector<double> exponents,
                   complex image0, complex image1) {
  if (prevertices.size() != exponents.size() || prevertices.size() < 3)
    fail(Errc::OutOfRange, "disk map needs matching prevertex/exponent lists of size >= 3");
  double expo_sum = 0.0;
  for (size_t k = 0; k < prevertices.size(); ++k) {
    if (std::abs(std::abs(prevertices[k]) - 1.0) > 1e-9)
      fail(Errc::OutOfRange, "disk prevertices must sit on the unit circle");
    prevertices[k] /= std::abs(prevertices[k]);
    expo_sum += exponents[k];
  }
  if (std::abs(expo_sum + 2.0) > 1e-9)
    fail(Errc::Inconsistent, "disk exponents must sum to -2 to close the polygon");

  SCMap m;
  m.plane = ScPlane::Disk;
  m.prevertices = std::move(prevertices);
  m.exponents = std::move(exponents);
  m.base_point = m.prevertices[0];
  m.base_to_center = leg(m, m.base_point, 0.0, 1e-13);
  const complex r1 = raw_integral(m, m.prevertices[1], 1e-13);
  if (!(std::abs(r1) > 1e-14)) fail(Errc::Degenerate, "first boundary edge has no extent");
  m.prefactor = (image1 - image0) / r1;
  m.base = image0;
  return m;
}

complex sc_derivative(const SCMap& m, complex w) { return m.prefactor * integrand(m, w); }

complex sc_evaluate(const SCMap& m, complex w, double tol) {
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
    fail(Errc::OutOfRange, "SC evaluation needs a finite point");
  w = clamp_into(m, w);
  return m.base + m.prefactor * raw_integral(m, w, tol);
}

complex sc_inverse(const SCMap& m, complex target, complex seed, double tol) {
  const double scale = 1.0 + std::abs(target);
  const complex fallback = m.plane == ScPlane::Disk ? complex(0.0) : complex(0.0, 1.0);
  for (const complex start : {seed, fallback}) {
    complex z = clamp_into(m, start);
    complex val = sc_evaluate(m, z, 0.1 * tol);
    double res = std::abs(val - target);
    bool ok = true;
    for (int it = 0; it < 60 && res > tol * scale; ++it) {
      const complex d = sc_derivative(m, z);
      if (!(std::abs(d) > 0.0) || !std::isfinite(std::abs(d))) { ok = false; break; }
      const complex step = (target - val) / d;
      bool moved = false;
      double lam = 1.0;
      for (int h = 0; h < 24; ++h, lam *= 0.5) {
        complex zn = clamp_into(m, z + lam * step);
        if (m.plane == ScPlane::Disk && std::abs(zn) > 1.0 - 1e-13)
          zn *= (1.0 - 1e-13) / std::abs(zn);
        const complex vn = val + m.prefactor * leg(m, z, zn, 0.1 * tol);
        const double rn = std::abs(vn - target);
        if (rn < res) { z = zn; val = vn; res = rn; moved = true; break; }
      }
      if (!moved) { ok = false; break; }
    }
    if (ok && res <= tol * scale) return z;
  }
  fail(Errc::SolverDiverged, "SC inverse did not converge");
}

}  // namespace conelike
