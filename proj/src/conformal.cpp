#include "conelike/conformal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <string>

#include "conelike/extremal_length.hpp"

namespace conelike {

namespace {
constexpr double kRt2 = 1.4142135623730951;
}

HalfPlaneMap solve_halfplane_map(const CurvilinearPolygon& domain, double tol) {
  HalfPlaneMap m;
  m.domain = domain;
  if (domain.edges.size() == 3) {
    m.tri = std::make_shared<TriangleMap>(build_triangle_map(domain.params));
    m.prevertices = {0.0, 1.0};
    m.vertex_at_infinity = true;
    // Residual of the scale identity pinning the vertex at infinity.
    m.accuracy = std::abs(m.tri->kappa * m.tri->sigma_inf -
                          mobius_frame(*m.tri, domain.vertices[2]));
  } else {
    m.disk = std::make_shared<DiskMap>(solve_disk_map(domain));
    const std::vector<complex>& pre = m.disk->prevertices;
    const double th_last = std::arg(pre.back());
    double gap = std::arg(pre.front()) - th_last;
    while (gap <= 0.0) gap += 2.0 * kPi;
    m.rot = std::polar(1.0, th_last + 0.5 * gap);
    for (const complex& w : pre) m.prevertices.push_back(std::real(cayley(w / m.rot)));
    m.accuracy = m.disk->accuracy;
  }
  if (!(m.accuracy <= tol))
    fail(Errc::SolverDiverged, "half-plane map missed the requested accuracy");
  return m;
}

complex hp_map(const HalfPlaneMap& m, complex z) {
  return m.tri ? tri_map(*m.tri, z) : dm_G(*m.disk, m.rot * cayley_inv(z));
}

complex hp_map_deriv(const HalfPlaneMap& m, complex z) {
  if (m.tri) return tri_map_deriv(*m.tri, z);
  const complex dw = 2.0 * kI / ((z + kI) * (z + kI));
  if (std::getenv("CONELIKE_DEBUG_NEWTON"))
    std::fprintf(stderr, "hp_deriv z=(%g,%g) rot=(%g,%g)\n", z.real(), z.imag(),
                 m.rot.real(), m.rot.imag());
  return dm_G_prime(*m.disk, m.rot * cayley_inv(z)) * m.rot * dw;
}

complex hp_map_inverse(const HalfPlaneMap& m, complex u, double tol) {
  return m.tri ? tri_map_inverse(*m.tri, u, tol)
               : cayley(dm_G_inverse(*m.disk, u, tol) / m.rot);
}

namespace {

constexpr double kCoarse = 3e-4;   // modulus accuracy while locating a root
constexpr double kTailLen = 1e-3;  // side length below which the mesh stops
                                   // certifying and the wedge law takes over
constexpr double kFourPi = 4.0 / kPi;

// Safeguarded regula falsi on a bracketed sign change; returns the root,
// leaves the residual there in `fx`, and narrows the bracket in place.
double solve_bracketed(double& lo, double& hi, double& flo, double& fhi, double tol,
                       const std::function<double(double)>& phi, double& fx,
                       const std::string& what) {
  if (flo == 0.0) { fx = 0.0; return lo; }
  if (fhi == 0.0) { fx = 0.0; return hi; }
  if (flo * fhi > 0.0)
    fail(Errc::SolverDiverged, what + " residual does not change sign over the bracket");
  double x = 0.5 * (lo + hi);
  fx = phi(x);
  for (int it = 0; it < 80 && std::abs(fx) > tol; ++it) {
    if (fx * flo <= 0.0) {
      hi = x;
      fhi = fx;
    } else {
      lo = x;
      flo = fx;
    }
    const double xs = (lo * fhi - hi * flo) / (fhi - flo);
    x = (it % 2 == 0 && xs > lo && xs < hi) ? xs : 0.5 * (lo + hi);
    fx = phi(x);
  }
  if (std::abs(fx) > tol)
    fail(Errc::SolverDiverged, what + " stalled at residual " + std::to_string(fx));
  return x;
}

// Collapsing a single target side merges its end corners (135 and 90
// degrees) into the pi/4 corner of the right isosceles triangle, so toward
// a wedge face the matched modulus obeys
//   ext   = (4/pi) log(1/len) + c   when the side belongs to the pair,
//   1/ext = (4/pi) log(1/len) + c   when it separates the pair there.
// c depends only on the rest of the shape; pinned by two meshes at lengths
// the grading still certifies, it is stable to ~1e-5, which keeps matched
// residuals for moduli this large below 1e-6 relative.
struct WedgeTail {
  bool ready = false;
  double c = 0.0;
  double spread = 0.0;  // disagreement between the two calibration meshes
};

// One-parameter family of straight targets whose matched modulus increases
// strictly in p, from 0 at the lower face to +infinity at the upper one
// (absent faces leave the length hook empty).
struct TargetFamily {
  std::function<TargetPolygon(double)> make;
  EdgeLabel a{}, b{};
  double p_lo = 0.0, p_hi = 0.0;
  std::function<double(double)> len_lo, len_hi;    // collapsing side lengths
  std::function<double(double)> p_of_lo, p_of_hi;  // inverses of the above
  double cal_tol = 2.5e-7;
  WedgeTail tail_lo, tail_hi;
};

// The wedge constant's leading correction is linear in the side length (the
// cut sits a length-proportional distance from the merged corner), so three
// certified meshes and quadratic Richardson extrapolation pin the limit; the
// drop from the linear extrapolation bounds the honest uncertainty.
void calibrate_tail(WedgeTail& t, bool reciprocal,
                    const std::function<double(double)>& mod_at) {
  static constexpr double kLen[3] = {1e-2, 3e-3, 1e-3};
  static constexpr double kQuad[3] = {1.0 / 21.0, -5.0 / 7.0, 5.0 / 3.0};
  double y[3];
  for (int k = 0; k < 3; ++k) {
    const double v = mod_at(kLen[k]);
    y[k] = (reciprocal ? 1.0 / v : v) - kFourPi * std::log(1.0 / kLen[k]);
  }
  t.c = kQuad[0] * y[0] + kQuad[1] * y[1] + kQuad[2] * y[2];
  t.spread = std::abs(t.c - (1.5 * y[2] - 0.5 * y[1]));
  t.ready = true;
}

double wedge_c(TargetFamily& fam, bool hi) {
  WedgeTail& t = hi ? fam.tail_hi : fam.tail_lo;
  if (!t.ready)
    calibrate_tail(t, !hi, [&](double len) {
      const double p = hi ? fam.p_of_hi(len) : fam.p_of_lo(len);
      return ext_length(fam.make(p), fam.a, fam.b, fam.cal_tol);
    });
  return t.c;
}

double family_ext(TargetFamily& fam, double p, double fem_tol) {
  double v;
  const char* zone = "fem";
  if (fam.len_hi && fam.len_hi(p) < kTailLen) {
    v = kFourPi * std::log(1.0 / fam.len_hi(p)) + wedge_c(fam, true);
    zone = "hi-tail";
  } else if (fam.len_lo && fam.len_lo(p) < kTailLen) {
    v = 1.0 / (kFourPi * std::log(1.0 / fam.len_lo(p)) + wedge_c(fam, false));
    zone = "lo-tail";
  } else {
    v = ext_length(fam.make(p), fam.a, fam.b, fem_tol);
  }
  if (std::getenv("CONELIKE_DEBUG_NEWTON"))
    std::fprintf(stderr, "    ext[%s] p=%.12g ftol=%.1e -> %.12g\n", zone, p, fem_tol, v);
  return v;
}

// Solve family_ext(p) = E.  Geometric march from the seed to a sign change,
// coarse regula falsi, then either a closed-form wedge inversion (root in a
// tail) or a tight secant polish.  `res` reports the relative residual.
double family_match(TargetFamily& fam, double E, double p_seed, double tol,
                    double& res, const std::string& what) {
  if (!(E > 0.0)) fail(Errc::OutOfDomain, what + " needs a positive modulus");
  const double tight = 0.25 * tol;
  auto fc = [&](double p) { return family_ext(fam, p, kCoarse) - E; };

  double a = p_seed, fa = fc(a), b = a, fb = fa;
  const bool up = fa < 0.0;
  bool bracketed = false;
  for (int k = 0; k < 60 && !bracketed && fa != 0.0; ++k) {
    double pn;
    if (up) {
      pn = std::isfinite(fam.p_hi) ? fam.p_hi - 0.5 * (fam.p_hi - a)
                                   : 2.0 * std::max(a, 0.5);
      if (!std::isfinite(fam.p_hi) && pn > 1024.0)
        fail(Errc::SolverDiverged, what + " found no matching target in range");
    } else {
      pn = fam.p_lo + 0.5 * (a - fam.p_lo);
    }
    double fn;
    try {
      fn = fc(pn);
    } catch (const Error&) {
      // Sliver mesh refused to certify; jump past it into the wedge tail.
      if ((up && !fam.p_of_hi) || (!up && !fam.p_of_lo)) throw;
      pn = up ? fam.p_of_hi(0.999 * kTailLen) : fam.p_of_lo(0.999 * kTailLen);
      fn = fc(pn);
    }
    if (fn == 0.0 || fn * fa < 0.0) {
      b = pn;
      fb = fn;
      bracketed = true;
    } else {
      a = pn;
      fa = fn;
    }
  }
  double p = a, f = fa;
  if (bracketed && fa != 0.0) {
    if (a > b) {
      std::swap(a, b);
      std::swap(fa, fb);
    }
    p = solve_bracketed(a, b, fa, fb, 2.0 * kCoarse * E, fc, f,
                        what);
  }

  // Root inside a tail: invert the wedge law directly; its calibration
  // spread bounds the honest residual.
  if (fam.len_hi && fam.len_hi(p) < kTailLen) {
    double eps = std::exp(-(E - wedge_c(fam, true)) / kFourPi);
    if (eps < 1e-13)
      fail(Errc::Degenerate, what + ": matched side collapses below representable length");
    eps = std::min(eps, 0.999 * kTailLen);
    res = std::max(fam.tail_hi.spread, 1e-15) / E;
    if (res > tol)
      fail(Errc::SolverDiverged, what + " tail calibration too loose for the tolerance");
    return fam.p_of_hi(eps);
  }
  if (fam.len_lo && fam.len_lo(p) < kTailLen) {
    double eps = std::exp(-(1.0 / E - wedge_c(fam, false)) / kFourPi);
    if (eps < 1e-13)
      fail(Errc::Degenerate, what + ": matched side collapses below representable length");
    eps = std::min(eps, 0.999 * kTailLen);
    res = std::max(E * fam.tail_lo.spread, 1e-15);
    if (res > tol)
      fail(Errc::SolverDiverged, what + " tail calibration too loose for the tolerance");
    return fam.p_of_lo(eps);
  }

  // Tight secant polish.  The coarse bracket seeds the slope but not the
  // bounds: its endpoint residuals carry coarse-mesh noise, which can push
  // the tight root just outside it.  Monotonicity in p instead turns every
  // tight evaluation into a trusted one-sided bound.
  double slope = bracketed && b > a ? (fb - fa) / (b - a) : 0.0;
  double lo2 = fam.p_lo;
  double hi2 = std::isfinite(fam.p_hi) ? fam.p_hi
                                       : std::numeric_limits<double>::infinity();
  if (bracketed && slope > 0.0) {
    const double pad = (b - a) + 6.0 * kCoarse * E / slope;
    lo2 = std::max(lo2, a - pad);
    hi2 = std::min(hi2, b + pad);
  }
  f = family_ext(fam, p, tight) - E;
  for (int it = 0; it < 12 && std::abs(f) > 0.5 * tol * E; ++it) {
    (f < 0.0 ? lo2 : hi2) = p;
    double pn = slope > 0.0 ? p - f / slope : lo2;
    if (!(pn > lo2) || !(pn < hi2))
      pn = std::isfinite(hi2) ? 0.5 * (lo2 + hi2) : 2.0 * std::max(lo2, 0.5);
    const double fn = family_ext(fam, pn, tight) - E;
    if (pn != p) slope = (fn - f) / (pn - p);
    p = pn;
    f = fn;
  }
  if (std::abs(f) > tol * E)
    fail(Errc::SolverDiverged,
         what + " stalled at residual " + std::to_string(f / E));
  res = std::abs(f) / E;
  return p;
}

// p = m at fixed l, matching (Y1, Ey); collapses Ey above and Y3 below.
TargetFamily ey_family(double l, double tol) {
  TargetFamily f;
  f.make = [l](double m) {
    return l < kTailLen ? quad_target(RegionLabel::C2Plus, m) : pentagon_target(l, m);
  };
  f.a = EdgeLabel::Y1;
  f.b = EdgeLabel::Ey;
  f.p_lo = 1.0 / kRt2;
  f.p_hi = l + kRt2;
  f.len_lo = [](double m) { return kRt2 * m - 1.0; };
  f.len_hi = [l](double m) { return l + kRt2 - m; };
  f.p_of_lo = [](double len) { return (len + 1.0) / kRt2; };
  f.p_of_hi = [l](double len) { return l + kRt2 - len; };
  f.cal_tol = 0.25 * tol;
  return f;
}

// p = l with m = l + sqrt(2) implied, matching (Y1, Est); collapses Ex below.
TargetFamily est_quad_family(double tol) {
  TargetFamily f;
  f.make = [](double l) { return quad_target(RegionLabel::C2Minus, l); };
  f.a = EdgeLabel::Y1;
  f.b = EdgeLabel::Est;
  f.p_lo = 0.0;
  f.p_hi = std::numeric_limits<double>::infinity();
  f.len_lo = [](double l) { return l; };
  f.p_of_lo = [](double len) { return len; };
  f.cal_tol = 0.25 * tol;
  return f;
}

PentagonSolve solve_c2plus(double ext_ey, double tol) {
  TargetFamily fam = ey_family(0.0, tol);
  double res = 0.0;
  const double m =
      family_match(fam, ext_ey, 1.0, tol, res, "quadrilateral length match");
  return {0.0, m, 0.0, res};
}

PentagonSolve solve_c2minus(double ext_est, double tol) {
  TargetFamily fam = est_quad_family(tol);
  double res = 0.0;
  const double l =
      family_match(fam, ext_est, 1.0, tol, res, "quadrilateral length match");
  return {l, l + kRt2, res, 0.0};
}

// ext(Y1, Est) over the pentagon wedge.  A chamfer below the mesh floor is
// spectated out: dropping it perturbs the modulus at high order in its
// length, so the chamfer-free quadrilateral stands in; a collapsing Ex
// instead pinches the pair's shared corner and follows the reciprocal
// wedge law with a constant recalibrated when m drifts.
struct EstEval {
  double tol;
  WedgeTail tail;
  double m_cal = 0.0;

  double operator()(double l, double m, double fem_tol) {
    if (l >= kTailLen) {
      if (l + kRt2 - m < kTailLen)
        return ext_length(quad_target(RegionLabel::C2Minus, l), EdgeLabel::Y1,
                          EdgeLabel::Est, fem_tol);
      return ext_length(pentagon_target(l, m), EdgeLabel::Y1, EdgeLabel::Est, fem_tol);
    }
    if (!tail.ready || std::abs(m - m_cal) > 0.05) {
      calibrate_tail(tail, true, [&](double len) {
        return ext_length(pentagon_target(len, m), EdgeLabel::Y1, EdgeLabel::Est,
                          0.25 * tol);
      });
      m_cal = m;
    }
    return 1.0 / (kFourPi * std::log(1.0 / l) + tail.c);
  }
};

PentagonSolve solve_c4(double ext_est, double ext_ey, double tol) {
  // Nested damped update seeded at (l, m) = (1, 1): the inner match projects
  // m onto the (Y1, Ey) solution curve at fixed l, the outer loop walks l
  // along that curve until the (Y1, Est) modulus matches too, coarsely first
  // and polished tight only near the crossing.
  double m_seed = 1.0;
  double res_ey = 0.0, m_cur = 0.0;
  auto inner = [&](double l, double stage_tol) {
    TargetFamily fam = ey_family(l, tol);
    const double lo = fam.p_lo, hi = fam.p_hi;
    const double seed = std::clamp(m_seed, lo + 0.05 * (hi - lo), hi - 0.05 * (hi - lo));
    m_cur = family_match(fam, ext_ey, seed, stage_tol, res_ey, "pentagon height match");
    m_seed = m_cur;
    return m_cur;
  };
  EstEval est{tol, {}, 0.0};
  auto gc = [&](double l) {
    return est(l, inner(l, 4.0 * kCoarse), kCoarse) - ext_est;
  };

  double a = 1.0, ga = gc(a), b = a, gb = ga;
  bool bracketed = false;
  const bool up = ga < 0.0;
  for (int k = 0; k < 60 && !bracketed && ga != 0.0; ++k) {
    double ln = up ? 2.0 * a : 0.5 * a;
    if (ln > 1024.0)
      fail(Errc::SolverDiverged, "pentagon length solve found no matching target in range");
    if (ln < 1e-12)
      fail(Errc::Degenerate,
           "pentagon length solve: matched side collapses below representable length");
    const double gn = gc(ln);
    if (gn == 0.0 || gn * ga < 0.0) {
      b = ln;
      gb = gn;
      bracketed = true;
    } else {
      a = ln;
      ga = gn;
    }
  }
  double l = a, g = ga;
  if (bracketed && ga != 0.0) {
    if (a > b) {
      std::swap(a, b);
      std::swap(ga, gb);
    }
    l = solve_bracketed(a, b, ga, gb, 2.0 * kCoarse * ext_est, gc, g,
                        "pentagon length solve");
  }

  // Tight polish: re-project m tightly and walk l by damped secant steps.
  // As in family_match, coarse endpoints only seed the slope and a padded
  // bound; tight evaluations provide the trusted bounds via monotonicity.
  double slope = bracketed && b > a ? (gb - ga) / (b - a) : 0.0;
  double blo = 0.0, bhi = std::numeric_limits<double>::infinity();
  if (bracketed && slope > 0.0) {
    const double pad = (b - a) + 6.0 * kCoarse * ext_est / slope;
    blo = std::max(blo, a - pad);
    bhi = b + pad;
  }
  const double tight = 0.25 * tol;
  g = est(l, inner(l, tol), tight) - ext_est;
  for (int it = 0; it < 12 && std::abs(g) > 0.5 * tol * ext_est; ++it) {
    (g < 0.0 ? blo : bhi) = l;
    double ln = slope > 0.0 ? l - g / slope : blo;
    if (!(ln > blo) || !(ln < bhi))
      ln = std::isfinite(bhi) ? 0.5 * (blo + bhi) : 2.0 * std::max(blo, 0.5);
    const double gn = est(ln, inner(ln, tol), tight) - ext_est;
    if (ln != l) slope = (gn - g) / (ln - l);
    l = ln;
    g = gn;
  }
  if (std::abs(g) > tol * ext_est)
    fail(Errc::SolverDiverged, "pentagon length solve stalled; residuals (" +
                                   std::to_string(g / ext_est) + ", " +
                                   std::to_string(res_ey) + ")");
  return {l, m_cur, std::abs(g) / ext_est, res_ey};
}

}  // namespace

PentagonSolve match_pentagon_lengths(RegionLabel region, double ext_est, double ext_ey,
                                     double tol) {
  switch (region) {
    case RegionLabel::C4:
      return solve_c4(ext_est, ext_ey, tol);
    case RegionLabel::C2Plus:
      return solve_c2plus(ext_ey, tol);
    case RegionLabel::C2Minus:
      return solve_c2minus(ext_est, tol);
    default:
      fail(Errc::WrongRegion, "target length matching applies to the C regions");
  }
}

PentagonSolve solve_pentagon_lengths(const CurvilinearPolygon& domain, double tol) {
  const double inner = 0.25 * tol;
  switch (domain.region) {
    case RegionLabel::C4:
      return match_pentagon_lengths(
          domain.region, ext_length(domain, EdgeLabel::Y1, EdgeLabel::Est, inner),
          ext_length(domain, EdgeLabel::Y1, EdgeLabel::Ey, inner), tol);
    case RegionLabel::C2Plus:
      return match_pentagon_lengths(
          domain.region, 0.0, ext_length(domain, EdgeLabel::Y1, EdgeLabel::Ey, inner), tol);
    case RegionLabel::C2Minus:
      return match_pentagon_lengths(
          domain.region, ext_length(domain, EdgeLabel::Y1, EdgeLabel::Est, inner), 0.0, tol);
    default:
      fail(Errc::WrongRegion, "target length matching applies to the C regions");
  }
}

DevelopingMap build_zeta(const TetraParams& p, double tol) {
  DevelopingMap m;
  m.params = p;
  m.region = classify(p);
  if (m.region == RegionLabel::F)
    fail(Errc::WrongRegion, "no straight-edge target on the flat-cone locus");
  m.domain = build_gauss_domain(p);
  m.hp = solve_halfplane_map(m.domain, std::min(tol, 1e-6));

  std::vector<complex> pre;
  if (m.hp.tri) {
    m.target = triangle_target(m.region);
    pre = {complex(-1.0, 0.0), complex(0.0, -1.0), complex(1.0, 0.0)};
  } else {
    m.lengths = solve_pentagon_lengths(m.domain, tol);
    m.target = m.region == RegionLabel::C4
                   ? pentagon_target(m.lengths.l, m.lengths.m)
                   : quad_target(m.region, m.region == RegionLabel::C2Plus ? m.lengths.m
                                                                           : m.lengths.l);
    pre = m.hp.disk->prevertices;
  }

  std::vector<double> expo;
  for (double ang : target_interior_angles(m.target)) expo.push_back(ang / kPi - 1.0);
  m.sc = make_disk_sc(pre, expo, m.target.vertices[0], m.target.vertices[1]);

  m.accuracy = m.hp.accuracy;
  for (size_t k = 2; k < pre.size(); ++k)
    m.accuracy =
        std::max(m.accuracy, std::abs(sc_evaluate(m.sc, pre[k]) - m.target.vertices[k]));
  return m;
}

complex dev_disk_of_omega(const DevelopingMap& m, complex u) {
  const std::vector<complex>& vs = m.domain.vertices;
  for (size_t k = 0; k < vs.size(); ++k)
    if (std::abs(u - vs[k]) < 1e-13) return m.sc.prevertices[k];
  return m.hp.tri ? cayley_inv(tri_map_inverse(*m.hp.tri, u))
                  : dm_G_inverse(*m.hp.disk, u);
}

complex zeta(const DevelopingMap& m, complex u) {
  return sc_evaluate(m.sc, dev_disk_of_omega(m, u));
}

complex zeta_deriv(const DevelopingMap& m, complex u) {
  const complex w = dev_disk_of_omega(m, u);
  return sc_derivative(m.sc, w) / dev_G_prime(m, w);
}

complex dev_G(const DevelopingMap& m, complex w) {
  return m.hp.tri ? tri_map(*m.hp.tri, cayley(w)) : dm_G(*m.hp.disk, w);
}

complex dev_G_prime(const DevelopingMap& m, complex w) {
  if (!m.hp.tri) return dm_G_prime(*m.hp.disk, w);
  const complex dz = 2.0 * kI / ((1.0 - w) * (1.0 - w));
  return tri_map_deriv(*m.hp.tri, cayley(w)) * dz;
}

}  // namespace conelike
