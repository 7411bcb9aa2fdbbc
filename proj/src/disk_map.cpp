#include "conelike/disk_map.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace conelike {

namespace {

struct Sigmoid {
  double g = 0, g1 = 0, g2 = 0, g3 = 0;  // value and first three derivatives
};

// g(l) = l^p / (l^p + (1-l)^p): flat to order p-1 at both ends.
Sigmoid sigmoid(double l, double p) {
  const double A = std::pow(l, p), B = std::pow(1.0 - l, p);
  const double A1 = p * std::pow(l, p - 1.0), B1 = -p * std::pow(1.0 - l, p - 1.0);
  const double A2 = p * (p - 1.0) * std::pow(l, p - 2.0);
  const double B2 = p * (p - 1.0) * std::pow(1.0 - l, p - 2.0);
  const double A3 = p * (p - 1.0) * (p - 2.0) * std::pow(l, p - 3.0);
  const double B3 = -p * (p - 1.0) * (p - 2.0) * std::pow(1.0 - l, p - 3.0);
  const double D = A + B, D1 = A1 + B1, D2 = A2 + B2;
  const double T = A1 * B - A * B1;
  const double T1 = A2 * B - A * B2;
  const double T2 = A3 * B + A2 * B1 - A1 * B2 - A * B3;
  Sigmoid s;
  s.g = A / D;
  s.g1 = T / (D * D);
  s.g2 = T1 / (D * D) - 2.0 * T * D1 / (D * D * D);
  s.g3 = T2 / (D * D) - (4.0 * T1 * D1 + 2.0 * T * D2) / (D * D * D) +
         6.0 * T * D1 * D1 / (D * D * D * D);
  return s;
}

double inverse_sigmoid(double f, double p) {
  if (f <= 0.0) return 0.0;
  if (f >= 1.0) return 1.0;
  const double r = std::pow(f / (1.0 - f), 1.0 / p);
  return r / (1.0 + r);
}

// Boundary point and tau-derivatives on edge e at in-edge grading parameter l.
void edge_jet(const BoundaryEdge& e, double l, double p, double dl_dtau, complex out[4]) {
  const Sigmoid s = sigmoid(l, p);
  const double f = s.g;
  const double f1 = s.g1 * dl_dtau, f2 = s.g2 * dl_dtau * dl_dtau;
  const double f3 = s.g3 * dl_dtau * dl_dtau * dl_dtau;
  const double dw = e.w_end - e.w_begin;
  if (e.is_arc) {
    const double w = e.w_begin + dw * f;
    const complex ph = e.circle.r * std::exp(complex(0.0, w));
    const double w1 = dw * f1, w2 = dw * f2, w3 = dw * f3;
    out[0] = e.circle.c + ph;
    out[1] = complex(0.0, w1) * ph;
    out[2] = (complex(0.0, w2) - w1 * w1) * ph;
    out[3] = (complex(0.0, w3) - 3.0 * w1 * w2 - complex(0.0, w1 * w1 * w1)) * ph;
  } else {
    const complex dir = e.axis_imag ? complex(0.0, dw) : complex(dw, 0.0);
    const complex base = e.axis_imag ? complex(0.0, e.w_begin) : complex(e.w_begin, 0.0);
    out[0] = base + dir * f;
    out[1] = dir * f1;
    out[2] = dir * f2;
    out[3] = dir * f3;
  }
}

void boundary_jet_raw(const CurvilinearPolygon& dom, double p, double tau, complex out[4]) {
  const int E = static_cast<int>(dom.edges.size());
  const double seg = 2.0 * kPi / E;
  tau = std::fmod(tau, 2.0 * kPi);
  if (tau < 0.0) tau += 2.0 * kPi;
  int e = std::min(static_cast<int>(tau / seg), E - 1);
  const double l = tau / seg - e;
  edge_jet(dom.edges[e], l, p, 1.0 / seg, out);
}

double lift_angle(double raw) {
  while (raw < kPi) raw += 2.0 * kPi;
  while (raw >= 3.0 * kPi) raw -= 2.0 * kPi;
  return raw;
}

}  // namespace

std::vector<double> log_kernel_weights(int n) {
  const int half = n / 2;
  const double h = 2.0 * kPi / n;
  std::vector<double> R(n);
  for (int k = 0; k < n; ++k) {
    double sum = 0.0;
    for (int m = 1; m < half; ++m) sum += std::cos(m * k * h) / m;
    R[k] = -(2.0 * kPi / half) * sum - (kPi / (half * half)) * std::cos(half * k * h);
  }
  return R;
}

double dm_theta(const DiskMap& m, double tau) {
  const int n = m.n_nodes / 2;
  double qt = 0.0;
  for (int k = 1; k <= n; ++k)
    qt += (m.fa[k] * std::sin(k * tau) - m.fb[k] * std::cos(k * tau)) / k;
  return kPi + tau + qt - m.q_primitive_0;
}

double dm_theta_deriv(const DiskMap& m, double tau, int order) {
  const int n = m.n_nodes / 2;
  double s = order == 1 ? 1.0 : 0.0;
  for (int k = 1; k <= n; ++k) {
    const double c = std::cos(k * tau), sn = std::sin(k * tau);
    if (order == 1) s += m.fa[k] * c + m.fb[k] * sn;
    else if (order == 2) s += k * (-m.fa[k] * sn + m.fb[k] * c);
    else s += k * k * (-m.fa[k] * c - m.fb[k] * sn);
  }
  return s;
}

BoundaryJet dm_boundary_jet(const DiskMap& m, double tau) {
  complex zj[4];
  boundary_jet_raw(m.domain, m.grading, tau, zj);
  BoundaryJet j;
  j.z = zj[0];
  j.zp = zj[1];
  j.zpp = zj[2];
  j.zppp = zj[3];
  j.th = dm_theta(m, tau);
  j.thp = dm_theta_deriv(m, tau, 1);
  j.thpp = dm_theta_deriv(m, tau, 2);
  j.thppp = dm_theta_deriv(m, tau, 3);
  return j;
}

double dm_edge_tau(const DiskMap& m, int e, double frac) {
  const int E = static_cast<int>(m.domain.edges.size());
  if (e < 0 || e >= E) fail(Errc::OutOfRange, "edge index out of range");
  const double seg = 2.0 * kPi / E;
  return seg * (e + inverse_sigmoid(frac, m.grading));
}

double dm_tau_of_theta(const DiskMap& m, double theta) {
  theta = lift_angle(theta);
  // Bracket by the node table (theta is increasing), then safeguarded Newton:
  // theta' decays like the fifth power of the grading toward corners, so a raw
  // Newton step can overshoot by orders of magnitude there.
  const double h = 2.0 * kPi / m.n_nodes;
  const auto it = std::lower_bound(m.theta_nodes.begin(), m.theta_nodes.end(), theta);
  double lo, hi;
  if (it == m.theta_nodes.begin()) {
    lo = m.tau.front() - h;
    hi = m.tau.front();
  } else if (it == m.theta_nodes.end()) {
    lo = m.tau.back();
    hi = m.tau.back() + h;
  } else {
    const auto i = it - m.theta_nodes.begin();
    lo = m.tau[i - 1];
    hi = m.tau[i];
  }
  double tau = 0.5 * (lo + hi);
  for (int k = 0; k < 80; ++k) {
    const double r = dm_theta(m, tau) - theta;
    if (std::abs(r) < 1e-13) break;
    if (r > 0.0) hi = tau;
    else lo = tau;
    const double dth = dm_theta_deriv(m, tau, 1);
    double next = dth > 0.0 ? tau - r / dth : lo;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == tau) break;
    tau = next;
  }
  return tau;
}

namespace {

// Taylor data of G at the boundary point with angle arg(w).
struct BoundaryTaylor {
  complex zstar, eta, d1, d2, d3;  // G, G', G'', G''' at the boundary point
};

BoundaryTaylor boundary_taylor(const DiskMap& m, double theta) {
  const double tau = dm_tau_of_theta(m, theta);
  const BoundaryJet j = dm_boundary_jet(m, tau);
  const complex eta = std::exp(complex(0.0, j.th));
  const complex e1 = complex(0.0, j.thp) * eta;
  const complex e2 = (complex(0.0, j.thpp) - j.thp * j.thp) * eta;
  const complex e3 =
      (complex(0.0, j.thppp) - 3.0 * j.thpp * j.thp - complex(0.0, j.thp * j.thp * j.thp)) * eta;
  const complex P = j.zp / e1;
  const complex P1 = (j.zpp - P * e2) / e1;
  const complex P2 = (j.zppp - 2.0 * P1 * e2 - P * e3) / e1;
  const complex S = P1 / e1;          // G''
  const complex S1 = (P2 - S * e2) / e1;
  BoundaryTaylor t;
  t.zstar = j.z;
  t.eta = eta;
  t.d1 = P;
  t.d2 = S;
  t.d3 = S1 / e1;  // G'''
  return t;
}

}  // namespace

namespace {

complex taylor_value(const BoundaryTaylor& t, complex at) {
  const complex d = at - t.eta;
  return t.zstar + t.d1 * d + 0.5 * t.d2 * d * d + (1.0 / 6.0) * t.d3 * d * d * d;
}

complex taylor_slope(const BoundaryTaylor& t, complex at) {
  const complex d = at - t.eta;
  return t.d1 + t.d2 * d + 0.5 * t.d3 * d * d;
}

}  // namespace

// Near the boundary the graded parameterization squeezes the Cauchy pole into
// the quadrature strip, so the trapezoid sum alone degrades well before the
// pole reaches the node spacing.  Subtracting the boundary cubic T makes the
// integrand vanish to fourth order at the pole (its own integral is T exactly),
// which restores accuracy throughout the transition zone.
complex dm_G(const DiskMap& m, complex w) {
  const double r = std::abs(w);
  if (r > 1.0 + 1e-9) fail(Errc::OutOfRange, "disk map evaluated outside the closed disk");
  if (r > 1.0) w /= r;
  const double d = 1.0 - std::min(r, 1.0);
  const double h = 2.0 * kPi / m.n_nodes;
  const int N = m.n_nodes;

  if (d < 0.5 * h) {
    return taylor_value(boundary_taylor(m, std::arg(w)), w);
  }
  if (d < 0.25) {
    const BoundaryTaylor t = boundary_taylor(m, std::arg(w));
    complex sum = 0.0;
    for (int j = 0; j < N; ++j)
      sum += m.weight[j] * (m.z[j] - taylor_value(t, m.eta[j])) / (m.eta[j] - w);
    return taylor_value(t, w) + sum;
  }
  complex sum = 0.0;
  for (int j = 0; j < N; ++j) sum += m.weight[j] * m.z[j] / (m.eta[j] - w);
  return sum;
}

complex dm_G_prime(const DiskMap& m, complex w) {
  const double r = std::abs(w);
  if (r > 1.0 + 1e-9) fail(Errc::OutOfRange, "disk map evaluated outside the closed disk");
  if (r > 1.0) w /= r;
  const double d = 1.0 - std::min(r, 1.0);
  const double h = 2.0 * kPi / m.n_nodes;
  const int N = m.n_nodes;

  if (d < 0.5 * h) {
    return taylor_slope(boundary_taylor(m, std::arg(w)), w);
  }
  if (d < 0.25) {
    const BoundaryTaylor t = boundary_taylor(m, std::arg(w));
    complex sum = 0.0;
    for (int j = 0; j < N; ++j) {
      const complex den = m.eta[j] - w;
      sum += m.weight[j] * (m.z[j] - taylor_value(t, m.eta[j])) / (den * den);
    }
    return taylor_slope(t, w) + sum;
  }
  complex sum = 0.0;
  for (int j = 0; j < N; ++j) {
    const complex den = m.eta[j] - w;
    sum += m.weight[j] * m.z[j] / (den * den);
  }
  return sum;
}

complex dm_G_inverse(const DiskMap& m, complex u, double tol) {
  double scale = 1.0;
  for (const complex v : m.domain.vertices) scale = std::max(scale, std::abs(v - m.z0));

  // On-boundary targets: project in tau along the nearest edge piece.
  int jmin = 0;
  double best = HUGE_VAL;
  for (int j = 0; j < m.n_nodes; ++j) {
    const double dd = std::abs(m.z[j] - u);
    if (dd < best) { best = dd; jmin = j; }
  }
  if (best < 2e-2 * scale) {
    double tau = m.tau[jmin];
    for (int k = 0; k < 60; ++k) {
      complex zj[4];
      boundary_jet_raw(m.domain, m.grading, tau, zj);
      const double g = (std::conj(zj[0] - u) * zj[1]).real();
      const double gp = std::norm(zj[1]) + (std::conj(zj[0] - u) * zj[2]).real();
      if (!(gp > 0.0)) break;
      const double step = g / gp;
      tau -= step;
      if (std::abs(step) < 1e-15) break;
    }
    complex zj[4];
    boundary_jet_raw(m.domain, m.grading, tau, zj);
    if (std::abs(zj[0] - u) <= 1e-9 * scale)
      return std::exp(complex(0.0, dm_theta(m, tau)));
  }

  // Interior Newton from a ladder of seeds.
  std::vector<complex> seeds{complex(0.0)};
  for (int k = 0; k < 8; ++k) seeds.push_back(std::polar(0.55, 0.25 * kPi * k));
  for (int k = 0; k < 12; ++k) seeds.push_back(std::polar(0.88, kPi * k / 6.0));
  for (const complex seed : seeds) {
    complex wv = seed;
    double res = std::abs(dm_G(m, wv) - u);
    bool ok = true;
    for (int it = 0; it < 80 && res > tol * scale; ++it) {
      const complex dG = dm_G_prime(m, wv);
      if (!(std::abs(dG) > 0.0)) { ok = false; break; }
      const complex step = -(dm_G(m, wv) - u) / dG;
      double lam = 1.0;
      bool moved = false;
      for (int hh = 0; hh < 24; ++hh, lam *= 0.5) {
        complex wn = wv + lam * step;
        const double rn0 = std::abs(wn);
        if (rn0 > 1.0) wn /= rn0;
        const double rn = std::abs(dm_G(m, wn) - u);
        if (rn < res) { wv = wn; res = rn; moved = true; break; }
      }
      if (!moved) { ok = false; break; }
    }
    if (ok && res <= tol * scale) return wv;
  }
  fail(Errc::SolverDiverged, "disk-map inverse did not converge");
}

DiskMap solve_disk_map(const CurvilinearPolygon& domain, int n, double grading) {
  if (n < 32 || n % 2 != 0) fail(Errc::OutOfRange, "node count must be even and >= 32");
  const int E = static_cast<int>(domain.edges.size());
  if (E < 2) fail(Errc::OutOfRange, "domain needs at least two boundary edges");

  DiskMap m;
  m.domain = domain;
  m.n_nodes = n;
  m.grading = grading;
  const double h = 2.0 * kPi / n;

  m.tau.resize(n);
  m.z.resize(n);
  std::vector<complex> zp(n);
  for (int j = 0; j < n; ++j) {
    m.tau[j] = h * (j + 0.5);
    complex zj[4];
    boundary_jet_raw(domain, grading, m.tau[j], zj);
    m.z[j] = zj[0];
    zp[j] = zj[1];
  }

  // Conformal center: area centroid first (boundary-integral form), then the
  // corner mean, then the node mean.
  double area = 0.0, cx = 0.0, cy = 0.0;
  for (int j = 0; j < n; ++j) {
    const double x = m.z[j].real(), y = m.z[j].imag();
    area += 0.5 * h * (x * zp[j].imag() - y * zp[j].real());
    cx += 0.5 * h * x * x * zp[j].imag();
    cy -= 0.5 * h * y * y * zp[j].real();
  }
  const complex centroid = area != 0.0 ? complex(cx / area, cy / area) : complex(0.0);
  complex vmean = 0.0;
  for (const complex v : domain.vertices) vmean += v;
  vmean /= static_cast<double>(domain.vertices.size());
  complex bmean = 0.0;
  for (const complex zz : m.z) bmean += zz;
  bmean /= static_cast<double>(n);
  double scale = 0.0;
  for (const complex zz : m.z) scale = std::max(scale, std::abs(zz - bmean));
  // The right-hand side ln|z(tau) - z0| must be resolved by the node grid, so
  // the center needs clearance of a few local node gaps, not just a fixed cut.
  std::vector<double> gap(n);
  for (int j = 0; j < n; ++j)
    gap[j] = std::max(std::abs(m.z[(j + 1) % n] - m.z[j]),
                      std::abs(m.z[j] - m.z[(j + n - 1) % n]));
  auto clearance = [&](complex c) {
    if (!contains(domain, c)) return -1.0;
    double sc = HUGE_VAL;
    for (int j = 0; j < n; ++j)
      sc = std::min(sc, std::abs(m.z[j] - c) / std::max(gap[j], 1e-3 * scale));
    return sc;
  };
  auto well_inside = [&](complex c) { return clearance(c) > 5.0; };
  m.z0 = centroid;
  if (!well_inside(m.z0)) m.z0 = vmean;
  if (!well_inside(m.z0)) m.z0 = bmean;
  if (!well_inside(m.z0)) m.z0 = 0.5 * (centroid + vmean);
  if (!well_inside(m.z0)) {
    // Thin domains defeat the cheap candidates; scan the bounding box for the
    // point with the most clearance measured in local node gaps.
    double xlo = HUGE_VAL, xhi = -HUGE_VAL, ylo = HUGE_VAL, yhi = -HUGE_VAL;
    for (const complex zz : m.z) {
      xlo = std::min(xlo, zz.real());
      xhi = std::max(xhi, zz.real());
      ylo = std::min(ylo, zz.imag());
      yhi = std::max(yhi, zz.imag());
    }
    const int g = 48;
    double best = -1.0;
    for (int iy = 0; iy < g; ++iy)
      for (int ix = 0; ix < g; ++ix) {
        const complex c(xlo + (xhi - xlo) * (ix + 0.5) / g,
                        ylo + (yhi - ylo) * (iy + 0.5) / g);
        const double sc = clearance(c);
        if (sc > best) { best = sc; m.z0 = c; }
      }
    if (best <= 3.0) fail(Errc::Degenerate, "no usable conformal center found");
  }

  // Assemble the augmented first-kind system for (mu, c).
  const std::vector<double> R = log_kernel_weights(n);
  Eigen::MatrixXd A(n + 1, n + 1);
  Eigen::VectorXd rhs(n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double S;
      if (i == j) {
        S = std::log(std::abs(zp[i]));
      } else {
        const double ds = 2.0 * std::sin(0.5 * (m.tau[i] - m.tau[j]));
        S = std::log(std::abs(m.z[i] - m.z[j])) - std::log(std::abs(ds));
      }
      A(i, j) = 0.5 * R[std::abs(i - j)] + h * S;
    }
    A(i, n) = 1.0;
    rhs(i) = -std::log(std::abs(m.z[i] - m.z0));
  }
  for (int j = 0; j < n; ++j) A(n, j) = h;
  A(n, n) = 0.0;
  rhs(n) = -1.0;

  Eigen::VectorXd sol = A.partialPivLu().solve(rhs);

  // The graded true theta' decays like the fifth power toward corners, ending
  // below solver noise at corner-adjacent nodes: reject only negatives that
  // are material against the peak slope.
  std::vector<double> thp(n);
  double thp_max = 0.0;
  for (int j = 0; j < n; ++j) {
    thp[j] = -2.0 * kPi * sol(j);
    thp_max = std::max(thp_max, thp[j]);
  }
  for (int j = 0; j < n; ++j)
    if (thp[j] < -1e-6 * thp_max)
      fail(Errc::SolverDiverged, "boundary correspondence is not monotone");

  // Fourier coefficients of q = theta' - 1 on the shifted grid.
  const int half = n / 2;
  m.fa.assign(half + 1, 0.0);
  m.fb.assign(half + 1, 0.0);
  for (int k = 1; k < half; ++k) {
    double ca = 0.0, cb = 0.0;
    for (int j = 0; j < n; ++j) {
      const double q = thp[j] - 1.0;
      ca += q * std::cos(k * m.tau[j]);
      cb += q * std::sin(k * m.tau[j]);
    }
    m.fa[k] = 2.0 * ca / n;
    m.fb[k] = 2.0 * cb / n;
  }
  {
    double cb = 0.0;
    for (int j = 0; j < n; ++j) cb += (thp[j] - 1.0) * std::sin(half * m.tau[j]);
    m.fb[half] = cb / n;
  }
  double q0 = 0.0;
  for (int k = 1; k <= half; ++k) q0 += -m.fb[k] / k;
  m.q_primitive_0 = q0;

  m.eta.resize(n);
  m.weight.resize(n);
  m.theta_nodes.resize(n);
  for (int j = 0; j < n; ++j) {
    const double th = dm_theta(m, m.tau[j]);
    m.theta_nodes[j] = th;
    m.eta[j] = std::exp(complex(0.0, th));
    m.weight[j] = dm_theta_deriv(m, m.tau[j], 1) * m.eta[j] * h / (2.0 * kPi);
  }

  m.corner_tau.resize(E);
  m.prevertices.resize(E);
  for (int e = 0; e < E; ++e) {
    m.corner_tau[e] = 2.0 * kPi * e / E;
    m.prevertices[e] = std::exp(complex(0.0, dm_theta(m, m.corner_tau[e])));
  }

  m.accuracy = std::abs(dm_G(m, complex(0.0)) - m.z0);
  return m;
}

}  // namespace conelike
