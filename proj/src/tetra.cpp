#include "conelike/tetra.hpp"

#include <cmath>

namespace conelike {

const char* region_name(RegionLabel r) {
  switch (r) {
    case RegionLabel::ThetaPlus: return "ThetaPlus";
    case RegionLabel::F: return "F";
    case RegionLabel::ThetaMinus: return "ThetaMinus";
    case RegionLabel::C2Plus: return "C2Plus";
    case RegionLabel::C2Minus: return "C2Minus";
    case RegionLabel::C4: return "C4";
  }
  return "?";
}

TetraParams make_params(double s, double t) {
  if (!(s > 0.0) || !(t > 0.0) || !(s * s + t * t < 1.0))
    fail(Errc::OutOfDomain, "(s,t) must satisfy s>0, t>0, s^2+t^2<1");
  return {s, t, std::sqrt(1.0 - s * s - t * t)};
}

Tetrahedron tetra_vertices(const TetraParams& p) {
  const double h = 0.5 * p.A;
  return {{{{p.s, 0.0, -h}, {-p.s, 0.0, -h}, {0.0, p.t, h}, {0.0, -p.t, h}}}};
}

double flat_cone_form(double s, double t) { return 3.0 * s * s + 3.0 * t * t + 2.0 * s * t - 2.0; }

RegionLabel classify(const TetraParams& p, double tol_f) {
  const double f = flat_cone_form(p.s, p.t);
  if (std::abs(f) <= tol_f) return RegionLabel::F;
  if (f < 0.0) return RegionLabel::ThetaPlus;
  // Past F: which of the two axis-crossing ellipses have been left. Boundary
  // points (form exactly 3) stay with the smaller-boundary region.
  const bool ey = 3.0 * p.s * p.s + 4.0 * p.t * p.t > 3.0;  // t-heavy
  const bool ex = 4.0 * p.s * p.s + 3.0 * p.t * p.t > 3.0;  // s-heavy
  if (ex && ey) return RegionLabel::C4;
  if (ey) return RegionLabel::C2Plus;
  if (ex) return RegionLabel::C2Minus;
  return RegionLabel::ThetaMinus;
}

GammaCircles gamma_circles(const TetraParams& p) {
  const double rt3 = std::sqrt(3.0);
  return {{complex{2.0, 0.0}, rt3},
          {complex{0.0, 2.0}, rt3},
          {complex{p.s / p.A, p.t / p.A}, 1.0 / p.A}};
}

KeyPoints key_points() {
  const double q = 1.0 / std::sqrt(2.0);
  const double x = 2.0 + std::sqrt(3.0);
  return {complex{1.0 - q, 1.0 - q}, complex{1.0 + q, 1.0 + q}, complex{x, 0.0},
          complex{0.0, x}};
}

CirclePosition circle_position(complex z, const Circle& c, double tol) {
  if (tol < 0.0) tol = 1e-12 * c.r;
  const double d = std::abs(z - c.c);
  if (std::abs(d - c.r) <= tol) return CirclePosition::On;
  return d < c.r ? CirclePosition::Inside : CirclePosition::Outside;
}

RegionLabel classify_by_circles(const TetraParams& p, double tol_f) {
  const GammaCircles g = gamma_circles(p);
  const KeyPoints kp = key_points();
  const CirclePosition pos2 = circle_position(kp.p2, g.gst, tol_f);
  const CirclePosition posx = circle_position(kp.x0, g.gst, tol_f);
  const CirclePosition posy = circle_position(kp.y0, g.gst, tol_f);

  // x0 or y0 can only be captured by Gamma_st after p2 is (F never reaches the
  // outer ellipses); anything else means the tolerance bands overlap ambiguously.
  if (pos2 != CirclePosition::Inside &&
      (posx == CirclePosition::Inside || posy == CirclePosition::Inside))
    fail(Errc::Inconsistent, "circle predicates disagree near a region boundary");

  if (pos2 == CirclePosition::On) return RegionLabel::F;
  if (pos2 == CirclePosition::Outside) return RegionLabel::ThetaPlus;

  const bool ex = posx == CirclePosition::Inside;
  const bool ey = posy == CirclePosition::Inside;
  if (ex && ey) return RegionLabel::C4;
  if (ey) return RegionLabel::C2Plus;
  if (ex) return RegionLabel::C2Minus;
  return RegionLabel::ThetaMinus;
}

namespace {

// Angle between the radius vectors of two crossing circles (law of cosines);
// this is the angle of the mixed inside/outside sectors at the crossing.
std::optional<double> radius_angle(const Circle& a, const Circle& b) {
  const double d = std::abs(a.c - b.c);
  const double x = (a.r * a.r + b.r * b.r - d * d) / (2.0 * a.r * b.r);
  if (std::abs(x) >= 1.0) return std::nullopt;
  return std::acos(x);
}

}  // namespace

CornerAngles corner_angles(const TetraParams& p, double tol_f) {
  if (std::abs(flat_cone_form(p.s, p.t)) <= tol_f)
    fail(Errc::Degenerate, "corner angles undefined on F (the Gauss image is a point)");
  const GammaCircles g = gamma_circles(p);
  CornerAngles out;
  // At p2 the domain occupies an inside/inside (or outside/outside) sector, so
  // the interior angle is the supplement of the radius-vector angle.
  out.psi0 = kPi - *radius_angle(g.g1, g.g2);
  out.psi1 = radius_angle(g.g1, g.gst);
  out.psi2 = radius_angle(g.g2, g.gst);
  return out;
}

double orthogonality_invariant(const TetraParams& p, complex v, double tol) {
  const GammaCircles g = gamma_circles(p);
  if (std::abs(std::abs(v - g.gst.c) - g.gst.r) > tol)
    fail(Errc::NotAnIntersection, "point is not on Gamma_st");
  const bool on1 = std::abs(std::abs(v - g.g1.c) - g.g1.r) <= tol;
  const bool on2 = std::abs(std::abs(v - g.g2.c) - g.g2.r) <= tol;
  if (!on1 && !on2)
    fail(Errc::NotAnIntersection, "point is not on a fixed circle");
  const complex fixed_center = on1 ? g.g1.c : g.g2.c;
  const complex r1 = v - fixed_center, r2 = v - g.gst.c;
  return r1.real() * r2.real() + r1.imag() * r2.imag();
}

std::vector<complex> circle_intersections(const Circle& a, const Circle& b) {
  const complex dc = b.c - a.c;
  const double d = std::abs(dc);
  const double eps = 1e-14 * (a.r + b.r + d);
  if (d < eps) return {};  // concentric
  if (d > a.r + b.r + eps || d < std::abs(a.r - b.r) - eps) return {};
  const double alpha = (d * d + a.r * a.r - b.r * b.r) / (2.0 * d);
  double h2 = a.r * a.r - alpha * alpha;
  if (h2 < 0.0) h2 = 0.0;
  const complex u = dc / d;
  const complex base = a.c + alpha * u;
  if (h2 <= eps * eps) return {base};  // tangency
  const complex off = std::sqrt(h2) * complex{-u.imag(), u.real()};
  return {base + off, base - off};
}

}  // namespace conelike
