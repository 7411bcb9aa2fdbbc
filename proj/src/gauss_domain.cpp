#include "conelike/gauss_domain.hpp"

#include <algorithm>
#include <cmath>

namespace conelike {

const char* edge_name(EdgeLabel l) {
  switch (l) {
    case EdgeLabel::Y1: return "Y1";
    case EdgeLabel::Y3: return "Y3";
    case EdgeLabel::Est: return "Est";
    case EdgeLabel::Ex: return "Ex";
    case EdgeLabel::Ey: return "Ey";
  }
  return "?";
}

namespace {

// dir = +1: ccw traversal (interior inside the circle); dir = -1: clockwise
// (interior outside). w_end is lifted to the branch that makes the sweep
// monotone with |sweep| < 2*pi.
BoundaryEdge make_arc(EdgeLabel label, const Circle& c, complex from, complex to, int dir) {
  BoundaryEdge e;
  e.label = label;
  e.curve_class = (label == EdgeLabel::Y1 || label == EdgeLabel::Y3) ? CurveClass::Principal
                                                                     : CurveClass::Asymptotic;
  e.is_arc = true;
  e.circle = c;
  e.begin = from;
  e.end = to;
  e.w_begin = std::arg(from - c.c);
  e.w_end = std::arg(to - c.c);
  if (dir > 0)
    while (e.w_end <= e.w_begin) e.w_end += 2.0 * kPi;
  else
    while (e.w_end >= e.w_begin) e.w_end -= 2.0 * kPi;
  return e;
}

BoundaryEdge make_axis(EdgeLabel label, bool imag, double from, double to) {
  BoundaryEdge e;
  e.label = label;
  e.curve_class = CurveClass::Asymptotic;
  e.is_arc = false;
  e.axis_imag = imag;
  e.w_begin = from;
  e.w_end = to;
  e.begin = imag ? complex{0.0, from} : complex{from, 0.0};
  e.end = imag ? complex{0.0, to} : complex{to, 0.0};
  return e;
}

// The crossing used as a domain vertex: larger imaginary part on Gamma_1,
// larger real part on Gamma_2 (the rule degrades continuously to the axis
// crossings on the region boundaries).
complex pick_crossing(const Circle& fixed, const Circle& gst, bool by_imag) {
  const auto pts = circle_intersections(fixed, gst);
  if (pts.empty()) fail(Errc::Inconsistent, "expected circle crossing is missing");
  if (pts.size() == 1) return pts[0];
  if (by_imag) return pts[0].imag() > pts[1].imag() ? pts[0] : pts[1];
  return pts[0].real() > pts[1].real() ? pts[0] : pts[1];
}

}  // namespace

CurvilinearPolygon build_gauss_domain(const TetraParams& p, double tol_f, double min_edge) {
  const RegionLabel region = classify(p, tol_f);
  if (region == RegionLabel::F)
    fail(Errc::Degenerate, "the Gauss image degenerates to a point on F");

  const GammaCircles g = gamma_circles(p);
  const KeyPoints kp = key_points();

  // Axis crossings of Gamma_st: x = (s + sqrt(1-t^2))/A, y = (t + sqrt(1-s^2))/A.
  const double ax = (p.s + std::sqrt(1.0 - p.t * p.t)) / p.A;
  const double ay = (p.t + std::sqrt(1.0 - p.s * p.s)) / p.A;

  CurvilinearPolygon poly;
  poly.region = region;
  poly.params = p;

  switch (region) {
    case RegionLabel::ThetaPlus: {
      // Between the fixed circles, outside Gamma_st.
      const complex v1 = pick_crossing(g.g1, g.gst, true);
      const complex v2 = pick_crossing(g.g2, g.gst, false);
      poly.edges.push_back(make_arc(EdgeLabel::Y1, g.g1, kp.p2, v1, +1));
      poly.edges.push_back(make_arc(EdgeLabel::Est, g.gst, v1, v2, -1));
      poly.edges.push_back(make_arc(EdgeLabel::Y3, g.g2, v2, kp.p2, +1));
      break;
    }
    case RegionLabel::ThetaMinus: {
      // Inside Gamma_st, outside both fixed circles.
      const complex v1 = pick_crossing(g.g1, g.gst, true);
      const complex v2 = pick_crossing(g.g2, g.gst, false);
      poly.edges.push_back(make_arc(EdgeLabel::Y1, g.g1, kp.p2, v1, -1));
      poly.edges.push_back(make_arc(EdgeLabel::Est, g.gst, v1, v2, +1));
      poly.edges.push_back(make_arc(EdgeLabel::Y3, g.g2, v2, kp.p2, -1));
      break;
    }
    case RegionLabel::C2Plus: {
      // Gamma_st has swallowed y0: Est ends on the imaginary axis, then Ey
      // descends to y0.
      const complex v1 = pick_crossing(g.g1, g.gst, true);
      const complex vy{0.0, ay};
      poly.edges.push_back(make_arc(EdgeLabel::Y1, g.g1, kp.p2, v1, -1));
      poly.edges.push_back(make_arc(EdgeLabel::Est, g.gst, v1, vy, +1));
      poly.edges.push_back(make_axis(EdgeLabel::Ey, true, ay, kp.y0.imag()));
      poly.edges.push_back(make_arc(EdgeLabel::Y3, g.g2, kp.y0, kp.p2, -1));
      break;
    }
    case RegionLabel::C2Minus: {
      const complex v2 = pick_crossing(g.g2, g.gst, false);
      const complex vx{ax, 0.0};
      poly.edges.push_back(make_arc(EdgeLabel::Y1, g.g1, kp.p2, kp.x0, -1));
      poly.edges.push_back(make_axis(EdgeLabel::Ex, false, kp.x0.real(), ax));
      poly.edges.push_back(make_arc(EdgeLabel::Est, g.gst, vx, v2, +1));
      poly.edges.push_back(make_arc(EdgeLabel::Y3, g.g2, v2, kp.p2, -1));
      break;
    }
    case RegionLabel::C4: {
      const complex vx{ax, 0.0}, vy{0.0, ay};
      poly.edges.push_back(make_arc(EdgeLabel::Y1, g.g1, kp.p2, kp.x0, -1));
      poly.edges.push_back(make_axis(EdgeLabel::Ex, false, kp.x0.real(), ax));
      poly.edges.push_back(make_arc(EdgeLabel::Est, g.gst, vx, vy, +1));
      poly.edges.push_back(make_axis(EdgeLabel::Ey, true, ay, kp.y0.imag()));
      poly.edges.push_back(make_arc(EdgeLabel::Y3, g.g2, kp.y0, kp.p2, -1));
      break;
    }
    case RegionLabel::F:
      break;  // unreachable
  }

  for (size_t k = 0; k < poly.edges.size(); ++k) {
    const BoundaryEdge& e = poly.edges[k];
    const BoundaryEdge& next = poly.edges[(k + 1) % poly.edges.size()];
    if (std::abs(e.end - next.begin) > 1e-9)
      fail(Errc::Inconsistent, "Gauss-domain boundary does not close up");
    if (edge_length(e) < min_edge)
      fail(Errc::NearDegenerate, std::string("edge ") + edge_name(e.label) +
                                     " is below the length floor");
    poly.vertices.push_back(e.begin);
  }
  poly.interior_angles = vertex_angles(poly);
  return poly;
}

complex boundary_param(const BoundaryEdge& e, double w) {
  const double lo = std::min(e.w_begin, e.w_end), hi = std::max(e.w_begin, e.w_end);
  if (w < lo - 1e-12 || w > hi + 1e-12)
    fail(Errc::OutOfRange, "boundary parameter outside the edge range");
  if (e.is_arc) return e.circle.c + e.circle.r * std::polar(1.0, w);
  return e.axis_imag ? complex{0.0, w} : complex{w, 0.0};
}

complex boundary_point(const BoundaryEdge& e, double frac) {
  return boundary_param(e, e.w_begin + frac * (e.w_end - e.w_begin));
}

complex boundary_tangent(const BoundaryEdge& e, double frac) {
  const double sgn = e.w_end >= e.w_begin ? 1.0 : -1.0;
  if (!e.is_arc) return e.axis_imag ? complex{0.0, sgn} : complex{sgn, 0.0};
  const double w = e.w_begin + frac * (e.w_end - e.w_begin);
  return sgn * kI * std::polar(1.0, w);
}

double edge_length(const BoundaryEdge& e) {
  const double sweep = std::abs(e.w_end - e.w_begin);
  return e.is_arc ? e.circle.r * sweep : sweep;
}

std::vector<double> vertex_angles(const CurvilinearPolygon& poly) {
  std::vector<double> out;
  const size_t n = poly.edges.size();
  for (size_t k = 0; k < n; ++k) {
    const complex t_in = boundary_tangent(poly.edges[(k + n - 1) % n], 1.0);
    const complex t_out = boundary_tangent(poly.edges[k], 0.0);
    double a = std::arg(-t_in / t_out);
    if (a <= 0.0) a += 2.0 * kPi;
    out.push_back(a);
  }
  return out;
}

bool contains(const CurvilinearPolygon& poly, complex z) {
  double winding = 0.0;
  for (const BoundaryEdge& e : poly.edges) {
    const int n = std::max(32, static_cast<int>(std::ceil(std::abs(e.w_end - e.w_begin) * 64)));
    complex prev = boundary_point(e, 0.0) - z;
    for (int i = 1; i <= n; ++i) {
      const complex cur = boundary_point(e, static_cast<double>(i) / n) - z;
      winding += std::arg(cur / prev);
      prev = cur;
    }
  }
  return std::abs(winding) > kPi;  // 2*pi inside, 0 outside
}

}  // namespace conelike
