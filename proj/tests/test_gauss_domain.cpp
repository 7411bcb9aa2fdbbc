#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "conelike/gauss_domain.hpp"

using namespace conelike;

namespace {

// Signed area of the sampled boundary; positive = counterclockwise.
double signed_area(const CurvilinearPolygon& poly) {
  double area = 0.0;
  for (const BoundaryEdge& e : poly.edges) {
    const int n = 512;
    complex prev = boundary_point(e, 0.0);
    for (int i = 1; i <= n; ++i) {
      const complex cur = boundary_point(e, static_cast<double>(i) / n);
      area += 0.5 * (prev.real() * cur.imag() - cur.real() * prev.imag());
      prev = cur;
    }
  }
  return area;
}

const BoundaryEdge* find_edge(const CurvilinearPolygon& poly, EdgeLabel l) {
  for (const BoundaryEdge& e : poly.edges)
    if (e.label == l) return &e;
  return nullptr;
}

double closure_defect(const CurvilinearPolygon& poly) {
  double worst = 0.0;
  for (size_t k = 0; k < poly.edges.size(); ++k) {
    const complex gap =
        poly.edges[k].end - poly.edges[(k + 1) % poly.edges.size()].begin;
    worst = std::max(worst, std::abs(gap));
  }
  return worst;
}

}  // namespace

TEST_CASE("theta+ triangle: structure, closure, orientation, angles") {
  const TetraParams p = make_params(0.3, 0.3);
  const CurvilinearPolygon poly = build_gauss_domain(p);
  REQUIRE(poly.edges.size() == 3);
  CHECK(poly.edges[0].label == EdgeLabel::Y1);
  CHECK(poly.edges[1].label == EdgeLabel::Est);
  CHECK(poly.edges[2].label == EdgeLabel::Y3);
  CHECK(poly.edges[0].curve_class == CurveClass::Principal);
  CHECK(poly.edges[1].curve_class == CurveClass::Asymptotic);

  CHECK(closure_defect(poly) < 1e-12);
  CHECK(signed_area(poly) > 0.0);

  CHECK(std::abs(poly.vertices[0] - key_points().p2) < 1e-14);
  // Frozen from the radical-line quadratic at (0.3, 0.3).
  CHECK(poly.vertices[1].real() == doctest::Approx(0.857810).epsilon(1e-4));
  CHECK(poly.vertices[1].imag() == doctest::Approx(1.302229).epsilon(1e-4));
  // v2 is the diagonal mirror of v1.
  CHECK(std::abs(poly.vertices[2] - complex{poly.vertices[1].imag(),
                                            poly.vertices[1].real()}) < 1e-12);

  // Y1 starts at the documented parameter value and stays below 5*pi/6.
  const double w_p2 = std::acos((1.0 - std::sqrt(2.0)) / std::sqrt(6.0));
  CHECK(poly.edges[0].w_begin == doctest::Approx(w_p2).epsilon(1e-12));
  CHECK(poly.edges[0].w_end > poly.edges[0].w_begin);  // ccw on Gamma_1
  CHECK(poly.edges[0].w_end < 5.0 * kPi / 6.0);

  const CornerAngles ca = corner_angles(p);
  CHECK(std::abs(poly.interior_angles[0] - ca.psi0) < 1e-10);
  CHECK(std::abs(poly.interior_angles[1] - *ca.psi1) < 1e-10);
  CHECK(std::abs(poly.interior_angles[2] - *ca.psi2) < 1e-10);

  // Edge midpoints respect the region inequalities in the closure sense.
  const GammaCircles g = gamma_circles(p);
  const complex m1 = boundary_point(poly.edges[0], 0.5);
  CHECK(std::abs(m1 - g.g2.c) < g.g2.r);           // inside the other fixed circle
  CHECK(std::abs(m1 - g.gst.c) > g.gst.r);         // outside Gamma_st
  const complex mst = boundary_point(poly.edges[1], 0.5);
  CHECK(std::abs(mst - g.g1.c) < g.g1.r);
  CHECK(std::abs(mst - g.g2.c) < g.g2.r);
}

TEST_CASE("theta- triangle reverses the traversal sense of each circle") {
  const CurvilinearPolygon poly = build_gauss_domain(make_params(0.6, 0.6));
  REQUIRE(poly.edges.size() == 3);
  CHECK(poly.edges[0].w_end < poly.edges[0].w_begin);  // clockwise on Gamma_1
  CHECK(poly.edges[1].w_end > poly.edges[1].w_begin);  // ccw on Gamma_st
  CHECK(closure_defect(poly) < 1e-12);
  CHECK(signed_area(poly) > 0.0);

  const GammaCircles g = gamma_circles(make_params(0.6, 0.6));
  const complex m1 = boundary_point(poly.edges[0], 0.5);
  CHECK(std::abs(m1 - g.gst.c) < g.gst.r);  // Y1 runs inside Gamma_st now
  const CornerAngles ca = corner_angles(make_params(0.6, 0.6));
  CHECK(std::abs(poly.interior_angles[0] - ca.psi0) < 1e-10);
  CHECK(std::abs(poly.interior_angles[1] - *ca.psi1) < 1e-10);
}

TEST_CASE("C4 pentagon: vertex list p2, x0, axis crossings, y0") {
  const TetraParams p = make_params(0.66, 0.66);
  const CurvilinearPolygon poly = build_gauss_domain(p);
  REQUIRE(poly.edges.size() == 5);
  CHECK(poly.edges[0].label == EdgeLabel::Y1);
  CHECK(poly.edges[1].label == EdgeLabel::Ex);
  CHECK(poly.edges[2].label == EdgeLabel::Est);
  CHECK(poly.edges[3].label == EdgeLabel::Ey);
  CHECK(poly.edges[4].label == EdgeLabel::Y3);
  CHECK(closure_defect(poly) < 1e-12);
  CHECK(signed_area(poly) > 0.0);

  CHECK(std::abs(poly.vertices[1] - key_points().x0) < 1e-14);
  const double ax = (p.s + std::sqrt(1.0 - p.t * p.t)) / p.A;
  CHECK(ax == doctest::Approx(3.9323384).epsilon(1e-6));
  CHECK(std::abs(poly.vertices[2] - complex{ax, 0.0}) < 1e-12);
  CHECK(std::abs(poly.vertices[3] - complex{0.0, ax}) < 1e-12);  // s = t symmetry
  CHECK(std::abs(poly.vertices[4] - key_points().y0) < 1e-14);

  // Angles: arccos(1/3) at p2, right angles at x0 and y0, and the closed-form
  // axis-crossing angle pi - atan(sqrt(1-t^2)/t) at the Est corners.
  CHECK(std::abs(poly.interior_angles[0] - std::acos(1.0 / 3.0)) < 1e-10);
  CHECK(std::abs(poly.interior_angles[1] - kPi / 2.0) < 1e-12);
  CHECK(std::abs(poly.interior_angles[4] - kPi / 2.0) < 1e-12);
  const double theta_axis = kPi - std::atan(std::sqrt(1.0 - p.t * p.t) / p.t);
  CHECK(std::abs(poly.interior_angles[2] - theta_axis) < 1e-10);
  CHECK(std::abs(poly.interior_angles[3] - theta_axis) < 1e-10);

  // First-quadrant clipping.
  for (const BoundaryEdge& e : poly.edges)
    for (int i = 0; i <= 64; ++i) {
      const complex z = boundary_point(e, i / 64.0);
      CHECK(z.real() > -1e-12);
      CHECK(z.imag() > -1e-12);
    }
}

TEST_CASE("C2+ quadrilateral keeps the imaginary-axis segment only") {
  const TetraParams p = make_params(0.2, 0.85);
  const CurvilinearPolygon poly = build_gauss_domain(p);
  REQUIRE(poly.edges.size() == 4);
  CHECK(poly.edges[0].label == EdgeLabel::Y1);
  CHECK(poly.edges[1].label == EdgeLabel::Est);
  CHECK(poly.edges[2].label == EdgeLabel::Ey);
  CHECK(poly.edges[3].label == EdgeLabel::Y3);
  CHECK(find_edge(poly, EdgeLabel::Ex) == nullptr);
  CHECK(closure_defect(poly) < 1e-12);
  CHECK(signed_area(poly) > 0.0);

  const double ay = (p.t + std::sqrt(1.0 - p.s * p.s)) / p.A;
  CHECK(ay == doctest::Approx(3.7546619583449).epsilon(1e-12));
  CHECK(std::abs(poly.vertices[2] - complex{0.0, ay}) < 1e-12);
  // Ey descends from the axis crossing to y0.
  CHECK(poly.edges[2].w_begin > poly.edges[2].w_end);
  CHECK(std::abs(poly.edges[2].end - key_points().y0) < 1e-14);
}

TEST_CASE("C2- quadrilateral mirrors C2+ across the diagonal") {
  const CurvilinearPolygon poly = build_gauss_domain(make_params(0.85, 0.2));
  REQUIRE(poly.edges.size() == 4);
  CHECK(poly.edges[0].label == EdgeLabel::Y1);
  CHECK(poly.edges[1].label == EdgeLabel::Ex);
  CHECK(poly.edges[2].label == EdgeLabel::Est);
  CHECK(poly.edges[3].label == EdgeLabel::Y3);
  CHECK(closure_defect(poly) < 1e-12);
  CHECK(signed_area(poly) > 0.0);

  // Diagonal mirror of the C2+ domain at swapped parameters.
  const CurvilinearPolygon mirror = build_gauss_domain(make_params(0.2, 0.85));
  auto reflect = [](complex z) { return complex{z.imag(), z.real()}; };
  CHECK(std::abs(reflect(mirror.vertices[1]) - poly.vertices[3]) < 1e-12);
  CHECK(std::abs(reflect(mirror.vertices[2]) - poly.vertices[2]) < 1e-12);
}

TEST_CASE("build_gauss_domain rejects F and near-degenerate slivers") {
  CHECK_THROWS_AS(build_gauss_domain(make_params(0.5, 0.5)), Error);
  try {
    build_gauss_domain(make_params(0.5, 0.5));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Degenerate);
  }
  // Just past the C2- boundary the Ex edge has length ~1e-12.
  const double t = 0.3;
  const double s_star = std::sqrt((3.0 - 3.0 * t * t) / 4.0);
  try {
    build_gauss_domain(make_params(s_star + 1e-12, t));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NearDegenerate);
  }
}

TEST_CASE("boundary_param evaluates the documented parameterizations") {
  const CurvilinearPolygon poly = build_gauss_domain(make_params(0.3, 0.3));
  const double w_p2 = std::acos((1.0 - std::sqrt(2.0)) / std::sqrt(6.0));
  CHECK(std::abs(boundary_param(poly.edges[0], w_p2) - key_points().p2) < 1e-13);
  CHECK_THROWS_AS(boundary_param(poly.edges[0], poly.edges[0].w_end + 0.5), Error);

  // Identity parameterization on the real-axis segment.
  const CurvilinearPolygon pent = build_gauss_domain(make_params(0.66, 0.66));
  CHECK(std::abs(boundary_param(pent.edges[1], 3.9) - complex{3.9, 0.0}) < 1e-15);

  // Synthetic arc on Gamma_st(0.5,0.5): z(w) = c + e^{iw}/A at e^{iw} = -(1+i)/sqrt(2).
  const Circle gst = gamma_circles(make_params(0.5, 0.5)).gst;
  BoundaryEdge est;
  est.label = EdgeLabel::Est;
  est.curve_class = CurveClass::Asymptotic;
  est.is_arc = true;
  est.circle = gst;
  est.w_begin = -kPi;
  est.w_end = 0.0;
  const complex z = boundary_param(est, -3.0 * kPi / 4.0);
  CHECK(std::abs(z - complex{-0.2928932188134525, -0.2928932188134525}) < 1e-12);
}

TEST_CASE("containment by winding number") {
  const CurvilinearPolygon poly = build_gauss_domain(make_params(0.3, 0.3));
  CHECK(contains(poly, complex{1.2, 1.2}));
  CHECK(!contains(poly, complex{0.2, 0.2}));   // inside Gamma_st
  CHECK(!contains(poly, complex{3.5, 0.1}));   // outside Gamma_1
  const CurvilinearPolygon pent = build_gauss_domain(make_params(0.66, 0.66));
  CHECK(contains(pent, complex{2.5, 2.5}));
  CHECK(!contains(pent, complex{0.5, 0.5}));   // only p2-side component counts
}

TEST_CASE("interior angle of the unused crossing pair stays out of the domain") {
  // In C4 the Gamma_1/Gamma_st crossings exist but lie below the real axis;
  // the pentagon must not have picked them as vertices.
  const CurvilinearPolygon pent = build_gauss_domain(make_params(0.66, 0.66));
  const GammaCircles g = gamma_circles(make_params(0.66, 0.66));
  for (complex q : circle_intersections(g.g1, g.gst)) {
    CHECK(q.imag() < 0.0);
    for (complex v : pent.vertices) CHECK(std::abs(q - v) > 1e-3);
  }
}
