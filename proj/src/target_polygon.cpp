#include "conelike/target_polygon.hpp"

#include <cmath>

namespace conelike {

complex target_point(const TargetPolygon& p, int edge, double frac) {
  const int n = static_cast<int>(p.vertices.size());
  if (edge < 0 || edge >= n) fail(Errc::OutOfRange, "target edge index out of range");
  const complex a = p.vertices[edge], b = p.vertices[(edge + 1) % n];
  return a + frac * (b - a);
}

double target_edge_length(const TargetPolygon& p, int edge) {
  const int n = static_cast<int>(p.vertices.size());
  return std::abs(p.vertices[(edge + 1) % n] - p.vertices[edge]);
}

std::vector<double> target_interior_angles(const TargetPolygon& p) {
  const int n = static_cast<int>(p.vertices.size());
  std::vector<double> out(n);
  for (int k = 0; k < n; ++k) {
    const complex in = p.vertices[k] - p.vertices[(k + n - 1) % n];
    const complex go = p.vertices[(k + 1) % n] - p.vertices[k];
    out[k] = kPi - std::arg(go / in);
  }
  return out;
}

int edge_index(const TargetPolygon& p, EdgeLabel l) {
  for (int k = 0; k < static_cast<int>(p.labels.size()); ++k)
    if (p.labels[k] == l) return k;
  fail(Errc::OutOfRange, "target polygon has no such edge label");
}

int edge_index(const CurvilinearPolygon& p, EdgeLabel l) {
  for (int k = 0; k < static_cast<int>(p.edges.size()); ++k)
    if (p.edges[k].label == l) return k;
  fail(Errc::OutOfRange, "domain has no such edge label");
}

TargetPolygon triangle_target(RegionLabel region) {
  TargetPolygon p;
  p.region = region;
  if (region == RegionLabel::ThetaPlus) {
    p.vertices = {complex(0.0, 0.0), complex(0.0, 1.0), complex(-1.0, 0.0)};
  } else if (region == RegionLabel::ThetaMinus) {
    p.vertices = {complex(0.0, 0.0), complex(1.0, 0.0), complex(0.0, 1.0)};
  } else {
    fail(Errc::WrongRegion, "triangle target exists only for the Theta regions");
  }
  p.labels = {EdgeLabel::Y1, EdgeLabel::Est, EdgeLabel::Y3};
  return p;
}

namespace {

constexpr double kRt2 = 1.4142135623730951;

}  // namespace

TargetPolygon pentagon_target(double l, double m) {
  if (!(l > 0.0) || !(m > 1.0 / kRt2) || !(m < l + kRt2))
    fail(Errc::OutOfDomain, "pentagon lengths outside the admissible wedge");
  TargetPolygon p;
  p.region = RegionLabel::C4;
  const double h = 1.0 / kRt2;
  p.vertices = {complex(0.0, 0.0), complex(1.0, 0.0), complex(1.0 + l * h, l * h),
                complex(1.0 + (l - m) * h, (l + m) * h), complex(0.0, m * kRt2 - 1.0)};
  p.labels = {EdgeLabel::Y1, EdgeLabel::Ex, EdgeLabel::Est, EdgeLabel::Ey, EdgeLabel::Y3};
  return p;
}

TargetPolygon quad_target(RegionLabel region, double len) {
  TargetPolygon p;
  p.region = region;
  const double h = 1.0 / kRt2;
  if (region == RegionLabel::C2Plus) {
    const double m = len;
    if (!(m > 1.0 / kRt2) || !(m < kRt2))
      fail(Errc::OutOfDomain, "quad length outside the admissible interval");
    p.vertices = {complex(0.0, 0.0), complex(1.0, 0.0), complex(1.0 - m * h, m * h),
                  complex(0.0, m * kRt2 - 1.0)};
    p.labels = {EdgeLabel::Y1, EdgeLabel::Est, EdgeLabel::Ey, EdgeLabel::Y3};
  } else if (region == RegionLabel::C2Minus) {
    const double l = len;
    if (!(l > 0.0)) fail(Errc::OutOfDomain, "quad length outside the admissible interval");
    p.vertices = {complex(0.0, 0.0), complex(1.0, 0.0), complex(1.0 + l * h, l * h),
                  complex(0.0, l * kRt2 + 1.0)};
    p.labels = {EdgeLabel::Y1, EdgeLabel::Ex, EdgeLabel::Est, EdgeLabel::Y3};
  } else {
    fail(Errc::WrongRegion, "quad target exists only for the C2 regions");
  }
  return p;
}

}  // namespace conelike
