#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>

#include "conelike/quadrature.hpp"
#include "conelike/triangle_map.hpp"

using namespace conelike;

namespace {

bool throws_code(Errc code, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

void check_close(complex got, complex want, double tol = 1e-12) {
  CAPTURE(got.real());
  CAPTURE(got.imag());
  CAPTURE(want.real());
  CAPTURE(want.imag());
  CHECK(std::abs(got - want) <= tol * (1.0 + std::abs(want)));
}

}  // namespace

TEST_CASE("construction reproduces the corner data at (0.3, 0.3)") {
  const TriangleMap m = build_triangle_map(make_params(0.3, 0.3));
  CHECK(m.region == RegionLabel::ThetaPlus);
  CHECK(m.alpha == doctest::Approx(0.39182655203060727).epsilon(1e-14));
  CHECK(m.beta == doctest::Approx(0.38740054969078733).epsilon(1e-14));
  CHECK(m.gamma == doctest::Approx(m.beta).epsilon(1e-14));  // s = t
  CHECK(m.a == doctest::Approx(-0.083313825706090969).epsilon(1e-13));
  CHECK(m.b == doctest::Approx(0.30408672398469636).epsilon(1e-13));
  CHECK(m.c == doctest::Approx(0.60817344796939273).epsilon(1e-13));
  CHECK(m.sigma1 == doctest::Approx(1.867921840377892).epsilon(1e-13));
  CHECK(m.kappa == doctest::Approx(0.4355994549762619).epsilon(1e-12));
  check_close(m.domain.edges[0].end, {0.85776539694704373, 1.3020369086890185}, 1e-13);
  check_close(m.sigma_inf, {0.62264061345929732, 1.7610936000768843}, 1e-13);
}

TEST_CASE("rigidity: kappa * sigma(inf) lands the frame on the far vertex") {
  const TetraParams cases[] = {make_params(0.3, 0.3),  make_params(0.6, 0.6),
                               make_params(0.2, 0.4),  make_params(0.25, 0.65),
                               make_params(0.7, 0.55), make_params(0.75, 0.3)};
  for (const TetraParams& p : cases) {
    CAPTURE(p.s);
    CAPTURE(p.t);
    const TriangleMap m = build_triangle_map(p);
    const complex v2 = m.domain.edges[1].end;
    check_close(m.kappa * m.sigma_inf, mobius_frame(m, v2), 1e-12);
  }
}

TEST_CASE("frozen map values at (0.3, 0.3)") {
  const TriangleMap m = build_triangle_map(make_params(0.3, 0.3));
  check_close(tri_sigma(m, {0.5, 0.5}), {0.85073233621257908, 0.41048410998636871});
  check_close(tri_sigma(m, {0.25, 0.0}), {0.61345952185993873, 0.0});
  check_close(tri_sigma(m, {3.0, 2.0}), {1.0251693125230315, 1.0741194654060436});
  check_close(tri_map(m, {0.5, 0.5}), {1.2480086410429511, 1.3450422830768059});
  check_close(tri_map(m, {0.25, 0.0}), {1.2907766282893421, 1.5801905609828727});
  check_close(tri_map(m, {3.0, 2.0}), {1.218372262715599, 1.087671907617175});
}

TEST_CASE("frozen map values at (0.6, 0.6)") {
  const TriangleMap m = build_triangle_map(make_params(0.6, 0.6));
  CHECK(m.region == RegionLabel::ThetaMinus);
  CHECK(m.beta == doctest::Approx(0.25636789659987746).epsilon(1e-14));
  CHECK(m.a == doctest::Approx(0.047718827384818901).epsilon(1e-13));
  CHECK(m.sigma1 == doctest::Approx(2.1033197384585847).epsilon(1e-13));
  CHECK(m.kappa == doctest::Approx(0.21552361511051172).epsilon(1e-12));
  check_close(m.domain.edges[0].end, {3.0031427485629668, 1.4119860572985614}, 1e-13);
  check_close(m.sigma_inf, {0.70110657948619489, 1.9830288667567744}, 1e-13);
  check_close(tri_map(m, {0.5, 0.5}), {2.1326154147172596, 1.9852575654872266});
  check_close(tri_map(m, {0.0, 0.4}), {1.9311905097141196, 1.9750302187193419});
}

TEST_CASE("the three prevertex rays land on the three bounding circles") {
  for (const TetraParams p : {make_params(0.3, 0.3), make_params(0.6, 0.6)}) {
    CAPTURE(p.s);
    const TriangleMap m = build_triangle_map(p);
    const GammaCircles g = gamma_circles(p);
    for (const double w : {0.04, 0.3, 0.7, 0.97})
      CHECK(std::abs(tri_map(m, {w, 0.0}) - g.g1.c) == doctest::Approx(g.g1.r).epsilon(5e-13));
    for (const double w : {1.05, 1.5, 3.0, 12.0})
      CHECK(std::abs(tri_map(m, {w, 0.0}) - g.gst.c) == doctest::Approx(g.gst.r).epsilon(5e-13));
    for (const double w : {-0.03, -0.8, -4.0, -40.0})
      CHECK(std::abs(tri_map(m, {w, 0.0}) - g.g2.c) == doctest::Approx(g.g2.r).epsilon(5e-13));
  }
}

TEST_CASE("prevertices 0 and 1 hit their corners") {
  for (const TetraParams p : {make_params(0.3, 0.3), make_params(0.6, 0.6)}) {
    const TriangleMap m = build_triangle_map(p);
    check_close(tri_map(m, {0.0, 0.0}), m.p2, 1e-14);
    check_close(tri_map(m, {1.0, 0.0}), m.domain.edges[0].end, 1e-12);
  }
}

TEST_CASE("interior points map into the domain") {
  for (const TetraParams p : {make_params(0.3, 0.3), make_params(0.6, 0.6)}) {
    const TriangleMap m = build_triangle_map(p);
    for (const complex z : {complex(0.0, 1.0), complex(0.5, 0.5), complex(3.0, 2.0),
                            complex(-1.0, 2.0), complex(0.5, 0.001)})
      CHECK(contains(m.domain, tri_map(m, z)));
  }
}

TEST_CASE("derivative agrees with finite differences in two directions") {
  const TriangleMap m = build_triangle_map(make_params(0.3, 0.3));
  const double h = 1e-5;
  for (const complex z : {complex(0.5, 0.5), complex(0.3, 1.5), complex(-0.7, 0.8)}) {
    const complex d = tri_map_deriv(m, z);
    const complex fdx = (tri_map(m, z + h) - tri_map(m, z - h)) / (2.0 * h);
    const complex fdy = (tri_map(m, z + complex(0, h)) - tri_map(m, z - complex(0, h))) /
                        complex(0.0, 2.0 * h);
    check_close(fdx, d, 1e-7);
    check_close(fdy, d, 1e-7);  // equality in both directions = holomorphy
  }
}

TEST_CASE("Wronskian derivative integrates back to sigma(1)") {
  const TriangleMap m = build_triangle_map(make_params(0.3, 0.3));
  const complex integral = integrate_segment([&](complex z) { return tri_sigma_prime(m, z); },
                                             complex(0.0), complex(1.0), m.alpha - 1.0,
                                             m.beta - 1.0, 1e-13);
  // The quotient F(a,b;c;z)^{-2} carries (1-z)^beta corrections past the Jacobi
  // weight, so the endpoint convergence is algebraic; ~1e-9 is the honest floor.
  check_close(integral, complex(m.sigma1), 2e-9);
}

TEST_CASE("corner exponent at the straightened vertex is psi0/pi") {
  const TriangleMap m = build_triangle_map(make_params(0.3, 0.3));
  const double r1 = std::abs(tri_map(m, {0.0, 1e-6}) - m.p2);
  const double r2 = std::abs(tri_map(m, {0.0, 1e-9}) - m.p2);
  const double slope = std::log(r1 / r2) / std::log(1e3);
  CHECK(slope == doctest::Approx(m.alpha).epsilon(5e-3));
}

TEST_CASE("inverse round-trips interior points") {
  for (const TetraParams p : {make_params(0.3, 0.3), make_params(0.6, 0.6)}) {
    const TriangleMap m = build_triangle_map(p);
    for (const complex z : {complex(0.0, 1.0), complex(0.5, 0.5), complex(0.25, 0.03),
                            complex(3.0, 2.0)}) {
      const complex back = tri_map_inverse(m, tri_map(m, z));
      check_close(back, z, 1e-9);
    }
  }
}

TEST_CASE("non-triangular regions are rejected") {
  CHECK(throws_code(Errc::WrongRegion, [] { build_triangle_map(make_params(0.66, 0.66)); }));
  CHECK(throws_code(Errc::WrongRegion, [] { build_triangle_map(make_params(0.2, 0.85)); }));
  CHECK(throws_code(Errc::Degenerate, [] { build_triangle_map(make_params(0.5, 0.5)); }));
}
