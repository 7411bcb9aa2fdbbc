#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "conelike/quadrature.hpp"

using namespace conelike;

TEST_CASE("gauss-legendre integrates monomials exactly up to degree 2n-1") {
  const QuadRule& rule = gauss_legendre(16);
  for (int k = 0; k <= 31; ++k) {
    double sum = 0.0;
    for (size_t i = 0; i < rule.x.size(); ++i) sum += rule.w[i] * std::pow(rule.x[i], k);
    const double exact = (k % 2 == 0) ? 2.0 / (k + 1) : 0.0;
    CHECK(std::abs(sum - exact) < 1e-14);
  }
}

TEST_CASE("gauss-legendre nodes are symmetric, weights sum to 2") {
  const QuadRule& rule = gauss_legendre(21);
  double wsum = 0.0;
  for (double w : rule.w) wsum += w;
  CHECK(wsum == doctest::Approx(2.0).epsilon(1e-15));
  for (size_t i = 0; i < rule.x.size(); ++i)
    CHECK(rule.x[i] == doctest::Approx(-rule.x[rule.x.size() - 1 - i]).epsilon(1e-13));
}

TEST_CASE("gauss-jacobi total mass matches the beta function") {
  struct Case {
    double a, b;
  } cases[] = {{-0.5, -0.75}, {0.3, -0.9}, {2.0, 0.0}, {-0.3918, -0.8874}};
  for (const auto& c : cases) {
    const QuadRule& rule = gauss_jacobi(20, c.a, c.b);
    double wsum = 0.0;
    for (double w : rule.w) wsum += w;
    const double exact = std::pow(2.0, c.a + c.b + 1.0) * std::beta(c.a + 1.0, c.b + 1.0);
    CHECK(wsum == doctest::Approx(exact).epsilon(1e-13));
  }
}

TEST_CASE("gauss-jacobi handles a polynomial against a singular weight") {
  // int_{-1}^{1} (1-x)^{-1/2} (1+x)^{-1/2} x^2 dx = pi/2  (Chebyshev moment).
  const QuadRule& rule = gauss_jacobi(12, -0.5, -0.5);
  double sum = 0.0;
  for (size_t i = 0; i < rule.x.size(); ++i) sum += rule.w[i] * rule.x[i] * rule.x[i];
  CHECK(sum == doctest::Approx(kPi / 2.0).epsilon(1e-14));
}

TEST_CASE("rule cache returns the same object") {
  const QuadRule* r1 = &gauss_jacobi(24, -0.39, 0.0);
  const QuadRule* r2 = &gauss_jacobi(24, -0.39, 0.0);
  CHECK(r1 == r2);
}

TEST_CASE("segment integration of an entire function") {
  const complex b{1.0, 1.0};
  complex got = integrate_segment([](complex z) { return std::exp(z); }, 0.0, b, 0, 0, 1e-13);
  complex exact = std::exp(b) - 1.0;
  CHECK(std::abs(got - exact) < 1e-12);
}

TEST_CASE("segment integration with one singular endpoint") {
  // int_0^1 z^p dz = 1/(p+1), with the power included in the integrand.
  const double p = -0.3918;
  complex got = integrate_segment([p](complex z) { return std::pow(z, p); }, 0.0, 1.0, p, 0,
                                  1e-13);
  CHECK(std::abs(got - 1.0 / (p + 1.0)) < 1e-12);
}

TEST_CASE("segment integration with two singular endpoints") {
  // int_0^1 z^p (1-z)^q dz = B(p+1, q+1).
  const double p = -0.5, q = -0.25;
  auto f = [p, q](complex z) { return std::pow(z, p) * std::pow(1.0 - z, q); };
  complex got = integrate_segment(f, 0.0, 1.0, p, q, 1e-13);
  CHECK(std::abs(got - std::beta(p + 1.0, q + 1.0)) < 1e-11);
}

TEST_CASE("segment integration along a rotated ray keeps the principal branch") {
  // int_0^i z^p dz = i^{p+1}/(p+1) with principal powers.
  const double p = -0.3;
  complex got =
      integrate_segment([p](complex z) { return std::pow(z, p); }, 0.0, kI, p, 0, 1e-13);
  complex exact = std::pow(kI, p + 1.0) / (p + 1.0);
  CHECK(std::abs(got - exact) < 1e-12);
}

TEST_CASE("adaptive split resolves a sharp interior peak") {
  // int_{-1}^{1} 1/(1e-3 + z^2) dz = 2 atan(1/sqrt(1e-3))/sqrt(1e-3).
  const double eps = 1e-3;
  auto f = [eps](complex z) { return 1.0 / (eps + z * z); };
  complex got = integrate_segment(f, -1.0, 1.0, 0, 0, 1e-12);
  const double exact = 2.0 * std::atan(1.0 / std::sqrt(eps)) / std::sqrt(eps);
  CHECK(std::abs(got - exact) < 1e-9);
}
