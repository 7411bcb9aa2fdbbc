#include "conelike/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace conelike {

namespace {

// Golub-Welsch: nodes are eigenvalues of the symmetric tridiagonal Jacobi matrix,
// weights are mu0 * (first eigenvector component)^2. Covers Legendre as (0,0).
QuadRule build_jacobi(int n, double a, double b) {
  if (n < 1) fail(Errc::OutOfRange, "quadrature order must be >= 1");
  if (a <= -1.0 || b <= -1.0) fail(Errc::OutOfRange, "Jacobi exponents must exceed -1");

  Eigen::VectorXd diag(n), sub(n > 1 ? n - 1 : 1);
  const double apb = a + b;
  diag[0] = (b - a) / (apb + 2.0);
  for (int k = 1; k < n; ++k) {
    const double d = 2.0 * k + apb;
    diag[k] = (b * b - a * a) / (d * (d + 2.0));
  }
  if (n > 1) {
    sub[0] = std::sqrt(4.0 * (a + 1.0) * (b + 1.0) / ((apb + 2.0) * (apb + 2.0) * (apb + 3.0)));
    for (int k = 2; k < n; ++k) {
      const double d = 2.0 * k + apb;
      sub[k - 1] =
          std::sqrt(4.0 * k * (k + a) * (k + b) * (k + apb) / (d * d * (d * d - 1.0)));
    }
  }

  // Total mass of the weight: 2^(a+b+1) * B(a+1, b+1).
  const double mu0 = std::exp((apb + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) +
                              std::lgamma(b + 1.0) - std::lgamma(apb + 2.0));

  QuadRule rule;
  rule.x.resize(n);
  rule.w.resize(n);
  if (n == 1) {
    rule.x[0] = diag[0];
    rule.w[0] = mu0;
    return rule;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  for (int i = 0; i < n; ++i) {
    rule.x[i] = es.eigenvalues()[i];
    const double v0 = es.eigenvectors()(0, i);
    rule.w[i] = mu0 * v0 * v0;
  }
  return rule;
}

const QuadRule& cached_rule(int n, double a, double b) {
  static std::mutex mu;
  static std::map<std::tuple<int, double, double>, std::unique_ptr<QuadRule>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{n, a, b}];
  if (!slot) slot = std::make_unique<QuadRule>(build_jacobi(n, a, b));
  return *slot;
}

// One pass of the (possibly weighted) rule over [a,b]. Endpoint powers are part of
// the integrand f; the Jacobi weight absorbs them, so divide them back out at the
// nodes: f(z) * (1-x)^-ea_right * (1+x)^-ea_left stays smooth.
complex rule_pass(const std::function<complex(complex)>& f, complex a, complex b,
                  double expo_a, double expo_b, int n) {
  const QuadRule& rule = gauss_jacobi(n, expo_b, expo_a);
  const complex mid = 0.5 * (a + b), half = 0.5 * (b - a);
  const double scale = std::abs(half);
  complex sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = rule.x[i];
    complex val = f(mid + x * half);
    if (expo_a != 0.0) val *= std::pow((1.0 + x) * scale, -expo_a);
    if (expo_b != 0.0) val *= std::pow((1.0 - x) * scale, -expo_b);
    sum += rule.w[i] * val;
  }
  // Jacobi mass lives on [-1,1]; restore the segment measure including the powers.
  return sum * half * std::pow(scale, expo_a + expo_b);
}

complex integrate_recursive(const std::function<complex(complex)>& f, complex a, complex b,
                            double expo_a, double expo_b, double abs_tol, int n, int depth) {
  const complex coarse = rule_pass(f, a, b, expo_a, expo_b, n);
  const complex fine = rule_pass(f, a, b, expo_a, expo_b, 2 * n);
  if (std::abs(fine - coarse) <= abs_tol || depth >= 24) return fine;

  const complex mid = 0.5 * (a + b);
  // Splitting keeps each singular power attached to its own endpoint.
  return integrate_recursive(f, a, mid, expo_a, 0.0, 0.5 * abs_tol, n, depth + 1) +
         integrate_recursive(f, mid, b, 0.0, expo_b, 0.5 * abs_tol, n, depth + 1);
}

}  // namespace

const QuadRule& gauss_legendre(int n) { return cached_rule(n, 0.0, 0.0); }

const QuadRule& gauss_jacobi(int n, double alpha, double beta) {
  return cached_rule(n, alpha, beta);
}

complex integrate_segment(const std::function<complex(complex)>& f, complex a, complex b,
                          double expo_a, double expo_b, double tol, int base_n) {
  if (a == b) return 0.0;
  const complex rough = rule_pass(f, a, b, expo_a, expo_b, base_n);
  const double abs_tol = tol * std::max(1.0, std::abs(rough));
  return integrate_recursive(f, a, b, expo_a, expo_b, abs_tol, base_n, 0);
}

}  // namespace conelike
