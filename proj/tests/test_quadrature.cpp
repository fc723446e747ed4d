#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "swvortex/quadrature.hpp"

using swvortex::GaussLegendre;

TEST_CASE("Gauss-Legendre nodes and weights agree with the boost tables") {
  using boost::math::quadrature::gauss;
  const GaussLegendre r4(4);
  const auto& a = gauss<double, 4>::abscissa();
  const auto& w = gauss<double, 4>::weights();
  // boost stores the nonnegative half, ascending; ours is ascending on [-1, 1].
  CHECK(r4.nodes[2] == doctest::Approx(a[0]).epsilon(1e-15));
  CHECK(r4.nodes[3] == doctest::Approx(a[1]).epsilon(1e-15));
  CHECK(r4.nodes[1] == doctest::Approx(-a[0]).epsilon(1e-15));
  CHECK(r4.weights[2] == doctest::Approx(w[0]).epsilon(1e-15));
  CHECK(r4.weights[3] == doctest::Approx(w[1]).epsilon(1e-15));

  const GaussLegendre r7(7);
  const auto& a7 = gauss<double, 7>::abscissa();
  const auto& w7 = gauss<double, 7>::weights();
  CHECK(std::abs(r7.nodes[3]) < 1e-15);
  CHECK(r7.weights[3] == doctest::Approx(w7[0]).epsilon(1e-14));
  for (int k = 1; k < 4; ++k) {
    CHECK(r7.nodes[3 + k] == doctest::Approx(a7[k]).epsilon(1e-14));
    CHECK(r7.weights[3 + k] == doctest::Approx(w7[k]).epsilon(1e-14));
  }
}

TEST_CASE("n-point rule integrates polynomials of degree 2n-1 exactly") {
  for (std::size_t n = 1; n <= 12; ++n) {
    const GaussLegendre rule(n);
    double wsum = 0.0;
    for (double w : rule.weights) wsum += w;
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
    for (std::size_t d = 0; d <= 2 * n - 1; ++d) {
      const auto f = [d](double x) { return std::pow(x, static_cast<double>(d)); };
      // Integral of x^d over [0.3, 1.7].
      const double exact = (std::pow(1.7, d + 1.0) - std::pow(0.3, d + 1.0)) / (d + 1.0);
      CHECK(rule.integrate(f, 0.3, 1.7) == doctest::Approx(exact).epsilon(1e-13));
    }
  }
}

TEST_CASE("composite rule converges on a smooth integrand") {
  const GaussLegendre rule(4);
  const double exact = 2.0;  // integral of sin over [0, pi]
  const double e1 = std::abs(swvortex::composite_integrate(rule, 2, [](double x) { return std::sin(x); },
                                                           0.0, std::numbers::pi) - exact);
  const double e2 = std::abs(swvortex::composite_integrate(rule, 4, [](double x) { return std::sin(x); },
                                                           0.0, std::numbers::pi) - exact);
  CHECK(e2 < e1);
  CHECK(std::log2(e1 / e2) == doctest::Approx(8.0).epsilon(0.05));
  CHECK(swvortex::composite_integrate(rule, 64, [](double x) { return std::sin(x); }, 0.0,
                                      std::numbers::pi) == doctest::Approx(exact).epsilon(1e-15));
}

TEST_CASE("rule construction rejects n = 0") {
  CHECK_THROWS_AS(GaussLegendre(0), std::invalid_argument);
}
