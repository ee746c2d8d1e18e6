#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "minsurf/fields.hpp"
#include "minsurf/jet.hpp"
#include "minsurf/operators.hpp"

using minsurf::Jet2;

namespace {

Jet2 triple_product_jet(double a, double b, double c) {
  auto xs = minsurf::seed_point(std::vector<double>{a, b, c});
  return xs[0] * xs[1] * xs[2];
}

Jet2 sphere_jet(double a, double b, double c) {
  auto xs = minsurf::seed_point(std::vector<double>{a, b, c});
  return xs[0] * xs[0] + xs[1] * xs[1] + xs[2] * xs[2] - 1.0;
}

}  // namespace

TEST_SUITE("operators") {

TEST_CASE("monomial x1 x2 x3 at the ones point") {
  Jet2 j = triple_product_jet(1.0, 1.0, 1.0);
  CHECK(minsurf::grad_norm_sq(j) == doctest::Approx(3.0));
  CHECK(minsurf::laplacian(j) == doctest::Approx(0.0));
  CHECK(minsurf::inf_laplacian(j) == doctest::Approx(6.0));
  CHECK(minsurf::one_laplacian(j) == doctest::Approx(-6.0));
}

TEST_CASE("sphere field at a pole") {
  Jet2 j = sphere_jet(1.0, 0.0, 0.0);
  CHECK(minsurf::grad_norm_sq(j) == doctest::Approx(4.0));
  CHECK(minsurf::laplacian(j) == doctest::Approx(6.0));
  CHECK(minsurf::inf_laplacian(j) == doctest::Approx(8.0));
  CHECK(minsurf::one_laplacian(j) == doctest::Approx(16.0));
  CHECK(minsurf::mean_curvature(j) == doctest::Approx(2.0));
  CHECK(minsurf::hess_frobenius_norm(j) == doctest::Approx(std::sqrt(12.0)));
}

TEST_CASE("cylinder level set has unit mean curvature") {
  auto xs = minsurf::seed_point(std::vector<double>{1.0, 0.0, 0.7});
  Jet2 j = xs[0] * xs[0] + xs[1] * xs[1];
  CHECK(minsurf::one_laplacian(j) == doctest::Approx(8.0));
  CHECK(minsurf::mean_curvature(j) == doctest::Approx(1.0));
}

TEST_CASE("mean curvature refuses critical points") {
  auto xs = minsurf::seed_point(std::vector<double>{0.0, 0.0, 0.0});
  Jet2 j = xs[0] * xs[0] + xs[1] * xs[1] + xs[2] * xs[2];
  CHECK_THROWS_AS(minsurf::mean_curvature(j), std::domain_error);
}

TEST_CASE("graph residual of the paraboloid") {
  auto xs = minsurf::seed_point(std::vector<double>{1.0, 0.0});
  Jet2 j = xs[0] * xs[0] + xs[1] * xs[1];
  CHECK(minsurf::graph_residual(j) == doctest::Approx(12.0));
}

TEST_CASE("p-laplacian interpolates the family") {
  auto xs = minsurf::seed_point(std::vector<double>{0.6, -1.1, 0.3});
  Jet2 j = xs[0] * xs[0] * xs[1] + sin(xs[2]) + xs[0] * xs[2];
  const double g2 = minsurf::grad_norm_sq(j);
  const double lap = minsurf::laplacian(j);
  const double inf = minsurf::inf_laplacian(j);
  CHECK(minsurf::p_laplacian(j, 2.0) == doctest::Approx(g2 * lap));
  CHECK(minsurf::p_laplacian(j, 1.0) == doctest::Approx(minsurf::one_laplacian(j)));
  CHECK(minsurf::p_laplacian(j, 3.5) == doctest::Approx(g2 * lap + 1.5 * inf));
}

TEST_CASE("evaluate_operators is internally consistent") {
  auto xs = minsurf::seed_point(std::vector<double>{0.4, 0.9, -0.2});
  Jet2 j = exp(xs[0]) * xs[1] + xs[2] * xs[2] * xs[0];
  const auto ops = minsurf::evaluate_operators(j);
  CHECK(ops.one_laplacian ==
        doctest::Approx(ops.grad_norm_sq * ops.laplacian - ops.inf_laplacian));
  REQUIRE(ops.mean_curvature.has_value());
  CHECK(*ops.mean_curvature ==
        doctest::Approx(ops.one_laplacian / std::pow(ops.grad_norm_sq, 1.5)));

  const auto flat = minsurf::evaluate_operators(Jet2::constant(3, 1.0));
  CHECK(!flat.mean_curvature.has_value());
}

TEST_CASE("ph residual vanishes on the helicoid") {
  const minsurf::ScalarField f = minsurf::helicoid();
  for (double t : {0.3, 1.1, 2.4}) {
    const std::vector<double> x{std::cos(t), std::sin(t), 0.5 * t};
    const auto [rl, ri] = minsurf::ph_residual(f.eval(x));
    CHECK(rl <= 1e-12);
    CHECK(ri <= 1e-12);
  }
}

}  // TEST_SUITE
