#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "minsurf/cjet.hpp"
#include "minsurf/jet.hpp"
#include "oracles.hpp"

using minsurf::CJet2;
using minsurf::complexd;
using minsurf::Jet2;

TEST_SUITE("jets") {

TEST_CASE("variable and constant seeding") {
  Jet2 c = Jet2::constant(3, 2.5);
  CHECK(c.value() == 2.5);
  CHECK(c.grad(0) == 0.0);
  CHECK(c.hess(1, 2) == 0.0);

  Jet2 v = Jet2::variable(3, 1, -4.0);
  CHECK(v.value() == -4.0);
  CHECK(v.grad(0) == 0.0);
  CHECK(v.grad(1) == 1.0);
  CHECK(v.grad(2) == 0.0);
  CHECK(v.hess(1, 1) == 0.0);
}

TEST_CASE("packed hessian is symmetric by construction") {
  auto xs = minsurf::seed_point(std::vector<double>{1.0, 2.0, 3.0});
  Jet2 f = xs[0] * xs[1] * xs[1] + xs[2] * xs[0];
  CHECK(f.hess(0, 1) == f.hess(1, 0));
  CHECK(f.hess(0, 1) == doctest::Approx(4.0));  // d2/dx dy of x y^2 = 2y
  CHECK(f.hess(0, 2) == 1.0);
  CHECK(f.hess(1, 1) == doctest::Approx(2.0));  // 2x
}

TEST_CASE("quotient jet frozen values") {
  // f = x/y at (1,2): f = 1/2, f_x = 1/2, f_y = -1/4, f_xy = -1/4, f_yy = 1/4
  auto xs = minsurf::seed_point(std::vector<double>{1.0, 2.0});
  Jet2 f = xs[0] / xs[1];
  CHECK(f.value() == doctest::Approx(0.5));
  CHECK(f.grad(0) == doctest::Approx(0.5));
  CHECK(f.grad(1) == doctest::Approx(-0.25));
  CHECK(f.hess(0, 0) == doctest::Approx(0.0));
  CHECK(f.hess(0, 1) == doctest::Approx(-0.25));
  CHECK(f.hess(1, 1) == doctest::Approx(0.25));
}

TEST_CASE("pow with non-integer exponent frozen values") {
  // f = x^{3/2} at 4: f = 8, f' = 1.5 * 2 = 3, f'' = 0.75 / 2 = 0.375
  Jet2 x = Jet2::variable(1, 0, 4.0);
  Jet2 f = pow(x, 1.5);
  CHECK(f.value() == doctest::Approx(8.0));
  CHECK(f.grad(0) == doctest::Approx(3.0));
  CHECK(f.hess(0, 0) == doctest::Approx(0.375));
}

TEST_CASE("atan jet frozen values") {
  Jet2 x = Jet2::variable(1, 0, 1.0);
  Jet2 f = atan(x);
  CHECK(f.value() == doctest::Approx(std::numbers::pi / 4.0));
  CHECK(f.grad(0) == doctest::Approx(0.5));
  CHECK(f.hess(0, 0) == doctest::Approx(-0.5));
}

TEST_CASE("composite expression matches finite differences") {
  auto value = [](std::span<const double> x) {
    return (x[0] * x[1] + std::sin(x[2])) / (1.0 + x[0] * x[0]);
  };
  const std::vector<double> at{0.7, -1.3, 0.4};
  auto xs = minsurf::seed_point(at);
  Jet2 f = (xs[0] * xs[1] + sin(xs[2])) / (1.0 + xs[0] * xs[0]);

  CHECK(f.value() == doctest::Approx(value(at)));
  auto g = oracle::fd_gradient(value, at);
  for (int i = 0; i < 3; ++i) CHECK(f.grad(i) == doctest::Approx(g[(std::size_t)i]).epsilon(1e-8));
  auto h = oracle::fd_hessian(value, at);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(f.hess(i, j) ==
            doctest::Approx(h[(std::size_t)(3 * i + j)]).epsilon(1e-5));
}

TEST_CASE("chain rules: exp, log, sqrt, expm1 agree with identities") {
  Jet2 x = Jet2::variable(2, 0, 0.8);
  Jet2 y = Jet2::variable(2, 1, -0.3);
  Jet2 u = x * x + y + 1.5;

  Jet2 back = log(exp(u));
  CHECK(back.value() == doctest::Approx(u.value()));
  CHECK(back.grad(0) == doctest::Approx(u.grad(0)));
  CHECK(back.hess(0, 1) == doctest::Approx(u.hess(0, 1)));

  Jet2 s = sqrt(u);
  Jet2 sq = s * s;
  CHECK(sq.value() == doctest::Approx(u.value()));
  CHECK(sq.grad(1) == doctest::Approx(u.grad(1)));
  CHECK(sq.hess(0, 0) == doctest::Approx(u.hess(0, 0)));

  Jet2 em = expm1(u);
  Jet2 em2 = exp(u) - 1.0;
  CHECK(em.value() == doctest::Approx(em2.value()));
  CHECK(em.hess(0, 1) == doctest::Approx(em2.hess(0, 1)));
}

TEST_CASE("pow_int handles negative exponents") {
  Jet2 x = Jet2::variable(1, 0, 1.7);
  Jet2 a = pow_int(x + 0.5, -2);
  Jet2 b = 1.0 / ((x + 0.5) * (x + 0.5));
  CHECK(a.value() == doctest::Approx(b.value()));
  CHECK(a.grad(0) == doctest::Approx(b.grad(0)));
  CHECK(a.hess(0, 0) == doctest::Approx(b.hess(0, 0)));
}

TEST_CASE("atan2 agrees with atan of the ratio on the right half plane") {
  auto xs = minsurf::seed_point(std::vector<double>{1.2, 0.8});
  Jet2 a = atan2(xs[1], xs[0]);
  Jet2 b = atan(xs[1] / xs[0]);
  CHECK(a.value() == doctest::Approx(b.value()));
  for (int i = 0; i < 2; ++i) CHECK(a.grad(i) == doctest::Approx(b.grad(i)));
  for (int i = 0; i < 2; ++i)
    for (int j = i; j < 2; ++j) CHECK(a.hess(i, j) == doctest::Approx(b.hess(i, j)));
}

TEST_CASE("atan2 derivative field is branch-free") {
  // values jump across the negative x axis but derivatives do not
  auto up = minsurf::seed_point(std::vector<double>{-1.0, 1e-6});
  auto dn = minsurf::seed_point(std::vector<double>{-1.0, -1e-6});
  Jet2 a = atan2(up[1], up[0]);
  Jet2 b = atan2(dn[1], dn[0]);
  CHECK(std::abs(a.value() - b.value()) > 6.0);
  CHECK(a.grad(0) == doctest::Approx(b.grad(0)).epsilon(1e-4));
  CHECK(a.grad(1) == doctest::Approx(b.grad(1)).epsilon(1e-4));
}

TEST_CASE("finite reports contamination") {
  Jet2 x = Jet2::variable(1, 0, 0.0);
  CHECK(x.finite());
  // division by an exact zero throws instead of poisoning the jet
  CHECK_THROWS_AS((void)(1.0 / x), std::domain_error);
  // overflow still produces a jet, and finite() flags it
  Jet2 big = exp(Jet2::constant(1, 1000.0));
  CHECK(!big.finite());
}

TEST_CASE("complex jet product and chain match Wirtinger differences") {
  auto value = [](std::span<const complexd> z) {
    return z[0] * z[0] * z[1] + std::exp(z[0]);
  };
  const std::vector<complexd> at{complexd(0.4, -0.7), complexd(-1.1, 0.2)};
  auto zs = minsurf::seed_point(at);
  CJet2 f = zs[0] * zs[0] * zs[1] + exp(zs[0]);

  CHECK(std::abs(f.value() - value(at)) < 1e-12);
  auto g = oracle::fd_holo_gradient(value, at);
  for (int i = 0; i < 2; ++i) CHECK(std::abs(f.grad(i) - g[(std::size_t)i]) < 1e-8);
  auto h = oracle::fd_holo_hessian(value, at);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(std::abs(f.hess(i, j) - h[(std::size_t)(2 * i + j)]) < 1e-5);
}

TEST_CASE("complex principal square root") {
  CJet2 z = CJet2::variable(1, 0, complexd(3.0, 4.0));
  CJet2 f = pow(z, 0.5);
  CHECK(std::abs(f.value() - complexd(2.0, 1.0)) < 1e-12);
  // f' = 1/(2 sqrt z)
  CHECK(std::abs(f.grad(0) - 0.5 / complexd(2.0, 1.0)) < 1e-12);
}

TEST_CASE("complex quotient matches product with the inverse") {
  auto zs = minsurf::seed_point(std::vector<complexd>{complexd(1.0, 0.5), complexd(-0.3, 2.0)});
  CJet2 q = zs[0] / zs[1];
  CJet2 p = zs[0] * pow_int(zs[1], -1);
  CHECK(std::abs(q.value() - p.value()) < 1e-12);
  CHECK(std::abs(q.grad(1) - p.grad(1)) < 1e-12);
  CHECK(std::abs(q.hess(1, 1) - p.hess(1, 1)) < 1e-12);
}

TEST_CASE("pack_complex splits halves") {
  const std::vector<double> xy{1.0, 2.0, 3.0, 4.0};
  auto z = minsurf::pack_complex(xy);
  REQUIRE(z.size() == 2);
  CHECK(z[0] == complexd(1.0, 3.0));
  CHECK(z[1] == complexd(2.0, 4.0));
  CHECK_THROWS_AS(minsurf::pack_complex(std::vector<double>{1.0, 2.0, 3.0}),
                  std::invalid_argument);
}

}  // TEST_SUITE
