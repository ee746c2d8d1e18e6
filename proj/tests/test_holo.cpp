#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include "minsurf/fields.hpp"
#include "minsurf/holo.hpp"
#include "minsurf/operators.hpp"
#include "oracles.hpp"

using minsurf::complexd;
using minsurf::HoloField;
using minsurf::Jet2;
using minsurf::ScalarField;

namespace {

std::vector<complexd> jitter_z(std::mt19937_64& rng, int m, double radius) {
  std::uniform_real_distribution<double> u(-radius, radius);
  std::vector<complexd> z(static_cast<std::size_t>(m));
  for (auto& v : z) v = complexd(u(rng), u(rng));
  return z;
}

std::vector<double> unpack(std::span<const complexd> z) {
  std::vector<double> x(2 * z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    x[i] = z[i].real();
    x[z.size() + i] = z[i].imag();
  }
  return x;
}

}  // namespace

TEST_SUITE("holo") {

TEST_CASE("clifford quadric frozen jet and weight") {
  const HoloField h = minsurf::holo_clifford(2);
  CHECK(h.name() == "clifford(m=2)");
  CHECK(h.dim() == 2);
  CHECK(h.real_dim() == 4);

  const std::vector<complexd> z{complexd(1.0, 2.0), complexd(-1.0, 1.0)};
  const auto cj = h.eval(z);
  CHECK(std::abs(cj.value() - complexd(-3.0, 2.0)) < 1e-14);
  CHECK(std::abs(cj.grad(0) - complexd(2.0, 4.0)) < 1e-14);
  CHECK(std::abs(cj.hess(0, 0) - complexd(2.0, 0.0)) < 1e-14);
  CHECK(std::abs(cj.hess(0, 1)) == 0.0);

  const auto t = minsurf::tm_residual(h, z);
  CHECK(t.imag_defect <= 1e-14);
  REQUIRE(t.mu.has_value());
  CHECK(*t.mu == doctest::Approx(8.0).epsilon(1e-12));
  CHECK(h.expected_mu()(z) == 8.0);
}

TEST_CASE("exponential weight is p^4 exp(2 p Re z)") {
  const double p = 1.7;
  const HoloField h = minsurf::holo_exp(p);
  std::mt19937_64 rng(21);
  for (int k = 0; k < 20; ++k) {
    auto z = jitter_z(rng, 1, 1.2);
    if (h.excluded(z)) continue;
    const auto t = minsurf::tm_residual(h, z);
    const double want = std::pow(p, 4.0) * std::exp(2.0 * p * z[0].real());
    CHECK(t.imag_defect <= 1e-12);
    REQUIRE(t.mu.has_value());
    CHECK(*t.mu == doctest::Approx(want).epsilon(1e-10));
  }
}

TEST_CASE("monomial weight formula and lawson delegation") {
  const HoloField mono = minsurf::holo_monomial({1, 2});
  const HoloField law = minsurf::holo_lawson(1, 2);
  CHECK(law.name() == "lawson(p=1,q=2)");
  std::mt19937_64 rng(22);
  for (int k = 0; k < 20; ++k) {
    auto z = jitter_z(rng, 2, 1.5);
    if (mono.excluded(z) || law.excluded(z)) continue;
    CHECK(std::abs(mono.eval(z).value() - law.eval(z).value()) < 1e-13);
    const auto t = minsurf::tm_residual(law, z);
    CHECK(t.imag_defect <= 1e-12);
    REQUIRE(t.mu.has_value());
    CHECK(*t.mu == doctest::Approx(law.expected_mu()(z)).epsilon(1e-9));
  }
  // z1 z2 z3 has mu = 2 |z|^2
  const HoloField triple = minsurf::holo_monomial({1, 1, 1});
  const std::vector<complexd> z{complexd(1.0, 0.0), complexd(1.0, 0.0), complexd(1.0, 0.0)};
  CHECK(triple.expected_mu()(z) == doctest::Approx(6.0));
  const auto t = minsurf::tm_residual(triple, z);
  CHECK(*t.mu == doctest::Approx(6.0));
}

TEST_CASE("binomial principal branch and its cut guard") {
  const HoloField h = minsurf::holo_binomial(complexd(1.0), complexd(2.0), 0.5);
  const std::vector<complexd> zero{complexd(0.0, 0.0)};
  CHECK(std::abs(h.eval(zero).value() - std::sqrt(2.0)) < 1e-14);
  CHECK(!h.excluded(zero));
  CHECK(h.excluded(std::vector<complexd>{complexd(-2.5, 0.0)}));
  CHECK(!h.excluded(std::vector<complexd>{complexd(-2.5, 2.0)}));

  std::mt19937_64 rng(23);
  for (int k = 0; k < 20; ++k) {
    auto z = jitter_z(rng, 1, 1.5);
    if (h.excluded(z)) continue;
    CHECK(minsurf::tm_residual(h, z).imag_defect <= 1e-11);
  }
}

TEST_CASE("determinant field") {
  const HoloField h = minsurf::holo_det(2);
  CHECK(h.dim() == 4);
  const std::vector<complexd> z{complexd(1.0), complexd(2.0), complexd(3.0),
                                complexd(4.0)};
  CHECK(std::abs(h.eval(z).value() - complexd(-2.0)) < 1e-14);

  std::mt19937_64 rng(24);
  int tested = 0;
  while (tested < 15) {
    auto z2 = jitter_z(rng, 4, 1.5);
    if (h.excluded(z2)) continue;
    const auto t = minsurf::tm_residual(h, z2);
    CHECK(t.imag_defect <= 1e-12);
    // the 2x2 determinant quadric carries the constant weight 2
    REQUIRE(t.mu.has_value());
    CHECK(*t.mu == doctest::Approx(2.0).epsilon(1e-10));
    ++tested;
  }

  const HoloField h3 = minsurf::holo_det(3);
  CHECK(h3.dim() == 9);
  const auto t3 = minsurf::tm_residual(
      h3, std::vector<complexd>{complexd(2, 1), complexd(0, 1), complexd(1, 0),
                                complexd(0, 0), complexd(3, 0), complexd(1, 1),
                                complexd(1, 0), complexd(0, 2), complexd(2, 0)});
  CHECK(t3.imag_defect <= 1e-12);

  CHECK_THROWS_AS(minsurf::holo_det(5), std::invalid_argument);
}

TEST_CASE("closure: power, product, quotient") {
  const HoloField c2 = minsurf::holo_clifford(2);
  const HoloField e1 = minsurf::holo_exp(1.0);

  const HoloField sq = minsurf::holo_power(c2, complexd(1.0), 2.0);
  const HoloField prod = minsurf::holo_product(c2, e1);
  const HoloField quot = minsurf::holo_quotient(c2, e1);
  CHECK(prod.dim() == 3);
  CHECK(quot.dim() == 3);

  std::mt19937_64 rng(25);
  int tested = 0;
  while (tested < 15) {
    auto z = jitter_z(rng, 3, 1.2);
    if (prod.excluded(z) || quot.excluded(z)) continue;
    const std::vector<complexd> z2{z[0], z[1]};
    if (sq.excluded(z2)) continue;
    const complexd a = c2.eval(z2).value();
    const complexd b = std::exp(z[2]);
    CHECK(std::abs(sq.eval(z2).value() - a * a) < 1e-12);
    CHECK(std::abs(prod.eval(z).value() - a * b) < 1e-12);
    CHECK(std::abs(quot.eval(z).value() - a / b) < 1e-12);
    CHECK(minsurf::tm_residual(sq, z2).imag_defect <= 1e-11);
    CHECK(minsurf::tm_residual(prod, z).imag_defect <= 1e-11);
    CHECK(minsurf::tm_residual(quot, z).imag_defect <= 1e-11);
    ++tested;
  }
}

TEST_CASE("real and imaginary parts match finite differences") {
  const HoloField h = minsurf::holo_clifford(2);
  const ScalarField u = minsurf::re_field(h);
  const ScalarField v = minsurf::im_field(h);
  CHECK(u.name() == "re(clifford(m=2))");
  CHECK(v.name() == "im(clifford(m=2))");
  CHECK(u.dim() == 4);

  auto uval = [&](std::span<const double> x) { return u.eval(x).value(); };
  auto vval = [&](std::span<const double> x) { return v.eval(x).value(); };

  std::mt19937_64 rng(26);
  int tested = 0;
  while (tested < 10) {
    auto z = jitter_z(rng, 2, 1.5);
    if (h.excluded(z)) continue;
    const auto x = unpack(z);
    const Jet2 ju = u.eval(x);
    const auto gu = oracle::fd_gradient(uval, x);
    const auto hu = oracle::fd_hessian(uval, x);
    for (int i = 0; i < 4; ++i)
      CHECK(ju.grad(i) == doctest::Approx(gu[(std::size_t)i]).epsilon(1e-7));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        CHECK(ju.hess(i, j) ==
              doctest::Approx(hu[(std::size_t)(4 * i + j)]).epsilon(1e-5));

    const Jet2 jv = v.eval(x);
    const auto gv = oracle::fd_gradient(vval, x);
    const auto hv = oracle::fd_hessian(vval, x);
    for (int i = 0; i < 4; ++i)
      CHECK(jv.grad(i) == doctest::Approx(gv[(std::size_t)i]).epsilon(1e-7));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        CHECK(jv.hess(i, j) ==
              doctest::Approx(hv[(std::size_t)(4 * i + j)]).epsilon(1e-5));
    ++tested;
  }
}

TEST_CASE("twin identities for real and imaginary parts") {
  std::mt19937_64 rng(27);
  for (const HoloField& h :
       {minsurf::holo_clifford(2), minsurf::holo_lawson(1, 2), minsurf::holo_exp(1.0)}) {
    const ScalarField u = minsurf::re_field(h);
    const ScalarField v = minsurf::im_field(h);
    int tested = 0;
    while (tested < 15) {
      auto z = jitter_z(rng, h.dim(), 1.5);
      if (h.excluded(z)) continue;
      const auto x = unpack(z);
      const auto t = minsurf::twin_residual(u, v, x);
      CHECK(t.max_normalized() <= 1e-11);
      ++tested;
    }
  }
}

TEST_CASE("1-laplacian eigenrelation with the recovered weight") {
  const HoloField h = minsurf::holo_clifford(2);
  const ScalarField u = minsurf::re_field(h);
  std::mt19937_64 rng(28);
  int tested = 0;
  while (tested < 15) {
    auto z = jitter_z(rng, 2, 1.5);
    if (h.excluded(z)) continue;
    const auto t = minsurf::tm_residual(h, z);
    REQUIRE(t.mu.has_value());
    const Jet2 ju = u.eval(unpack(z));
    const double lhs = minsurf::one_laplacian(ju);
    const double rhs = -*t.mu * ju.value();
    CHECK(std::abs(lhs - rhs) / (1.0 + std::abs(lhs) + std::abs(rhs)) <= 1e-11);
    ++tested;
  }
}

TEST_CASE("argument field generalizes the polar angle") {
  const HoloField lin = minsurf::holo_linear(1, {complexd(1.0)}, complexd(0.0));
  const ScalarField a = minsurf::arg_field(lin);
  const ScalarField p = minsurf::polar_angle(2, 0, 1);
  CHECK(a.name() == "arg(linear(m=1))");
  const std::vector<double> x{0.7, -0.3};
  const Jet2 ja = a.eval(x);
  const Jet2 jp = p.eval(x);
  CHECK(ja.value() == doctest::Approx(jp.value()));
  for (int i = 0; i < 2; ++i) CHECK(ja.grad(i) == doctest::Approx(jp.grad(i)));
  for (int i = 0; i < 2; ++i)
    for (int j = i; j < 2; ++j) CHECK(ja.hess(i, j) == doctest::Approx(jp.hess(i, j)));
}

TEST_CASE("argument graphs of catalog members are minimal") {
  std::mt19937_64 rng(29);
  for (const HoloField& h : {minsurf::holo_exp(1.0), minsurf::holo_lawson(1, 2),
                             minsurf::holo_monomial({1, 1, 1})}) {
    int tested = 0;
    while (tested < 15) {
      auto z = jitter_z(rng, h.dim(), 1.5);
      if (h.excluded(z)) continue;
      CHECK(std::abs(minsurf::arg_graph_residual(h, unpack(z))) <= 1e-10);
      ++tested;
    }
  }
}

TEST_CASE("tm residual omits the weight at a zero of the field") {
  const HoloField h = minsurf::holo_monomial({1, 1});
  const std::vector<complexd> z{complexd(0.0, 0.0), complexd(1.0, 0.0)};
  const auto t = minsurf::tm_residual(h, z);
  CHECK(!t.mu.has_value());
}

TEST_CASE("trivial linear form is rejected") {
  CHECK_THROWS_AS(minsurf::holo_linear(2, {complexd(0.0), complexd(0.0)}, complexd(0.0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(minsurf::holo_linear(2, {complexd(1.0)}, complexd(0.0)),
                  std::invalid_argument);
}

}  // TEST_SUITE
