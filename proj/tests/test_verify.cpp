#include <doctest.h>

#include <cmath>
#include <json.hpp>
#include <stdexcept>
#include <vector>

#include "minsurf/expr.hpp"
#include "minsurf/fields.hpp"
#include "minsurf/holo.hpp"
#include "minsurf/jordan.hpp"
#include "minsurf/verify.hpp"

using minsurf::BoxSampler;
using minsurf::CheckKind;
using minsurf::CheckTarget;
using minsurf::SampleConfig;

namespace {

CheckTarget scalar_target(minsurf::ScalarField f) {
  CheckTarget t;
  t.spec = f.name();
  t.scalar = std::move(f);
  return t;
}

CheckTarget holo_target(minsurf::HoloField h) {
  CheckTarget t;
  t.spec = h.name();
  t.holo = std::move(h);
  return t;
}

CheckTarget twin_target(std::pair<minsurf::ScalarField, minsurf::ScalarField> p) {
  CheckTarget t;
  t.spec = p.first.name() + "/" + p.second.name();
  t.twins = std::move(p);
  return t;
}

nlohmann::json parsed_without_runtime(const minsurf::VerificationReport& r) {
  auto j = nlohmann::json::parse(r.json_string());
  j.erase("runtime_ms");
  return j;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("box sampler is deterministic and in range") {
  BoxSampler a(7);
  BoxSampler b(7);
  for (int i = 0; i < 200; ++i) {
    const double u = a.unit();
    CHECK(u == b.unit());
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  BoxSampler c(7);
  const auto p = c.point(5, 1.5);
  REQUIRE(p.size() == 5);
  for (double v : p) {
    CHECK(v >= -1.5);
    CHECK(v <= 1.5);
  }
  BoxSampler d(8);
  CHECK(c.point(3, 2.0) != d.point(3, 2.0));
}

TEST_CASE("perfectly harmonic check passes on the helicoid") {
  SampleConfig cfg;
  cfg.seed = 11;
  cfg.count = 150;
  const auto r = minsurf::run_check(CheckKind::ph, scalar_target(minsurf::helicoid()),
                                    cfg, 1e-10);
  CHECK(r.pass);
  CHECK(r.n_samples == 150);
  CHECK(r.reason.empty());
  CHECK(r.max_residual <= 1e-10);
  CHECK(r.dim == 3);
  CHECK(r.check == "ph");
  CHECK(r.worst_point.size() == 3);
}

TEST_CASE("eigen check uses the declared weight") {
  SampleConfig cfg;
  cfg.seed = 3;
  cfg.count = 80;
  const auto r = minsurf::run_check(
      CheckKind::eigen, scalar_target(minsurf::hsiang_field(1)), cfg, 1e-10);
  CHECK(r.pass);
  CHECK(r.n_samples == 80);

  // a field with no weight declaration cannot run this check
  const auto bare = minsurf::expression_field("x1*x2", 2);
  CHECK_THROWS_AS(
      (void)minsurf::run_check(CheckKind::eigen, scalar_target(bare), cfg, 1e-10),
      std::invalid_argument);
}

TEST_CASE("twin check passes on the complexified pair") {
  SampleConfig cfg;
  cfg.seed = 5;
  cfg.count = 60;
  const auto r = minsurf::run_check(
      CheckKind::twin, twin_target(minsurf::f0_complexified_twins()), cfg, 1e-9);
  CHECK(r.pass);
  CHECK(r.n_samples == 60);
}

TEST_CASE("tm check passes with recovered weight comparison") {
  SampleConfig cfg;
  cfg.seed = 9;
  cfg.count = 60;
  const auto r = minsurf::run_check(CheckKind::tm, holo_target(minsurf::holo_clifford(2)),
                                    cfg, 1e-9);
  CHECK(r.pass);
  CHECK(r.dim == 4);
}

TEST_CASE("mean curvature check accepts minimal level sets only") {
  SampleConfig cfg;
  cfg.seed = 13;
  cfg.count = 50;
  const auto ok = minsurf::run_check(CheckKind::mincurv,
                                     scalar_target(minsurf::helicoid()), cfg, 1e-8, 0.0);
  CHECK(ok.pass);
  CHECK(ok.n_samples == 50);

  // cylinder of radius 1: mean curvature is identically 1, far above any
  // sensible tolerance
  const auto cyl = minsurf::expression_field("x1^2+x2^2", 3);
  const auto bad = minsurf::run_check(CheckKind::mincurv, scalar_target(cyl), cfg,
                                      1e-6, 1.0);
  CHECK(!bad.pass);
  CHECK(bad.reason == "max residual above tolerance");
  CHECK(bad.max_residual > 0.1);
}

TEST_CASE("graph check passes for affine and angular graphs") {
  SampleConfig cfg;
  cfg.seed = 17;
  cfg.count = 60;
  const auto flat = minsurf::run_check(
      CheckKind::graph, scalar_target(minsurf::affine(2, 0.5, {1.0, -2.0})), cfg, 1e-12);
  CHECK(flat.pass);
  const auto ang = minsurf::run_check(
      CheckKind::graph, scalar_target(minsurf::expression_field("atan2(x2,x1)", 2)), cfg,
      1e-9);
  CHECK(ang.pass);
}

TEST_CASE("an impossible guard exhausts the reject budget gracefully") {
  minsurf::ScalarField nowhere(
      2, "nowhere", [](std::span<const double>) { return minsurf::Jet2::constant(2, 1.0); },
      [](std::span<const double>) { return true; });
  SampleConfig cfg;
  cfg.seed = 1;
  cfg.count = 10;
  cfg.max_rejects = 500;
  const auto r = minsurf::run_check(CheckKind::ph, scalar_target(nowhere), cfg, 1e-9);
  CHECK(!r.pass);
  CHECK(r.n_samples == 0);
  CHECK(r.reason == "no admissible sample points found");
  CHECK(r.n_rejected <= 501);
}

TEST_CASE("newton projection lands on the level set") {
  const auto sphere = minsurf::expression_field("x1^2+x2^2+x3^2", 3);
  const std::vector<double> x0{1.3, -0.4, 0.8};
  const auto p = minsurf::newton_project(sphere, x0, 1.0);
  REQUIRE(p.has_value());
  const double r2 = (*p)[0] * (*p)[0] + (*p)[1] * (*p)[1] + (*p)[2] * (*p)[2];
  CHECK(r2 == doctest::Approx(1.0).epsilon(1e-10));

  // the origin is a critical point, so projection must fail there
  const std::vector<double> origin{0.0, 0.0, 0.0};
  CHECK(!minsurf::newton_project(sphere, origin, 1.0).has_value());
}

TEST_CASE("level sampling returns the requested count on the set") {
  const auto sph = minsurf::expression_field("x1^2+x2^2+x3^2", 3);
  SampleConfig cfg;
  cfg.seed = 23;
  cfg.count = 40;
  const auto pts = minsurf::sample_level_points(sph, 2.0, cfg);
  REQUIRE(pts.size() == 40);
  for (const auto& p : pts) {
    const double r2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
    CHECK(r2 == doctest::Approx(2.0).epsilon(1e-9));
  }

  // an empty level set (r^2 = -1) makes every projection fail
  CHECK_THROWS_AS((void)minsurf::sample_level_points(sph, -1.0, cfg),
                  std::runtime_error);
}

TEST_CASE("csv export is stable") {
  const std::vector<std::vector<double>> pts{{1.0, 2.0, 3.0}, {0.5, -1.0, 0.25}};
  CHECK(minsurf::points_to_csv(pts, 3) == "x1,x2,x3\n1,2,3\n0.5,-1,0.25\n");
}

TEST_CASE("ply export carries the header and extra coordinates") {
  const std::vector<std::vector<double>> pts{{1.0, 2.0, 3.0, 4.0}};
  const std::string ply = minsurf::points_to_ply(pts, 4);
  CHECK(ply.find("ply\n") == 0);
  CHECK(ply.find("format ascii 1.0") != std::string::npos);
  CHECK(ply.find("element vertex 1") != std::string::npos);
  CHECK(ply.find("property double x\n") != std::string::npos);
  CHECK(ply.find("property double y\n") != std::string::npos);
  CHECK(ply.find("property double z\n") != std::string::npos);
  CHECK(ply.find("property double x4\n") != std::string::npos);
  CHECK(ply.find("1 2 3 4\n") != std::string::npos);

  const std::string empty = minsurf::points_to_ply({}, 3);
  CHECK(empty.find("element vertex 0") != std::string::npos);
  CHECK(empty.find("end_header\n") == empty.size() - 11);
}

TEST_CASE("identical runs serialize identically apart from runtime") {
  SampleConfig cfg;
  cfg.seed = 29;
  cfg.count = 40;
  const auto t1 = scalar_target(minsurf::helicoid());
  const auto t2 = scalar_target(minsurf::helicoid());
  const auto a = minsurf::run_check(CheckKind::ph, t1, cfg, 1e-9);
  const auto b = minsurf::run_check(CheckKind::ph, t2, cfg, 1e-9);
  CHECK(parsed_without_runtime(a) == parsed_without_runtime(b));

  const auto ja = nlohmann::json::parse(a.json_string());
  CHECK(ja.contains("check"));
  CHECK(ja.contains("seed"));
  CHECK(ja.contains("max_residual"));
  CHECK(ja.contains("pass"));
}

TEST_CASE("check kind names round trip") {
  for (CheckKind k : {CheckKind::ph, CheckKind::eigen, CheckKind::twin, CheckKind::tm,
                      CheckKind::mincurv, CheckKind::graph}) {
    CHECK(minsurf::parse_check_kind(minsurf::check_kind_name(k)) == k);
  }
  CHECK_THROWS_AS((void)minsurf::parse_check_kind("bogus"), std::invalid_argument);
}

}  // TEST_SUITE
