#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "minsurf/expr.hpp"
#include "minsurf/fields.hpp"
#include "minsurf/fieldspec.hpp"

using minsurf::resolve_scalar;
using minsurf::resolve_spec;

namespace {

int resolved_dim(const minsurf::ResolvedField& r) {
  if (r.scalar) return r.scalar->dim();
  if (r.holo) return r.holo->real_dim();
  return r.twins->first.dim();
}

}  // namespace

TEST_SUITE("fieldspec") {

TEST_CASE("every catalog entry resolves at its advertised dimension") {
  const auto entries = minsurf::catalog_entries();
  CHECK(entries.size() >= 18);
  for (const auto& e : entries) {
    CAPTURE(e.spec);
    const auto r = resolve_spec(e.spec);
    CHECK(resolved_dim(r) == e.dim);
    CHECK(!e.summary.empty());
  }
}

TEST_CASE("normalization is case and separator insensitive") {
  CHECK(minsurf::normalize_spec("Hsiang(D=1)") == "hsiang(d=1)");
  CHECK(minsurf::normalize_spec("HSIANG_HOLO(d=1)") == "hsiang-holo(d=1)");
  CHECK(minsurf::normalize_spec("  helicoid ") == "helicoid");
  const auto f = resolve_scalar("Hsiang(D=1)");
  CHECK(f.dim() == 9);
}

TEST_CASE("expression payloads pass through verbatim") {
  const auto f = resolve_scalar("expr:x1 + x2*x3");
  CHECK(f.dim() == 3);
  CHECK(f.eval(std::vector<double>{1.0, 2.0, 3.0}).value() == doctest::Approx(7.0));
  const auto wide = resolve_scalar("expr:x1", 5);
  CHECK(wide.dim() == 5);
}

TEST_CASE("display names resolve back to the same field") {
  const std::vector<std::string> specs{
      "affine(n=3)",
      "polar-angle(n=2,i=1,j=2)",
      "angle-sum(p=[2,-1])",
      "superpose(a=1,f=helicoid,b=-1,g=polar-angle(n=2,i=1,j=2))",
      "graph-lift-tan(affine(n=1))",
      "compose(phi=atan,helicoid)",
      "multiply(v=expr:1+x1,u=expr:x2)",
      "twin-arctan(u=expr:x1,v=expr:x2)",
      "re(clifford(m=2))",
      "im(lawson(p=1,q=2))",
      "arg(exp(p=1))",
  };
  for (const auto& s : specs) {
    CAPTURE(s);
    const auto f = resolve_scalar(s);
    const auto again = resolve_scalar(f.name());
    CHECK(again.dim() == f.dim());
    CHECK(minsurf::normalize_spec(f.name()) == minsurf::normalize_spec(again.name()));
  }

  const auto h = minsurf::resolve_holo("power(clifford(m=2),r=2)");
  const auto h2 = minsurf::resolve_holo(h.name());
  CHECK(h2.real_dim() == h.real_dim());
}

TEST_CASE("holomorphic suffixes produce scalar projections") {
  const auto re = resolve_scalar("clifford(m=2)-re");
  CHECK(re.dim() == 4);
  const auto arg = resolve_scalar("lawson(p=1,q=2)-arg");
  CHECK(arg.dim() == 4);

  // a suffix on a scalar base is a shape error
  CHECK_THROWS_AS((void)resolve_spec("helicoid-re"), std::invalid_argument);
}

TEST_CASE("positional and keyed arguments mix") {
  const auto a = resolve_spec("lawson(1,2)");
  const auto b = resolve_spec("lawson(p=1,q=2)");
  const auto c = resolve_spec("lawson(q=2,1)");
  REQUIRE(a.holo);
  REQUIRE(b.holo);
  REQUIRE(c.holo);
  CHECK(a.holo->name() == b.holo->name());
  CHECK(a.holo->name() == c.holo->name());
}

TEST_CASE("pair specs split on the top level comma only") {
  const auto t = minsurf::resolve_twins("pair(u=expr:atan2(x2,x1),v=expr:x3)");
  CHECK(t.first.dim() == 3);
  CHECK(t.second.dim() == 3);
  const auto f0 = minsurf::resolve_twins("f0-twins");
  CHECK(f0.first.dim() == 6);
  CHECK(f0.first.name() == "f0-twins-re");
}

TEST_CASE("nested specs resolve recursively") {
  const auto q = resolve_spec("quotient(clifford(m=2),exp(p=1))");
  REQUIRE(q.holo);
  CHECK(q.holo->real_dim() == 6);
  const auto s = resolve_scalar("superpose(a=2,f=helicoid,b=0.5,g=helicoid)");
  CHECK(s.dim() == 6);
}

TEST_CASE("malformed and impossible specs are rejected") {
  CHECK_THROWS_AS((void)resolve_spec("no-such-field"), std::invalid_argument);
  CHECK_THROWS_AS((void)resolve_spec("hsiang(q=1)"), std::invalid_argument);
  CHECK_THROWS_AS((void)resolve_spec("hsiang(d=1,d=2)"), std::invalid_argument);
  CHECK_THROWS_AS((void)resolve_spec("hsiang()"), std::invalid_argument);
  CHECK_THROWS_AS((void)resolve_spec("hsiang(d=3)"), std::invalid_argument);
  CHECK_THROWS_AS((void)resolve_spec("lawson(1,2,3)"), std::invalid_argument);
  CHECK_THROWS_AS((void)resolve_spec("hsiang(d=1) trailing"), minsurf::ParseError);
  CHECK_THROWS_AS((void)resolve_spec("hsiang(d=1"), minsurf::ParseError);
  CHECK_THROWS_AS((void)resolve_spec(""), minsurf::ParseError);
}

TEST_CASE("shape requirements are enforced") {
  CHECK_THROWS_AS((void)resolve_scalar("clifford(m=2)"), std::invalid_argument);
  CHECK_THROWS_AS((void)minsurf::resolve_holo("helicoid"), std::invalid_argument);
  CHECK_THROWS_AS((void)minsurf::resolve_twins("helicoid"), std::invalid_argument);
}

TEST_CASE("catalog listing lines carry spec and dimension") {
  const std::string listing = minsurf::catalog_listing();
  CHECK(listing.find("hsiang(d=4)  N=27") != std::string::npos);
  CHECK(listing.find("clifford(m=2)  N=4") != std::string::npos);
  CHECK(listing.find("helicoid") != std::string::npos);
}

}  // TEST_SUITE
