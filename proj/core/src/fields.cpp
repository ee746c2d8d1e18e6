#include "minsurf/fields.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace minsurf {

namespace {

constexpr double kAxisGuard2 = 1e-12;  // squared distance to an atan2 axis

// Copies a jet on R^n into dimension `total` at variable offset `at`.
Jet2 embed(const Jet2& j, int total, int at) {
  Jet2 r(total);
  r.value() = j.value();
  for (int i = 0; i < j.dim(); ++i) r.grad(at + i) = j.grad(i);
  for (int i = 0; i < j.dim(); ++i) {
    for (int k = i; k < j.dim(); ++k) r.hess(at + i, at + k) = j.hess(i, k);
  }
  return r;
}

}  // namespace

ScalarField affine(int n, double a, std::vector<double> b) {
  if (static_cast<int>(b.size()) != n) {
    throw std::invalid_argument("affine: coefficient count must equal dimension");
  }
  std::ostringstream name;
  name << "affine(n=" << n << ")";
  return ScalarField(
      n, name.str(),
      [a, b](std::span<const double> x) {
        Jet2 r(static_cast<int>(x.size()));
        double v = a;
        for (std::size_t i = 0; i < x.size(); ++i) {
          v += b[i] * x[i];
          r.grad(static_cast<int>(i)) = b[i];
        }
        r.value() = v;
        return r;
      },
      {}, WeightSpec::zero());
}

ScalarField polar_angle(int n, int i, int j, double a, double b) {
  if (i < 0 || j < 0 || i >= n || j >= n || i == j) {
    throw std::invalid_argument("polar_angle: need two distinct indices inside the dimension");
  }
  std::ostringstream name;
  name << "polar-angle(n=" << n << ",i=" << (i + 1) << ",j=" << (j + 1) << ")";
  return ScalarField(
      n, name.str(),
      [n, i, j, a, b](std::span<const double> x) {
        Jet2 xi = Jet2::variable(n, i, x[static_cast<std::size_t>(i)]);
        Jet2 xj = Jet2::variable(n, j, x[static_cast<std::size_t>(j)]);
        return a + b * atan2(xj, xi);
      },
      [i, j](std::span<const double> x) {
        const double xi = x[static_cast<std::size_t>(i)];
        const double xj = x[static_cast<std::size_t>(j)];
        return xi * xi + xj * xj < kAxisGuard2;
      },
      WeightSpec::zero());
}

ScalarField helicoid() {
  return ScalarField(
      3, "helicoid",
      [](std::span<const double> x) {
        Jet2 x1 = Jet2::variable(3, 0, x[0]);
        Jet2 x2 = Jet2::variable(3, 1, x[1]);
        Jet2 x3 = Jet2::variable(3, 2, x[2]);
        return x3 - atan2(x2, x1);
      },
      [](std::span<const double> x) { return x[0] * x[0] + x[1] * x[1] < kAxisGuard2; },
      WeightSpec::zero());
}

ScalarField angle_sum(std::vector<double> p) {
  if (p.empty()) throw std::invalid_argument("angle_sum: need at least one weight");
  const int m = static_cast<int>(p.size());
  const int n = 2 * m;
  std::ostringstream name;
  name << "angle-sum(p=[";
  for (int k = 0; k < m; ++k) name << (k ? "," : "") << p[static_cast<std::size_t>(k)];
  name << "])";
  return ScalarField(
      n, name.str(),
      [n, m, p](std::span<const double> x) {
        Jet2 s = Jet2::constant(n, 0.0);
        for (int k = 0; k < m; ++k) {
          Jet2 xk = Jet2::variable(n, 2 * k, x[static_cast<std::size_t>(2 * k)]);
          Jet2 yk = Jet2::variable(n, 2 * k + 1, x[static_cast<std::size_t>(2 * k + 1)]);
          s = s + p[static_cast<std::size_t>(k)] * atan2(yk, xk);
        }
        return s;
      },
      [m](std::span<const double> x) {
        for (int k = 0; k < m; ++k) {
          const double a = x[static_cast<std::size_t>(2 * k)];
          const double b = x[static_cast<std::size_t>(2 * k + 1)];
          if (a * a + b * b < kAxisGuard2) return true;
        }
        return false;
      },
      WeightSpec::zero());
}

ScalarField superpose(double alpha, const ScalarField& f, double beta, const ScalarField& g) {
  const int nf = f.dim();
  const int ng = g.dim();
  const int n = nf + ng;
  std::ostringstream name;
  name << "superpose(a=" << alpha << ",f=" << f.name() << ",b=" << beta << ",g=" << g.name()
       << ")";
  auto fw = f.weight();
  auto gw = g.weight();
  std::optional<WeightSpec> w;
  if (fw && gw && fw->kind == WeightSpec::Kind::zero && gw->kind == WeightSpec::Kind::zero) {
    w = WeightSpec::zero();
  }
  return ScalarField(
      n, name.str(),
      [alpha, beta, f, g, nf, ng, n](std::span<const double> x) {
        Jet2 jf = f.eval(x.subspan(0, static_cast<std::size_t>(nf)));
        Jet2 jg = g.eval(x.subspan(static_cast<std::size_t>(nf), static_cast<std::size_t>(ng)));
        return alpha * embed(jf, n, 0) + beta * embed(jg, n, nf);
      },
      [f, g, nf, ng](std::span<const double> x) {
        return f.excluded(x.subspan(0, static_cast<std::size_t>(nf))) ||
               g.excluded(x.subspan(static_cast<std::size_t>(nf), static_cast<std::size_t>(ng)));
      },
      w);
}

ScalarField graph_lift_tan(const ScalarField& f) {
  const int nf = f.dim();
  const int n = nf + 2;
  std::ostringstream name;
  name << "graph-lift-tan(" << f.name() << ")";
  auto fw = f.weight();
  std::optional<WeightSpec> w;
  if (fw && fw->kind == WeightSpec::Kind::zero) w = WeightSpec::zero();
  return ScalarField(
      n, name.str(),
      [f, nf, n](std::span<const double> x) {
        Jet2 jf = f.eval(x.subspan(0, static_cast<std::size_t>(nf)));
        Jet2 s = Jet2::variable(n, nf, x[static_cast<std::size_t>(nf)]);
        Jet2 t = Jet2::variable(n, nf + 1, x[static_cast<std::size_t>(nf + 1)]);
        return embed(jf, n, 0) - atan2(t, s);
      },
      [f, nf](std::span<const double> x) {
        const double s = x[static_cast<std::size_t>(nf)];
        const double t = x[static_cast<std::size_t>(nf + 1)];
        if (s * s + t * t < kAxisGuard2) return true;
        return f.excluded(x.subspan(0, static_cast<std::size_t>(nf)));
      },
      w);
}

void phi_derivatives(PhiKind phi, int k, double u, double* f, double* fp, double* fpp) {
  switch (phi) {
    case PhiKind::identity:
      *f = u;
      *fp = 1.0;
      *fpp = 0.0;
      return;
    case PhiKind::sin:
      *f = std::sin(u);
      *fp = std::cos(u);
      *fpp = -std::sin(u);
      return;
    case PhiKind::tan: {
      const double t = std::tan(u);
      const double s = 1.0 + t * t;
      *f = t;
      *fp = s;
      *fpp = 2.0 * t * s;
      return;
    }
    case PhiKind::atan: {
      const double d = 1.0 + u * u;
      *f = std::atan(u);
      *fp = 1.0 / d;
      *fpp = -2.0 * u / (d * d);
      return;
    }
    case PhiKind::odd_pow: {
      const double kd = static_cast<double>(k);
      const double uk2 = k >= 3 ? std::pow(u, static_cast<double>(k - 2)) : 0.0;
      if (k == 1) {
        *f = u;
        *fp = 1.0;
        *fpp = 0.0;
      } else {
        *f = uk2 * u * u;
        *fp = kd * uk2 * u;
        *fpp = kd * (kd - 1.0) * uk2;
      }
      return;
    }
    case PhiKind::expm1: {
      const double e = std::exp(u);
      *f = std::expm1(u);
      *fp = e;
      *fpp = e;
      return;
    }
  }
  throw std::invalid_argument("phi_derivatives: unknown phi");
}

ScalarField compose_scalar(PhiKind phi, const ScalarField& u, int k) {
  if (phi == PhiKind::odd_pow && (k < 1 || k % 2 == 0)) {
    throw std::invalid_argument("compose_scalar: power must be odd and positive");
  }
  const char* phi_name = nullptr;
  switch (phi) {
    case PhiKind::identity: phi_name = "identity"; break;
    case PhiKind::sin: phi_name = "sin"; break;
    case PhiKind::tan: phi_name = "tan"; break;
    case PhiKind::atan: phi_name = "atan"; break;
    case PhiKind::odd_pow: phi_name = "pow"; break;
    case PhiKind::expm1: phi_name = "expm1"; break;
  }
  std::ostringstream name;
  name << "compose(phi=" << phi_name;
  if (phi == PhiKind::odd_pow) name << ",k=" << k;
  name << "," << u.name() << ")";
  return ScalarField(
      u.dim(), name.str(),
      [phi, u, k](std::span<const double> x) {
        Jet2 ju = u.eval(x);
        switch (phi) {
          case PhiKind::identity: return ju;
          case PhiKind::sin: return sin(ju);
          case PhiKind::tan: return tan(ju);
          case PhiKind::atan: return atan(ju);
          case PhiKind::odd_pow: return pow_int(ju, k);
          case PhiKind::expm1: return expm1(ju);
        }
        throw std::invalid_argument("compose_scalar: unknown phi");
      },
      [u](std::span<const double> x) { return u.excluded(x); });
}

ScalarField multiply(const ScalarField& v, const ScalarField& u) {
  if (v.dim() != u.dim()) {
    throw std::invalid_argument("multiply: fields must share a variable space");
  }
  std::ostringstream name;
  name << "multiply(v=" << v.name() << ",u=" << u.name() << ")";
  return ScalarField(
      u.dim(), name.str(),
      [v, u](std::span<const double> x) { return v.eval(x) * u.eval(x); },
      [v, u](std::span<const double> x) {
        if (v.excluded(x) || u.excluded(x)) return true;
        return std::abs(v.eval(x).value()) < 1e-12;
      });
}

ScalarField twin_arctan(const ScalarField& u, const ScalarField& v) {
  if (v.dim() != u.dim()) {
    throw std::invalid_argument("twin_arctan: fields must share a variable space");
  }
  std::ostringstream name;
  name << "twin-arctan(u=" << u.name() << ",v=" << v.name() << ")";
  return ScalarField(
      u.dim(), name.str(),
      [u, v](std::span<const double> x) { return atan2(v.eval(x), u.eval(x)); },
      [u, v](std::span<const double> x) {
        if (u.excluded(x) || v.excluded(x)) return true;
        const double a = u.eval(x).value();
        const double b = v.eval(x).value();
        return a * a + b * b < kAxisGuard2;
      },
      WeightSpec::zero());
}

}  // namespace minsurf
