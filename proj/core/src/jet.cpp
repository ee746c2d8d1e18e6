#include "minsurf/jet.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace minsurf {

namespace {

void require_same_dim(const Jet2& a, const Jet2& b) {
  if (a.dim() != b.dim()) {
    std::ostringstream os;
    os << "jet dimension mismatch: " << a.dim() << " vs " << b.dim();
    throw std::invalid_argument(os.str());
  }
}

[[noreturn]] void domain_violation(const char* fn, double value) {
  std::ostringstream os;
  os << fn << ": domain violation at value " << value;
  throw std::domain_error(os.str());
}

}  // namespace

Jet2 Jet2::constant(int n, double value) {
  Jet2 j(n);
  j.value() = value;
  return j;
}

Jet2 Jet2::variable(int n, int index, double value) {
  if (index < 0 || index >= n) {
    std::ostringstream os;
    os << "jet variable index " << index << " out of range for dimension " << n;
    throw std::out_of_range(os.str());
  }
  Jet2 j(n);
  j.value() = value;
  j.grad(index) = 1.0;
  return j;
}

bool Jet2::finite() const {
  if (!std::isfinite(value_)) return false;
  for (double g : grad_)
    if (!std::isfinite(g)) return false;
  for (double h : hess_)
    if (!std::isfinite(h)) return false;
  return true;
}

Jet2 operator-(const Jet2& a) {
  Jet2 r(a.dim());
  r.value() = -a.value();
  for (int i = 0; i < a.dim(); ++i) r.grad(i) = -a.grad(i);
  auto& rh = r.hess_data();
  const auto& ah = a.hess_data();
  for (std::size_t k = 0; k < ah.size(); ++k) rh[k] = -ah[k];
  return r;
}

Jet2 operator+(const Jet2& a, const Jet2& b) {
  require_same_dim(a, b);
  Jet2 r(a.dim());
  r.value() = a.value() + b.value();
  for (int i = 0; i < a.dim(); ++i) r.grad(i) = a.grad(i) + b.grad(i);
  auto& rh = r.hess_data();
  const auto& ah = a.hess_data();
  const auto& bh = b.hess_data();
  for (std::size_t k = 0; k < ah.size(); ++k) rh[k] = ah[k] + bh[k];
  return r;
}

Jet2 operator-(const Jet2& a, const Jet2& b) {
  require_same_dim(a, b);
  Jet2 r(a.dim());
  r.value() = a.value() - b.value();
  for (int i = 0; i < a.dim(); ++i) r.grad(i) = a.grad(i) - b.grad(i);
  auto& rh = r.hess_data();
  const auto& ah = a.hess_data();
  const auto& bh = b.hess_data();
  for (std::size_t k = 0; k < ah.size(); ++k) rh[k] = ah[k] - bh[k];
  return r;
}

Jet2 operator*(const Jet2& a, const Jet2& b) {
  require_same_dim(a, b);
  const int n = a.dim();
  Jet2 r(n);
  r.value() = a.value() * b.value();
  for (int i = 0; i < n; ++i) r.grad(i) = a.value() * b.grad(i) + b.value() * a.grad(i);
  auto& rh = r.hess_data();
  const auto& ah = a.hess_data();
  const auto& bh = b.hess_data();
  std::size_t k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j, ++k) {
      rh[k] = a.value() * bh[k] + b.value() * ah[k] + a.grad(i) * b.grad(j) +
              a.grad(j) * b.grad(i);
    }
  }
  return r;
}

Jet2 operator/(const Jet2& a, const Jet2& b) {
  require_same_dim(a, b);
  if (b.value() == 0.0) domain_violation("divide", b.value());
  const double v = b.value();
  Jet2 inv = apply_chain(b, 1.0 / v, -1.0 / (v * v), 2.0 / (v * v * v));
  return a * inv;
}

Jet2 operator+(const Jet2& a, double c) {
  Jet2 r = a;
  r.value() += c;
  return r;
}
Jet2 operator+(double c, const Jet2& a) { return a + c; }
Jet2 operator-(const Jet2& a, double c) { return a + (-c); }
Jet2 operator-(double c, const Jet2& a) { return (-a) + c; }

Jet2 operator*(const Jet2& a, double c) {
  Jet2 r(a.dim());
  r.value() = a.value() * c;
  for (int i = 0; i < a.dim(); ++i) r.grad(i) = a.grad(i) * c;
  auto& rh = r.hess_data();
  const auto& ah = a.hess_data();
  for (std::size_t k = 0; k < ah.size(); ++k) rh[k] = ah[k] * c;
  return r;
}
Jet2 operator*(double c, const Jet2& a) { return a * c; }
Jet2 operator/(const Jet2& a, double c) {
  if (c == 0.0) domain_violation("divide", c);
  return a * (1.0 / c);
}
Jet2 operator/(double c, const Jet2& a) {
  if (a.value() == 0.0) domain_violation("divide", a.value());
  const double v = a.value();
  return c * apply_chain(a, 1.0 / v, -1.0 / (v * v), 2.0 / (v * v * v));
}

Jet2 apply_chain(const Jet2& a, double f, double fp, double fpp) {
  const int n = a.dim();
  Jet2 r(n);
  r.value() = f;
  for (int i = 0; i < n; ++i) r.grad(i) = fp * a.grad(i);
  auto& rh = r.hess_data();
  const auto& ah = a.hess_data();
  std::size_t k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j, ++k) {
      rh[k] = fp * ah[k] + fpp * a.grad(i) * a.grad(j);
    }
  }
  return r;
}

Jet2 sin(const Jet2& a) {
  const double v = a.value();
  return apply_chain(a, std::sin(v), std::cos(v), -std::sin(v));
}

Jet2 cos(const Jet2& a) {
  const double v = a.value();
  return apply_chain(a, std::cos(v), -std::sin(v), -std::cos(v));
}

Jet2 tan(const Jet2& a) {
  const double t = std::tan(a.value());
  const double s = 1.0 + t * t;  // sec^2
  return apply_chain(a, t, s, 2.0 * t * s);
}

Jet2 atan(const Jet2& a) {
  const double v = a.value();
  const double d = 1.0 + v * v;
  return apply_chain(a, std::atan(v), 1.0 / d, -2.0 * v / (d * d));
}

Jet2 exp(const Jet2& a) {
  const double e = std::exp(a.value());
  return apply_chain(a, e, e, e);
}

Jet2 expm1(const Jet2& a) {
  const double e = std::exp(a.value());
  return apply_chain(a, std::expm1(a.value()), e, e);
}

Jet2 log(const Jet2& a) {
  const double v = a.value();
  if (!(v > 0.0)) domain_violation("log", v);
  return apply_chain(a, std::log(v), 1.0 / v, -1.0 / (v * v));
}

Jet2 sqrt(const Jet2& a) {
  const double v = a.value();
  if (!(v > 0.0)) domain_violation("sqrt", v);
  const double s = std::sqrt(v);
  return apply_chain(a, s, 0.5 / s, -0.25 / (s * v));
}

Jet2 pow(const Jet2& a, double r) {
  if (r == static_cast<double>(static_cast<long long>(r)) && std::abs(r) <= 64.0) {
    return pow_int(a, static_cast<long long>(r));
  }
  const double v = a.value();
  if (!(v > 0.0)) domain_violation("pow (non-integer exponent)", v);
  const double f = std::pow(v, r);
  return apply_chain(a, f, r * std::pow(v, r - 1.0), r * (r - 1.0) * std::pow(v, r - 2.0));
}

Jet2 pow_int(const Jet2& a, long long k) {
  const double v = a.value();
  if (k == 0) return Jet2::constant(a.dim(), 1.0);
  if (k < 0 && v == 0.0) domain_violation("pow (negative exponent)", v);
  const double kd = static_cast<double>(k);
  // v^(k-1) / v^(k-2) are well defined for v=0 only when k >= 2 / k >= 3;
  // the k=1,2 cases fall out of std::pow(0, 0) = 1 conventions, so handle
  // the small exponents explicitly.
  double f, fp, fpp;
  if (k == 1) {
    f = v;
    fp = 1.0;
    fpp = 0.0;
  } else if (k == 2) {
    f = v * v;
    fp = 2.0 * v;
    fpp = 2.0;
  } else {
    const double vk2 = std::pow(v, static_cast<double>(k - 2));
    fpp = kd * (kd - 1.0) * vk2;
    fp = kd * vk2 * v;
    f = vk2 * v * v;
  }
  return apply_chain(a, f, fp, fpp);
}

Jet2 atan2(const Jet2& y, const Jet2& x) {
  require_same_dim(y, x);
  const double xv = x.value();
  const double yv = y.value();
  if (xv == 0.0 && yv == 0.0) domain_violation("atan2", 0.0);
  const int n = x.dim();
  const double r2 = xv * xv + yv * yv;
  const double r4 = r2 * r2;
  const double tx = -yv / r2;
  const double ty = xv / r2;
  const double txx = 2.0 * xv * yv / r4;
  const double txy = (yv * yv - xv * xv) / r4;
  const double tyy = -2.0 * xv * yv / r4;
  Jet2 r(n);
  r.value() = std::atan2(yv, xv);
  for (int i = 0; i < n; ++i) r.grad(i) = tx * x.grad(i) + ty * y.grad(i);
  auto& rh = r.hess_data();
  const auto& xh = x.hess_data();
  const auto& yh = y.hess_data();
  std::size_t k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j, ++k) {
      rh[k] = tx * xh[k] + ty * yh[k] + txx * x.grad(i) * x.grad(j) +
              txy * (x.grad(i) * y.grad(j) + x.grad(j) * y.grad(i)) +
              tyy * y.grad(i) * y.grad(j);
    }
  }
  return r;
}

std::vector<Jet2> seed_point(std::span<const double> x) {
  const int n = static_cast<int>(x.size());
  std::vector<Jet2> jets;
  jets.reserve(x.size());
  for (int i = 0; i < n; ++i) jets.push_back(Jet2::variable(n, i, x[i]));
  return jets;
}

}  // namespace minsurf
