#include "minsurf/cjet.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace minsurf {

namespace {

void require_same_dim(const CJet2& a, const CJet2& b) {
  if (a.dim() != b.dim()) {
    std::ostringstream os;
    os << "complex jet dimension mismatch: " << a.dim() << " vs " << b.dim();
    throw std::invalid_argument(os.str());
  }
}

[[noreturn]] void domain_violation(const char* fn, complexd value) {
  std::ostringstream os;
  os << fn << ": domain violation at value (" << value.real() << ", " << value.imag() << ")";
  throw std::domain_error(os.str());
}

}  // namespace

CJet2 CJet2::constant(int m, complexd value) {
  CJet2 j(m);
  j.value() = value;
  return j;
}

CJet2 CJet2::variable(int m, int index, complexd value) {
  if (index < 0 || index >= m) {
    std::ostringstream os;
    os << "complex jet variable index " << index << " out of range for dimension " << m;
    throw std::out_of_range(os.str());
  }
  CJet2 j(m);
  j.value() = value;
  j.grad(index) = 1.0;
  return j;
}

bool CJet2::finite() const {
  auto ok = [](complexd c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); };
  if (!ok(value_)) return false;
  for (complexd g : grad_)
    if (!ok(g)) return false;
  for (complexd h : hess_)
    if (!ok(h)) return false;
  return true;
}

CJet2 operator-(const CJet2& a) {
  CJet2 r(a.dim());
  r.value() = -a.value();
  for (int i = 0; i < a.dim(); ++i) r.grad(i) = -a.grad(i);
  auto& rh = r.hess_data();
  const auto& ah = a.hess_data();
  for (std::size_t k = 0; k < ah.size(); ++k) rh[k] = -ah[k];
  return r;
}

CJet2 operator+(const CJet2& a, const CJet2& b) {
  require_same_dim(a, b);
  CJet2 r(a.dim());
  r.value() = a.value() + b.value();
  for (int i = 0; i < a.dim(); ++i) r.grad(i) = a.grad(i) + b.grad(i);
  auto& rh = r.hess_data();
  const auto& ah = a.hess_data();
  const auto& bh = b.hess_data();
  for (std::size_t k = 0; k < ah.size(); ++k) rh[k] = ah[k] + bh[k];
  return r;
}

CJet2 operator-(const CJet2& a, const CJet2& b) {
  require_same_dim(a, b);
  CJet2 r(a.dim());
  r.value() = a.value() - b.value();
  for (int i = 0; i < a.dim(); ++i) r.grad(i) = a.grad(i) - b.grad(i);
  auto& rh = r.hess_data();
  const auto& ah = a.hess_data();
  const auto& bh = b.hess_data();
  for (std::size_t k = 0; k < ah.size(); ++k) rh[k] = ah[k] - bh[k];
  return r;
}

CJet2 operator*(const CJet2& a, const CJet2& b) {
  require_same_dim(a, b);
  const int n = a.dim();
  CJet2 r(n);
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

CJet2 operator/(const CJet2& a, const CJet2& b) {
  require_same_dim(a, b);
  const complexd v = b.value();
  if (v == complexd(0.0)) domain_violation("divide", v);
  CJet2 inv = apply_chain(b, 1.0 / v, -1.0 / (v * v), 2.0 / (v * v * v));
  return a * inv;
}

CJet2 operator+(const CJet2& a, complexd c) {
  CJet2 r = a;
  r.value() += c;
  return r;
}
CJet2 operator+(complexd c, const CJet2& a) { return a + c; }
CJet2 operator-(const CJet2& a, complexd c) { return a + (-c); }
CJet2 operator-(complexd c, const CJet2& a) { return (-a) + c; }

CJet2 operator*(const CJet2& a, complexd c) {
  CJet2 r(a.dim());
  r.value() = a.value() * c;
  for (int i = 0; i < a.dim(); ++i) r.grad(i) = a.grad(i) * c;
  auto& rh = r.hess_data();
  const auto& ah = a.hess_data();
  for (std::size_t k = 0; k < ah.size(); ++k) rh[k] = ah[k] * c;
  return r;
}
CJet2 operator*(complexd c, const CJet2& a) { return a * c; }

CJet2 apply_chain(const CJet2& a, complexd f, complexd fp, complexd fpp) {
  const int n = a.dim();
  CJet2 r(n);
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

CJet2 exp(const CJet2& a) {
  const complexd e = std::exp(a.value());
  return apply_chain(a, e, e, e);
}

CJet2 log(const CJet2& a) {
  const complexd v = a.value();
  if (v == complexd(0.0)) domain_violation("log", v);
  return apply_chain(a, std::log(v), 1.0 / v, -1.0 / (v * v));
}

CJet2 pow(const CJet2& a, double r) {
  if (r == static_cast<double>(static_cast<long long>(r)) && std::abs(r) <= 64.0) {
    return pow_int(a, static_cast<long long>(r));
  }
  const complexd v = a.value();
  if (v == complexd(0.0)) domain_violation("pow (non-integer exponent)", v);
  return apply_chain(a, std::pow(v, r), r * std::pow(v, r - 1.0),
                     r * (r - 1.0) * std::pow(v, r - 2.0));
}

CJet2 pow_int(const CJet2& a, long long k) {
  const complexd v = a.value();
  if (k == 0) return CJet2::constant(a.dim(), complexd(1.0));
  if (k < 0 && v == complexd(0.0)) domain_violation("pow (negative exponent)", v);
  const double kd = static_cast<double>(k);
  complexd f, fp, fpp;
  if (k == 1) {
    f = v;
    fp = 1.0;
    fpp = 0.0;
  } else if (k == 2) {
    f = v * v;
    fp = 2.0 * v;
    fpp = 2.0;
  } else {
    // Integer powers via repeated squaring on the value would lose the clean
    // derivative relation; direct v^(k-2) is exact enough and branch-free.
    complexd vk2 = complexd(1.0);
    if (k > 0) {
      for (long long i = 0; i < k - 2; ++i) vk2 *= v;
    } else {
      const complexd inv = 1.0 / v;
      for (long long i = 0; i < -(k - 2); ++i) vk2 *= inv;
    }
    fpp = kd * (kd - 1.0) * vk2;
    fp = kd * vk2 * v;
    f = vk2 * v * v;
  }
  return apply_chain(a, f, fp, fpp);
}

std::vector<CJet2> seed_point(std::span<const complexd> z) {
  const int m = static_cast<int>(z.size());
  std::vector<CJet2> jets;
  jets.reserve(z.size());
  for (int i = 0; i < m; ++i) jets.push_back(CJet2::variable(m, i, z[i]));
  return jets;
}

std::vector<complexd> pack_complex(std::span<const double> xy) {
  if (xy.size() % 2 != 0) {
    throw std::invalid_argument("pack_complex: point length must be even");
  }
  const std::size_t m = xy.size() / 2;
  std::vector<complexd> z(m);
  for (std::size_t k = 0; k < m; ++k) z[k] = complexd(xy[k], xy[m + k]);
  return z;
}

}  // namespace minsurf
