// Second-order jets of holomorphic expressions in m complex variables:
// value, holomorphic gradient (d/dz_k) and holomorphic Hessian (d^2/dz_p dz_q).
// Same packed-symmetric layout as Jet2.
#pragma once

#include <complex>
#include <span>
#include <vector>

#include "minsurf/jet.hpp"

namespace minsurf {

using complexd = std::complex<double>;

class CJet2 {
 public:
  CJet2() = default;
  explicit CJet2(int m) : m_(m), value_(0.0), grad_(m, complexd(0.0)), hess_(packed_size(m), complexd(0.0)) {}

  static CJet2 constant(int m, complexd value);
  static CJet2 variable(int m, int index, complexd value);

  int dim() const { return m_; }
  complexd value() const { return value_; }
  complexd& value() { return value_; }
  complexd grad(int i) const { return grad_[static_cast<std::size_t>(i)]; }
  complexd& grad(int i) { return grad_[static_cast<std::size_t>(i)]; }
  complexd hess(int i, int j) const { return hess_[packed_index(m_, i, j)]; }
  complexd& hess(int i, int j) { return hess_[packed_index(m_, i, j)]; }

  const std::vector<complexd>& grad_data() const { return grad_; }
  const std::vector<complexd>& hess_data() const { return hess_; }
  std::vector<complexd>& grad_data() { return grad_; }
  std::vector<complexd>& hess_data() { return hess_; }

  bool finite() const;

 private:
  int m_ = 0;
  complexd value_{0.0};
  std::vector<complexd> grad_;
  std::vector<complexd> hess_;
};

CJet2 operator-(const CJet2& a);
CJet2 operator+(const CJet2& a, const CJet2& b);
CJet2 operator-(const CJet2& a, const CJet2& b);
CJet2 operator*(const CJet2& a, const CJet2& b);
CJet2 operator/(const CJet2& a, const CJet2& b);

CJet2 operator+(const CJet2& a, complexd c);
CJet2 operator+(complexd c, const CJet2& a);
CJet2 operator-(const CJet2& a, complexd c);
CJet2 operator-(complexd c, const CJet2& a);
CJet2 operator*(const CJet2& a, complexd c);
CJet2 operator*(complexd c, const CJet2& a);

CJet2 apply_chain(const CJet2& a, complexd f, complexd fp, complexd fpp);

CJet2 exp(const CJet2& a);
CJet2 log(const CJet2& a);               // principal branch; error at 0
CJet2 pow(const CJet2& a, double r);     // principal branch for non-integer r
CJet2 pow_int(const CJet2& a, long long k);

std::vector<CJet2> seed_point(std::span<const complexd> z);

// Packs a real 2m-vector (x_1..x_m, y_1..y_m) into z_k = x_k + i y_k.
std::vector<complexd> pack_complex(std::span<const double> xy);

}  // namespace minsurf
