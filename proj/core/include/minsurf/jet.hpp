// Second-order forward-mode jets: value, gradient and full Hessian of a
// scalar expression in n real variables, propagated exactly through
// arithmetic and a fixed catalog of elementary functions.
//
// The Hessian is stored as a packed upper triangle, so symmetry is exact by
// construction and survives every operation bit-for-bit.
#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace minsurf {

// Packed row-major upper-triangle index for a symmetric n x n matrix.
inline std::size_t packed_index(int n, int i, int j) {
  if (i > j) {
    int t = i;
    i = j;
    j = t;
  }
  return static_cast<std::size_t>(i) * n - static_cast<std::size_t>(i) * (i - 1) / 2 +
         static_cast<std::size_t>(j - i);
}

inline std::size_t packed_size(int n) {
  return static_cast<std::size_t>(n) * (n + 1) / 2;
}

class Jet2 {
 public:
  Jet2() = default;
  explicit Jet2(int n) : n_(n), value_(0.0), grad_(n, 0.0), hess_(packed_size(n), 0.0) {}

  static Jet2 constant(int n, double value);
  // Seeds variable `index` (0-based) with the given value: grad = e_index.
  static Jet2 variable(int n, int index, double value);

  int dim() const { return n_; }
  double value() const { return value_; }
  double& value() { return value_; }
  double grad(int i) const { return grad_[static_cast<std::size_t>(i)]; }
  double& grad(int i) { return grad_[static_cast<std::size_t>(i)]; }
  double hess(int i, int j) const { return hess_[packed_index(n_, i, j)]; }
  double& hess(int i, int j) { return hess_[packed_index(n_, i, j)]; }

  const std::vector<double>& grad_data() const { return grad_; }
  const std::vector<double>& hess_data() const { return hess_; }
  std::vector<double>& grad_data() { return grad_; }
  std::vector<double>& hess_data() { return hess_; }

  bool finite() const;

 private:
  int n_ = 0;
  double value_ = 0.0;
  std::vector<double> grad_;
  std::vector<double> hess_;  // packed upper triangle
};

Jet2 operator-(const Jet2& a);
Jet2 operator+(const Jet2& a, const Jet2& b);
Jet2 operator-(const Jet2& a, const Jet2& b);
Jet2 operator*(const Jet2& a, const Jet2& b);
Jet2 operator/(const Jet2& a, const Jet2& b);

Jet2 operator+(const Jet2& a, double c);
Jet2 operator+(double c, const Jet2& a);
Jet2 operator-(const Jet2& a, double c);
Jet2 operator-(double c, const Jet2& a);
Jet2 operator*(const Jet2& a, double c);
Jet2 operator*(double c, const Jet2& a);
Jet2 operator/(const Jet2& a, double c);
Jet2 operator/(double c, const Jet2& a);

// value f(a), first derivative fp, second derivative fpp at a.value():
// result = (f, fp*g, fp*H + fpp*g*g^T).
Jet2 apply_chain(const Jet2& a, double f, double fp, double fpp);

Jet2 sin(const Jet2& a);
Jet2 cos(const Jet2& a);
Jet2 tan(const Jet2& a);
Jet2 atan(const Jet2& a);
Jet2 exp(const Jet2& a);
Jet2 expm1(const Jet2& a);
Jet2 log(const Jet2& a);   // requires value > 0
Jet2 sqrt(const Jet2& a);  // requires value > 0
Jet2 pow(const Jet2& a, double r);  // integer r delegates to pow_int
Jet2 pow_int(const Jet2& a, long long k);
Jet2 atan2(const Jet2& y, const Jet2& x);  // error at the exact origin

// Seeds all n coordinates of x as variables and returns the n identity jets.
std::vector<Jet2> seed_point(std::span<const double> x);

}  // namespace minsurf
