#include "minsurf/operators.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace minsurf {

double grad_norm_sq(const Jet2& j) {
  double s = 0.0;
  for (int i = 0; i < j.dim(); ++i) s += j.grad(i) * j.grad(i);
  return s;
}

double laplacian(const Jet2& j) {
  double s = 0.0;
  for (int i = 0; i < j.dim(); ++i) s += j.hess(i, i);
  return s;
}

double inf_laplacian(const Jet2& j) {
  const int n = j.dim();
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += j.grad(i) * j.grad(i) * j.hess(i, i);
  for (int i = 0; i < n; ++i) {
    for (int k = i + 1; k < n; ++k) s += 2.0 * j.grad(i) * j.grad(k) * j.hess(i, k);
  }
  return s;
}

OperatorValues evaluate_operators(const Jet2& j, double grad_eps) {
  OperatorValues v;
  v.grad_norm_sq = grad_norm_sq(j);
  v.laplacian = laplacian(j);
  v.inf_laplacian = inf_laplacian(j);
  v.one_laplacian = v.grad_norm_sq * v.laplacian - v.inf_laplacian;
  const double g = std::sqrt(v.grad_norm_sq);
  if (g > grad_eps) v.mean_curvature = v.one_laplacian / (g * g * g);
  return v;
}

double one_laplacian(const Jet2& j) { return evaluate_operators(j).one_laplacian; }

double p_laplacian(const Jet2& j, double p) {
  OperatorValues v = evaluate_operators(j);
  return v.grad_norm_sq * v.laplacian + (p - 2.0) * v.inf_laplacian;
}

double mean_curvature(const Jet2& j, double grad_eps) {
  OperatorValues v = evaluate_operators(j, grad_eps);
  if (!v.mean_curvature) {
    std::ostringstream os;
    os << "mean_curvature: critical point, |grad| = " << std::sqrt(v.grad_norm_sq)
       << " <= " << grad_eps;
    throw std::domain_error(os.str());
  }
  return *v.mean_curvature;
}

double graph_residual(const Jet2& z) {
  OperatorValues v = evaluate_operators(z);
  return (1.0 + v.grad_norm_sq) * v.laplacian - v.inf_laplacian;
}

std::pair<double, double> ph_residual(const Jet2& j) {
  return {std::abs(laplacian(j)), std::abs(inf_laplacian(j))};
}

double hess_frobenius_norm(const Jet2& j) {
  const int n = j.dim();
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    const double d = j.hess(i, i);
    s += d * d;
    for (int k = i + 1; k < n; ++k) {
      const double o = j.hess(i, k);
      s += 2.0 * o * o;
    }
  }
  return std::sqrt(s);
}

}  // namespace minsurf
