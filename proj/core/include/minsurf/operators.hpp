// Differential operators evaluated from a second-order jet: Laplacian,
// infinity-Laplacian (grad^T Hess grad), 1-Laplacian, p-Laplacian, mean
// curvature of the level set through the point, and the minimal-graph
// residual (1+|grad|^2) lap - inf.
#pragma once

#include <optional>
#include <utility>

#include "minsurf/jet.hpp"

namespace minsurf {

inline constexpr double kDefaultGradEps = 1e-8;

struct OperatorValues {
  double grad_norm_sq = 0.0;
  double laplacian = 0.0;
  double inf_laplacian = 0.0;
  double one_laplacian = 0.0;  // always grad_norm_sq * laplacian - inf_laplacian
  std::optional<double> mean_curvature;  // absent when |grad| <= grad_eps
};

OperatorValues evaluate_operators(const Jet2& j, double grad_eps = kDefaultGradEps);

double grad_norm_sq(const Jet2& j);
double laplacian(const Jet2& j);
double inf_laplacian(const Jet2& j);
double one_laplacian(const Jet2& j);
double p_laplacian(const Jet2& j, double p);  // |grad|^2 lap + (p-2) inf

// one_laplacian / |grad|^3; throws std::domain_error at a critical point.
double mean_curvature(const Jet2& j, double grad_eps = kDefaultGradEps);

// Residual of the minimal-graph equation for x_{n+1} = z(x).
double graph_residual(const Jet2& z);

// (|lap|, |inf|): both vanish exactly when the function is perfectly harmonic.
std::pair<double, double> ph_residual(const Jet2& j);

double hess_frobenius_norm(const Jet2& j);

}  // namespace minsurf
