// Constructors and combinators for scalar fields: affine functions, plane
// angles, disjoint-block superpositions, tangent graph lifts, whitelisted
// scalar compositions, products, and two-field arctangent ratios.
#pragma once

#include <span>
#include <vector>

#include "minsurf/field.hpp"

namespace minsurf {

// a + sum_i b[i] x_i on R^n.
ScalarField affine(int n, double a, std::vector<double> b);

// a + b * atan2(x_j, x_i) on R^n (0-based indices i != j).
ScalarField polar_angle(int n, int i, int j, double a = 0.0, double b = 1.0);

// x_3 - atan2(x_2, x_1): the classical helicoid as a level-set field on R^3.
ScalarField helicoid();

// sum_k p[k] * atan2(x_{2k+2}, x_{2k+1}) on R^{2m}, variables paired
// (x_1,y_1,x_2,y_2,...).
ScalarField angle_sum(std::vector<double> p);

// alpha * f (+) beta * g on disjoint variable blocks: dimension f.dim+g.dim.
ScalarField superpose(double alpha, const ScalarField& f, double beta, const ScalarField& g);

// F(x, s, t) = f(x) - atan2(t, s) on R^{n+2}.
ScalarField graph_lift_tan(const ScalarField& f);

// Whitelisted outer functions phi with phi(0) = 0 for composing with a field.
enum class PhiKind { identity, sin, tan, atan, odd_pow, expm1 };

// phi(u(x)); odd_pow uses exponent k (must be odd and positive).
ScalarField compose_scalar(PhiKind phi, const ScalarField& u, int k = 3);

// phi value and first two derivatives at u; shared with tests of the chain rule.
void phi_derivatives(PhiKind phi, int k, double u, double* f, double* fp, double* fpp);

// v(x) * u(x) in the same variables; guard additionally rejects |v| < 1e-12.
ScalarField multiply(const ScalarField& v, const ScalarField& u);

// atan2(v(x), u(x)) in the same variables.
ScalarField twin_arctan(const ScalarField& u, const ScalarField& v);

}  // namespace minsurf
