// Hermitian 4x4 matrices over the division algebras R, C, H (and the
// degenerate diagonal case d = 0), their Jordan product, trace form and
// characteristic invariants, and the cubic trace form f = sigma1(x^3)/6
// restricted to the traceless subspace. Expanding f symbolically in a fixed
// chart produces one homogeneous cubic per d whose unit-density rescaling
// satisfies the radial eigenrelation with weight -1/2.
#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "minsurf/field.hpp"
#include "minsurf/holo.hpp"
#include "minsurf/poly.hpp"

namespace minsurf {

// Element of F_d for d in {0,1,2,4}: components (scalar, i, j, k), unused
// components fixed at zero. d = 0 carries real scalar arithmetic (needed for
// the diagonal) but admits no off-diagonal units, so charts leave every slot
// empty.
struct DivisionScalar {
  int d = 1;
  std::array<double, 4> c{};

  static DivisionScalar zero(int d);
  static DivisionScalar real(int d, double v);
  static DivisionScalar unit(int d, int axis);   // basis unit, 0 <= axis < d
};

DivisionScalar conj(const DivisionScalar& a);
double norm_sq(const DivisionScalar& a);
DivisionScalar operator+(const DivisionScalar& a, const DivisionScalar& b);
DivisionScalar operator-(const DivisionScalar& a, const DivisionScalar& b);
DivisionScalar operator*(const DivisionScalar& a, const DivisionScalar& b);
DivisionScalar operator*(double s, const DivisionScalar& a);

// Dense 4x4 matrix over F_d, row major. General (not necessarily Hermitian):
// products of Hermitian matrices land here.
struct Matrix4 {
  int d = 1;
  std::array<DivisionScalar, 16> e;

  explicit Matrix4(int d);
  static Matrix4 identity(int d);
  DivisionScalar& at(int i, int j) { return e[static_cast<std::size_t>(4 * i + j)]; }
  const DivisionScalar& at(int i, int j) const {
    return e[static_cast<std::size_t>(4 * i + j)];
  }
};

Matrix4 operator+(const Matrix4& a, const Matrix4& b);
Matrix4 operator-(const Matrix4& a, const Matrix4& b);
Matrix4 operator*(const Matrix4& a, const Matrix4& b);
Matrix4 operator*(double s, const Matrix4& a);

double trace_scalar(const Matrix4& a);     // scalar part of the trace
double frobenius_norm(const Matrix4& a);

// Hermitian element: four real diagonal entries w and six off-diagonal slots
//   [ w1  z1  z3  z5 ]
//   [ .   w2  z6  z4 ]
//   [ .   .   w3  z2 ]
//   [ .   .   .   w4 ]
// with the conjugates below the diagonal.
class JordanElement {
 public:
  explicit JordanElement(int d);
  static JordanElement identity(int d);
  static JordanElement from_matrix(const Matrix4& m);  // assumes Hermitian input

  int d() const { return d_; }
  double& w(int i) { return w_[static_cast<std::size_t>(i)]; }
  double w(int i) const { return w_[static_cast<std::size_t>(i)]; }
  DivisionScalar& z(int slot) { return z_[static_cast<std::size_t>(slot)]; }
  const DivisionScalar& z(int slot) const { return z_[static_cast<std::size_t>(slot)]; }

  Matrix4 to_matrix() const;

 private:
  int d_;
  std::array<double, 4> w_{};
  std::array<DivisionScalar, 6> z_;
};

// slot -> (row, col) of the upper-triangle position it occupies
std::pair<int, int> slot_position(int slot);

JordanElement jordan_mul(const JordanElement& a, const JordanElement& b);  // (ab+ba)/2
double sigma1(const JordanElement& x);                    // trace
double bilinear_b(const JordanElement& a, const JordanElement& b);  // sigma1(a o b)

// Characteristic coefficients of a traceless element from power traces
// p_k = sigma1(x^k). Throws unless |sigma1(x)| <= 1e-12.
struct NewtonSigmas {
  double sigma2, sigma3, sigma4;
  double p2, p3, p4;
};
NewtonSigmas newton_sigmas(const JordanElement& x);

// Frobenius defect of x^4 - p2/2 x^2 - p3/3 x + (p2^2 - 2 p4)/8 e = 0,
// normalized by (1 + b(x,x))^2. Traceless x only.
double hamilton_cayley_residual(const JordanElement& x);

// Defect of sigma1(x^5) = 5/6 sigma1(x^2) sigma1(x^3), normalized by
// (1 + b(x,x)^{5/2}). Traceless x only.
double trace_power5_residual(const JordanElement& x);

// --- charts of the traceless subspace, dimension 3 + 6d ---

int hsiang_dim(int d);

// Raw chart: coords = (v1, v2, v3, slot components). Diagonal combines the v
// through fixed even-sign patterns over sqrt(2); the last diagonal entry is
// computed as minus the sum of the others so the trace vanishes exactly.
JordanElement traceless_embed(int d, std::span<const double> coords);

// Same chart rescaled so the coordinate basis is orthonormal for b.
JordanElement traceless_embed_orthonormal(int d, std::span<const double> coords);

std::vector<JordanElement> orthonormal_basis(int d);

// Frobenius defect of sum_i b_i^2 = (N/4) e over the orthonormal basis.
double basis_square_sum_residual(int d);

// --- the cubic family ---

// f(coords) = sigma1(x^3)/6 in the raw chart, expanded symbolically.
SparsePoly hsiang_cubic(int d);

// The same cubic in the orthonormal chart (coefficients scaled by
// 1/(2 sqrt 2)), packaged with the radial eigenweight -1/2.
ScalarField hsiang_field(int d);

// Holomorphic extension of the orthonormal-chart cubic to C^{3+6d};
// expected eigencone weight mu(z) = |z|^2 / 2.
HoloField hsiang_holo(int d);

// --- structure results for d = 1 and d = 0 ---

// First sign pattern (s1..s6) under which the d = 1 cubic equals
// sqrt(2) det of the 3x3 matrix built from v and the mixed slot pairs.
std::array<int, 6> f1_mix_signs();

// The d = 1 cubic and sqrt(2) det built with the given signs, both as
// 9-variable polynomials for term-by-term comparison.
std::pair<SparsePoly, SparsePoly> f1_determinant_pair(std::span<const int, 6> signs);

// Real and imaginary parts of (x1 + i x4)(x2 + i x5)(x3 + i x6): the d = 0
// cubic complexified, on R^6 with radial eigenweight -2.
std::pair<ScalarField, ScalarField> f0_complexified_twins();

}  // namespace minsurf
